#pragma once

#include <span>
#include <vector>

namespace hyperlap {

// Row-major dense real matrix. Sized for desk-scale spectral work (a few
// hundred rows); incidence, degree and adjacency matrices are integer-valued
// and built by exact counting, so their entries carry no rounding error.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols, double fill = 0.0);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }

    DenseMatrix transposed() const;
    DenseMatrix multiply(const DenseMatrix& rhs) const;
    std::vector<double> multiply(std::span<const double> x) const;

    std::vector<double> column(int j) const;
    double max_abs() const;
    double frobenius_norm() const;

    // |a_ij - a_ji| <= tol for all pairs.
    bool is_symmetric(double tol) const;

    bool operator==(const DenseMatrix& rhs) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// Square matrix certified symmetric at construction time: entries must agree
// across the diagonal within 1e-12 * max|entry|.
class DenseSymMatrix {
public:
    DenseSymMatrix() = default;
    explicit DenseSymMatrix(int dim, double fill = 0.0);

    // Throws std::invalid_argument if m is not square or not symmetric within
    // the relative tolerance.
    static DenseSymMatrix from_matrix(const DenseMatrix& m, double rel_tol = 1e-12);

    int dim() const { return m_.rows(); }
    double operator()(int i, int j) const { return m_(i, j); }

    // Writes both (i,j) and (j,i) so the invariant is preserved.
    void set(int i, int j, double v);

    const DenseMatrix& matrix() const { return m_; }

private:
    DenseMatrix m_;
};

} // namespace hyperlap
