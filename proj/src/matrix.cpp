#include "hyperlap/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperlap {

DenseMatrix::DenseMatrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be non-negative");
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    DenseMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            double a = (*this)(i, k);
            if (a == 0.0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<double> y(rows_, 0.0);
    for (int i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

std::vector<double> DenseMatrix::column(int j) const {
    std::vector<double> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

double DenseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

bool DenseMatrix::is_symmetric(double tol) const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

DenseSymMatrix::DenseSymMatrix(int dim, double fill) : m_(dim, dim, fill) {}

DenseSymMatrix DenseSymMatrix::from_matrix(const DenseMatrix& m, double rel_tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("symmetric matrix must be square");
    if (!m.is_symmetric(rel_tol * std::max(1.0, m.max_abs())))
        throw std::invalid_argument("matrix is not symmetric within tolerance");
    DenseSymMatrix s;
    s.m_ = m;
    return s;
}

void DenseSymMatrix::set(int i, int j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
}

} // namespace hyperlap
