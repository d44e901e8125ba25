#pragma once

#include <span>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/matrix.hpp"
#include "hyperlap/report.hpp"

namespace hyperlap {

struct EigenConfig {
    double off_diag_tol = 1e-12;  // Jacobi sweep stop, relative to the Frobenius norm
    double zero_tol_scale = 1e-8; // eigenvalue-is-zero threshold is zero_tol_scale * dim
    double cluster_tol = 1e-7;    // eigenvalues closer than this share a cluster
    int max_sweeps = 100;

    double zero_tol(int dim) const { return zero_tol_scale * (dim < 1 ? 1 : dim); }
};

// Maximal run of consecutive sorted eigenvalues with gaps <= cluster_tol.
// `start` is a 0-based index into the eigenvalue list.
struct Cluster {
    int start = 0;
    int size = 0;
};

struct Spectrum {
    std::vector<double> eigenvalues; // ascending
    DenseMatrix eigenvectors;        // column j pairs with eigenvalues[j]
    int zero_mult = 0;               // #{ |lambda| < zero_tol }
    std::vector<Cluster> clusters;   // partition of 0..dim-1

    int cluster_of(int j) const; // index into clusters covering position j
};

// Cyclic-by-row Jacobi diagonalization. Deterministic sweep order, so
// results are reproducible bit-for-bit for identical inputs. Eigenvectors
// come back orthonormal; eigenvalues ascending. Throws std::runtime_error if
// the off-diagonal mass has not converged after max_sweeps sweeps.
Spectrum eigen_sym(const DenseSymMatrix& m, const EigenConfig& cfg = {});

// Spectrum of the normalized Laplacian. Eigenvectors are reported in
// vertex-function coordinates f = D^{-1/2} v (eigenfunctions of I - D^{-1}A,
// orthonormal in the degree-weighted inner product).
Spectrum spectrum_normalized(const OrientedHypergraph& g, const EigenConfig& cfg = {});

// Spectrum of D - A; eigenvectors are plain orthonormal eigenvectors.
Spectrum spectrum_unnormalized(const OrientedHypergraph& g, const EigenConfig& cfg = {});

// Spectrum of the m x m hyperedge Laplacian.
Spectrum spectrum_hyperedge(const OrientedHypergraph& g, const EigenConfig& cfg = {});

// Rank of the incidence matrix by Gaussian elimination with partial
// pivoting; pivots at or below the zero tolerance count as zero.
int incidence_rank(const OrientedHypergraph& g, const EigenConfig& cfg = {});

// Zero multiplicities of the vertex and hyperedge Laplacians plus the
// incidence rank. The three are mutually consistent (m_V = n - rank,
// m_H = m - rank); disagreement signals a tolerance failure and throws
// std::runtime_error rather than passing silently.
struct ZeroMultiplicities {
    int m_v = 0;
    int m_h = 0;
    int rank = 0;
};
ZeroMultiplicities zero_multiplicities(const OrientedHypergraph& g, const EigenConfig& cfg = {});

// Cauchy interlacing under weak deletion of r = |vs| vertices:
//   lambda_k(g) <= lambda_k(g-hat) <= lambda_{k+r}(g)  for k = 1..n-r.
BoundReport interlacing_check(const OrientedHypergraph& g, std::span<const int> vs,
                              const EigenConfig& cfg = {});

// For d-regular u-uniform g: the dual's sorted spectrum equals
// (d/u) * (nonzero spectrum of g) prepended with m - rank zeros. Throws
// std::invalid_argument when g is not regular and uniform.
BoundReport dual_scaling_check(const OrientedHypergraph& g, const EigenConfig& cfg = {});

// The unnormalized spectrum of the Cartesian product equals the multiset
// { lambda_i + mu_j } over factor eigenvalue pairs.
BoundReport product_spectrum_check(const OrientedHypergraph& g1, const OrientedHypergraph& g2,
                                   const EigenConfig& cfg = {});

} // namespace hyperlap
