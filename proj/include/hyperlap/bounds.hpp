#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/report.hpp"
#include "hyperlap/spectra.hpp"

namespace hyperlap {

// Partition of V into exact-equality classes of integer adjacency rows.
// Classes are sorted internally and ordered by smallest member; singleton
// classes are included. Two vertices in one class are never adjacent (the
// shared row forces the connecting entries to zero).
std::vector<std::vector<int>> duplicate_classes(const OrientedHypergraph& g);

// Three checks tying the eigenvalue 1 to the adjacency matrix:
//   eigenvalue_one_nullity   multiplicity of 1 in the normalized spectrum
//                            equals n - rank(A)
//   duplicate_multiplicity   each duplicate class of size s forces
//                            multiplicity >= s - 1
//   duplicate_eigenfunction  the explicit vector e_i - e_j over a duplicate
//                            pair satisfies Lf = f up to rounding
std::vector<BoundReport> verify_eigenvalue_one(const OrientedHypergraph& g,
                                               const EigenConfig& cfg = {});

// For every eigenpair with eigenvalue away from 1 and every duplicate pair
// (i, j): deg(i) f(i) = deg(j) f(j), checked relative to the sup norm of f.
BoundReport verify_duplicate_ratio(const OrientedHypergraph& g, const EigenConfig& cfg = {});

// Per-vertex diagonal quantities of the squared normalized Laplacian and
// their two means.
struct CQuantities {
    std::vector<double> c1; // c1[i] = 1 + sum_j A_ij^2 / (deg(i) deg(j))
    double c2 = 0;          // unweighted mean of c1
    double c3 = 0;          // degree-weighted mean of c1
};

CQuantities c_quantities(const OrientedHypergraph& g);

// Sandwich lambda_min <= C1(i), C2, C3 <= lambda_n (lambda_min = smallest
// nonzero eigenvalue), plus the equality criterion: a mean touches an end
// only when every C1(i) sits at that end.
BoundReport verify_c_quantities(const OrientedHypergraph& g, const EigenConfig& cfg = {});

struct SignVectorResult {
    double max_sq_norm = 0;  // M = max over sign vectors of |sum_i e_i v_i|^2
    std::vector<int> signs;  // first maximizer in enumeration order, entries +-1
    long long attain_count = 0; // sign vectors attaining M (within 1e-9 relative)
};

// v_i = row i of the incidence matrix scaled by 1/sqrt(deg i); maximizes
// |sum_i e_i v_i|^2 over all 2^n sign vectors. Throws when n exceeds limit.
SignVectorResult sign_vector_max(const OrientedHypergraph& g, int limit = 22);

// lambda_n >= M/n, and additionally lambda_n >= 1 when m_V = 0.
BoundReport sign_vector_bound(const OrientedHypergraph& g, const EigenConfig& cfg = {},
                              int limit = 22);

// lambda_min <= n/(n - m_V) <= lambda_n, either equality only when
// lambda_min = lambda_n, and the integer consequence
// m_V * max#h <= n (max#h - 1).
BoundReport sandwich_bound(const OrientedHypergraph& g, const EigenConfig& cfg = {});

// A proper coloring: every hyperedge meets every class in at most one vertex.
struct Coloring {
    std::vector<std::vector<int>> classes; // nonempty, sorted, ordered by min member
};

// Exact chromatic number via the clique expansion (vertices of one hyperedge
// are pairwise adjacent) and branch-and-bound backtracking. Throws when n
// exceeds limit.
std::pair<int, Coloring> chromatic_number(const OrientedHypergraph& g, int limit = 16);

struct ColoringBoundOptions {
    int chromatic_limit = 16;
    int subset_sweep_limit = 10; // all-subset main-inequality sweep enabled iff n <= this
    int subset_enum_limit = 20;  // exact h_tilde_prime enumeration
    std::vector<int> delete_set; // claimed weak deletion leaving balanced sides
};

// Chromatic-number eigenvalue bounds. Reports, in order:
//   coloring_main_V, coloring_main_all_subsets, coloring_h_prime,
//   coloring_constant_difference, coloring_uniform_refinement,
//   signless_max_eigenvalue, signless_lambda1, c_complete_spectrum,
//   coloring_balanced, coloring_deletion
// Each carries its own applicability.
std::vector<BoundReport> verify_coloring_bounds(const OrientedHypergraph& g,
                                                const EigenConfig& cfg = {},
                                                const ColoringBoundOptions& options = {});

// For balanced instances: lambda_n = chi/(chi - 1) holds iff some proper
// chi-partition has (chi - 1) | deg(i) and class-wise adjacency row sums
// deg(i)/(chi - 1) for every i outside the class. The partition search is
// capped at coloring_limit; an exhausted search decides, a truncated one
// reports unresolved when it matters.
BoundReport verify_sharpness_characterization(const OrientedHypergraph& g,
                                              const EigenConfig& cfg = {},
                                              int chromatic_limit = 16,
                                              long long coloring_limit = 10000);

} // namespace hyperlap
