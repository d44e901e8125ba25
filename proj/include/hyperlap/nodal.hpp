#pragma once

#include <span>
#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/spectra.hpp"

namespace hyperlap {

// Nodal-domain counts and Courant-style bounds for one eigenvector. Indices
// follow the lambda_1..lambda_n convention: eigen_index is the 1-based start
// of the eigenvalue's cluster and multiplicity its size, so an eigenvalue
// lambda_k with multiplicity r occupies positions k..k+r-1.
struct NodalReport {
    std::string op;          // "normalized" or "unnormalized"
    int vector_index = 0;    // 1-based position of the eigenvector
    double eigenvalue = 0.0;
    int eigen_index = 0;     // k
    int multiplicity = 0;    // r
    int signless_count = 0;
    int bound_signless = 0;  // k + r - 1
    bool signless_pass = false;
    bool signed_applicable = false; // only-inputs instances
    int positive_count = 0;
    int negative_count = 0;
    int bound_signed = 0;    // n - k + r
    bool signed_pass = false;
};

// Number of connected components of (V, { h intersect supp(f) }) that meet
// supp(f), where supp(f) = { i : |f(i)| > zero_tol }. Components consisting
// of zero vertices are not counted. Throws std::invalid_argument when f
// vanishes identically within the tolerance.
int signless_nodal_count(const OrientedHypergraph& g, std::span<const double> f, double zero_tol);

// Same construction applied separately to { f > zero_tol } and
// { f < -zero_tol }; returns (positive count, negative count).
std::pair<int, int> signed_nodal_counts(const OrientedHypergraph& g, std::span<const double> f,
                                        double zero_tol);

// Checks every eigenvector basis returned by the solver, for both the
// normalized and unnormalized Laplacians: the signless count never exceeds
// k + r - 1, and for only-inputs instances the total signed count never
// exceeds n - k + r. Support threshold per function: 1e-7 * max|f|.
std::vector<NodalReport> verify_courant(const OrientedHypergraph& g, const EigenConfig& cfg = {});

} // namespace hyperlap
