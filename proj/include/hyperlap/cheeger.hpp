#pragma once

#include <functional>
#include <optional>
#include <span>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/report.hpp"
#include "hyperlap/spectra.hpp"

namespace hyperlap {

struct VertexSubset {
    std::vector<int> members; // sorted ascending
    long long vol = 0;
    long long e_value = 0; // e_tilde(S), exact integer
};

// e_tilde(S) = sum_h (|inputs(h) in S| - |outputs(h) in S|)^2. Exact integer
// arithmetic. S must be a nonempty duplicate-free subset of the vertex set.
long long e_tilde(const OrientedHypergraph& g, std::span<const int> s);

// nu_tilde(S) = e_tilde(S) / vol(S).
double nu_tilde(const OrientedHypergraph& g, std::span<const int> s);

// Generalized Cheeger constants by exhaustive subset enumeration (Gray-code
// incremental updates, so each step costs O(deg of the toggled vertex)):
//   h       = min nu_tilde(S) over nonempty S with 2 vol(S) <= vol(V)
//   h_prime = min nu_tilde(S) over all nonempty S (including V)
// Minima are compared as exact integer ratios; ties resolve to the
// lexicographically smallest sorted member list. Requires 2 <= n <= limit.
struct CheegerResult {
    double h = 0.0;
    VertexSubset argmin;
    double h_prime = 0.0;
    VertexSubset argmin_prime;
};
CheegerResult cheeger_constants(const OrientedHypergraph& g, int limit = 20);

// max nu_tilde(S) over every nonempty subset is a Rayleigh quotient of an
// indicator-like function, so it cannot exceed lambda_n.
BoundReport verify_nu_upper_any(const OrientedHypergraph& g, const EigenConfig& cfg = {},
                                int limit = 20);

// Upper bounds for the smallest nonzero eigenvalue lambda_min:
//   m_V = 0:                   lambda_1 <= h
//   m_V = 1 and balanced:      lambda_2 <= 2 h
// Not applicable otherwise.
BoundReport verify_cheeger_upper(const OrientedHypergraph& g, const EigenConfig& cfg = {},
                                 int limit = 20);

// Lower bound via a weak-deleted graph: when g-hat = weak_delete(g, vs) is a
// graph (every hyperedge one input and one output) and r = |vs| <= k - 2 for
// k = m_V + 1, then (1/2) h(g)^2 <= lambda_min(g). Also re-checks the
// monotonicity link h(g-hat) >= h(g) used by the derivation.
BoundReport verify_cheeger_lower_via_graph(const OrientedHypergraph& g, std::span<const int> vs,
                                           const EigenConfig& cfg = {}, int limit = 20);

// A pairing matches each input of a hyperedge with exactly one output
// (possible when |inputs| = |outputs| = c for every hyperedge); replacing
// each hyperedge by its c matched edges yields an "underlying graph" on the
// same vertex set with the same degrees.
struct UnderlyingGraph {
    // output_order[h][t] pairs with the t-th (ascending) input of hyperedge h.
    std::vector<std::vector<int>> output_order;
    OrientedHypergraph graph;
};

enum class PairingMode { Canonical, All };

// Canonical pairing matches sorted inputs to sorted outputs elementwise;
// All enumerates every combination of per-hyperedge output permutations.
// Throws std::invalid_argument when sides are not constant-c, and
// std::runtime_error when All would exceed `limit` graphs.
std::vector<UnderlyingGraph> underlying_graphs(const OrientedHypergraph& g,
                                               PairingMode mode = PairingMode::Canonical,
                                               long long limit = 10000);

// Lower bound via underlying graphs, for constant-c instances. Searches
// pairings (canonical first) for a graph G with lambda_{k-1}(G) = 0 and
// lambda_k(G) > 0; when found asserts
//   lambda_min(g) >= h(g)^2 / (2c),
//   lambda_min(g) >= c * lambda_k(G),
//   h(g) <= c * h(G).
// Returns two reports: "underlying_harmonic_claim" (lambda_{k-1}(G) = 0 for
// every enumerated pairing; violations are surfaced as failures) and
// "cheeger_lower_underlying" (the bound chain; unresolved when no pairing
// within the limit qualifies).
std::vector<BoundReport> verify_cheeger_lower_underlying(const OrientedHypergraph& g,
                                                         const EigenConfig& cfg = {},
                                                         long long pairing_limit = 10000,
                                                         int subset_limit = 20);

} // namespace hyperlap
