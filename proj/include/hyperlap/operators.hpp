#pragma once

#include <span>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/matrix.hpp"

namespace hyperlap {

// n x m incidence matrix: +1 where the vertex is an input of the hyperedge,
// -1 where it is an output, 0 otherwise.
DenseMatrix incidence(const OrientedHypergraph& g);

// Diagonal degree matrix D.
DenseMatrix degree_matrix(const OrientedHypergraph& g);

// Symmetric adjacency A with zero diagonal:
// A[i][j] = (# hyperedges where i, j are anti-oriented)
//         - (# hyperedges where i, j are co-oriented).
DenseMatrix adjacency(const OrientedHypergraph& g);

// Random-walk normalized Laplacian L = I - D^{-1} A (not symmetric in
// general). Throws std::invalid_argument when any vertex has degree 0.
DenseMatrix normalized_laplacian(const OrientedHypergraph& g);

// Symmetrized normalized Laplacian  I - D^{-1/2} A D^{-1/2}, similar to L,
// so both share one spectrum. Throws on degree-0 vertices.
DenseSymMatrix sym_laplacian(const OrientedHypergraph& g);

// Unnormalized Laplacian D - A. Built twice (matrix algebra and the
// entrywise operator definition applied to basis vectors) and cross-checked;
// a mismatch throws std::logic_error.
DenseSymMatrix unnormalized_laplacian(const OrientedHypergraph& g);

// m x m hyperedge Laplacian  incidence^T D^{-1} incidence, cross-checked
// against the entrywise operator definition. Throws on degree-0 vertices.
DenseSymMatrix hyperedge_laplacian(const OrientedHypergraph& g);

// Rayleigh quotient of a vertex function:
//   sum_h (sum_{inputs} f - sum_{outputs} f)^2 / sum_i deg(i) f(i)^2.
// Throws std::invalid_argument if f is identically zero or has wrong size.
double rayleigh_quotient_vertex(const OrientedHypergraph& g, std::span<const double> f);

// Rayleigh quotient of a hyperedge function:
//   sum_i (1/deg(i)) (sum_{h: i input} gamma - sum_{h: i output} gamma)^2
//   / sum_h gamma(h)^2.
double rayleigh_quotient_hyperedge(const OrientedHypergraph& g, std::span<const double> gamma);

} // namespace hyperlap
