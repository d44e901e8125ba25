#pragma once

#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

long long binomial(int n, int k);

// Complete graph on n >= 2 vertices: one hyperedge per 2-subset {i < j},
// oriented with the lower index as input.
OrientedHypergraph complete_graph(int n);

// All C(n, c) c-subsets as hyperedges with every member an input (1 <= c <= n).
// Subsets are emitted in lexicographic order.
OrientedHypergraph c_complete_signless(int n, int c);

// One hyperedge per unordered pair {A, B} of disjoint c-subsets (so per
// 2c-subset U and unordered split of U into halves); the input side is the
// half containing min(U). Requires 1 <= c and 2c <= n. The result is
// 2c-uniform and regular of degree C(n-1, 2c-1) * C(2c, c) / 2.
OrientedHypergraph symmetric_2c_complete(int n, int c);

// n hyperedges; hyperedge i is the single input {i}.
OrientedHypergraph singleton_hyperedges(int n);

// One hyperedge containing all n vertices as inputs.
OrientedHypergraph full_hyperedge(int n);

// Fixed 8-vertex instance with ten all-input hyperedges whose kernel is
// spanned by a +/-1 function with more signed than signless nodal domains:
// {0,1,2,3},{2,3,4,5},{4,5,6,7},{6,7,0,1},{0,2},{0,3},{2,4},{2,5},{4,6},{4,7}.
OrientedHypergraph remark_4_3();

} // namespace hyperlap
