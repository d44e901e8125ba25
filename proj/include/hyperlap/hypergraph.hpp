#pragma once

#include <span>
#include <string>
#include <vector>

namespace hyperlap {

// A hyperedge is a pair of disjoint vertex sets. Vertices on the same side
// are co-oriented within the hyperedge; vertices on opposite sides are
// anti-oriented. Reversing a hyperedge swaps the two sides and does not
// change any co/anti-orientation relation.
struct Hyperedge {
    std::vector<int> inputs;  // sorted ascending after construction
    std::vector<int> outputs; // sorted ascending after construction

    Hyperedge() = default;
    Hyperedge(std::vector<int> in, std::vector<int> out);

    int cardinality() const { return static_cast<int>(inputs.size() + outputs.size()); }
    bool is_empty() const { return inputs.empty() && outputs.empty(); }
    bool contains(int v) const;
    bool is_input(int v) const;
    bool is_output(int v) const;
    Hyperedge reversed() const { return Hyperedge(outputs, inputs); }

    bool operator==(const Hyperedge&) const = default;
};

// Oriented hypergraph on vertices 0..n-1 with an ordered list of hyperedges.
// The hyperedge list has multiset semantics: duplicates are distinct
// hyperedges and every count (degree, adjacency, incidence column) respects
// multiplicity. Vertex identity is positional; transforms that drop vertices
// reindex the survivors densely, preserving relative order.
//
// Instances are immutable. Construction sorts each hyperedge side but never
// rejects rule violations beyond n < 0; `validate` reports them so callers
// can diagnose malformed input. Every other operation has "valid instance"
// as a precondition. `allow_isolated` marks an instance as deliberately
// tolerating degree-0 vertices; Laplacian builders still refuse such
// instances because normalization divides by the degree.
class OrientedHypergraph {
public:
    OrientedHypergraph(int n, std::vector<Hyperedge> hyperedges, bool allow_isolated = false);

    int vertex_count() const { return n_; }
    int hyperedge_count() const { return static_cast<int>(hyperedges_.size()); }
    const std::vector<Hyperedge>& hyperedges() const { return hyperedges_; }
    const Hyperedge& hyperedge(int h) const { return hyperedges_.at(h); }
    bool allow_isolated() const { return allow_isolated_; }

    // Number of hyperedges containing vertex i (input or output side).
    // Throws std::out_of_range for i outside [0, n).
    int degree(int i) const;
    const std::vector<int>& degrees() const { return degrees_; }

    // Sum of degrees over all vertices / over a vertex set (no duplicates).
    long long volume() const;
    long long volume(std::span<const int> s) const;

    int max_cardinality() const;

    // Structural predicates used as theorem premises.
    bool is_regular(int& d) const;       // all degrees equal
    bool is_uniform(int& u) const;       // all cardinalities equal
    bool has_only_inputs() const;        // every output side empty
    bool is_balanced() const;            // |inputs| == |outputs| per hyperedge
    bool constant_inout(int& c) const;   // |inputs| == |outputs| == c for all hyperedges
    bool is_graph() const;               // every hyperedge has exactly one input and one output

    bool operator==(const OrientedHypergraph&) const = default;

private:
    int n_ = 0;
    std::vector<Hyperedge> hyperedges_;
    std::vector<int> degrees_;
    bool allow_isolated_ = false;
};

// One rule violation found by validate(). `index` is the offending vertex or
// hyperedge index depending on the rule.
struct Violation {
    std::string rule;    // "index-out-of-range" | "input-output-overlap" | "duplicate-entry" | "degree-zero"
    int index = -1;
    std::string message; // human-readable, names the vertex/hyperedge and rule
};

// Checks every construction rule and returns all violations (empty means
// valid). Degree-0 vertices are only a violation when allow_isolated is off.
std::vector<Violation> validate(const OrientedHypergraph& g);

// Removes the vertices in vs from the vertex set and from every hyperedge.
// Hyperedges are kept even when they become empty, so surviving vertices
// keep their degrees. Survivors are reindexed densely in increasing order of
// their old index. Throws std::invalid_argument on out-of-range or duplicate
// entries in vs, or when vs removes every vertex.
OrientedHypergraph weak_delete(const OrientedHypergraph& g, std::span<const int> vs);

// Transposes the incidence relation: dual vertex j <-> hyperedge h_j, dual
// hyperedge i <-> vertex v_i, and v'_j is an input of h'_i exactly when v_i
// is an input of h_j. Throws std::invalid_argument if g has an empty
// hyperedge (its dual vertex would be isolated).
OrientedHypergraph dual(const OrientedHypergraph& g);

// Cartesian product: vertex set V1 x V2 with (i,j) -> i*n2 + j. Hyperedges
// are {v} x h2 for every v in V1 and h2 in H2 (in that loop order), followed
// by h1 x {u} for every u in V2 and h1 in H1; orientations are copied from
// the factor hyperedge.
OrientedHypergraph cartesian_product(const OrientedHypergraph& g1, const OrientedHypergraph& g2);

// `copies` disjoint copies of g; copy t maps vertex i to t*n + i and the
// hyperedge list is the concatenation of the copies in order.
OrientedHypergraph disjoint_union(const OrientedHypergraph& g, int copies);

// Returns g with hyperedge h reversed (inputs and outputs swapped).
OrientedHypergraph reverse_hyperedge(const OrientedHypergraph& g, int h);

// Connected components of the relation "i and j share a hyperedge",
// transitively closed. Isolated vertices form singleton components.
// Components are sorted by smallest member; members sorted ascending.
std::vector<std::vector<int>> connected_components(const OrientedHypergraph& g);

} // namespace hyperlap
