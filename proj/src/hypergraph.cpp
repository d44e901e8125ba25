#include "hyperlap/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperlap/union_find.hpp"

namespace hyperlap {

Hyperedge::Hyperedge(std::vector<int> in, std::vector<int> out)
    : inputs(std::move(in)), outputs(std::move(out)) {
    std::sort(inputs.begin(), inputs.end());
    std::sort(outputs.begin(), outputs.end());
}

bool Hyperedge::contains(int v) const { return is_input(v) || is_output(v); }

bool Hyperedge::is_input(int v) const {
    return std::binary_search(inputs.begin(), inputs.end(), v);
}

bool Hyperedge::is_output(int v) const {
    return std::binary_search(outputs.begin(), outputs.end(), v);
}

OrientedHypergraph::OrientedHypergraph(int n, std::vector<Hyperedge> hyperedges, bool allow_isolated)
    : n_(n), allow_isolated_(allow_isolated) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    hyperedges_.reserve(hyperedges.size());
    for (auto& h : hyperedges) hyperedges_.emplace_back(std::move(h.inputs), std::move(h.outputs));
    degrees_.assign(n_, 0);
    for (const auto& h : hyperedges_) {
        for (int v : h.inputs)
            if (v >= 0 && v < n_) ++degrees_[v];
        for (int v : h.outputs)
            if (v >= 0 && v < n_) ++degrees_[v];
    }
}

int OrientedHypergraph::degree(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("vertex index out of range");
    return degrees_[i];
}

long long OrientedHypergraph::volume() const {
    long long v = 0;
    for (int d : degrees_) v += d;
    return v;
}

long long OrientedHypergraph::volume(std::span<const int> s) const {
    long long v = 0;
    for (int i : s) v += degree(i);
    return v;
}

int OrientedHypergraph::max_cardinality() const {
    int m = 0;
    for (const auto& h : hyperedges_) m = std::max(m, h.cardinality());
    return m;
}

bool OrientedHypergraph::is_regular(int& d) const {
    if (n_ == 0) return false;
    d = degrees_[0];
    for (int x : degrees_)
        if (x != d) return false;
    return true;
}

bool OrientedHypergraph::is_uniform(int& u) const {
    if (hyperedges_.empty()) return false;
    u = hyperedges_[0].cardinality();
    for (const auto& h : hyperedges_)
        if (h.cardinality() != u) return false;
    return true;
}

bool OrientedHypergraph::has_only_inputs() const {
    for (const auto& h : hyperedges_)
        if (!h.outputs.empty()) return false;
    return true;
}

bool OrientedHypergraph::is_balanced() const {
    for (const auto& h : hyperedges_)
        if (h.inputs.size() != h.outputs.size()) return false;
    return true;
}

bool OrientedHypergraph::constant_inout(int& c) const {
    if (hyperedges_.empty() || !is_balanced()) return false;
    c = static_cast<int>(hyperedges_[0].inputs.size());
    for (const auto& h : hyperedges_)
        if (static_cast<int>(h.inputs.size()) != c) return false;
    return true;
}

bool OrientedHypergraph::is_graph() const {
    if (hyperedges_.empty()) return false;
    for (const auto& h : hyperedges_)
        if (h.inputs.size() != 1 || h.outputs.size() != 1) return false;
    return true;
}

namespace {

void check_side(const std::vector<int>& side, int n, int h, const char* side_name,
                std::vector<Violation>& out) {
    for (std::size_t t = 0; t < side.size(); ++t) {
        int v = side[t];
        if (v < 0 || v >= n)
            out.push_back({"index-out-of-range", h,
                           "hyperedge " + std::to_string(h) + ": " + side_name + " vertex " +
                               std::to_string(v) + " outside [0, " + std::to_string(n) + ")"});
        if (t > 0 && side[t] == side[t - 1])
            out.push_back({"duplicate-entry", h,
                           "hyperedge " + std::to_string(h) + ": vertex " + std::to_string(v) +
                               " listed twice in " + side_name + "s"});
    }
}

} // namespace

std::vector<Violation> validate(const OrientedHypergraph& g) {
    std::vector<Violation> out;
    const int n = g.vertex_count();
    for (int h = 0; h < g.hyperedge_count(); ++h) {
        const Hyperedge& e = g.hyperedge(h);
        check_side(e.inputs, n, h, "input", out);
        check_side(e.outputs, n, h, "output", out);
        std::vector<int> overlap;
        std::set_intersection(e.inputs.begin(), e.inputs.end(), e.outputs.begin(), e.outputs.end(),
                              std::back_inserter(overlap));
        for (int v : overlap)
            out.push_back({"input-output-overlap", h,
                           "hyperedge " + std::to_string(h) + ": vertex " + std::to_string(v) +
                               " appears as both input and output"});
    }
    if (!g.allow_isolated()) {
        for (int i = 0; i < n; ++i)
            if (g.degrees()[i] == 0)
                out.push_back({"degree-zero", i, "vertex " + std::to_string(i) + " has degree 0"});
    }
    return out;
}

OrientedHypergraph weak_delete(const OrientedHypergraph& g, std::span<const int> vs) {
    const int n = g.vertex_count();
    std::vector<char> drop(n, 0);
    for (int v : vs) {
        if (v < 0 || v >= n) throw std::invalid_argument("weak_delete: vertex index out of range");
        if (drop[v]) throw std::invalid_argument("weak_delete: duplicate vertex in deletion set");
        drop[v] = 1;
    }
    const int kept = n - static_cast<int>(vs.size());
    if (kept <= 0) throw std::invalid_argument("weak_delete: deletion set removes every vertex");

    std::vector<int> remap(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i)
        if (!drop[i]) remap[i] = next++;

    auto strip = [&](const std::vector<int>& side) {
        std::vector<int> out;
        out.reserve(side.size());
        for (int v : side)
            if (!drop[v]) out.push_back(remap[v]);
        return out;
    };

    std::vector<Hyperedge> hs;
    hs.reserve(g.hyperedge_count());
    for (const auto& h : g.hyperedges()) hs.emplace_back(strip(h.inputs), strip(h.outputs));
    return OrientedHypergraph(kept, std::move(hs), g.allow_isolated());
}

OrientedHypergraph dual(const OrientedHypergraph& g) {
    for (const auto& h : g.hyperedges())
        if (h.is_empty())
            throw std::invalid_argument("dual: empty hyperedge would become an isolated vertex");
    const int n = g.vertex_count();
    const int m = g.hyperedge_count();
    std::vector<Hyperedge> hs(n);
    for (int j = 0; j < m; ++j) {
        const Hyperedge& h = g.hyperedge(j);
        for (int i : h.inputs) hs[i].inputs.push_back(j);
        for (int i : h.outputs) hs[i].outputs.push_back(j);
    }
    return OrientedHypergraph(m, std::move(hs));
}

OrientedHypergraph cartesian_product(const OrientedHypergraph& g1, const OrientedHypergraph& g2) {
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    auto id = [n2](int i, int j) { return i * n2 + j; };
    std::vector<Hyperedge> hs;
    hs.reserve(static_cast<std::size_t>(n1) * g2.hyperedge_count() +
               static_cast<std::size_t>(n2) * g1.hyperedge_count());
    for (int v = 0; v < n1; ++v)
        for (const auto& h2 : g2.hyperedges()) {
            Hyperedge h;
            for (int j : h2.inputs) h.inputs.push_back(id(v, j));
            for (int j : h2.outputs) h.outputs.push_back(id(v, j));
            hs.push_back(std::move(h));
        }
    for (int u = 0; u < n2; ++u)
        for (const auto& h1 : g1.hyperedges()) {
            Hyperedge h;
            for (int i : h1.inputs) h.inputs.push_back(id(i, u));
            for (int i : h1.outputs) h.outputs.push_back(id(i, u));
            hs.push_back(std::move(h));
        }
    return OrientedHypergraph(n1 * n2, std::move(hs));
}

OrientedHypergraph disjoint_union(const OrientedHypergraph& g, int copies) {
    if (copies < 1) throw std::invalid_argument("disjoint_union: copies must be >= 1");
    const int n = g.vertex_count();
    std::vector<Hyperedge> hs;
    hs.reserve(static_cast<std::size_t>(copies) * g.hyperedge_count());
    for (int t = 0; t < copies; ++t)
        for (const auto& h : g.hyperedges()) {
            Hyperedge shifted;
            for (int v : h.inputs) shifted.inputs.push_back(t * n + v);
            for (int v : h.outputs) shifted.outputs.push_back(t * n + v);
            hs.push_back(std::move(shifted));
        }
    return OrientedHypergraph(n * copies, std::move(hs), g.allow_isolated());
}

OrientedHypergraph reverse_hyperedge(const OrientedHypergraph& g, int h) {
    if (h < 0 || h >= g.hyperedge_count())
        throw std::out_of_range("reverse_hyperedge: hyperedge index out of range");
    std::vector<Hyperedge> hs = g.hyperedges();
    hs[h] = hs[h].reversed();
    return OrientedHypergraph(g.vertex_count(), std::move(hs), g.allow_isolated());
}

std::vector<std::vector<int>> connected_components(const OrientedHypergraph& g) {
    const int n = g.vertex_count();
    UnionFind uf(n);
    for (const auto& h : g.hyperedges()) {
        int first = -1;
        for (const auto* side : {&h.inputs, &h.outputs})
            for (int v : *side) {
                if (first < 0)
                    first = v;
                else
                    uf.unite(first, v);
            }
    }
    std::vector<std::vector<int>> by_root(n);
    for (int i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& c : by_root)
        if (!c.empty()) out.push_back(std::move(c));
    return out;
}

} // namespace hyperlap
