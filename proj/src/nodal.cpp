#include "hyperlap/nodal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyperlap/union_find.hpp"

namespace hyperlap {

namespace {

// Components of the hypergraph restricted to the marked vertices; returns
// how many components contain at least one marked vertex.
int restricted_component_count(const OrientedHypergraph& g, const std::vector<char>& marked) {
    const int n = g.vertex_count();
    UnionFind uf(n);
    for (const auto& h : g.hyperedges()) {
        int first = -1;
        for (const auto* side : {&h.inputs, &h.outputs})
            for (int v : *side) {
                if (!marked[v]) continue;
                if (first < 0)
                    first = v;
                else
                    uf.unite(first, v);
            }
    }
    std::vector<char> seen(n, 0);
    int count = 0;
    for (int i = 0; i < n; ++i) {
        if (!marked[i]) continue;
        const int root = uf.find(i);
        if (!seen[root]) {
            seen[root] = 1;
            ++count;
        }
    }
    return count;
}

std::vector<char> support_mask(const OrientedHypergraph& g, std::span<const double> f,
                               double zero_tol, int sign) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw std::invalid_argument("nodal count: function size mismatch");
    std::vector<char> mask(g.vertex_count(), 0);
    for (int i = 0; i < g.vertex_count(); ++i) {
        const double v = f[i];
        const bool in = sign == 0 ? std::abs(v) > zero_tol
                                  : (sign > 0 ? v > zero_tol : v < -zero_tol);
        mask[i] = in ? 1 : 0;
    }
    return mask;
}

} // namespace

int signless_nodal_count(const OrientedHypergraph& g, std::span<const double> f, double zero_tol) {
    std::vector<char> supp = support_mask(g, f, zero_tol, 0);
    if (std::find(supp.begin(), supp.end(), 1) == supp.end())
        throw std::invalid_argument("signless_nodal_count: function vanishes within tolerance");
    return restricted_component_count(g, supp);
}

std::pair<int, int> signed_nodal_counts(const OrientedHypergraph& g, std::span<const double> f,
                                        double zero_tol) {
    std::vector<char> pos = support_mask(g, f, zero_tol, +1);
    std::vector<char> neg = support_mask(g, f, zero_tol, -1);
    if (std::find(pos.begin(), pos.end(), 1) == pos.end() &&
        std::find(neg.begin(), neg.end(), 1) == neg.end())
        throw std::invalid_argument("signed_nodal_counts: function vanishes within tolerance");
    return {restricted_component_count(g, pos), restricted_component_count(g, neg)};
}

std::vector<NodalReport> verify_courant(const OrientedHypergraph& g, const EigenConfig& cfg) {
    const int n = g.vertex_count();
    const bool only_inputs = g.has_only_inputs();
    std::vector<NodalReport> reports;
    reports.reserve(2 * n);

    for (const char* op : {"normalized", "unnormalized"}) {
        const Spectrum spec = op == std::string("normalized") ? spectrum_normalized(g, cfg)
                                                              : spectrum_unnormalized(g, cfg);
        for (int j = 0; j < n; ++j) {
            std::vector<double> f = spec.eigenvectors.column(j);
            double fmax = 0.0;
            for (double x : f) fmax = std::max(fmax, std::abs(x));
            const double ztol = 1e-7 * fmax;

            const Cluster cl = spec.clusters[spec.cluster_of(j)];
            NodalReport rep;
            rep.op = op;
            rep.vector_index = j + 1;
            rep.eigenvalue = spec.eigenvalues[j];
            rep.eigen_index = cl.start + 1;
            rep.multiplicity = cl.size;
            rep.signless_count = signless_nodal_count(g, f, ztol);
            rep.bound_signless = rep.eigen_index + rep.multiplicity - 1;
            rep.signless_pass = rep.signless_count <= rep.bound_signless;
            rep.signed_applicable = only_inputs;
            if (only_inputs) {
                auto [p, q] = signed_nodal_counts(g, f, ztol);
                rep.positive_count = p;
                rep.negative_count = q;
                rep.bound_signed = n - rep.eigen_index + rep.multiplicity;
                rep.signed_pass = p + q <= rep.bound_signed;
            }
            reports.push_back(std::move(rep));
        }
    }
    return reports;
}

} // namespace hyperlap
