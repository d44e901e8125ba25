#include "hyperlap/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperlap {

namespace {

void require_positive_degrees(const OrientedHypergraph& g, const char* op) {
    for (int i = 0; i < g.vertex_count(); ++i)
        if (g.degrees()[i] == 0)
            throw std::invalid_argument(std::string(op) + ": vertex " + std::to_string(i) +
                                        " has degree 0 (normalization requires positive degrees)");
}

} // namespace

DenseMatrix incidence(const OrientedHypergraph& g) {
    DenseMatrix inc(g.vertex_count(), g.hyperedge_count());
    for (int h = 0; h < g.hyperedge_count(); ++h) {
        for (int v : g.hyperedge(h).inputs) inc(v, h) = 1.0;
        for (int v : g.hyperedge(h).outputs) inc(v, h) = -1.0;
    }
    return inc;
}

DenseMatrix degree_matrix(const OrientedHypergraph& g) {
    DenseMatrix d(g.vertex_count(), g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) d(i, i) = g.degrees()[i];
    return d;
}

DenseMatrix adjacency(const OrientedHypergraph& g) {
    const int n = g.vertex_count();
    DenseMatrix a(n, n);
    for (const auto& h : g.hyperedges()) {
        // Same side: co-oriented (-1); opposite sides: anti-oriented (+1).
        for (const auto* side : {&h.inputs, &h.outputs})
            for (std::size_t s = 0; s < side->size(); ++s)
                for (std::size_t t = s + 1; t < side->size(); ++t) {
                    a((*side)[s], (*side)[t]) -= 1.0;
                    a((*side)[t], (*side)[s]) -= 1.0;
                }
        for (int i : h.inputs)
            for (int j : h.outputs) {
                a(i, j) += 1.0;
                a(j, i) += 1.0;
            }
    }
    return a;
}

DenseMatrix normalized_laplacian(const OrientedHypergraph& g) {
    require_positive_degrees(g, "normalized_laplacian");
    const int n = g.vertex_count();
    DenseMatrix a = adjacency(g);
    DenseMatrix l(n, n);
    for (int i = 0; i < n; ++i) {
        const double d = g.degrees()[i];
        for (int j = 0; j < n; ++j) l(i, j) = (i == j ? 1.0 : 0.0) - a(i, j) / d;
    }
    return l;
}

DenseSymMatrix sym_laplacian(const OrientedHypergraph& g) {
    require_positive_degrees(g, "sym_laplacian");
    const int n = g.vertex_count();
    DenseMatrix a = adjacency(g);
    DenseSymMatrix l(n);
    for (int i = 0; i < n; ++i) {
        l.set(i, i, 1.0);
        for (int j = i + 1; j < n; ++j)
            l.set(i, j, -a(i, j) / std::sqrt(static_cast<double>(g.degrees()[i]) * g.degrees()[j]));
    }
    return l;
}

DenseSymMatrix unnormalized_laplacian(const OrientedHypergraph& g) {
    const int n = g.vertex_count();
    DenseMatrix a = adjacency(g);
    DenseMatrix delta(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) delta(i, j) = (i == j ? g.degrees()[i] : 0.0) - a(i, j);

    // Cross-check: apply the operator definition
    //   (Delta f)(i) = sum_{h: i input} (sum_in f - sum_out f)
    //                - sum_{h: i output} (sum_in f - sum_out f)
    // to each basis vector; counting is exact, so entries must match exactly.
    DenseMatrix check(n, n);
    for (const auto& h : g.hyperedges())
        for (int j = 0; j < n; ++j) {
            const double imbalance = (h.is_input(j) ? 1.0 : 0.0) - (h.is_output(j) ? 1.0 : 0.0);
            if (imbalance == 0.0) continue;
            for (int i : h.inputs) check(i, j) += imbalance;
            for (int i : h.outputs) check(i, j) -= imbalance;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(delta(i, j) - check(i, j)) > 1e-9)
                throw std::logic_error("unnormalized_laplacian: entrywise cross-check failed");

    return DenseSymMatrix::from_matrix(delta);
}

DenseSymMatrix hyperedge_laplacian(const OrientedHypergraph& g) {
    require_positive_degrees(g, "hyperedge_laplacian");
    const int m = g.hyperedge_count();
    DenseMatrix inc = incidence(g);
    DenseSymMatrix lh(m);
    for (int h = 0; h < m; ++h)
        for (int k = h; k < m; ++k) {
            double s = 0.0;
            for (int i = 0; i < g.vertex_count(); ++i)
                s += inc(i, h) * inc(i, k) / g.degrees()[i];
            lh.set(h, k, s);
        }

    // Cross-check against the operator definition applied to hyperedge
    // indicator functions, summed per vertex side.
    const double scale = std::max(1.0, lh.matrix().max_abs());
    for (int h = 0; h < m; ++h)
        for (int k = 0; k < m; ++k) {
            double s = 0.0;
            for (int i : g.hyperedge(h).inputs) s += inc(i, k) / g.degrees()[i];
            for (int j : g.hyperedge(h).outputs) s -= inc(j, k) / g.degrees()[j];
            if (std::abs(s - lh(h, k)) > 1e-10 * scale)
                throw std::logic_error("hyperedge_laplacian: entrywise cross-check failed");
        }
    return lh;
}

double rayleigh_quotient_vertex(const OrientedHypergraph& g, std::span<const double> f) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw std::invalid_argument("rayleigh_quotient_vertex: function size mismatch");
    double den = 0.0;
    for (int i = 0; i < g.vertex_count(); ++i) den += g.degrees()[i] * f[i] * f[i];
    if (den == 0.0) throw std::invalid_argument("rayleigh_quotient_vertex: zero function");
    double num = 0.0;
    for (const auto& h : g.hyperedges()) {
        double s = 0.0;
        for (int v : h.inputs) s += f[v];
        for (int v : h.outputs) s -= f[v];
        num += s * s;
    }
    return num / den;
}

double rayleigh_quotient_hyperedge(const OrientedHypergraph& g, std::span<const double> gamma) {
    if (static_cast<int>(gamma.size()) != g.hyperedge_count())
        throw std::invalid_argument("rayleigh_quotient_hyperedge: function size mismatch");
    require_positive_degrees(g, "rayleigh_quotient_hyperedge");
    double den = 0.0;
    for (double v : gamma) den += v * v;
    if (den == 0.0) throw std::invalid_argument("rayleigh_quotient_hyperedge: zero function");
    double num = 0.0;
    for (int i = 0; i < g.vertex_count(); ++i) {
        double s = 0.0;
        for (int h = 0; h < g.hyperedge_count(); ++h) {
            if (g.hyperedge(h).is_input(i)) s += gamma[h];
            if (g.hyperedge(h).is_output(i)) s -= gamma[h];
        }
        num += s * s / g.degrees()[i];
    }
    return num / den;
}

} // namespace hyperlap
