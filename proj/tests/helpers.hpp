#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperlap/generators.hpp"
#include "hyperlap/hypergraph.hpp"
#include "hyperlap/matrix.hpp"

namespace testutil {

using hyperlap::Hyperedge;
using hyperlap::OrientedHypergraph;

inline OrientedHypergraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Hyperedge> hs;
    hs.reserve(edges.size());
    for (auto [a, b] : edges) hs.push_back(Hyperedge{{a}, {b}});
    return OrientedHypergraph(n, std::move(hs));
}

inline OrientedHypergraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return from_edges(n, edges);
}

enum class Flavor { General, AllInputs, Balanced };

// mt19937 raw output is standardized, so helpers built on it are
// reproducible across platforms (std distributions are not).
inline int pick(std::mt19937& rng, int bound) {
    return static_cast<int>(rng() % static_cast<unsigned>(bound));
}

inline OrientedHypergraph random_hypergraph(std::mt19937& rng, int max_n = 8, int max_m = 10,
                                            Flavor flavor = Flavor::General) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const int n = 2 + pick(rng, max_n - 1);
        const int m = 1 + pick(rng, max_m);
        std::vector<Hyperedge> hs;
        hs.reserve(m);
        for (int h = 0; h < m; ++h) {
            std::vector<int> in, out;
            if (flavor == Flavor::Balanced) {
                const int c = 1 + pick(rng, std::max(1, n / 2));
                std::vector<int> perm(n);
                for (int i = 0; i < n; ++i) perm[i] = i;
                for (int t = 0; t < 2 * c; ++t) std::swap(perm[t], perm[t + pick(rng, n - t)]);
                in.assign(perm.begin(), perm.begin() + c);
                out.assign(perm.begin() + c, perm.begin() + 2 * c);
            } else {
                for (int v = 0; v < n; ++v) {
                    const unsigned r = rng() % 3u;
                    if (flavor == Flavor::AllInputs) {
                        if (r != 0) continue;
                        in.push_back(v);
                    } else if (r == 0) {
                        in.push_back(v);
                    } else if (r == 1) {
                        out.push_back(v);
                    }
                }
                if (in.empty() && out.empty()) in.push_back(pick(rng, n));
            }
            hs.push_back(Hyperedge{std::move(in), std::move(out)});
        }
        OrientedHypergraph g(n, std::move(hs));
        bool covered = true;
        for (int i = 0; i < n; ++i)
            if (g.degree(i) == 0) covered = false;
        if (covered) return g;
    }
    throw std::runtime_error("random_hypergraph: sampling failed to cover every vertex");
}

inline bool proper_assignment(const OrientedHypergraph& g, const std::vector<int>& color) {
    for (const auto& h : g.hyperedges()) {
        std::vector<int> seen;
        for (const auto* side : {&h.inputs, &h.outputs})
            for (int v : *side) {
                if (std::find(seen.begin(), seen.end(), color[v]) != seen.end()) return false;
                seen.push_back(color[v]);
            }
    }
    return true;
}

// Exhaustive k^n search, the oracle for the branch-and-bound implementation.
inline int brute_force_chromatic(const OrientedHypergraph& g) {
    const int n = g.vertex_count();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> color(n, 0);
        while (true) {
            if (proper_assignment(g, color)) return k;
            int i = 0;
            while (i < n && ++color[i] == k) {
                color[i] = 0;
                ++i;
            }
            if (i == n) break;
        }
    }
    return n;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::vector<double> random_unit_free_vector(std::mt19937& rng, int n) {
    std::vector<double> v(n);
    for (double& x : v) x = 2.0 * (rng() * (1.0 / 4294967296.0)) - 1.0;
    bool zero = true;
    for (double x : v)
        if (x != 0.0) zero = false;
    if (zero && n > 0) v[0] = 1.0;
    return v;
}

// Deterministic random orthogonal matrix (Gram-Schmidt columns).
inline hyperlap::DenseMatrix random_orthogonal(std::mt19937& rng, int n) {
    std::vector<std::vector<double>> cols;
    while (static_cast<int>(cols.size()) < n) {
        std::vector<double> v = random_unit_free_vector(rng, n);
        for (const auto& u : cols) {
            const double d = dot(u, v);
            for (int i = 0; i < n; ++i) v[i] -= d * u[i];
        }
        const double norm = std::sqrt(dot(v, v));
        if (norm < 1e-3) continue;
        for (double& x : v) x /= norm;
        cols.push_back(std::move(v));
    }
    hyperlap::DenseMatrix q(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) q(i, j) = cols[j][i];
    return q;
}

} // namespace testutil
