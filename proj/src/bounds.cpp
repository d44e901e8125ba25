#include "hyperlap/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "hyperlap/cheeger.hpp"
#include "hyperlap/generators.hpp"
#include "hyperlap/operators.hpp"

namespace hyperlap {

namespace {

// Adjacency entries are exact counts; recover them as integers.
std::vector<std::vector<long long>> integer_adjacency(const OrientedHypergraph& g) {
    const DenseMatrix a = adjacency(g);
    const int n = g.vertex_count();
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = std::llround(a(i, j));
    return rows;
}

int multiplicity_near(const std::vector<double>& eigenvalues, double target, double tol) {
    int count = 0;
    for (double ev : eigenvalues)
        if (std::abs(ev - target) <= tol) ++count;
    return count;
}

std::string to_str(long long v) { return std::to_string(v); }

} // namespace

std::vector<std::vector<int>> duplicate_classes(const OrientedHypergraph& g) {
    const auto rows = integer_adjacency(g);
    std::map<std::vector<long long>, std::vector<int>> groups;
    for (int i = 0; i < g.vertex_count(); ++i) groups[rows[i]].push_back(i);
    std::vector<std::vector<int>> classes;
    classes.reserve(groups.size());
    for (auto& [row, members] : groups) classes.push_back(std::move(members));
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

std::vector<BoundReport> verify_eigenvalue_one(const OrientedHypergraph& g,
                                               const EigenConfig& cfg) {
    const int n = g.vertex_count();
    const Spectrum spec = spectrum_normalized(g, cfg);
    const int mult1 = multiplicity_near(spec.eigenvalues, 1.0, cfg.cluster_tol);

    const Spectrum aspec = eigen_sym(DenseSymMatrix::from_matrix(adjacency(g)), cfg);
    const double ztol = cfg.zero_tol(n);
    int rank_a = 0;
    for (double mu : aspec.eigenvalues)
        if (std::abs(mu) > ztol) ++rank_a;
    const int nullity = n - rank_a;

    std::vector<BoundReport> out;
    out.push_back(BoundReport::check_eq("eigenvalue_one_nullity",
                                        "mult of eigenvalue 1 in L = n - rank(A)",
                                        static_cast<double>(mult1),
                                        static_cast<double>(nullity), 0.1));
    out.back().details.push_back("mult(1) = " + to_str(mult1) + ", rank(A) = " + to_str(rank_a));

    std::vector<std::vector<int>> dup;
    for (auto& cls : duplicate_classes(g))
        if (cls.size() >= 2) dup.push_back(cls);

    if (dup.empty()) {
        out.push_back(BoundReport::not_applicable("duplicate_multiplicity",
                                                  "no duplicate vertices"));
        out.push_back(BoundReport::not_applicable("duplicate_eigenfunction",
                                                  "no duplicate vertices"));
        return out;
    }

    std::size_t largest = 0;
    for (const auto& cls : dup) largest = std::max(largest, cls.size());
    BoundReport mult_rep = BoundReport::check_ge(
        "duplicate_multiplicity", "mult of eigenvalue 1 >= class size - 1",
        static_cast<double>(mult1), static_cast<double>(largest - 1), 0.1);
    mult_rep.details.push_back(to_str(static_cast<long long>(dup.size())) +
                               " duplicate class(es), largest has " +
                               to_str(static_cast<long long>(largest)) + " vertices");
    out.push_back(std::move(mult_rep));

    const DenseMatrix lap = normalized_laplacian(g);
    double max_resid = 0.0;
    for (const auto& cls : dup) {
        for (std::size_t t = 1; t < cls.size(); ++t) {
            std::vector<double> f(n, 0.0);
            f[cls[0]] = 1.0;
            f[cls[t]] = -1.0;
            const std::vector<double> lf = lap.multiply(f);
            for (int k = 0; k < n; ++k) max_resid = std::max(max_resid, std::abs(lf[k] - f[k]));
        }
    }
    out.push_back(BoundReport::check_le("duplicate_eigenfunction",
                                        "max |(L - I)(e_i - e_j)| = 0 over duplicate pairs",
                                        max_resid, 0.0, 1e-9));
    return out;
}

BoundReport verify_duplicate_ratio(const OrientedHypergraph& g, const EigenConfig& cfg) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& cls : duplicate_classes(g))
        for (std::size_t t = 1; t < cls.size(); ++t) pairs.push_back({cls[0], cls[t]});
    if (pairs.empty())
        return BoundReport::not_applicable("duplicate_ratio", "no duplicate vertices");

    const int n = g.vertex_count();
    const Spectrum spec = spectrum_normalized(g, cfg);
    double max_dev = 0.0;
    int checked = 0;
    for (int j = 0; j < n; ++j) {
        if (std::abs(spec.eigenvalues[j] - 1.0) <= cfg.cluster_tol) continue;
        const std::vector<double> f = spec.eigenvectors.column(j);
        double fmax = 0.0;
        for (double v : f) fmax = std::max(fmax, std::abs(v));
        for (auto [a, b] : pairs) {
            const double dev = std::abs(g.degree(a) * f[a] - g.degree(b) * f[b]);
            max_dev = std::max(max_dev, dev / fmax);
        }
        ++checked;
    }
    if (checked == 0)
        return BoundReport::not_applicable("duplicate_ratio", "every eigenvalue equals 1");
    BoundReport rep = BoundReport::check_le(
        "duplicate_ratio", "deg(i) f(i) = deg(j) f(j) on eigenfunctions with eigenvalue != 1",
        max_dev, 0.0, cfg.cluster_tol);
    rep.details.push_back("checked " + to_str(checked) + " eigenpair(s) against " +
                          to_str(static_cast<long long>(pairs.size())) + " duplicate pair(s)");
    return rep;
}

CQuantities c_quantities(const OrientedHypergraph& g) {
    const int n = g.vertex_count();
    const DenseMatrix a = adjacency(g);
    const std::vector<int>& deg = g.degrees();
    for (int i = 0; i < n; ++i)
        if (deg[i] == 0) throw std::invalid_argument("c_quantities: vertex with degree 0");

    CQuantities q;
    q.c1.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += a(i, j) * a(i, j) / (static_cast<double>(deg[i]) * deg[j]);
        q.c1[i] = 1.0 + s;
    }
    double total = 0.0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            total += a(i, j) * a(i, j) / (static_cast<double>(deg[j]) * deg[i]);
    q.c2 = 1.0 + total / n;

    double weighted = 0.0;
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < n; ++i) col += a(i, j) * a(i, j);
        weighted += col / deg[j];
    }
    q.c3 = 1.0 + weighted / static_cast<double>(g.volume());
    return q;
}

BoundReport verify_c_quantities(const OrientedHypergraph& g, const EigenConfig& cfg) {
    const int n = g.vertex_count();
    if (n == 0) return BoundReport::not_applicable("c_quantities", "no vertices");
    const CQuantities q = c_quantities(g);
    const ZeroMultiplicities zm = zero_multiplicities(g, cfg);
    if (zm.m_v >= n) return BoundReport::not_applicable("c_quantities", "no nonzero eigenvalue");
    const Spectrum spec = spectrum_normalized(g, cfg);
    const double lam_min = spec.eigenvalues[zm.m_v];
    const double lam_n = spec.eigenvalues.back();
    const double tol = cfg.cluster_tol;

    const double min_c1 = *std::min_element(q.c1.begin(), q.c1.end());
    const double max_c1 = *std::max_element(q.c1.begin(), q.c1.end());

    std::vector<BoundReport> parts;
    parts.push_back(BoundReport::check_ge("pointwise_lower", "min_i C1(i) >= lambda_min", min_c1,
                                          lam_min, tol));
    parts.push_back(
        BoundReport::check_le("pointwise_upper", "max_i C1(i) <= lambda_n", max_c1, lam_n, tol));
    parts.push_back(BoundReport::check_ge("means_lower", "C2, C3 >= lambda_min",
                                          std::min(q.c2, q.c3), lam_min, tol));
    parts.push_back(BoundReport::check_le("means_upper", "C2, C3 <= lambda_n",
                                          std::max(q.c2, q.c3), lam_n, tol));

    // A mean can only touch an end of the sandwich when every C1(i) sits at
    // that end; the scale factors bound how far a single C1(i) can stray when
    // the mean is within tol of the end.
    int min_deg = g.degrees()[0];
    for (int d : g.degrees()) min_deg = std::min(min_deg, d);
    const double scale_c2 = n + 1.0;
    const double scale_c3 = static_cast<double>(g.volume()) / min_deg + 1.0;
    BoundReport crit;
    crit.name = "equality_criterion";
    crit.statement = "a mean equals lambda_min or lambda_n only when all C1(i) do";
    crit.relation = "=";
    crit.status = CheckStatus::Pass;
    const auto check_end = [&](double mean, double scale, const char* label) {
        if (std::abs(mean - lam_min) <= tol && max_c1 - lam_min > scale * tol) {
            crit.status = CheckStatus::Fail;
            crit.details.push_back(std::string(label) +
                                   " touches lambda_min but some C1(i) does not");
        }
        if (std::abs(lam_n - mean) <= tol && lam_n - min_c1 > scale * tol) {
            crit.status = CheckStatus::Fail;
            crit.details.push_back(std::string(label) +
                                   " touches lambda_n but some C1(i) does not");
        }
    };
    check_end(q.c2, scale_c2, "C2");
    check_end(q.c3, scale_c3, "C3");
    parts.push_back(std::move(crit));

    BoundReport rep = BoundReport::combine(
        "c_quantities", "lambda_min <= C1(i), C2, C3 <= lambda_n with equality criterion", parts);
    rep.lhs = lam_min;
    rep.rhs = lam_n;
    return rep;
}

SignVectorResult sign_vector_max(const OrientedHypergraph& g, int limit) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("sign_vector_max: needs n >= 1");
    if (n > limit || n >= 63)
        throw std::invalid_argument("sign_vector_max: vertex count exceeds the sign limit");
    const int m = g.hyperedge_count();
    const DenseMatrix inc = incidence(g);
    DenseMatrix v(n, m);
    for (int i = 0; i < n; ++i) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(g.degree(i)));
        for (int h = 0; h < m; ++h) v(i, h) = inc(i, h) * scale;
    }

    const auto sq_norm = [&](const std::vector<double>& s) {
        double t = 0.0;
        for (double x : s) t += x * x;
        return t;
    };
    // Gray-code walk over sign vectors; each step flips one coordinate of the
    // running sum. Two passes: the first finds the maximum, the second counts
    // how often it is attained and records the first maximizer.
    const std::uint64_t total = std::uint64_t{1} << n;
    const auto walk = [&](auto&& visit) {
        std::vector<int> eps(n, +1);
        std::vector<double> s(m, 0.0);
        for (int h = 0; h < m; ++h)
            for (int i = 0; i < n; ++i) s[h] += v(i, h);
        visit(eps, sq_norm(s));
        for (std::uint64_t t = 1; t < total; ++t) {
            const int bit = std::countr_zero(t);
            const double delta = -2.0 * eps[bit];
            eps[bit] = -eps[bit];
            for (int h = 0; h < m; ++h) s[h] += delta * v(bit, h);
            visit(eps, sq_norm(s));
        }
    };

    double best = -1.0;
    walk([&](const std::vector<int>&, double val) { best = std::max(best, val); });

    SignVectorResult res;
    res.max_sq_norm = best;
    const double tie_tol = 1e-9 * std::max(1.0, best);
    walk([&](const std::vector<int>& eps, double val) {
        if (std::abs(val - best) <= tie_tol) {
            if (res.attain_count == 0) res.signs = eps;
            ++res.attain_count;
        }
    });
    return res;
}

BoundReport sign_vector_bound(const OrientedHypergraph& g, const EigenConfig& cfg, int limit) {
    const int n = g.vertex_count();
    if (n < 1) return BoundReport::not_applicable("sign_vector", "no vertices");
    if (n > limit || n >= 63)
        return BoundReport::not_applicable("sign_vector", "vertex count exceeds the sign limit");
    const SignVectorResult sv = sign_vector_max(g, limit);
    const Spectrum spec = spectrum_normalized(g, cfg);
    const double lam_n = spec.eigenvalues.back();

    std::vector<BoundReport> parts;
    parts.push_back(BoundReport::check_ge("bound", "lambda_n >= M/n", lam_n, sv.max_sq_norm / n,
                                          cfg.cluster_tol));
    const ZeroMultiplicities zm = zero_multiplicities(g, cfg);
    if (zm.m_v == 0)
        parts.push_back(BoundReport::check_ge("full_rank_case", "lambda_n >= 1 when m_V = 0",
                                              lam_n, 1.0, cfg.cluster_tol));
    BoundReport rep =
        BoundReport::combine("sign_vector", "lambda_n >= max_eps |sum eps_i v_i|^2 / n", parts);
    rep.lhs = lam_n;
    rep.rhs = sv.max_sq_norm / n;
    rep.relation = ">=";
    rep.witness.signs = sv.signs;
    rep.details.push_back("M = " + std::to_string(sv.max_sq_norm) + ", attained by " +
                          to_str(sv.attain_count) + " sign vector(s)");
    return rep;
}

BoundReport sandwich_bound(const OrientedHypergraph& g, const EigenConfig& cfg) {
    const int n = g.vertex_count();
    if (n == 0) return BoundReport::not_applicable("nonzero_mean_sandwich", "no vertices");
    const ZeroMultiplicities zm = zero_multiplicities(g, cfg);
    if (zm.m_v >= n)
        return BoundReport::not_applicable("nonzero_mean_sandwich", "no nonzero eigenvalue");
    const Spectrum spec = spectrum_normalized(g, cfg);
    const double lam_min = spec.eigenvalues[zm.m_v];
    const double lam_n = spec.eigenvalues.back();
    const double mean = static_cast<double>(n) / (n - zm.m_v);
    const double tol = cfg.cluster_tol;

    std::vector<BoundReport> parts;
    parts.push_back(
        BoundReport::check_le("lower", "lambda_min <= n/(n - m_V)", lam_min, mean, tol));
    parts.push_back(BoundReport::check_le("upper", "n/(n - m_V) <= lambda_n", mean, lam_n, tol));

    BoundReport crit;
    crit.name = "equality_criterion";
    crit.statement = "either equality holds iff lambda_min = lambda_n";
    crit.relation = "=";
    crit.status = CheckStatus::Pass;
    const bool side_touches = (mean - lam_min <= tol) || (lam_n - mean <= tol);
    if (side_touches && lam_n - lam_min > 3.0 * tol) {
        crit.status = CheckStatus::Fail;
        crit.details.push_back("a side is tight but lambda_min != lambda_n");
    }
    parts.push_back(std::move(crit));

    const long long maxcard = g.max_cardinality();
    parts.push_back(BoundReport::check_le(
        "multiplicity_cap", "m_V * max#h <= n * (max#h - 1)",
        static_cast<double>(zm.m_v) * maxcard, static_cast<double>(n) * (maxcard - 1), 1e-9));

    BoundReport rep =
        BoundReport::combine("nonzero_mean_sandwich", "lambda_min <= n/(n - m_V) <= lambda_n",
                             parts);
    rep.lhs = lam_min;
    rep.rhs = lam_n;
    rep.details.push_back("n/(n - m_V) = " + std::to_string(mean));
    return rep;
}

namespace {

// Each hyperedge makes its members pairwise adjacent; mask[i] collects the
// neighbors of i in that expansion.
std::vector<std::uint64_t> clique_masks(const OrientedHypergraph& g) {
    std::vector<std::uint64_t> mask(g.vertex_count(), 0);
    for (const auto& h : g.hyperedges()) {
        std::uint64_t hm = 0;
        for (int v : h.inputs) hm |= std::uint64_t{1} << v;
        for (int v : h.outputs) hm |= std::uint64_t{1} << v;
        for (int v : h.inputs) mask[v] |= hm;
        for (int v : h.outputs) mask[v] |= hm;
    }
    for (int i = 0; i < g.vertex_count(); ++i) mask[i] &= ~(std::uint64_t{1} << i);
    return mask;
}

// Proper coloring of the masked vertices with at most k colors; returns the
// per-vertex color (or empty when impossible). Colors are introduced in
// order, so the first vertex always takes color 0.
std::vector<int> color_with(const std::vector<std::uint64_t>& masks, std::uint64_t smask, int k) {
    std::vector<int> order;
    for (std::size_t i = 0; i < masks.size(); ++i)
        if (smask >> i & 1u) order.push_back(static_cast<int>(i));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(masks[a] & smask) > std::popcount(masks[b] & smask);
    });
    std::vector<int> assign(masks.size(), -1);
    std::vector<std::uint64_t> class_mask(k, 0);
    std::function<bool(std::size_t, int)> rec = [&](std::size_t idx, int used) -> bool {
        if (idx == order.size()) return true;
        const int v = order[idx];
        const int cap = std::min(k, used + 1);
        for (int c = 0; c < cap; ++c) {
            if (masks[v] & smask & class_mask[c]) continue;
            class_mask[c] |= std::uint64_t{1} << v;
            assign[v] = c;
            if (rec(idx + 1, std::max(used, c + 1))) return true;
            class_mask[c] &= ~(std::uint64_t{1} << v);
            assign[v] = -1;
        }
        return false;
    };
    if (!rec(0, 0)) return {};
    return assign;
}

int clique_lower_bound(const OrientedHypergraph& g, std::uint64_t smask) {
    int lb = 1;
    for (const auto& h : g.hyperedges()) {
        std::uint64_t hm = 0;
        for (int v : h.inputs) hm |= std::uint64_t{1} << v;
        for (int v : h.outputs) hm |= std::uint64_t{1} << v;
        lb = std::max(lb, std::popcount(hm & smask));
    }
    return lb;
}

// Exact chromatic number of the masked sub-instance along with one optimal
// assignment (empty subset gives 0).
std::pair<int, std::vector<int>> chromatic_masked(const OrientedHypergraph& g,
                                                  const std::vector<std::uint64_t>& masks,
                                                  std::uint64_t smask) {
    const int count = std::popcount(smask);
    if (count == 0) return {0, {}};
    const int lb = clique_lower_bound(g, smask);
    for (int k = lb; k < count; ++k) {
        std::vector<int> assign = color_with(masks, smask, k);
        if (!assign.empty()) return {k, std::move(assign)};
    }
    // count colors always work: every vertex its own class
    std::vector<int> assign = color_with(masks, smask, count);
    return {count, std::move(assign)};
}

std::vector<std::vector<int>> classes_from_assignment(const std::vector<int>& assign, int chi) {
    std::vector<std::vector<int>> classes(chi);
    for (std::size_t v = 0; v < assign.size(); ++v)
        if (assign[v] >= 0) classes[assign[v]].push_back(static_cast<int>(v));
    std::erase_if(classes, [](const auto& c) { return c.empty(); });
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

std::uint64_t full_mask(int n) {
    return n >= 63 ? 0 : (std::uint64_t{1} << n) - 1;
}

long long e_tilde_all(const OrientedHypergraph& g) {
    long long total = 0;
    for (const auto& h : g.hyperedges()) {
        const long long d =
            static_cast<long long>(h.inputs.size()) - static_cast<long long>(h.outputs.size());
        total += d * d;
    }
    return total;
}

} // namespace

std::pair<int, Coloring> chromatic_number(const OrientedHypergraph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit || n >= 63)
        throw std::invalid_argument("chromatic_number: vertex count exceeds the chromatic limit");
    if (n == 0) return {0, Coloring{}};
    const auto masks = clique_masks(g);
    auto [chi, assign] = chromatic_masked(g, masks, full_mask(n));
    return {chi, Coloring{classes_from_assignment(assign, chi)}};
}

std::vector<BoundReport> verify_coloring_bounds(const OrientedHypergraph& g,
                                                const EigenConfig& cfg,
                                                const ColoringBoundOptions& options) {
    const int n = g.vertex_count();
    const int m = g.hyperedge_count();
    if (n < 1)
        return {BoundReport::not_applicable("coloring_main_V", "no vertices")};
    const double tol = cfg.cluster_tol;
    const Spectrum spec = spectrum_normalized(g, cfg);
    const double lam_1 = spec.eigenvalues.front();
    const double lam_n = spec.eigenvalues.back();

    const bool chi_ok = n <= options.chromatic_limit && n < 63;
    int chi = 0;
    Coloring coloring;
    if (chi_ok) std::tie(chi, coloring) = chromatic_number(g, options.chromatic_limit);

    const long long vol = g.volume();
    const long long ev_all = e_tilde_all(g);

    std::vector<BoundReport> out;
    const auto na = [](const char* name, const char* reason) {
        return BoundReport::not_applicable(name, reason);
    };
    const char* limit_msg = "vertex count exceeds the chromatic limit";

    // main theorem at S = V
    if (!chi_ok) {
        out.push_back(na("coloring_main_V", limit_msg));
    } else if (chi < 2) {
        out.push_back(na("coloring_main_V", "chromatic number is 1"));
    } else {
        const double b = 1.0 + (1.0 - static_cast<double>(ev_all) / vol) / (chi - 1);
        std::vector<BoundReport> parts;
        parts.push_back(BoundReport::check_le(
            "upper", "1 + (1 - e~(V)/vol(V))/(chi - 1) <= lambda_n", b, lam_n, tol));
        parts.push_back(BoundReport::check_ge(
            "lower", "1 + (1 - e~(V)/vol(V))/(chi - 1) >= lambda_1", b, lam_1, tol));
        BoundReport rep = BoundReport::combine(
            "coloring_main_V", "lambda_n >= 1 + (1 - e~(V)/vol(V))/(chi - 1) >= lambda_1", parts);
        rep.lhs = b;
        rep.rhs = lam_n;
        out.push_back(std::move(rep));
    }

    // main theorem over every nonempty subset
    if (n > options.subset_sweep_limit || n >= 63) {
        out.push_back(na("coloring_main_all_subsets", "vertex count exceeds the subset limit"));
    } else {
        const auto masks = clique_masks(g);
        double max_b = -1.0, min_b = 0.0;
        std::uint64_t arg_max = 0, arg_min = 0;
        long long checked = 0, skipped = 0;
        for (std::uint64_t s = 1; s <= full_mask(n); ++s) {
            const auto [chi_s, assign] = chromatic_masked(g, masks, s);
            if (chi_s < 2) {
                ++skipped;
                continue;
            }
            long long e_s = 0, vol_s = 0;
            for (const auto& h : g.hyperedges()) {
                long long d = 0;
                for (int v : h.inputs) d += (s >> v) & 1u;
                for (int v : h.outputs) d -= (s >> v) & 1u;
                e_s += d * d;
            }
            for (int v = 0; v < n; ++v)
                if (s >> v & 1u) vol_s += g.degree(v);
            const double b = 1.0 + (1.0 - static_cast<double>(e_s) / vol_s) / (chi_s - 1);
            if (checked == 0 || b > max_b) {
                max_b = b;
                arg_max = s;
            }
            if (checked == 0 || b < min_b) {
                min_b = b;
                arg_min = s;
            }
            ++checked;
        }
        if (checked == 0) {
            out.push_back(
                na("coloring_main_all_subsets", "every subset has chromatic number 1"));
        } else {
            std::vector<BoundReport> parts;
            parts.push_back(BoundReport::check_le(
                "upper", "max_S [1 + (1 - nu~(S))/(chi(S) - 1)] <= lambda_n", max_b, lam_n, tol));
            parts.push_back(BoundReport::check_ge(
                "lower", "min_S [1 + (1 - nu~(S))/(chi(S) - 1)] >= lambda_1", min_b, lam_1, tol));
            BoundReport rep = BoundReport::combine(
                "coloring_main_all_subsets",
                "lambda_n >= 1 + (1 - nu~(S))/(chi(S) - 1) >= lambda_1 for every S", parts);
            rep.details.push_back("checked " + to_str(checked) + " subset(s), skipped " +
                                  to_str(skipped) + " with chi(S) = 1");
            const std::uint64_t worst = (lam_n - max_b <= min_b - lam_1) ? arg_max : arg_min;
            std::vector<int> members;
            for (int v = 0; v < n; ++v)
                if (worst >> v & 1u) members.push_back(v);
            rep.witness.subset = std::move(members);
            out.push_back(std::move(rep));
        }
    }

    // h_tilde_prime form
    if (!chi_ok) {
        out.push_back(na("coloring_h_prime", limit_msg));
    } else if (chi < 2) {
        out.push_back(na("coloring_h_prime", "chromatic number is 1"));
    } else if (n < 2 || n > options.subset_enum_limit) {
        out.push_back(na("coloring_h_prime", "vertex count outside the subset enumeration limit"));
    } else {
        const CheegerResult ch = cheeger_constants(g, options.subset_enum_limit);
        BoundReport rep = BoundReport::check_ge("coloring_h_prime",
                                                "lambda_n >= (chi - h~')/(chi - 1)", lam_n,
                                                (chi - ch.h_prime) / (chi - 1), tol);
        rep.witness.subset = ch.argmin_prime.members;
        out.push_back(std::move(rep));
    }

    // constant |#in - #out| corollary, plus its uniform refinement
    long long cdiff = -1;
    bool constant_diff = m > 0;
    for (const auto& h : g.hyperedges()) {
        const long long d = std::llabs(static_cast<long long>(h.inputs.size()) -
                                       static_cast<long long>(h.outputs.size()));
        if (cdiff < 0) cdiff = d;
        if (d != cdiff) constant_diff = false;
    }
    if (!constant_diff) {
        out.push_back(na("coloring_constant_difference", "|#in - #out| is not constant"));
        out.push_back(na("coloring_uniform_refinement", "|#in - #out| is not constant"));
    } else if (!chi_ok) {
        out.push_back(na("coloring_constant_difference", limit_msg));
        out.push_back(na("coloring_uniform_refinement", limit_msg));
    } else if (chi < 2) {
        out.push_back(na("coloring_constant_difference", "chromatic number is 1"));
        out.push_back(na("coloring_uniform_refinement", "chromatic number is 1"));
    } else {
        const double b = 1.0 + (1.0 - static_cast<double>(cdiff * cdiff) * m / vol) / (chi - 1);
        std::vector<BoundReport> parts;
        parts.push_back(BoundReport::check_le(
            "upper", "1 + (vol - c^2 m)/(vol (chi - 1)) <= lambda_n", b, lam_n, tol));
        parts.push_back(BoundReport::check_ge(
            "lower", "1 + (vol - c^2 m)/(vol (chi - 1)) >= lambda_1", b, lam_1, tol));
        BoundReport rep = BoundReport::combine(
            "coloring_constant_difference",
            "lambda_n >= 1 + (vol - c^2 m)/(vol (chi - 1)) >= lambda_1 for |#in - #out| = c",
            parts);
        rep.details.push_back("c = " + to_str(cdiff));
        out.push_back(std::move(rep));

        int r = 0;
        if (g.is_uniform(r) && r >= 1) {
            const double br =
                static_cast<double>(chi) / (chi - 1) -
                static_cast<double>(cdiff * cdiff) / r / (chi - 1);
            std::vector<BoundReport> rparts;
            rparts.push_back(BoundReport::check_le(
                "upper", "chi/(chi - 1) - c^2/(r (chi - 1)) <= lambda_n", br, lam_n, tol));
            rparts.push_back(BoundReport::check_ge(
                "lower", "chi/(chi - 1) - c^2/(r (chi - 1)) >= lambda_1", br, lam_1, tol));
            BoundReport rrep = BoundReport::combine(
                "coloring_uniform_refinement",
                "lambda_n >= chi/(chi - 1) - c^2/(r (chi - 1)) >= lambda_1 for r-uniform", rparts);
            rrep.details.push_back("c = " + to_str(cdiff) + ", r = " + to_str(r));
            out.push_back(std::move(rrep));
        } else {
            out.push_back(na("coloring_uniform_refinement", "not uniform"));
        }
    }

    // all-inputs uniform family
    int uc = 0;
    const bool signless = g.has_only_inputs() && m > 0 && g.is_uniform(uc) && uc >= 1;
    if (!signless) {
        out.push_back(na("signless_max_eigenvalue", "not an all-inputs uniform instance"));
        out.push_back(na("signless_lambda1", "not an all-inputs uniform instance"));
        out.push_back(na("c_complete_spectrum", "not an all-inputs uniform instance"));
    } else {
        out.push_back(BoundReport::check_eq("signless_max_eigenvalue",
                                            "lambda_n = c for all-inputs c-uniform", lam_n,
                                            static_cast<double>(uc), tol));

        if (!chi_ok) {
            out.push_back(na("signless_lambda1", limit_msg));
        } else if (chi < 2) {
            out.push_back(na("signless_lambda1", "chromatic number is 1"));
        } else {
            out.push_back(BoundReport::check_le("signless_lambda1",
                                                "lambda_1 <= (chi - c)/(chi - 1)", lam_1,
                                                static_cast<double>(chi - uc) / (chi - 1), tol));
        }

        bool complete = uc >= 2 && uc <= n && static_cast<long long>(m) == binomial(n, uc);
        if (complete) {
            std::vector<std::vector<int>> inputs;
            inputs.reserve(m);
            for (const auto& h : g.hyperedges()) inputs.push_back(h.inputs);
            std::sort(inputs.begin(), inputs.end());
            complete = std::adjacent_find(inputs.begin(), inputs.end()) == inputs.end();
        }
        if (!complete) {
            out.push_back(na("c_complete_spectrum", "not a c-complete all-inputs instance"));
        } else if (!chi_ok) {
            out.push_back(na("c_complete_spectrum", limit_msg));
        } else {
            double flat_dev = 0.0;
            const double target = static_cast<double>(n - uc) / (n - 1);
            for (int j = 0; j + 1 < n; ++j)
                flat_dev = std::max(flat_dev, std::abs(spec.eigenvalues[j] - target));
            std::vector<BoundReport> parts;
            parts.push_back(BoundReport::check_eq("chromatic", "chi = n",
                                                  static_cast<double>(chi),
                                                  static_cast<double>(n), 0.1));
            parts.push_back(BoundReport::check_le(
                "flat_spectrum", "lambda_1 = ... = lambda_{n-1} = (n - c)/(n - 1)", flat_dev, 0.0,
                tol));
            parts.push_back(BoundReport::check_eq("top", "lambda_n = c", lam_n,
                                                  static_cast<double>(uc), tol));
            out.push_back(BoundReport::combine(
                "c_complete_spectrum",
                "c-complete all-inputs: chi = n, flat low spectrum, lambda_n = c", parts));
        }
    }

    // balanced corollary
    if (!g.is_balanced() || m == 0) {
        out.push_back(na("coloring_balanced", "sides are not balanced"));
    } else if (!chi_ok) {
        out.push_back(na("coloring_balanced", limit_msg));
    } else if (chi < 2) {
        out.push_back(na("coloring_balanced", "chromatic number is 1"));
    } else {
        out.push_back(BoundReport::check_ge("coloring_balanced",
                                            "lambda_n >= chi/(chi - 1) for balanced sides", lam_n,
                                            static_cast<double>(chi) / (chi - 1), tol));
    }

    // deletion corollary: the deletion set is the caller's claim
    if (options.delete_set.empty()) {
        out.push_back(na("coloring_deletion", "no deletion set supplied"));
    } else if (!chi_ok) {
        out.push_back(na("coloring_deletion", limit_msg));
    } else {
        try {
            const OrientedHypergraph reduced = weak_delete(g, options.delete_set);
            if (!reduced.is_balanced()) {
                out.push_back(na("coloring_deletion", "weak deletion does not balance the sides"));
            } else if (chi < 2) {
                out.push_back(na("coloring_deletion", "chromatic number is 1"));
            } else {
                BoundReport rep = BoundReport::check_ge(
                    "coloring_deletion",
                    "lambda_n >= chi/(chi - 1) when a weak deletion balances the sides", lam_n,
                    static_cast<double>(chi) / (chi - 1), tol);
                rep.witness.subset =
                    std::vector<int>(options.delete_set.begin(), options.delete_set.end());
                out.push_back(std::move(rep));
            }
        } catch (const std::invalid_argument& e) {
            out.push_back(na("coloring_deletion", e.what()));
        }
    }

    return out;
}

BoundReport verify_sharpness_characterization(const OrientedHypergraph& g, const EigenConfig& cfg,
                                              int chromatic_limit, long long coloring_limit) {
    const int n = g.vertex_count();
    if (!g.is_balanced() || g.hyperedge_count() == 0)
        return BoundReport::not_applicable("sharpness_characterization",
                                           "needs balanced sides and at least one hyperedge");
    if (n > chromatic_limit || n >= 63)
        return BoundReport::not_applicable("sharpness_characterization",
                                           "vertex count exceeds the chromatic limit");
    const auto [chi, coloring] = chromatic_number(g, chromatic_limit);
    if (chi < 2)
        return BoundReport::not_applicable("sharpness_characterization", "chromatic number is 1");

    const Spectrum spec = spectrum_normalized(g, cfg);
    const double lam_n = spec.eigenvalues.back();
    const double target = static_cast<double>(chi) / (chi - 1);
    const bool eigen_side = std::abs(lam_n - target) <= cfg.cluster_tol;

    const auto rows = integer_adjacency(g);
    const std::vector<int>& deg = g.degrees();

    // Condition: (chi - 1) * sum_{j in V_k} A_ij = deg(i) for every class k
    // not containing i (integer arithmetic, no tolerance). Divisibility of
    // deg(i) by chi - 1 is implied.
    const auto satisfies = [&](const std::vector<int>& assign) {
        std::vector<long long> class_sum(chi, 0);
        for (int i = 0; i < n; ++i) {
            std::fill(class_sum.begin(), class_sum.end(), 0);
            for (int j = 0; j < n; ++j) class_sum[assign[j]] += rows[i][j];
            for (int k = 0; k < chi; ++k) {
                if (k == assign[i]) continue;
                if ((chi - 1) * class_sum[k] != deg[i]) return false;
            }
        }
        return true;
    };

    std::vector<int> computed_assign(n, -1);
    for (std::size_t k = 0; k < coloring.classes.size(); ++k)
        for (int v : coloring.classes[k]) computed_assign[v] = static_cast<int>(k);

    bool any = satisfies(computed_assign);
    std::vector<int> found_assign = any ? computed_assign : std::vector<int>{};
    long long evaluated = 1;
    bool truncated = false;

    if (!any) {
        // Enumerate set partitions into exactly chi classes as restricted
        // growth strings, pruning improper prefixes via the clique expansion.
        const auto masks = clique_masks(g);
        std::vector<int> assign(n, -1);
        std::vector<std::uint64_t> class_mask(chi, 0);
        long long nodes = 0;
        const long long node_cap = 1000000;
        std::function<bool(int, int)> rec = [&](int idx, int used) -> bool {
            if (evaluated >= coloring_limit || nodes >= node_cap) {
                truncated = true;
                return false;
            }
            ++nodes;
            if (idx == n) {
                if (used != chi) return false;
                ++evaluated;
                if (satisfies(assign)) {
                    found_assign = assign;
                    return true;
                }
                return false;
            }
            if (used + (n - idx) < chi) return false;
            const int cap = std::min(chi, used + 1);
            for (int c = 0; c < cap; ++c) {
                if (masks[idx] & class_mask[c]) continue;
                class_mask[c] |= std::uint64_t{1} << idx;
                assign[idx] = c;
                if (rec(idx + 1, std::max(used, c + 1))) return true;
                class_mask[c] &= ~(std::uint64_t{1} << idx);
                assign[idx] = -1;
            }
            return false;
        };
        any = rec(0, 0);
    }

    BoundReport rep;
    rep.name = "sharpness_characterization";
    rep.statement = "lambda_n = chi/(chi - 1) iff some proper chi-partition balances the "
                    "class-wise adjacency sums";
    rep.relation = "=";
    rep.lhs = lam_n;
    rep.rhs = target;
    rep.slack = -std::abs(lam_n - target);
    rep.details.push_back("chi = " + std::to_string(chi) + ", evaluated " +
                          std::to_string(evaluated) + " partition(s)" +
                          (truncated ? " (search truncated)" : ""));
    if (any && eigen_side) {
        rep.status = CheckStatus::Pass;
        rep.details.push_back("a qualifying partition exists and lambda_n is tight");
        rep.witness.partition = classes_from_assignment(found_assign, chi);
    } else if (any && !eigen_side) {
        rep.status = CheckStatus::Fail;
        rep.details.push_back("a partition satisfies the structural conditions but lambda_n != "
                              "chi/(chi - 1); finding contradicts the stated equivalence");
        rep.witness.partition = classes_from_assignment(found_assign, chi);
    } else if (!any && eigen_side) {
        if (truncated) {
            rep.status = CheckStatus::Unresolved;
            rep.details.push_back("lambda_n is tight but the partition search hit its limit");
        } else {
            rep.status = CheckStatus::Fail;
            rep.details.push_back("lambda_n is tight but no proper chi-partition satisfies the "
                                  "structural conditions; finding contradicts the stated "
                                  "equivalence");
        }
    } else if (truncated) {
        rep.status = CheckStatus::Unresolved;
        rep.details.push_back("lambda_n is not tight and the partition search hit its limit "
                              "before ruling every partition out");
    } else {
        rep.status = CheckStatus::Pass;
        rep.details.push_back("no partition qualifies and lambda_n is not tight");
    }
    return rep;
}

} // namespace hyperlap
