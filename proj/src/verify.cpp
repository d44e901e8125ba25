#include "hyperlap/verify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>

#include "hyperlap/cheeger.hpp"
#include "hyperlap/operators.hpp"

namespace hyperlap {

namespace {

// Platform-independent uniform draw in [0, 1): mt19937 output is specified
// exactly by the standard, std::uniform_real_distribution is not.
double unit_real(std::mt19937& rng) {
    return rng() * (1.0 / 4294967296.0);
}

std::vector<double> random_vector(std::mt19937& rng, int len) {
    std::vector<double> v(len);
    for (double& x : v) x = 2.0 * unit_real(rng) - 1.0;
    bool all_zero = true;
    for (double x : v)
        if (x != 0.0) all_zero = false;
    if (all_zero && len > 0) v[0] = 1.0;
    return v;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::logic_error("max_abs_diff: shape mismatch");
    double d = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

BoundReport matrix_identities_check(const OrientedHypergraph& g, std::mt19937& rng) {
    const int n = g.vertex_count();
    const int m = g.hyperedge_count();
    const DenseMatrix inc = incidence(g);
    const DenseSymMatrix delta = unnormalized_laplacian(g);
    const DenseSymMatrix slap = sym_laplacian(g);
    const DenseSymMatrix hlap = hyperedge_laplacian(g);
    const DenseMatrix lap = normalized_laplacian(g);

    DenseMatrix half(n, m); // D^{-1/2} * incidence
    for (int i = 0; i < n; ++i) {
        const double s = 1.0 / std::sqrt(static_cast<double>(g.degree(i)));
        for (int h = 0; h < m; ++h) half(i, h) = s * inc(i, h);
    }
    DenseMatrix scaled_delta(n, n); // D^{-1} * (D - A)
    for (int i = 0; i < n; ++i) {
        const double s = 1.0 / g.degree(i);
        for (int j = 0; j < n; ++j) scaled_delta(i, j) = s * delta(i, j);
    }

    std::vector<BoundReport> parts;
    parts.push_back(BoundReport::check_le("incidence_factorization", "I I^T = D - A",
                                          max_abs_diff(inc.multiply(inc.transposed()),
                                                       delta.matrix()),
                                          0.0, 1e-9));
    parts.push_back(BoundReport::check_le("normalized_factorization",
                                          "L_sym = D^{-1/2} I I^T D^{-1/2}",
                                          max_abs_diff(half.multiply(half.transposed()),
                                                       slap.matrix()),
                                          0.0, 1e-9));
    parts.push_back(BoundReport::check_le("hyperedge_factorization", "L^H = I^T D^{-1} I",
                                          max_abs_diff(half.transposed().multiply(half),
                                                       hlap.matrix()),
                                          0.0, 1e-9));
    parts.push_back(BoundReport::check_le("normalized_similarity", "L = D^{-1} (D - A)",
                                          max_abs_diff(lap, scaled_delta), 0.0, 1e-9));

    const std::vector<double> f = random_vector(rng, n);
    const std::vector<double> df = delta.matrix().multiply(f);
    double den = 0.0;
    for (int i = 0; i < n; ++i) den += g.degree(i) * f[i] * f[i];
    const double manual_v = dot(f, df) / den;
    parts.push_back(BoundReport::check_le(
        "rayleigh_vertex", "R(f) = f^T (D - A) f / f^T D f on a random f",
        std::abs(rayleigh_quotient_vertex(g, f) - manual_v), 0.0,
        1e-9 * std::max(1.0, std::abs(manual_v))));

    const std::vector<double> gamma = random_vector(rng, m);
    const std::vector<double> hg = hlap.matrix().multiply(gamma);
    const double manual_h = dot(gamma, hg) / dot(gamma, gamma);
    parts.push_back(BoundReport::check_le(
        "rayleigh_hyperedge", "R(gamma) = gamma^T L^H gamma / gamma^T gamma on a random gamma",
        std::abs(rayleigh_quotient_hyperedge(g, gamma) - manual_h), 0.0,
        1e-9 * std::max(1.0, std::abs(manual_h))));

    return BoundReport::combine("matrix_identities",
                                "operator factorizations and Rayleigh quotients agree", parts);
}

BoundReport trace_sum_check(const OrientedHypergraph& g, const Spectrum& spec) {
    const int n = g.vertex_count();
    const DenseSymMatrix slap = sym_laplacian(g);
    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += slap(i, i);
    double sum = 0.0;
    for (double lam : spec.eigenvalues) sum += lam;

    std::vector<BoundReport> parts;
    parts.push_back(BoundReport::check_eq("matrix_trace", "trace(L) = n", tr,
                                          static_cast<double>(n), 1e-12 * n));
    parts.push_back(BoundReport::check_eq("eigenvalue_sum", "sum_k lambda_k = n", sum,
                                          static_cast<double>(n), 1e-8 * n));
    return BoundReport::combine("trace_sum", "the normalized spectrum sums to n", parts);
}

BoundReport zero_multiplicity_check(const OrientedHypergraph& g, const EigenConfig& cfg) {
    const int n = g.vertex_count();
    const int m = g.hyperedge_count();
    try {
        const ZeroMultiplicities zm = zero_multiplicities(g, cfg);
        BoundReport rep = BoundReport::check_eq("zero_multiplicity_rank", "m_V - m_H = n - m",
                                                static_cast<double>(zm.m_v - zm.m_h),
                                                static_cast<double>(n - m), 0.5);
        rep.details.push_back("m_V=" + std::to_string(zm.m_v) + ", m_H=" + std::to_string(zm.m_h) +
                              ", rank=" + std::to_string(zm.rank));
        return rep;
    } catch (const std::exception& e) {
        BoundReport rep;
        rep.name = "zero_multiplicity_rank";
        rep.statement = "m_V - m_H = n - m";
        rep.relation = "=";
        rep.status = CheckStatus::Fail;
        rep.details.push_back(e.what());
        return rep;
    }
}

BoundReport nonzero_match_check(const OrientedHypergraph& g, const Spectrum& vertex_spec,
                                const Spectrum& hyperedge_spec, const EigenConfig& cfg) {
    const int n = g.vertex_count();
    const int m = g.hyperedge_count();
    const int av = n - vertex_spec.zero_mult;
    const int ah = m - hyperedge_spec.zero_mult;
    if (av != ah) {
        BoundReport rep;
        rep.name = "nonzero_spectra_match";
        rep.statement = "nonzero spectra of L and L^H coincide";
        rep.relation = "=";
        rep.status = CheckStatus::Fail;
        rep.details.push_back("nonzero counts differ: " + std::to_string(av) + " vs " +
                              std::to_string(ah));
        return rep;
    }
    double max_dev = 0.0;
    for (int j = 0; j < av; ++j)
        max_dev = std::max(max_dev,
                           std::abs(vertex_spec.eigenvalues[vertex_spec.zero_mult + j] -
                                    hyperedge_spec.eigenvalues[hyperedge_spec.zero_mult + j]));
    BoundReport rep = BoundReport::check_le("nonzero_spectra_match",
                                            "nonzero spectra of L and L^H coincide", max_dev, 0.0,
                                            cfg.cluster_tol);
    rep.details.push_back(std::to_string(av) + " nonzero eigenvalues compared");
    return rep;
}

BoundReport eigenvalue_range_check(const OrientedHypergraph& g, const Spectrum& spec,
                                   const EigenConfig& cfg) {
    const int n = g.vertex_count();
    std::vector<BoundReport> parts;
    parts.push_back(BoundReport::check_ge("lower", "lambda_1 >= 0", spec.eigenvalues.front(), 0.0,
                                          cfg.zero_tol(n)));
    parts.push_back(BoundReport::check_le("upper", "lambda_n <= max #h", spec.eigenvalues.back(),
                                          static_cast<double>(g.max_cardinality()),
                                          cfg.cluster_tol));
    return BoundReport::combine("eigenvalue_range", "0 <= lambda_1 and lambda_n <= max #h", parts);
}

double worst_residual(const DenseMatrix& op, const Spectrum& spec) {
    double worst = 0.0;
    for (int j = 0; j < op.rows(); ++j) {
        const std::vector<double> f = spec.eigenvectors.column(j);
        const std::vector<double> of = op.multiply(f);
        double norm = 0.0, resid = 0.0;
        for (int i = 0; i < op.rows(); ++i) {
            norm = std::max(norm, std::abs(f[i]));
            resid = std::max(resid, std::abs(of[i] - spec.eigenvalues[j] * f[i]));
        }
        worst = std::max(worst, resid / std::max(1.0, norm));
    }
    return worst;
}

BoundReport residual_check(const OrientedHypergraph& g, const Spectrum& norm_spec,
                           const Spectrum& unnorm_spec) {
    std::vector<BoundReport> parts;
    parts.push_back(BoundReport::check_le("normalized_residual", "max_j |L f_j - lambda_j f_j|",
                                          worst_residual(normalized_laplacian(g), norm_spec), 0.0,
                                          1e-8));
    parts.push_back(BoundReport::check_le("unnormalized_residual",
                                          "max_j |Delta v_j - lambda_j v_j|",
                                          worst_residual(unnormalized_laplacian(g).matrix(),
                                                         unnorm_spec),
                                          0.0, 1e-8));
    return BoundReport::combine("eigenvector_residual",
                                "eigenpairs satisfy their operator equations", parts);
}

BoundReport courant_summary(const std::vector<NodalReport>& nodal) {
    BoundReport rep;
    rep.name = "courant_nodal";
    rep.statement = "weak nodal-domain counts stay within their eigenvalue-index bounds";
    rep.relation = "<=";
    double max_excess = -std::numeric_limits<double>::infinity();
    int bad = 0;
    for (const NodalReport& r : nodal) {
        max_excess = std::max(max_excess,
                              static_cast<double>(r.signless_count - r.bound_signless));
        if (!r.signless_pass) ++bad;
        if (r.signed_applicable) {
            max_excess = std::max(max_excess,
                                  static_cast<double>(r.positive_count + r.negative_count -
                                                      r.bound_signed));
            if (!r.signed_pass) ++bad;
        }
    }
    if (nodal.empty()) max_excess = 0.0;
    rep.lhs = max_excess;
    rep.rhs = 0.0;
    rep.slack = -max_excess;
    rep.status = bad == 0 ? CheckStatus::Pass : CheckStatus::Fail;
    rep.details.push_back(std::to_string(nodal.size()) +
                          " eigenvector reports across both operators");
    if (bad > 0) rep.details.push_back(std::to_string(bad) + " bound violations");
    return rep;
}

void count_statuses(VerificationReport& out) {
    for (const BoundReport& r : out.checks) {
        switch (r.status) {
            case CheckStatus::Pass: ++out.pass; break;
            case CheckStatus::Fail: ++out.fail; break;
            case CheckStatus::NotApplicable: ++out.not_applicable; break;
            case CheckStatus::Unresolved: ++out.unresolved; break;
        }
    }
}

} // namespace

Limits limits_from_env(Limits base) {
    const char* raw = std::getenv("HYPERLAP_LIMITS");
    if (raw == nullptr) return base;
    const std::string s(raw);
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        std::string item = s.substr(pos, comma - pos);
        pos = comma + 1;

        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string t) {
            while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
                t.erase(t.begin());
            while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
            return t;
        };
        const std::string key = trim(item.substr(0, eq));
        const std::string val = trim(item.substr(eq + 1));
        char* end = nullptr;
        const long long v = std::strtoll(val.c_str(), &end, 10);
        if (end == val.c_str() || *end != '\0' || v < 0) continue;

        const int vi = static_cast<int>(std::min<long long>(v, std::numeric_limits<int>::max()));
        if (key == "subset") base.subset = std::min(base.subset, vi);
        else if (key == "signs") base.signs = std::min(base.signs, vi);
        else if (key == "chromatic") base.chromatic = std::min(base.chromatic, vi);
        else if (key == "pairings") base.pairings = std::min(base.pairings, v);
        else if (key == "colorings") base.colorings = std::min(base.colorings, v);
        else if (key == "coloring_subsets")
            base.coloring_subsets = std::min(base.coloring_subsets, vi);
    }
    return base;
}

VerificationReport run_verification(const OrientedHypergraph& g, const VerifyOptions& options) {
    VerificationReport out;
    out.instance = options.instance_name;
    const EigenConfig& cfg = options.cfg;
    const Limits& lim = options.limits;
    const int n = g.vertex_count();

    if (n < 1) {
        out.checks.push_back(BoundReport::not_applicable("matrix_identities", "no vertices"));
        count_statuses(out);
        return out;
    }

    std::mt19937 rng(static_cast<std::mt19937::result_type>(options.seed));
    const Spectrum norm_spec = spectrum_normalized(g, cfg);
    const Spectrum unnorm_spec = spectrum_unnormalized(g, cfg);
    const Spectrum hyper_spec = spectrum_hyperedge(g, cfg);

    std::vector<BoundReport>& checks = out.checks;
    checks.push_back(matrix_identities_check(g, rng));
    checks.push_back(trace_sum_check(g, norm_spec));
    checks.push_back(zero_multiplicity_check(g, cfg));
    checks.push_back(nonzero_match_check(g, norm_spec, hyper_spec, cfg));
    checks.push_back(eigenvalue_range_check(g, norm_spec, cfg));
    checks.push_back(residual_check(g, norm_spec, unnorm_spec));

    if (n >= 2) {
        const int v1 = static_cast<int>(rng() % static_cast<unsigned>(n));
        std::vector<int> pick{v1};
        BoundReport rep = interlacing_check(g, pick, cfg);
        rep.name = "interlacing_r1";
        rep.details.push_back("deleted vertex " + std::to_string(v1));
        checks.push_back(std::move(rep));
    } else {
        checks.push_back(BoundReport::not_applicable("interlacing_r1", "needs n >= 2"));
    }
    if (n >= 3) {
        const int a = static_cast<int>(rng() % static_cast<unsigned>(n));
        int b = static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        if (b >= a) ++b;
        std::vector<int> pick{std::min(a, b), std::max(a, b)};
        BoundReport rep = interlacing_check(g, pick, cfg);
        rep.name = "interlacing_r2";
        rep.details.push_back("deleted vertices " + std::to_string(pick[0]) + ", " +
                              std::to_string(pick[1]));
        checks.push_back(std::move(rep));
    } else {
        checks.push_back(BoundReport::not_applicable("interlacing_r2", "needs n >= 3"));
    }

    try {
        checks.push_back(dual_scaling_check(g, cfg));
    } catch (const std::invalid_argument&) {
        checks.push_back(BoundReport::not_applicable("dual_scaling",
                                                     "instance is not regular and uniform"));
    }

    for (BoundReport& r : verify_eigenvalue_one(g, cfg)) checks.push_back(std::move(r));
    checks.push_back(verify_duplicate_ratio(g, cfg));
    checks.push_back(verify_c_quantities(g, cfg));
    checks.push_back(sign_vector_bound(g, cfg, lim.signs));
    checks.push_back(sandwich_bound(g, cfg));

    out.nodal = verify_courant(g, cfg);
    checks.push_back(courant_summary(out.nodal));

    checks.push_back(verify_nu_upper_any(g, cfg, lim.subset));
    if (n < 2) {
        checks.push_back(BoundReport::not_applicable("cheeger_cap", "needs n >= 2"));
    } else if (n > lim.subset) {
        checks.push_back(BoundReport::not_applicable("cheeger_cap",
                                                     "vertex count exceeds the subset limit"));
    } else {
        const CheegerResult ch = cheeger_constants(g, lim.subset);
        checks.push_back(BoundReport::check_le("cheeger_cap", "h_tilde <= 1", ch.h, 1.0, 1e-12));
    }
    checks.push_back(verify_cheeger_upper(g, cfg, lim.subset));
    checks.push_back(verify_cheeger_lower_via_graph(g, options.delete_set, cfg, lim.subset));
    for (BoundReport& r : verify_cheeger_lower_underlying(g, cfg, lim.pairings, lim.subset))
        checks.push_back(std::move(r));

    ColoringBoundOptions copt;
    copt.chromatic_limit = lim.chromatic;
    copt.subset_sweep_limit = lim.coloring_subsets;
    copt.subset_enum_limit = lim.subset;
    copt.delete_set = options.delete_set;
    for (BoundReport& r : verify_coloring_bounds(g, cfg, copt)) checks.push_back(std::move(r));
    checks.push_back(verify_sharpness_characterization(g, cfg, lim.chromatic, lim.colorings));

    std::stable_sort(checks.begin(), checks.end(),
                     [](const BoundReport& a, const BoundReport& b) { return a.name < b.name; });
    count_statuses(out);
    return out;
}

ordered_json verification_json(const VerificationReport& report, const VerifyOptions& options) {
    ordered_json doc;
    if (!report.instance.empty()) doc["instance"] = report.instance;

    ordered_json cfg;
    cfg["off_diag_tol"] = json_real(options.cfg.off_diag_tol);
    cfg["zero_tol_scale"] = json_real(options.cfg.zero_tol_scale);
    cfg["cluster_tol"] = json_real(options.cfg.cluster_tol);
    cfg["max_sweeps"] = options.cfg.max_sweeps;
    cfg["seed"] = options.seed;
    ordered_json lims;
    lims["subset"] = options.limits.subset;
    lims["signs"] = options.limits.signs;
    lims["chromatic"] = options.limits.chromatic;
    lims["pairings"] = options.limits.pairings;
    lims["colorings"] = options.limits.colorings;
    lims["coloring_subsets"] = options.limits.coloring_subsets;
    cfg["limits"] = lims;
    if (!options.delete_set.empty()) cfg["delete_set"] = options.delete_set;
    doc["config"] = cfg;

    doc["checks"] = ordered_json::array();
    for (const BoundReport& r : report.checks) doc["checks"].push_back(to_json(r));
    doc["nodal"] = ordered_json::array();
    for (const NodalReport& r : report.nodal) doc["nodal"].push_back(to_json(r));

    ordered_json summary;
    summary["pass"] = report.pass;
    summary["fail"] = report.fail;
    summary["not_applicable"] = report.not_applicable;
    summary["unresolved"] = report.unresolved;
    summary["total"] = static_cast<int>(report.checks.size());
    doc["summary"] = summary;
    return doc;
}

} // namespace hyperlap
