#include "hyperlap/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hyperlap/operators.hpp"

namespace hyperlap {

int Spectrum::cluster_of(int j) const {
    for (std::size_t c = 0; c < clusters.size(); ++c)
        if (j >= clusters[c].start && j < clusters[c].start + clusters[c].size)
            return static_cast<int>(c);
    throw std::out_of_range("cluster_of: index outside spectrum");
}

namespace {

std::vector<Cluster> build_clusters(const std::vector<double>& ev, double cluster_tol) {
    std::vector<Cluster> out;
    const int n = static_cast<int>(ev.size());
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || ev[i] - ev[i - 1] > cluster_tol) {
            out.push_back({start, i - start});
            start = i;
        }
    }
    return out;
}

double off_diag_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

} // namespace

Spectrum eigen_sym(const DenseSymMatrix& m, const EigenConfig& cfg) {
    const int n = m.dim();
    DenseMatrix a = m.matrix();
    DenseMatrix v(n, n);
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;

    const double scale = a.frobenius_norm();
    if (n > 1 && scale > 0.0) {
        bool converged = false;
        for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
            if (off_diag_norm(a) <= cfg.off_diag_tol * scale) {
                converged = true;
                break;
            }
            for (int p = 0; p < n - 1; ++p)
                for (int q = p + 1; q < n; ++q) {
                    const double apq = a(p, q);
                    if (std::abs(apq) <= 1e-300) continue;
                    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;
                    const double tau = s / (1.0 + c);

                    const double app = a(p, p), aqq = a(q, q);
                    a(p, p) = app - t * apq;
                    a(q, q) = aqq + t * apq;
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    for (int i = 0; i < n; ++i) {
                        if (i == p || i == q) continue;
                        const double aip = a(i, p), aiq = a(i, q);
                        a(i, p) = aip - s * (aiq + tau * aip);
                        a(p, i) = a(i, p);
                        a(i, q) = aiq + s * (aip - tau * aiq);
                        a(q, i) = a(i, q);
                    }
                    for (int i = 0; i < n; ++i) {
                        const double vip = v(i, p), viq = v(i, q);
                        v(i, p) = vip - s * (viq + tau * vip);
                        v(i, q) = viq + s * (vip - tau * viq);
                    }
                }
        }
        if (!converged && off_diag_norm(a) > cfg.off_diag_tol * scale)
            throw std::runtime_error("eigen_sym: Jacobi sweeps did not converge");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) < a(y, y); });

    Spectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors = DenseMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        spec.eigenvalues[j] = a(order[j], order[j]);
        for (int i = 0; i < n; ++i) spec.eigenvectors(i, j) = v(i, order[j]);
    }
    const double ztol = cfg.zero_tol(n);
    spec.zero_mult = static_cast<int>(std::count_if(spec.eigenvalues.begin(), spec.eigenvalues.end(),
                                                    [&](double x) { return std::abs(x) < ztol; }));
    spec.clusters = build_clusters(spec.eigenvalues, cfg.cluster_tol);
    return spec;
}

Spectrum spectrum_normalized(const OrientedHypergraph& g, const EigenConfig& cfg) {
    Spectrum spec = eigen_sym(sym_laplacian(g), cfg);
    // Back to vertex-function coordinates f = D^{-1/2} v.
    for (int i = 0; i < g.vertex_count(); ++i) {
        const double w = 1.0 / std::sqrt(static_cast<double>(g.degrees()[i]));
        for (int j = 0; j < g.vertex_count(); ++j) spec.eigenvectors(i, j) *= w;
    }
    return spec;
}

Spectrum spectrum_unnormalized(const OrientedHypergraph& g, const EigenConfig& cfg) {
    return eigen_sym(unnormalized_laplacian(g), cfg);
}

Spectrum spectrum_hyperedge(const OrientedHypergraph& g, const EigenConfig& cfg) {
    return eigen_sym(hyperedge_laplacian(g), cfg);
}

int incidence_rank(const OrientedHypergraph& g, const EigenConfig& cfg) {
    DenseMatrix a = incidence(g);
    const int rows = a.rows(), cols = a.cols();
    const double tol = cfg.zero_tol(std::max(rows, 1));
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = rank;
        for (int i = rank + 1; i < rows; ++i)
            if (std::abs(a(i, col)) > std::abs(a(pivot, col))) pivot = i;
        if (std::abs(a(pivot, col)) <= tol) continue;
        if (pivot != rank)
            for (int j = col; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
        for (int i = rank + 1; i < rows; ++i) {
            const double f = a(i, col) / a(rank, col);
            if (f == 0.0) continue;
            for (int j = col; j < cols; ++j) a(i, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

ZeroMultiplicities zero_multiplicities(const OrientedHypergraph& g, const EigenConfig& cfg) {
    ZeroMultiplicities zm;
    zm.m_v = spectrum_normalized(g, cfg).zero_mult;
    zm.m_h = spectrum_hyperedge(g, cfg).zero_mult;
    zm.rank = incidence_rank(g, cfg);
    const int n = g.vertex_count();
    const int m = g.hyperedge_count();
    if (zm.m_v != n - zm.rank || zm.m_h != m - zm.rank)
        throw std::runtime_error(
            "zero_multiplicities: spectral and rank computations disagree (m_V=" +
            std::to_string(zm.m_v) + ", m_H=" + std::to_string(zm.m_h) +
            ", rank=" + std::to_string(zm.rank) + ", n=" + std::to_string(n) +
            ", m=" + std::to_string(m) + "); tolerance failure");
    return zm;
}

BoundReport interlacing_check(const OrientedHypergraph& g, std::span<const int> vs,
                              const EigenConfig& cfg) {
    const int n = g.vertex_count();
    const int r = static_cast<int>(vs.size());
    OrientedHypergraph reduced = weak_delete(g, vs);
    const std::vector<double> lam = spectrum_normalized(g, cfg).eigenvalues;
    const std::vector<double> mu = spectrum_normalized(reduced, cfg).eigenvalues;

    BoundReport rep;
    rep.name = "interlacing";
    rep.statement = "lambda_k(g) <= lambda_k(g-hat) <= lambda_{k+r}(g)";
    rep.relation = "chain";
    double min_slack = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (int k = 0; k < n - r; ++k) {
        const double lo = mu[k] - lam[k];
        const double hi = lam[k + r] - mu[k];
        min_slack = std::min({min_slack, lo, hi});
        if (lo < -cfg.cluster_tol || hi < -cfg.cluster_tol) {
            ok = false;
            rep.details.push_back("violated at k=" + std::to_string(k + 1));
        }
    }
    rep.slack = (n - r > 0) ? min_slack : 0.0;
    rep.details.push_back("r=" + std::to_string(r) + ", compared " + std::to_string(n - r) +
                          " positions");
    rep.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    return rep;
}

BoundReport dual_scaling_check(const OrientedHypergraph& g, const EigenConfig& cfg) {
    int d = 0, u = 0;
    if (!g.is_regular(d) || !g.is_uniform(u))
        throw std::invalid_argument("dual_scaling_check: instance must be regular and uniform");

    const ZeroMultiplicities zm = zero_multiplicities(g, cfg);
    const std::vector<double> lam = spectrum_normalized(g, cfg).eigenvalues;
    const std::vector<double> dual_lam = spectrum_normalized(dual(g), cfg).eigenvalues;

    const double scale = static_cast<double>(d) / u;
    std::vector<double> expected(zm.m_h, 0.0);
    for (int j = zm.m_v; j < static_cast<int>(lam.size()); ++j) expected.push_back(scale * lam[j]);
    std::sort(expected.begin(), expected.end());

    BoundReport rep;
    rep.name = "dual_scaling";
    rep.statement = "spectrum(dual) = (d/u) * nonzero spectrum, zeros reconciled";
    rep.relation = "=";
    double max_dev = 0.0;
    if (expected.size() != dual_lam.size()) {
        rep.status = CheckStatus::Fail;
        rep.details.push_back("size mismatch after zero reconciliation");
        return rep;
    }
    for (std::size_t j = 0; j < expected.size(); ++j)
        max_dev = std::max(max_dev, std::abs(expected[j] - dual_lam[j]));
    rep.slack = -max_dev;
    rep.details.push_back("d=" + std::to_string(d) + ", u=" + std::to_string(u) +
                          ", max deviation=" + std::to_string(max_dev));
    rep.status = max_dev <= cfg.cluster_tol ? CheckStatus::Pass : CheckStatus::Fail;
    return rep;
}

BoundReport product_spectrum_check(const OrientedHypergraph& g1, const OrientedHypergraph& g2,
                                   const EigenConfig& cfg) {
    const std::vector<double> a = spectrum_unnormalized(g1, cfg).eigenvalues;
    const std::vector<double> b = spectrum_unnormalized(g2, cfg).eigenvalues;
    std::vector<double> sums;
    sums.reserve(a.size() * b.size());
    for (double x : a)
        for (double y : b) sums.push_back(x + y);
    std::sort(sums.begin(), sums.end());

    const std::vector<double> prod =
        spectrum_unnormalized(cartesian_product(g1, g2), cfg).eigenvalues;

    BoundReport rep;
    rep.name = "product_spectrum";
    rep.statement = "spectrum(Delta(g1 x g2)) = { lambda_i + mu_j }";
    rep.relation = "=";
    double max_dev = 0.0;
    for (std::size_t j = 0; j < sums.size(); ++j) max_dev = std::max(max_dev, std::abs(sums[j] - prod[j]));
    rep.slack = -max_dev;
    rep.details.push_back("sizes " + std::to_string(a.size()) + " x " + std::to_string(b.size()) +
                          ", max deviation=" + std::to_string(max_dev));
    rep.status = max_dev <= cfg.cluster_tol ? CheckStatus::Pass : CheckStatus::Fail;
    return rep;
}

} // namespace hyperlap
