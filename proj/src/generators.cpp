#include "hyperlap/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperlap {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

// Visits all k-subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset_of_size(int n, int k, F&& visit) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

OrientedHypergraph complete_graph(int n) {
    if (n < 2) throw std::invalid_argument("complete_graph: n must be >= 2");
    std::vector<Hyperedge> hs;
    hs.reserve(static_cast<std::size_t>(binomial(n, 2)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) hs.push_back(Hyperedge({i}, {j}));
    return OrientedHypergraph(n, std::move(hs));
}

OrientedHypergraph c_complete_signless(int n, int c) {
    if (n < 1 || c < 1 || c > n) throw std::invalid_argument("c_complete_signless: need 1 <= c <= n");
    std::vector<Hyperedge> hs;
    hs.reserve(static_cast<std::size_t>(binomial(n, c)));
    for_each_subset_of_size(n, c, [&](const std::vector<int>& s) { hs.push_back(Hyperedge(s, {})); });
    return OrientedHypergraph(n, std::move(hs));
}

OrientedHypergraph symmetric_2c_complete(int n, int c) {
    if (c < 1 || 2 * c > n) throw std::invalid_argument("symmetric_2c_complete: need 1 <= c and 2c <= n");
    std::vector<Hyperedge> hs;
    hs.reserve(static_cast<std::size_t>(binomial(n, 2 * c) * binomial(2 * c, c) / 2));
    for_each_subset_of_size(n, 2 * c, [&](const std::vector<int>& u) {
        // Splits of u into halves; fixing min(u) = u[0] on the input side
        // enumerates each unordered split once and fixes the orientation.
        for_each_subset_of_size(2 * c - 1, c - 1, [&](const std::vector<int>& rest) {
            std::vector<int> in{u[0]};
            std::vector<char> taken(2 * c, 0);
            taken[0] = 1;
            for (int t : rest) {
                in.push_back(u[t + 1]);
                taken[t + 1] = 1;
            }
            std::vector<int> out;
            for (int t = 1; t < 2 * c; ++t)
                if (!taken[t]) out.push_back(u[t]);
            hs.push_back(Hyperedge(std::move(in), std::move(out)));
        });
    });
    return OrientedHypergraph(n, std::move(hs));
}

OrientedHypergraph singleton_hyperedges(int n) {
    if (n < 1) throw std::invalid_argument("singleton_hyperedges: n must be >= 1");
    std::vector<Hyperedge> hs;
    hs.reserve(n);
    for (int i = 0; i < n; ++i) hs.push_back(Hyperedge({i}, {}));
    return OrientedHypergraph(n, std::move(hs));
}

OrientedHypergraph full_hyperedge(int n) {
    if (n < 1) throw std::invalid_argument("full_hyperedge: n must be >= 1");
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return OrientedHypergraph(n, {Hyperedge(std::move(all), {})});
}

OrientedHypergraph remark_4_3() {
    const std::vector<std::vector<int>> sets = {{0, 1, 2, 3}, {2, 3, 4, 5}, {4, 5, 6, 7},
                                                {6, 7, 0, 1}, {0, 2},       {0, 3},
                                                {2, 4},       {2, 5},       {4, 6},
                                                {4, 7}};
    std::vector<Hyperedge> hs;
    hs.reserve(sets.size());
    for (const auto& s : sets) hs.push_back(Hyperedge(s, {}));
    return OrientedHypergraph(8, std::move(hs));
}

} // namespace hyperlap
