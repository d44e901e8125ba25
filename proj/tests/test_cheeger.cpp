#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "hyperlap/cheeger.hpp"
#include "hyperlap/generators.hpp"
#include "hyperlap/hypergraph.hpp"
#include "hyperlap/spectra.hpp"

using namespace hyperlap;

namespace {

// Independent evaluation of the squared-imbalance sum, straight from the
// definition, as the oracle for the library's incremental computation.
long long e_oracle(const OrientedHypergraph& g, const std::vector<int>& s) {
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : s) in_s[v] = 1;
    long long total = 0;
    for (const auto& h : g.hyperedges()) {
        long long d = 0;
        for (int v : h.inputs) d += in_s[v];
        for (int v : h.outputs) d -= in_s[v];
        total += d * d;
    }
    return total;
}

std::vector<int> random_subset(std::mt19937& rng, int n) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
        if (testutil::pick(rng, 2) == 0) s.push_back(i);
    if (s.empty()) s.push_back(testutil::pick(rng, n));
    return s;
}

} // namespace

TEST_CASE("e_tilde matches the definition on random subsets") {
    std::mt19937 rng(71);
    for (int t = 0; t < 40; ++t) {
        auto g = testutil::random_hypergraph(rng, 8, 10,
                                             static_cast<testutil::Flavor>(t % 3));
        auto s = random_subset(rng, g.vertex_count());
        CHECK(e_tilde(g, s) == e_oracle(g, s));
    }
}

TEST_CASE("e_tilde hand values") {
    auto k4 = complete_graph(4);
    std::vector<int> one = {0};
    std::vector<int> pair = {0, 1};
    std::vector<int> all = {0, 1, 2, 3};
    CHECK(e_tilde(k4, one) == 3);
    CHECK(e_tilde(k4, pair) == 4);
    CHECK(e_tilde(k4, all) == 0); // balanced hyperedges cancel over V

    auto cc = c_complete_signless(4, 2);
    CHECK(e_tilde(cc, all) == 24); // six all-input pairs, each contributing 4
    CHECK(nu_tilde(cc, all) == doctest::Approx(2.0));

    auto g = remark_4_3();
    std::vector<int> v8 = {0, 1, 2, 3, 4, 5, 6, 7};
    CHECK(e_tilde(g, v8) == 88);
    CHECK(g.volume() == 28);
    CHECK(nu_tilde(g, v8) == doctest::Approx(22.0 / 7.0));
}

TEST_CASE("singleton subsets always have nu_tilde one") {
    // Each hyperedge containing i contributes exactly 1 to e_tilde({i}).
    std::mt19937 rng(73);
    for (int t = 0; t < 20; ++t) {
        auto g = testutil::random_hypergraph(rng, 8, 10,
                                             static_cast<testutil::Flavor>(t % 3));
        for (int i = 0; i < g.vertex_count(); ++i) {
            std::vector<int> s = {i};
            CHECK(e_tilde(g, s) == g.degree(i));
            CHECK(nu_tilde(g, s) == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("subset validation") {
    auto g = complete_graph(3);
    std::vector<int> empty;
    std::vector<int> oor = {3};
    std::vector<int> dup = {1, 1};
    CHECK_THROWS_AS(e_tilde(g, empty), std::invalid_argument);
    CHECK_THROWS_AS(e_tilde(g, oor), std::invalid_argument);
    CHECK_THROWS_AS(e_tilde(g, dup), std::invalid_argument);
    CHECK_THROWS_AS(nu_tilde(g, empty), std::invalid_argument);

    // Zero-volume subsets cannot be normalized.
    OrientedHypergraph iso(2, {Hyperedge({0}, {})}, true);
    std::vector<int> isolated = {1};
    CHECK_THROWS_AS(nu_tilde(iso, isolated), std::invalid_argument);
}

TEST_CASE("cheeger constants of small graphs") {
    SUBCASE("complete graph on four vertices") {
        auto r = cheeger_constants(complete_graph(4));
        CHECK(r.h == doctest::Approx(2.0 / 3.0));
        CHECK(r.argmin.members == std::vector<int>{0, 1}); // lexicographic tie-break
        CHECK(r.argmin.vol == 6);
        CHECK(r.argmin.e_value == 4);
        CHECK(r.h_prime == doctest::Approx(0.0));
        CHECK(r.argmin_prime.members == std::vector<int>{0, 1, 2, 3});
    }

    SUBCASE("directed cycle") {
        auto r = cheeger_constants(testutil::cycle_graph(4));
        CHECK(r.h == doctest::Approx(0.5));
        CHECK(r.argmin.members == std::vector<int>{0, 1});
        CHECK(r.h_prime == doctest::Approx(0.0));

        auto r5 = cheeger_constants(testutil::cycle_graph(5));
        CHECK(r5.h == doctest::Approx(0.5));
    }

    SUBCASE("two vertices") {
        auto r = cheeger_constants(complete_graph(2));
        CHECK(r.h == doctest::Approx(1.0));
        CHECK(r.argmin.members == std::vector<int>{0});
        CHECK(r.h_prime == doctest::Approx(0.0)); // the whole set is balanced
    }

    SUBCASE("all-input instances have positive h_prime") {
        auto r = cheeger_constants(c_complete_signless(4, 2));
        CHECK(r.h == doctest::Approx(1.0));
        CHECK(r.h_prime == doctest::Approx(1.0));
        CHECK(r.argmin.members == std::vector<int>{0});
    }

    SUBCASE("limits") {
        CHECK_THROWS_AS(cheeger_constants(complete_graph(4), 3), std::invalid_argument);
        CHECK_THROWS_AS(cheeger_constants(singleton_hyperedges(1)), std::invalid_argument);
    }
}

TEST_CASE("h never exceeds one and h_prime never exceeds h") {
    std::mt19937 rng(79);
    for (int t = 0; t < 25; ++t) {
        auto g = testutil::random_hypergraph(rng, 8, 10,
                                             static_cast<testutil::Flavor>(t % 3));
        if (g.vertex_count() < 2) continue;
        auto r = cheeger_constants(g);
        CHECK(r.h <= 1.0 + 1e-12); // singletons witness nu_tilde = 1
        CHECK(r.h_prime <= r.h + 1e-12);
        CHECK(r.argmin.e_value == e_oracle(g, r.argmin.members));
        CHECK(2 * g.volume(r.argmin.members) <= g.volume());
    }
}

TEST_CASE("nu_tilde is bounded by the largest eigenvalue") {
    SUBCASE("frozen complete graph") {
        auto rep = verify_nu_upper_any(complete_graph(4));
        CHECK(rep.passed());
        CHECK(rep.name == "nu_upper");
        CHECK(rep.lhs == doctest::Approx(1.0));       // singletons attain the max
        CHECK(rep.rhs == doctest::Approx(4.0 / 3.0)); // lambda_n
    }

    SUBCASE("random corpus") {
        std::mt19937 rng(83);
        for (int t = 0; t < 20; ++t) {
            auto g = testutil::random_hypergraph(rng, 8, 10,
                                                 static_cast<testutil::Flavor>(t % 3));
            if (g.vertex_count() < 2) continue;
            CHECK(verify_nu_upper_any(g).passed());
        }
    }

    SUBCASE("size guard") {
        CHECK(verify_nu_upper_any(complete_graph(4), {}, 3).status == CheckStatus::NotApplicable);
    }
}

TEST_CASE("upper bounds on the smallest nonzero eigenvalue") {
    SUBCASE("no harmonic functions: lambda_1 <= h") {
        auto rep = verify_cheeger_upper(singleton_hyperedges(3));
        CHECK(rep.passed());
        CHECK(rep.statement == "lambda_1 <= h_tilde (m_V = 0)");
        CHECK(rep.lhs == doctest::Approx(1.0));
        CHECK(rep.rhs == doctest::Approx(1.0)); // tight

        auto rep2 = verify_cheeger_upper(c_complete_signless(4, 2));
        CHECK(rep2.passed());
        CHECK(rep2.lhs == doctest::Approx(2.0 / 3.0));
        CHECK(rep2.rhs == doctest::Approx(1.0));
    }

    SUBCASE("one harmonic dimension, balanced: lambda_2 <= 2h") {
        auto k2 = verify_cheeger_upper(complete_graph(2));
        CHECK(k2.passed());
        CHECK(k2.statement == "lambda_2 <= 2 h_tilde (m_V = 1, balanced)");
        CHECK(k2.lhs == doctest::Approx(2.0));
        CHECK(k2.rhs == doctest::Approx(2.0)); // tight

        auto k4 = verify_cheeger_upper(complete_graph(4));
        CHECK(k4.passed());
        CHECK(k4.lhs == doctest::Approx(4.0 / 3.0));
        CHECK(k4.rhs == doctest::Approx(4.0 / 3.0)); // also tight

        auto c4 = verify_cheeger_upper(testutil::cycle_graph(4));
        CHECK(c4.passed());
        CHECK(c4.lhs == doctest::Approx(1.0));
        CHECK(c4.rhs == doctest::Approx(1.0));
    }

    SUBCASE("premises rejected") {
        // remark_4_3 has m_V = 1 but unbalanced (all-input) hyperedges.
        CHECK(verify_cheeger_upper(remark_4_3()).status == CheckStatus::NotApplicable);
        // A single all-input hyperedge on two vertices has m_V = 1, unbalanced.
        CHECK(verify_cheeger_upper(full_hyperedge(2)).status == CheckStatus::NotApplicable);
        CHECK(verify_cheeger_upper(complete_graph(4), {}, 3).status ==
              CheckStatus::NotApplicable);
    }

    SUBCASE("holds across the applicable corpus") {
        std::mt19937 rng(89);
        for (int t = 0; t < 25; ++t) {
            auto g = testutil::random_hypergraph(rng, 8, 10,
                                                 static_cast<testutil::Flavor>(t % 3));
            auto rep = verify_cheeger_upper(g);
            CHECK_FALSE(rep.failed());
        }
    }
}

TEST_CASE("lower bound via a weak-deleted graph") {
    SUBCASE("a graph needs no deletion") {
        auto rep = verify_cheeger_lower_via_graph(complete_graph(4), {});
        CHECK(rep.passed());
        CHECK(rep.name == "cheeger_lower_via_graph");

        auto c4 = verify_cheeger_lower_via_graph(testutil::cycle_graph(4), {});
        CHECK(c4.passed());
    }

    SUBCASE("one deletion turning a hyperedge into an edge") {
        // Three disjoint edges plus vertex 6 riding along in one hyperedge;
        // deleting 6 leaves a graph and m_V = 3 allows r = 1.
        OrientedHypergraph g(7, {Hyperedge({0}, {1}), Hyperedge({2}, {3}), Hyperedge({4}, {5}),
                                 Hyperedge({0, 6}, {1})});
        auto zm = zero_multiplicities(g);
        REQUIRE(zm.m_v == 3);
        std::vector<int> del = {6};
        auto rep = verify_cheeger_lower_via_graph(g, del);
        CHECK(rep.passed());
    }

    SUBCASE("not a graph after deletion") {
        std::vector<int> del = {0};
        auto rep = verify_cheeger_lower_via_graph(complete_graph(4), del);
        CHECK(rep.status == CheckStatus::NotApplicable);
    }

    SUBCASE("deletion budget exceeded") {
        // C_4 plus a tag-along vertex: m_V = 1, so only r = 0 is admissible,
        // even though deleting the extra vertex leaves a graph.
        OrientedHypergraph g(5, {Hyperedge({0}, {1}), Hyperedge({1}, {2}), Hyperedge({2}, {3}),
                                 Hyperedge({3}, {0}), Hyperedge({0, 4}, {1})});
        REQUIRE(zero_multiplicities(g).m_v == 1);
        std::vector<int> del = {4};
        auto rep = verify_cheeger_lower_via_graph(g, del);
        CHECK(rep.status == CheckStatus::NotApplicable);
    }
}

TEST_CASE("weak deletion cannot decrease the cheeger constant") {
    // Survivor subsets keep their volume and imbalance, and the volume cap
    // only tightens, so the minimum ranges over fewer subsets.
    std::mt19937 rng(97);
    for (int t = 0; t < 25; ++t) {
        auto g = testutil::random_hypergraph(rng, 8, 10,
                                             static_cast<testutil::Flavor>(t % 3));
        const int n = g.vertex_count();
        if (n < 3) continue;
        std::vector<int> del = {testutil::pick(rng, n)};
        auto reduced = weak_delete(g, del);
        CHECK(cheeger_constants(reduced).h >= cheeger_constants(g).h - 1e-12);
    }
}

TEST_CASE("underlying graphs from pairings") {
    SUBCASE("graphs are their own canonical pairing") {
        auto c4 = testutil::cycle_graph(4);
        auto gs = underlying_graphs(c4);
        REQUIRE(gs.size() == 1);
        CHECK(gs[0].graph == c4);
        CHECK(gs[0].output_order[0] == std::vector<int>{1});
    }

    SUBCASE("a 2-2 hyperedge has two pairings") {
        OrientedHypergraph g(4, {Hyperedge({0, 1}, {2, 3})});
        auto all = underlying_graphs(g, PairingMode::All);
        REQUIRE(all.size() == 2);
        CHECK(all[0].output_order[0] == std::vector<int>{2, 3});
        CHECK(all[1].output_order[0] == std::vector<int>{3, 2});
        CHECK(all[0].graph.hyperedges() ==
              std::vector<Hyperedge>{Hyperedge({0}, {2}), Hyperedge({1}, {3})});
        CHECK(all[1].graph.hyperedges() ==
              std::vector<Hyperedge>{Hyperedge({0}, {3}), Hyperedge({1}, {2})});
        // Every pairing preserves the degree sequence.
        for (const auto& ug : all) CHECK(ug.graph.degrees() == g.degrees());
    }

    SUBCASE("guards") {
        CHECK_THROWS_AS(underlying_graphs(c_complete_signless(4, 2)), std::invalid_argument);
        OrientedHypergraph mixed(4, {Hyperedge({0}, {1}), Hyperedge({0, 1}, {2, 3})});
        CHECK_THROWS_AS(underlying_graphs(mixed), std::invalid_argument);
        OrientedHypergraph big(6, {Hyperedge({0, 1, 2}, {3, 4, 5})});
        CHECK_THROWS_AS(underlying_graphs(big, PairingMode::All, 5), std::runtime_error);
        CHECK(underlying_graphs(big, PairingMode::All, 6).size() == 6);
    }
}

TEST_CASE("lower bound via underlying graphs") {
    SUBCASE("cycle: the canonical pairing qualifies") {
        auto reps = verify_cheeger_lower_underlying(testutil::cycle_graph(4));
        REQUIRE(reps.size() == 2);
        CHECK(reps[0].name == "underlying_harmonic_claim");
        CHECK(reps[0].passed());
        CHECK(reps[1].name == "cheeger_lower_underlying");
        CHECK(reps[1].passed());
    }

    SUBCASE("three balanced 2-2 hyperedges keep one harmonic dimension") {
        OrientedHypergraph g(4, {Hyperedge({0, 1}, {2, 3}), Hyperedge({0, 2}, {1, 3}),
                                 Hyperedge({0, 3}, {1, 2})});
        REQUIRE(zero_multiplicities(g).m_v == 1);
        auto reps = verify_cheeger_lower_underlying(g);
        CHECK(reps[0].passed());
        CHECK(reps[1].passed());
    }

    SUBCASE("a single balanced hyperedge refutes the harmonic claim") {
        // m_V = 3 forces lambda_3(G) = 0, but both pairings split V into two
        // edges whose third eigenvalue is positive.
        OrientedHypergraph g(4, {Hyperedge({0, 1}, {2, 3})});
        REQUIRE(zero_multiplicities(g).m_v == 3);
        auto reps = verify_cheeger_lower_underlying(g);
        CHECK(reps[0].failed());
        bool mentions_violation = false;
        for (const auto& d : reps[0].details)
            if (d.find("pairing(s) violate") != std::string::npos) mentions_violation = true;
        CHECK(mentions_violation);
        CHECK(reps[1].status == CheckStatus::Unresolved);
    }

    SUBCASE("two opposite balanced hyperedges refute it for every pairing") {
        OrientedHypergraph g(4, {Hyperedge({0, 1}, {2, 3}), Hyperedge({2, 3}, {0, 1})});
        REQUIRE(zero_multiplicities(g).m_v == 3);
        auto reps = verify_cheeger_lower_underlying(g);
        CHECK(reps[0].failed());
        CHECK(reps[1].status == CheckStatus::Unresolved);

        // Truncation keeps the violation visible but leaves the bound open.
        auto truncated = verify_cheeger_lower_underlying(g, {}, 1);
        CHECK(truncated[0].failed());
        bool notes_truncation = false;
        for (const auto& d : truncated[0].details)
            if (d.find("truncated") != std::string::npos) notes_truncation = true;
        CHECK(notes_truncation);
        CHECK(truncated[1].status == CheckStatus::Unresolved);
    }

    SUBCASE("premises rejected") {
        auto reps = verify_cheeger_lower_underlying(remark_4_3());
        CHECK(reps[0].status == CheckStatus::NotApplicable);
        CHECK(reps[1].status == CheckStatus::NotApplicable);
    }
}
