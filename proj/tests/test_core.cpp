#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "hyperlap/generators.hpp"
#include "hyperlap/hypergraph.hpp"
#include "hyperlap/matrix.hpp"
#include "hyperlap/operators.hpp"
#include "hyperlap/report.hpp"

using namespace hyperlap;

TEST_CASE("hyperedge sides are sorted and queried by membership") {
    Hyperedge h({3, 1}, {2, 0});
    CHECK(h.inputs == std::vector<int>{1, 3});
    CHECK(h.outputs == std::vector<int>{0, 2});
    CHECK(h.cardinality() == 4);
    CHECK_FALSE(h.is_empty());
    CHECK(h.contains(1));
    CHECK(h.contains(2));
    CHECK_FALSE(h.contains(5));
    CHECK(h.is_input(3));
    CHECK_FALSE(h.is_output(3));
    CHECK(h.is_output(0));
    CHECK(Hyperedge().is_empty());
}

TEST_CASE("hyperedge reversal swaps the two sides") {
    Hyperedge h({1, 3}, {0, 2});
    Hyperedge r = h.reversed();
    CHECK(r.inputs == std::vector<int>{0, 2});
    CHECK(r.outputs == std::vector<int>{1, 3});
    CHECK(r.reversed() == h);
}

TEST_CASE("degrees respect hyperedge multiplicity") {
    // Duplicate hyperedges are distinct and both count toward the degree.
    OrientedHypergraph g(3, {Hyperedge({0}, {1}), Hyperedge({0}, {1}), Hyperedge({1, 2}, {})});
    CHECK(g.vertex_count() == 3);
    CHECK(g.hyperedge_count() == 3);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(1) == 3);
    CHECK(g.degree(2) == 1);
    CHECK(g.degrees() == std::vector<int>{2, 3, 1});
    CHECK(g.volume() == 6);
    std::vector<int> s = {0, 2};
    CHECK(g.volume(s) == 3);
    CHECK(g.max_cardinality() == 2);
    CHECK_THROWS_AS(g.degree(3), std::out_of_range);
    CHECK_THROWS_AS(g.degree(-1), std::out_of_range);
}

TEST_CASE("volume equals the sum of hyperedge cardinalities") {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        auto g = testutil::random_hypergraph(rng, 8, 10,
                                             static_cast<testutil::Flavor>(t % 3));
        long long cards = 0;
        for (const auto& h : g.hyperedges()) cards += h.cardinality();
        CHECK(g.volume() == cards);
    }
}

TEST_CASE("structural predicates on generated families") {
    int d = 0, u = 0, c = 0;

    auto k3 = complete_graph(3);
    CHECK(k3.is_regular(d));
    CHECK(d == 2);
    CHECK(k3.is_uniform(u));
    CHECK(u == 2);
    CHECK(k3.is_graph());
    CHECK(k3.is_balanced());
    CHECK(k3.constant_inout(c));
    CHECK(c == 1);
    CHECK_FALSE(k3.has_only_inputs());

    auto cc = c_complete_signless(4, 2);
    CHECK(cc.has_only_inputs());
    CHECK_FALSE(cc.is_balanced());
    CHECK_FALSE(cc.is_graph());
    CHECK(cc.is_uniform(u));
    CHECK(u == 2);
    CHECK(cc.is_regular(d));
    CHECK(d == 3);
    CHECK_FALSE(cc.constant_inout(c));

    auto sym = symmetric_2c_complete(5, 2);
    CHECK(sym.is_balanced());
    CHECK(sym.constant_inout(c));
    CHECK(c == 2);
    CHECK(sym.is_uniform(u));
    CHECK(u == 4);
    CHECK_FALSE(sym.is_graph());
}

TEST_CASE("predicates on an instance with no hyperedges") {
    OrientedHypergraph g(2, {}, true);
    int d = -1, u = -1, c = -1;
    CHECK(g.is_regular(d)); // all degrees are 0
    CHECK(d == 0);
    CHECK_FALSE(g.is_uniform(u));
    CHECK_FALSE(g.is_graph());
    CHECK_FALSE(g.constant_inout(c));
    CHECK(g.has_only_inputs());
    CHECK(g.is_balanced());
    CHECK(g.max_cardinality() == 0);
}

TEST_CASE("construction rejects a negative vertex count only") {
    CHECK_THROWS_AS(OrientedHypergraph(-1, {}), std::invalid_argument);
    // Rule violations are reported by validate, not rejected at construction.
    CHECK_NOTHROW(OrientedHypergraph(2, {Hyperedge({0, 5}, {})}, true));
}

TEST_CASE("validate reports each construction rule") {
    SUBCASE("clean instance") { CHECK(validate(complete_graph(4)).empty()); }

    SUBCASE("index out of range") {
        OrientedHypergraph g(2, {Hyperedge({0}, {1}), Hyperedge({0}, {2})});
        auto v = validate(g);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "index-out-of-range");
        CHECK(v[0].index == 1);
    }

    SUBCASE("input-output overlap") {
        OrientedHypergraph g(3, {Hyperedge({0, 1}, {1, 2})});
        auto v = validate(g);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "input-output-overlap");
        CHECK(v[0].index == 0);
    }

    SUBCASE("duplicate entry on one side") {
        OrientedHypergraph g(2, {Hyperedge({0, 0}, {1})});
        auto v = validate(g);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "duplicate-entry");
    }

    SUBCASE("degree zero flagged unless isolation is allowed") {
        std::vector<Hyperedge> hs = {Hyperedge({0}, {1})};
        OrientedHypergraph strict(3, hs);
        auto v = validate(strict);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == "degree-zero");
        CHECK(v[0].index == 2);
        OrientedHypergraph tolerant(3, hs, true);
        CHECK(validate(tolerant).empty());
    }
}

TEST_CASE("generated families validate cleanly") {
    CHECK(validate(complete_graph(5)).empty());
    CHECK(validate(c_complete_signless(5, 3)).empty());
    CHECK(validate(symmetric_2c_complete(6, 2)).empty());
    CHECK(validate(singleton_hyperedges(4)).empty());
    CHECK(validate(full_hyperedge(4)).empty());
    CHECK(validate(remark_4_3()).empty());
}

TEST_CASE("weak deletion reindexes survivors and keeps emptied hyperedges") {
    auto g = complete_graph(4);
    std::vector<int> del = {1};
    auto h = weak_delete(g, del);
    CHECK(h.vertex_count() == 3);
    CHECK(h.hyperedge_count() == 6); // hyperedges survive even when emptied of one side
    // Old vertices 0,2,3 become 0,1,2; edges that contained vertex 1 lose it.
    CHECK(h.hyperedge(0) == Hyperedge({0}, {}));     // was (0,1)
    CHECK(h.hyperedge(1) == Hyperedge({0}, {1}));    // was (0,2)
    CHECK(h.hyperedge(2) == Hyperedge({0}, {2}));    // was (0,3)
    CHECK(h.hyperedge(3) == Hyperedge({}, {1}));     // was (1,2)
    CHECK(h.hyperedge(4) == Hyperedge({}, {2}));     // was (1,3)
    CHECK(h.hyperedge(5) == Hyperedge({1}, {2}));    // was (2,3)
    // Survivors keep their degrees.
    CHECK(h.degrees() == std::vector<int>{3, 3, 3});
}

TEST_CASE("weak deletion preserves survivor degrees on random instances") {
    std::mt19937 rng(23);
    for (int t = 0; t < 30; ++t) {
        auto g = testutil::random_hypergraph(rng, 7, 9,
                                             static_cast<testutil::Flavor>(t % 3));
        const int n = g.vertex_count();
        if (n < 2) continue;
        int v = testutil::pick(rng, n);
        std::vector<int> del = {v};
        auto h = weak_delete(g, del);
        REQUIRE(h.vertex_count() == n - 1);
        for (int i = 0, j = 0; i < n; ++i) {
            if (i == v) continue;
            CHECK(h.degree(j) == g.degree(i));
            ++j;
        }
    }
}

TEST_CASE("weak deletion rejects bad deletion sets") {
    auto g = complete_graph(3);
    std::vector<int> out_of_range = {3};
    std::vector<int> negative = {-1};
    std::vector<int> duplicate = {0, 0};
    std::vector<int> everything = {0, 1, 2};
    CHECK_THROWS_AS(weak_delete(g, out_of_range), std::invalid_argument);
    CHECK_THROWS_AS(weak_delete(g, negative), std::invalid_argument);
    CHECK_THROWS_AS(weak_delete(g, duplicate), std::invalid_argument);
    CHECK_THROWS_AS(weak_delete(g, everything), std::invalid_argument);
}

TEST_CASE("dual transposes the incidence relation") {
    SUBCASE("two-vertex graph") {
        auto d = dual(complete_graph(2));
        CHECK(d.vertex_count() == 1);
        REQUIRE(d.hyperedge_count() == 2);
        CHECK(d.hyperedge(0) == Hyperedge({0}, {}));
        CHECK(d.hyperedge(1) == Hyperedge({}, {0}));
    }

    SUBCASE("incidence of the dual is the transpose") {
        std::mt19937 rng(37);
        for (int t = 0; t < 25; ++t) {
            auto g = testutil::random_hypergraph(rng, 7, 8,
                                                 static_cast<testutil::Flavor>(t % 3));
            auto d = dual(g);
            CHECK(incidence(d) == incidence(g).transposed());
            CHECK(dual(d) == g);
        }
    }

    SUBCASE("empty hyperedge is rejected") {
        OrientedHypergraph g(2, {Hyperedge({0}, {1}), Hyperedge()}, true);
        CHECK_THROWS_AS(dual(g), std::invalid_argument);
    }
}

TEST_CASE("cartesian product lists factor copies in documented order") {
    auto k2 = complete_graph(2);
    auto p = cartesian_product(k2, k2);
    CHECK(p.vertex_count() == 4);
    REQUIRE(p.hyperedge_count() == 4);
    // {v} x h2 copies first, then h1 x {u} copies.
    CHECK(p.hyperedge(0) == Hyperedge({0}, {1}));
    CHECK(p.hyperedge(1) == Hyperedge({2}, {3}));
    CHECK(p.hyperedge(2) == Hyperedge({0}, {2}));
    CHECK(p.hyperedge(3) == Hyperedge({1}, {3}));
    CHECK(p.degrees() == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("cartesian product adds factor degrees") {
    std::mt19937 rng(41);
    for (int t = 0; t < 15; ++t) {
        auto a = testutil::random_hypergraph(rng, 5, 5,
                                             static_cast<testutil::Flavor>(t % 3));
        auto b = testutil::random_hypergraph(rng, 5, 5,
                                             static_cast<testutil::Flavor>((t + 1) % 3));
        auto p = cartesian_product(a, b);
        const int n2 = b.vertex_count();
        REQUIRE(p.vertex_count() == a.vertex_count() * n2);
        CHECK(p.hyperedge_count() ==
              a.vertex_count() * b.hyperedge_count() + n2 * a.hyperedge_count());
        for (int i = 0; i < a.vertex_count(); ++i)
            for (int j = 0; j < n2; ++j)
                CHECK(p.degree(i * n2 + j) == a.degree(i) + b.degree(j));
    }
}

TEST_CASE("disjoint union concatenates shifted copies") {
    auto g = complete_graph(3);
    auto u = disjoint_union(g, 2);
    CHECK(u.vertex_count() == 6);
    CHECK(u.hyperedge_count() == 6);
    CHECK(u.hyperedge(3) == Hyperedge({3}, {4}));
    CHECK(u.degrees() == std::vector<int>(6, 2));
    auto comps = connected_components(u);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3, 4, 5});
    CHECK_THROWS_AS(disjoint_union(g, 0), std::invalid_argument);
}

TEST_CASE("reverse_hyperedge flips exactly one hyperedge") {
    auto g = complete_graph(3);
    auto r = reverse_hyperedge(g, 1);
    CHECK(r.hyperedge(0) == g.hyperedge(0));
    CHECK(r.hyperedge(1) == g.hyperedge(1).reversed());
    CHECK(r.hyperedge(2) == g.hyperedge(2));
    CHECK(r.degrees() == g.degrees());
    CHECK_THROWS_AS(reverse_hyperedge(g, 3), std::out_of_range);
    CHECK_THROWS_AS(reverse_hyperedge(g, -1), std::out_of_range);
}

TEST_CASE("connected components group vertices sharing hyperedges") {
    // Vertex 3 is isolated; vertices 0,1,2 are joined through two hyperedges.
    OrientedHypergraph g(4, {Hyperedge({0}, {1}), Hyperedge({1, 2}, {})}, true);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3});
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(52, 5) == 2598960LL);
}

TEST_CASE("complete graph generator orients each pair low-to-high") {
    auto g = complete_graph(3);
    CHECK(g.vertex_count() == 3);
    REQUIRE(g.hyperedge_count() == 3);
    CHECK(g.hyperedge(0) == Hyperedge({0}, {1}));
    CHECK(g.hyperedge(1) == Hyperedge({0}, {2}));
    CHECK(g.hyperedge(2) == Hyperedge({1}, {2}));
    int d = 0;
    CHECK(complete_graph(5).is_regular(d));
    CHECK(d == 4);
}

TEST_CASE("c-complete signless generator emits subsets in lexicographic order") {
    auto g = c_complete_signless(4, 2);
    CHECK(g.vertex_count() == 4);
    REQUIRE(g.hyperedge_count() == 6);
    const std::vector<std::vector<int>> expected = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int h = 0; h < 6; ++h) {
        CHECK(g.hyperedge(h).inputs == expected[h]);
        CHECK(g.hyperedge(h).outputs.empty());
    }
    CHECK(c_complete_signless(5, 3).hyperedge_count() == 10);
}

TEST_CASE("symmetric 2c-complete family is uniform and regular") {
    // c = 1 reduces to the complete graph, including hyperedge order.
    CHECK(symmetric_2c_complete(4, 1) == complete_graph(4));

    auto g = symmetric_2c_complete(5, 2);
    CHECK(g.hyperedge_count() == binomial(5, 4) * binomial(4, 2) / 2);
    int d = 0, u = 0;
    CHECK(g.is_regular(d));
    CHECK(d == binomial(4, 3) * binomial(4, 2) / 2); // 12
    CHECK(g.is_uniform(u));
    CHECK(u == 4);
    // The input side of every hyperedge carries the smallest member.
    for (const auto& h : g.hyperedges()) {
        int lo = std::min(h.inputs.front(), h.outputs.front());
        CHECK(h.inputs.front() == lo);
    }

    int d6 = 0;
    CHECK(symmetric_2c_complete(6, 2).is_regular(d6));
    CHECK(d6 == binomial(5, 3) * binomial(4, 2) / 2); // 30
}

TEST_CASE("singleton and full hyperedge generators") {
    auto s = singleton_hyperedges(3);
    CHECK(s.vertex_count() == 3);
    REQUIRE(s.hyperedge_count() == 3);
    for (int i = 0; i < 3; ++i) CHECK(s.hyperedge(i) == Hyperedge({i}, {}));

    auto f = full_hyperedge(4);
    CHECK(f.vertex_count() == 4);
    REQUIRE(f.hyperedge_count() == 1);
    CHECK(f.hyperedge(0) == Hyperedge({0, 1, 2, 3}, {}));
    CHECK(f.has_only_inputs());
}

TEST_CASE("remark_4_3 instance shape") {
    auto g = remark_4_3();
    CHECK(g.vertex_count() == 8);
    CHECK(g.hyperedge_count() == 10);
    CHECK(g.has_only_inputs());
    CHECK(g.degrees() == std::vector<int>{4, 2, 5, 3, 5, 3, 3, 3});
    CHECK(g.volume() == 28);
    CHECK(g.max_cardinality() == 4);
    CHECK(validate(g).empty());
}

TEST_CASE("generator parameter guards") {
    CHECK_THROWS_AS(complete_graph(1), std::invalid_argument);
    CHECK_THROWS_AS(c_complete_signless(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(c_complete_signless(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_2c_complete(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_2c_complete(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(singleton_hyperedges(0), std::invalid_argument);
    CHECK_THROWS_AS(full_hyperedge(0), std::invalid_argument);
}

TEST_CASE("dense matrix algebra") {
    DenseMatrix a(2, 3);
    a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
    a(1, 0) = 4; a(1, 1) = 5; a(1, 2) = 6;

    SUBCASE("matrix product") {
        DenseMatrix b(3, 2);
        b(0, 0) = 7;  b(0, 1) = 8;
        b(1, 0) = 9;  b(1, 1) = 10;
        b(2, 0) = 11; b(2, 1) = 12;
        DenseMatrix c = a.multiply(b);
        REQUIRE(c.rows() == 2);
        REQUIRE(c.cols() == 2);
        CHECK(c(0, 0) == doctest::Approx(58));
        CHECK(c(0, 1) == doctest::Approx(64));
        CHECK(c(1, 0) == doctest::Approx(139));
        CHECK(c(1, 1) == doctest::Approx(154));
        CHECK_THROWS_AS(a.multiply(a), std::invalid_argument);
    }

    SUBCASE("matrix-vector product") {
        std::vector<double> x = {1, 1, 1};
        CHECK(a.multiply(x) == std::vector<double>{6, 15});
        std::vector<double> bad = {1, 1};
        CHECK_THROWS_AS(a.multiply(bad), std::invalid_argument);
    }

    SUBCASE("transpose and column access") {
        DenseMatrix t = a.transposed();
        REQUIRE(t.rows() == 3);
        REQUIRE(t.cols() == 2);
        CHECK(t(0, 1) == 4);
        CHECK(t(2, 0) == 3);
        CHECK(a.column(1) == std::vector<double>{2, 5});
    }

    SUBCASE("norms") {
        CHECK(a.max_abs() == 6);
        DenseMatrix v(2, 1);
        v(0, 0) = 3; v(1, 0) = 4;
        CHECK(v.frobenius_norm() == doctest::Approx(5));
    }

    SUBCASE("symmetry test") {
        DenseMatrix s(2, 2);
        s(0, 0) = 1; s(0, 1) = 2; s(1, 0) = 2; s(1, 1) = 1;
        CHECK(s.is_symmetric(0.0));
        s(1, 0) = 2.1;
        CHECK_FALSE(s.is_symmetric(1e-3));
        CHECK(s.is_symmetric(0.2));
    }
}

TEST_CASE("symmetric matrix certification") {
    DenseMatrix m(2, 2);
    m(0, 0) = 1; m(0, 1) = 2; m(1, 0) = 2; m(1, 1) = 5;
    auto s = DenseSymMatrix::from_matrix(m);
    CHECK(s.dim() == 2);
    CHECK(s(0, 1) == 2);

    DenseMatrix rect(2, 3);
    CHECK_THROWS_AS(DenseSymMatrix::from_matrix(rect), std::invalid_argument);

    DenseMatrix skew(2, 2);
    skew(0, 1) = 1; skew(1, 0) = -1;
    CHECK_THROWS_AS(DenseSymMatrix::from_matrix(skew), std::invalid_argument);

    DenseSymMatrix w(3);
    w.set(0, 2, 7.0);
    CHECK(w(0, 2) == 7.0);
    CHECK(w(2, 0) == 7.0);
}

TEST_CASE("bound report primitives") {
    auto le = BoundReport::check_le("a", "x <= y", 1.0, 3.0, 0.0);
    CHECK(le.passed());
    CHECK(le.relation == "<=");
    CHECK(le.slack == doctest::Approx(2.0));

    auto le_fail = BoundReport::check_le("a", "x <= y", 3.0, 1.0, 1e-9);
    CHECK(le_fail.failed());
    CHECK(le_fail.slack == doctest::Approx(-2.0));

    auto ge = BoundReport::check_ge("b", "x >= y", 5.0, 2.0, 0.0);
    CHECK(ge.passed());
    CHECK(ge.slack == doctest::Approx(3.0));

    auto eq = BoundReport::check_eq("c", "x = y", 1.0, 1.0 + 1e-12, 1e-9);
    CHECK(eq.passed());
    CHECK(eq.slack <= 0.0); // equality slack is minus the deviation

    auto eq_fail = BoundReport::check_eq("c", "x = y", 1.0, 2.0, 1e-9);
    CHECK(eq_fail.failed());

    // Tolerance admits slightly negative slack.
    CHECK(BoundReport::check_le("d", "", 1.0 + 1e-10, 1.0, 1e-9).passed());

    auto na = BoundReport::not_applicable("e", "premise missing");
    CHECK(na.status == CheckStatus::NotApplicable);
    REQUIRE(na.details.size() == 1);
    CHECK(na.details[0] == "premise missing");

    auto un = BoundReport::unresolved("f", "search truncated");
    CHECK(un.status == CheckStatus::Unresolved);

    CHECK(to_string(CheckStatus::Pass) == "pass");
    CHECK(to_string(CheckStatus::Fail) == "fail");
    CHECK(to_string(CheckStatus::NotApplicable) == "not_applicable");
    CHECK(to_string(CheckStatus::Unresolved) == "unresolved");
}

TEST_CASE("combined reports take the worst status and the minimum slack") {
    auto p1 = BoundReport::check_le("p1", "", 0.0, 1.0, 0.0);
    auto p2 = BoundReport::check_le("p2", "", 0.0, 5.0, 0.0);
    auto f = BoundReport::check_le("f", "", 2.0, 0.0, 0.0);
    auto na = BoundReport::not_applicable("na", "skip");
    auto un = BoundReport::unresolved("un", "limit");

    auto all_pass = BoundReport::combine("chain", "both", {p1, p2});
    CHECK(all_pass.passed());
    CHECK(all_pass.relation == "chain");
    CHECK(all_pass.slack == doctest::Approx(1.0));

    auto with_fail = BoundReport::combine("chain", "", {p1, f});
    CHECK(with_fail.failed());
    CHECK(with_fail.slack == doctest::Approx(-2.0));

    auto with_unresolved = BoundReport::combine("chain", "", {p1, un});
    CHECK(with_unresolved.status == CheckStatus::Unresolved);

    // Fail dominates unresolved regardless of order.
    auto fail_wins = BoundReport::combine("chain", "", {un, f});
    CHECK(fail_wins.failed());

    // Not-applicable parts never change a passing status.
    auto with_na = BoundReport::combine("chain", "", {p1, na});
    CHECK(with_na.passed());

    auto empty = BoundReport::combine("chain", "", {});
    CHECK(empty.passed());
    CHECK(empty.slack == 0.0);

    // Part names and statuses are folded into the details.
    REQUIRE_FALSE(with_fail.details.empty());
    CHECK(with_fail.details[0] == "p1: pass");
}
