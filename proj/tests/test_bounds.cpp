// Tests for the census bounds: the big-one sandwich, the nu growth floors,
// the two hub families, and the product floor for X(t) * t!.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "anosov/bounds.hpp"
#include "anosov/census.hpp"
#include "anosov/equivalence.hpp"
#include "anosov/errors.hpp"
#include "anosov/graph.hpp"
#include "anosov/quotient.hpp"

using namespace anosov;

namespace {

std::map<int, std::uint64_t> small_x() {
    // X(1)..X(4), enough for n <= 12.
    return {{1, 2}, {2, 4}, {3, 12}, {4, 52}};
}

} // namespace

TEST_CASE("big-one sandwich at small n matches hand tallies") {
    auto xs = small_x();

    // n = 3: only type (3) on either side.
    auto b3 = big_one_bounds(3, xs);
    CHECK(b3.lower.num == 1);
    CHECK(b3.lower.den == 1);
    CHECK(b3.upper == 2);
    REQUIRE(b3.lower_terms.size() == 1);
    CHECK(b3.lower_terms[0].lambda == Partition{3});
    CHECK(b3.lower_terms[0].x_value == 2);

    // n = 6: lower side (6), (3,3); upper side adds (4,2) and (2,2,2).
    auto b6 = big_one_bounds(6, xs);
    CHECK(b6.lower.num == 3);
    CHECK(b6.lower.den == 1);
    CHECK(b6.upper == 26);
    REQUIRE(b6.lower_terms.size() == 2);
    CHECK(b6.lower_terms[0].lambda == Partition{6});
    CHECK(b6.lower_terms[1].lambda == Partition{3, 3});
    REQUIRE(b6.upper_terms.size() == 4);
    CHECK(b6.upper_terms[0].lambda == Partition{6});
    CHECK(b6.upper_terms[1].lambda == Partition{4, 2});
    CHECK(b6.upper_terms[1].arrangements == 2);
    CHECK(b6.upper_terms[2].lambda == Partition{3, 3});
    CHECK(b6.upper_terms[2].arrangements == 1);
    CHECK(b6.upper_terms[3].lambda == Partition{2, 2, 2});

    // n = 7: 2 + 8 + 8 + 36 above, (7) and (4,3) below.
    auto b7 = big_one_bounds(7, xs);
    CHECK(b7.lower.num == 3);
    CHECK(b7.upper == 54);
}

TEST_CASE("big-one bounds bracket the census for n = 3..7") {
    auto xs = small_x();
    const long long census[] = {0, 0, 0, 1, 2, 3, 6, 9};
    for (int n = 3; n <= 7; ++n) {
        auto b = big_one_bounds(n, xs);
        long long a = census[n];
        CHECK(b.lower.leq_int(a));
        CHECK(a <= static_cast<long long>(b.upper));
    }
}

TEST_CASE("big-one lower bound keeps exact halves") {
    // Odd per-type values force denominator 2.
    std::map<int, std::uint64_t> odd = {{1, 1}, {2, 2}, {3, 5}};
    auto b = big_one_bounds(6, odd);
    CHECK(b.lower.num == 3);
    CHECK(b.lower.den == 2);
    CHECK(b.lower.value() == doctest::Approx(1.5));
    CHECK(b.lower.leq_int(2));
    CHECK_FALSE(b.lower.leq_int(1));
}

TEST_CASE("big-one bounds reject bad input") {
    CHECK_THROWS_AS(big_one_bounds(0, small_x()), input_error);
    std::map<int, std::uint64_t> partial = {{1, 2}};
    try {
        big_one_bounds(6, partial);
        FAIL("expected a missing-value error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("t = 2") != std::string::npos);
    }
}

TEST_CASE("nu growth floors at spot values") {
    // w = 72: w/3 - sqrt(144) - 4.5 = 7.5, and (72 - 36 - 17)/12.
    CHECK(nu_lower_bound(72, NuFormula::paper) == doctest::Approx(7.5).epsilon(1e-12));
    CHECK(nu_lower_bound(72, NuFormula::dani_mainkar) ==
          doctest::Approx(19.0 / 12.0).epsilon(1e-12));

    CHECK(nu_lower_bound(20, NuFormula::paper) == doctest::Approx(-4.157889).epsilon(1e-5));
    CHECK(nu_lower_bound(20, NuFormula::dani_mainkar) ==
          doctest::Approx(-1.331139).epsilon(1e-5));

    CHECK_THROWS_AS(nu_lower_bound(0, NuFormula::paper), input_error);
    CHECK_THROWS_AS(nu_lower_bound(-3, NuFormula::dani_mainkar), input_error);
    CHECK_THROWS_AS(count_exceeds_nu_bound(1, 0, NuFormula::paper), input_error);
}

TEST_CASE("exact bound comparison agrees with the double formula away from ties") {
    for (int w = 1; w <= 300; ++w) {
        for (long long c = 0; c <= 40; ++c) {
            for (NuFormula f : {NuFormula::paper, NuFormula::dani_mainkar}) {
                double gap = static_cast<double>(c) - nu_lower_bound(w, f);
                if (std::abs(gap) <= 1e-6) continue;
                CHECK(count_exceeds_nu_bound(c, w, f) == (gap > 0));
            }
        }
    }

    // Strict inequality on both sides of the w = 72 value of 7.5.
    CHECK_FALSE(count_exceeds_nu_bound(7, 72, NuFormula::paper));
    CHECK(count_exceeds_nu_bound(8, 72, NuFormula::paper));
    CHECK_FALSE(count_exceeds_nu_bound(1, 72, NuFormula::dani_mainkar));
    CHECK(count_exceeds_nu_bound(2, 72, NuFormula::dani_mainkar));
}

TEST_CASE("hub family graphs match their closed forms") {
    // Loopless hub on a 3-vertex path pattern: k = 3, p = 2, q = 2.
    auto path3 = make_graph(3, {{0, 1}, {1, 2}});
    auto g1 = nu_family_graph(3, 2, 2, false, path3);
    CHECK(check_anosov_criteria(g1));
    auto d1 = deconstruct(g1);
    CHECK(d1.n == 8);
    CHECK(d1.edge_count() == 12);
    CHECK(is_anosov(d1));

    // Looped hub on an edge pattern: k = 2, p = 1, q = 3.
    auto edge = make_graph(2, {{0, 1}});
    auto g2 = nu_family_graph(2, 1, 3, true, edge);
    CHECK(check_anosov_criteria(g2));
    auto d2 = deconstruct(g2);
    CHECK(d2.n == 7);
    CHECK(d2.edge_count() == 13);
    CHECK(is_anosov(d2));
}

TEST_CASE("hub family validation") {
    auto path3 = make_graph(3, {{0, 1}, {1, 2}});
    auto edge = make_graph(2, {{0, 1}});
    CHECK_THROWS_AS(nu_family_graph(0, 0, 2, false, path3), input_error);
    // Pattern size must match k.
    CHECK_THROWS_AS(nu_family_graph(2, 2, 2, false, path3), input_error);
    // Pattern edge count must match p.
    CHECK_THROWS_AS(nu_family_graph(3, 3, 2, false, path3), input_error);
    // Pattern must be connected.
    CHECK_THROWS_AS(nu_family_graph(2, 0, 2, false, make_graph(2, {})), input_error);
    // Hub weight floor, and the higher floor with a loop.
    CHECK_THROWS_AS(nu_family_graph(2, 1, 1, false, edge), input_error);
    CHECK_THROWS_AS(nu_family_graph(2, 1, 2, true, edge), input_error);
}

TEST_CASE("hub family closed forms hold for every small pattern") {
    // All k <= 4, every connected pattern, q <= 5, both hub kinds.
    for (int k = 1; k <= 4; ++k) {
        int max_p = k * (k - 1) / 2;
        for (int p = (k > 1 ? k - 1 : 0); p <= max_p; ++p) {
            auto patterns = connected_graph_classes(k, p);
            for (const auto& h : patterns) {
                for (int q = 2; q <= 5; ++q) {
                    for (bool loop : {false, true}) {
                        if (loop && q < 3) continue;
                        auto g = nu_family_graph(k, p, q, loop, h);
                        CHECK(check_anosov_criteria(g));
                        auto d = deconstruct(g);
                        CHECK(d.n == 2 * k + q);
                        long long want = loop ? (static_cast<long long>(q) * q + 3 * q) / 2 + 4 * p
                                              : 2 * q + 4 * p;
                        CHECK(d.edge_count() == want);
                        CHECK(is_anosov(d));
                    }
                }
            }
        }
    }
}

TEST_CASE("family counts by total dimension") {
    auto c9 = nu_family_count(9);
    CHECK_FALSE(c9.applicable);
    CHECK(c9.total == 0);
    CHECK_FALSE(c9.note.empty());

    struct Row {
        int w;
        long long no_loop, loop, total;
    };
    const Row rows[] = {
        {20, 1, 1, 2}, {24, 1, 0, 1}, {28, 1, 0, 1},
        {32, 2, 1, 3}, {36, 2, 1, 3}, {40, 2, 1, 3},
    };
    for (const auto& r : rows) {
        auto c = nu_family_count(r.w);
        CHECK(c.applicable);
        CHECK(c.no_loop == r.no_loop);
        CHECK(c.loop == r.loop);
        CHECK(c.total == r.total);
        CHECK(c.total == c.no_loop + c.loop);
    }

    // The closed-form count should dominate the coarse floor
    // (alpha - 3 sqrt(alpha)) / 3 for the loopless family.
    for (int w = 20; w <= 400; w += 2) {
        double alpha = (w - 6) / 2.0;
        double floor_bound = (alpha - 3.0 * std::sqrt(alpha)) / 3.0;
        auto c = nu_family_count(w);
        CHECK(static_cast<double>(c.no_loop) + 1e-9 >= floor_bound);
    }
}

TEST_CASE("family members are Anosov and distinct at each dimension") {
    // Member totals at spot dimensions, including the parity gap at 28.
    CHECK(nu_family_members(14).size() == 1);
    CHECK(nu_family_members(20).size() == 2);
    CHECK(nu_family_members(24).size() == 1);
    CHECK(nu_family_members(28).empty());
    // k = 4, p = 4 admits two patterns: the 4-cycle and the paw.
    CHECK(nu_family_members(30).size() == 2);
    CHECK(nu_family_members(32).size() == 4);
    CHECK(nu_family_members(36).size() == 6);
    CHECK(nu_family_members(40).size() == 5);

    for (int w = 10; w <= 30; ++w) {
        auto members = nu_family_members(w);
        std::set<WeightedCode> codes;
        for (const auto& mem : members) {
            CHECK(check_anosov_criteria(mem.graph));
            auto d = deconstruct(mem.graph);
            CHECK(is_anosov(d));
            CHECK(d.n + d.edge_count() == w);
            codes.insert(weighted_canonical_code(mem.graph));
        }
        // Up to dimension 30 every member pair is non-isomorphic.
        CHECK(codes.size() == members.size());
    }

    // w = 20 members, pinned: a loopless (3,2,2) and a looped (1,0,4).
    auto m20 = nu_family_members(20);
    REQUIRE(m20.size() == 2);
    CHECK(m20[0].family == 1);
    CHECK(m20[0].k == 3);
    CHECK(m20[0].p == 2);
    CHECK(m20[0].q == 2);
    CHECK(m20[1].family == 2);
    CHECK(m20[1].k == 1);
    CHECK(m20[1].p == 0);
    CHECK(m20[1].q == 4);

    CHECK_THROWS_AS(nu_family_members(50), capability_error);
    CHECK_THROWS_AS(nu_family_members(0), input_error);
}

TEST_CASE("product floor for X(t) times t factorial") {
    CHECK(product_lower_bound(2) == 6);
    CHECK(product_lower_bound(3) == 28);
    CHECK(product_lower_bound(4) == 240);
    CHECK_THROWS_AS(product_lower_bound(1), input_error);
    CHECK_THROWS_AS(product_lower_bound(63), capability_error);

    // Consistency with the known X values: the floor never exceeds X(t) * t!.
    const std::uint64_t xs[] = {0, 2, 4, 12, 52, 328};
    std::uint64_t fact = 1;
    for (int t = 2; t <= 5; ++t) {
        fact = 1;
        for (int i = 2; i <= t; ++i) fact *= static_cast<std::uint64_t>(i);
        CHECK(product_lower_bound(t) <= xs[t] * fact);
    }
}
