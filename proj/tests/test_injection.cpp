// Tests for the partition-to-weighted-graph case construction and its
// injectivity verifier.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <string>
#include <vector>

#include "anosov/equivalence.hpp"
#include "anosov/errors.hpp"
#include "anosov/injection.hpp"
#include "anosov/partitions.hpp"
#include "anosov/quotient.hpp"

using namespace anosov;

TEST_CASE("exactly one guard fires for every partition of 9..14") {
    const auto& cases = injection_cases();
    REQUIRE(cases.size() == 14);
    for (int n = 9; n <= 14; ++n) {
        for (const auto& lambda : partitions(n)) {
            int fired = 0;
            for (const auto& c : cases) {
                if (c.guard(lambda)) ++fired;
            }
            CHECK(fired == 1);
        }
    }
}

TEST_CASE("dispatch picks the documented case ids") {
    // No 1-parts, keyed by length.
    CHECK(inject({12}).case_id == 1);
    CHECK(inject({7, 5}).case_id == 2);
    CHECK(inject({5, 4, 3}).case_id == 3);
    CHECK(inject({3, 3, 3}).case_id == 3);
    CHECK(inject({3, 3, 3, 3}).case_id == 4);
    CHECK(inject({3, 3, 2, 2, 2}).case_id == 4);

    // One 1-part.
    CHECK(inject({11, 1}).case_id == 5);
    CHECK(inject({8, 1}).case_id == 5);
    CHECK(inject({7, 4, 1}).case_id == 6);
    CHECK(inject({5, 4, 2, 1}).case_id == 7);
    CHECK(inject({4, 3, 2, 2, 1}).case_id == 8);
    CHECK(inject({2, 2, 2, 2, 2, 1}).case_id == 9);

    // Two or more 1-parts.
    CHECK(inject({8, 2, 1, 1}).case_id == 10);
    CHECK(inject({2, 1, 1, 1, 1, 1, 1, 1}).case_id == 11);
    CHECK(inject({2, 2, 1, 1, 1, 1, 1}).case_id == 12);
    CHECK(inject({2, 2, 2, 1, 1, 1}).case_id == 13);
    CHECK(inject({1, 1, 1, 1, 1, 1, 1, 1, 1}).case_id == 14);
}

TEST_CASE("pinned images match their shapes") {
    // (8, 1): triangle weights (2, 3, 2) plus a pendant, loop on the hub.
    auto im = inject({8, 1});
    CHECK(im.case_id == 5);
    std::multiset<int> w(im.graph.wt.begin(), im.graph.wt.end());
    CHECK(w == std::multiset<int>{2, 3, 2, 2});
    CHECK(im.graph.total_weight() == 9);

    // All-ones: loopless is impossible, three looped path vertices.
    auto ones = inject({1, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(ones.case_id == 14);
    CHECK(ones.graph.k == 3);
    CHECK(ones.graph.wt == std::vector<int>{3, 3, 3});
    CHECK(ones.graph.has_loop(0));
    CHECK(ones.graph.has_loop(1));
    CHECK(ones.graph.has_loop(2));
    CHECK(ones.graph.has_edge(0, 1));
    CHECK(ones.graph.has_edge(1, 2));
    CHECK_FALSE(ones.graph.has_edge(0, 2));

    // Case 7 puts loops on the first and middle vertices of the path
    // (first, second + 1, third).
    auto c7 = inject({5, 4, 2, 1});
    CHECK(c7.case_id == 7);
    CHECK(c7.graph.k == 3);
    CHECK(c7.graph.wt == std::vector<int>{5, 5, 2});
    CHECK(c7.graph.has_loop(0));
    CHECK(c7.graph.has_loop(1));
    CHECK_FALSE(c7.graph.has_loop(2));
    CHECK(c7.graph.has_edge(0, 1));
    CHECK(c7.graph.has_edge(1, 2));
    CHECK_FALSE(c7.graph.has_edge(0, 2));
}

TEST_CASE("every image passes the brick conditions with the right weight") {
    for (int n = 9; n <= 13; ++n) {
        for (const auto& lambda : partitions(n)) {
            auto im = inject(lambda);
            CHECK(im.graph.total_weight() == n);
            CHECK(check_brick_conditions(im.graph));
            auto d = deconstruct(im.graph);
            CHECK(d.n == n);
            CHECK(is_anosov(d));
        }
    }
}

TEST_CASE("images are pairwise non-isomorphic per n") {
    for (int n = 9; n <= 13; ++n) {
        std::set<WeightedCode> codes;
        std::size_t total = 0;
        for (const auto& lambda : partitions(n)) {
            codes.insert(weighted_canonical_code(inject(lambda).graph));
            ++total;
        }
        CHECK(codes.size() == total);
    }
}

TEST_CASE("the verifier accepts 9..14 and reports the partition count") {
    const std::size_t partition_count[] = {30, 42, 56, 77, 101, 135};
    for (int n = 9; n <= 14; ++n) {
        auto rep = verify_injection(n);
        CHECK(rep.ok());
        CHECK(rep.n == n);
        CHECK(rep.partition_count == partition_count[n - 9]);
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(inject({8}), input_error);
    CHECK_THROWS_AS(inject({4, 3, 1}), input_error);
    CHECK_THROWS_AS(inject({}), input_error);
    CHECK_THROWS_AS(inject({3, 5, 4}), input_error);
    CHECK_THROWS_AS(inject({5, 4, 0}), input_error);
    CHECK_THROWS_AS(inject({5, -1, 9}), input_error);

    CHECK_THROWS_AS(verify_injection(8), input_error);
    CHECK_THROWS_AS(verify_injection(15), input_error);
    CHECK_THROWS_AS(verify_injection(12, 11), input_error);
}
