#include "doctest.h"

#include "ramsey/combinatorics.hpp"

#include <set>

using namespace ramsey;

TEST_CASE("binomial coefficients in 64 bits") {
    CHECK(binom_u64(0, 0) == 1);
    CHECK(binom_u64(5, 0) == 1);
    CHECK(binom_u64(5, 5) == 1);
    CHECK(binom_u64(5, 2) == 10);
    CHECK(binom_u64(52, 5) == 2598960);
    CHECK(binom_u64(2, 4) == 0); // k > n counts nothing

    // symmetric and Pascal-consistent on a band
    for (uint64_t n = 1; n <= 40; ++n)
        for (uint64_t k = 0; k <= n; ++k) {
            CHECK(binom_u64(n, k) == binom_u64(n, n - k));
            if (k >= 1)
                CHECK(binom_u64(n, k) ==
                      binom_u64(n - 1, k - 1) + binom_u64(n - 1, k));
        }

    // C(67,33) still fits, C(68,34) does not
    CHECK(binom_u64(67, 33) == 14226520737620288370ull);
    CHECK_THROWS_AS(binom_u64(68, 34), std::overflow_error);
}

TEST_CASE("colex rank pins") {
    CHECK(edge_rank({1, 2, 3}) == 0);
    CHECK(edge_rank({3, 4, 5}) == 9);
    CHECK(edge_rank({1, 2}) == 0);
    CHECK(edge_rank({1}) == 0);
    CHECK(edge_rank({7}) == 6);
    // the rank ignores n: {1,2,4} is rank 1 on any ground set
    CHECK(edge_rank({1, 2, 4}) == 1);
}

TEST_CASE("rank and unrank invert each other") {
    for (int a = 1; a <= 4; ++a) {
        int n = a <= 2 ? 30 : 14;
        uint64_t total = binom_u64(n, a);
        for (uint64_t r = 0; r < total; ++r) {
            std::vector<int> e = edge_unrank(r, a);
            REQUIRE(static_cast<int>(e.size()) == a);
            for (size_t i = 1; i < e.size(); ++i) REQUIRE(e[i] > e[i - 1]);
            REQUIRE(e.back() <= n);
            REQUIRE(edge_rank(e) == r);
        }
    }
}

TEST_CASE("colex enumeration order and coverage") {
    // for_each_combination must visit subsets exactly in rank order
    for (int m : {0, 1, 4, 7}) {
        for (int r = 0; r <= m + 1; ++r) {
            uint64_t expect = 0;
            for_each_combination(m, r, [&](const std::vector<int>& idx) {
                // shift 0-based positions to 1-based labels for ranking
                std::vector<int> e;
                for (int p : idx) e.push_back(p + 1);
                CHECK(edge_rank(e) == expect);
                ++expect;
                return true;
            });
            CHECK(expect == (r > m ? 0 : binom_u64(m, r)));
        }
    }

    // r = 0 visits the empty subset exactly once
    int visits = 0;
    for_each_combination(5, 0, [&](const std::vector<int>& idx) {
        CHECK(idx.empty());
        ++visits;
        return true;
    });
    CHECK(visits == 1);
}

TEST_CASE("early exit stops the sweep") {
    int seen = 0;
    for_each_combination(6, 2, [&](const std::vector<int>&) {
        return ++seen < 4;
    });
    CHECK(seen == 4);
}

TEST_CASE("subset visitor preserves item order") {
    std::vector<int> items{9, 4, 7};
    std::set<std::vector<int>> got;
    for_each_subset(items, 2, [&](const std::vector<int>& s) {
        got.insert(s);
        return true;
    });
    CHECK(got == std::set<std::vector<int>>{{9, 4}, {9, 7}, {4, 7}});
}

TEST_CASE("next_combination_colex walks to the end") {
    std::vector<int> v{0, 1, 2};
    int count = 1;
    while (next_combination_colex(v, 6)) ++count;
    CHECK(count == 20);       // C(6,3)
    CHECK(v == std::vector<int>{3, 4, 5});
    CHECK_FALSE(next_combination_colex(v, 6)); // stays put at the last one
    CHECK(v == std::vector<int>{3, 4, 5});
}
