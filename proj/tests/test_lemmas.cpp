#include "doctest.h"

#include "ramsey/lemmas.hpp"

using namespace ramsey;

TEST_CASE("string-length sum: the two routes agree") {
    for (int c = 1; c <= 3; ++c)
        for (int k = 1; k <= 5; ++k) {
            auto a = sigma_sum_exact(c, k);
            auto b = sigma_sum_enumerated(c, k);
            REQUIRE(a.has_value());
            REQUIRE(b.has_value());
            CHECK(*a == *b);
        }
}

TEST_CASE("string-length sum pins") {
    CHECK(*sigma_sum_exact(2, 1) == 0);  // only the empty string qualifies
    CHECK(*sigma_sum_exact(1, 3) == 3);  // "", "a", "aa" contribute 0+1+2
    CHECK(*sigma_sum_exact(2, 2) == 6);
    CHECK(*sigma_sum_exact(2, 3) == 52);
    CHECK(*sigma_sum_exact(2, 4) == 310);
}

TEST_CASE("string-length sum respects a total length cap") {
    // capping at the maximum possible length changes nothing
    CHECK(*sigma_sum_exact(2, 3, 4) == 52);
    CHECK(*sigma_sum_enumerated(2, 3, 4) == 52);
    // tighter caps drop the same strings on both routes
    for (long cap = 0; cap <= 3; ++cap)
        CHECK(*sigma_sum_exact(2, 3, cap) == *sigma_sum_enumerated(2, 3, cap));
    CHECK(*sigma_sum_exact(2, 3, 0) == 0);
}

TEST_CASE("closed-form bound dominates the exact string sum") {
    for (int c = 2; c <= 3; ++c)
        for (int k = 2; k <= 6; ++k) {
            auto exact = sigma_sum_exact(c, k);
            REQUIRE(exact.has_value());
            SigmaBound sb = sigma_bound(c, k);
            CHECK(*exact <= sb.closed_form_ceil);
            if (c == 2) {
                REQUIRE(sb.two_color_ceil.has_value());
                CHECK(*exact <= *sb.two_color_ceil);
                // the shifted form bounds the sum one cap lower: strings with
                // at most k-2 repeats, which is how the fingerprint bound
                // consumes it
                REQUIRE(sb.two_color_shifted_ceil.has_value());
                CHECK(*sigma_sum_exact(2, k - 1) <= *sb.two_color_shifted_ceil);
                CHECK(*sb.two_color_shifted_ceil <= *sb.two_color_ceil);
            } else {
                CHECK_FALSE(sb.two_color_ceil.has_value());
                CHECK_FALSE(sb.two_color_shifted_ceil.has_value());
            }
        }
}

TEST_CASE("closed-form bound ceiling pins") {
    CHECK(sigma_bound(2, 2).closed_form_ceil == 29);
    CHECK(sigma_bound(2, 3).closed_form_ceil == 142);
    CHECK(sigma_bound(2, 4).closed_form_ceil == 653);
}

TEST_CASE("second Pascal identity") {
    PascalCheck p = pascal_second_identity(1, 2);
    CHECK(p.lhs == 6);
    CHECK(p.rhs == 6);
    CHECK(p.equal);
    CHECK(pascal_second_identity(5, 7).lhs == 1716);
    for (int a = 0; a <= 50; a += 7)
        for (int n = 0; n <= 50; n += 9) {
            PascalCheck q = pascal_second_identity(a, n);
            CHECK(q.equal);
            CHECK(q.lhs == q.rhs);
        }
}

TEST_CASE("factorial bracket") {
    StirlingBracket one = stirling_bracket(1);
    CHECK(one.factorial == 1);
    CHECK(one.verified);
    for (int n : {2, 5, 17, 60, 200}) {
        StirlingBracket s = stirling_bracket(n);
        CHECK(s.verified);
        CHECK(BigRat(s.lower.hi) <= BigRat(s.factorial));
        CHECK(BigRat(s.factorial) <= BigRat(s.upper.lo));
    }
}

TEST_CASE("edge-count sum over colorings without a small homogeneous set") {
    // a = 4 means 2-uniform graphs; k = 3 asks for no homogeneous pair,
    // which is impossible once an edge exists, so only empty contributions
    auto z = hyper_edge_sum_exact(4, 2, 3);
    REQUIRE(z.has_value());
    CHECK(z->total == 0);

    // a = 3 means 1-uniform (vertex colorings); k = 3 forbids 2 alike
    auto v = hyper_edge_sum_exact(3, 2, 3);
    REQUIRE(v.has_value());
    CHECK(v->total == 6);

    auto g = hyper_edge_sum_exact(4, 2, 4);
    REQUIRE(g.has_value());
    CHECK(g->total == 248);
    CHECK(g->forced_at == 6);
    REQUIRE(g->per_m.size() == 6);
    CHECK(g->per_m[0] == 0);
    CHECK(g->per_m[1] == 2);
    CHECK(g->per_m[2] == 18);
    CHECK(g->per_m[3] == 108);
    CHECK(g->per_m[4] == 120);
    CHECK(g->per_m[5] == 0);
}

TEST_CASE("edge-count bound dominates whenever r covers the forcing point") {
    auto g = hyper_edge_sum_exact(4, 2, 4);
    REQUIRE(g.has_value());
    auto b = hyper_edge_sum_bound(4, 2, 6);
    REQUIRE(b.has_value());
    CHECK(*b == BigNat(14843406974976ull));
    CHECK(g->total <= *b);
    // also at the forcing point for the smaller instance
    auto v = hyper_edge_sum_exact(3, 2, 3);
    auto vb = hyper_edge_sum_bound(3, 2, v->forced_at);
    REQUIRE(vb.has_value());
    CHECK(v->total <= *vb);
}

TEST_CASE("tiny work budgets make the enumerations decline, not lie") {
    CHECK_FALSE(sigma_sum_enumerated(3, 5, -1, 10).has_value());
    CHECK_FALSE(hyper_edge_sum_exact(4, 2, 4, 50).has_value());
}
