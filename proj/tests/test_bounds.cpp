#include "doctest.h"

#include "ramsey/bounds.hpp"

using namespace ramsey;

TEST_CASE("closed forms at arity one are exact values") {
    for (int c = 2; c <= 4; ++c)
        for (int k = 1; k <= 6; ++k) {
            Evaluation ev = bound(Family::kBase, 1, k, c);
            REQUIRE(ev.exact.has_value());
            CHECK(*ev.exact == BigNat(c) * k - c + 1);
            CHECK(ev.is_exact_ramsey);
        }
    Evaluation e = bound(Family::kBase, 1, 4, 2);
    CHECK(*e.exact == 7);
}

TEST_CASE("pair bounds: central binomial and the multicolor factorial") {
    for (int k = 2; k <= 10; ++k) {
        Evaluation ev = bound(Family::kBase, 2, k, 2);
        REQUIRE(ev.exact.has_value());
        CHECK(*ev.exact == big_binomial(2ul * k - 2, k - 1));
        CHECK_FALSE(ev.is_exact_ramsey);
    }
    CHECK(*bound(Family::kBase, 2, 3, 2).exact == 6);
    // (c(k-1))!/((k-1)!)^c at c=3, k=3: 720/8
    CHECK(*bound(Family::kBase, 2, 3, 3).exact == 90);
}

TEST_CASE("arrow pins") {
    EvalBudget b = default_budget();
    CHECK(*up_arrow(2, 0, 3, b) == 6);
    CHECK(*up_arrow(2, 1, 5, b) == 32);
    CHECK(*up_arrow(2, 2, 3, b) == 16);
    CHECK(*up_arrow(3, 2, 2, b) == 27);
    CHECK(*up_arrow(2, 3, 2, b) == 4); // 2 pentated by 2 is still 4
    CHECK(*up_arrow(2, 2, 0, b) == 1);
}

TEST_CASE("tower notation pins") {
    EvalBudget b = default_budget();
    CHECK(*tow(2, {BigNat(1), BigNat(1), BigNat(1)}, b) == 16);
    CHECK(*tow(2, {BigNat(6)}, b) == 64);
    CHECK(*tow(3, {BigNat(2)}, b) == 9);
    // TOW(b1, b2) = 2^(b1 * 2^b2)
    CHECK(*tow(2, {BigNat(3), BigNat(2)}, b) == 4096);
}

TEST_CASE("the stepping bound is an iterated arrow") {
    EvalBudget b = default_budget();
    // a = 2 reduces to a single exponential c^(ck-c+1)
    Evaluation ev = bound(Family::kRamsey, 2, 3, 2);
    REQUIRE(ev.exact.has_value());
    CHECK(*ev.exact == 32);
    CHECK(*ev.exact == *up_arrow(2, 1, 2 * 3 - 1, b));
    // the tower of 2k-1 ones equals the double-arrow rung
    for (int k = 2; k <= 3; ++k) {
        std::vector<BigNat> ones(2 * k - 1, BigNat(1));
        auto t = tow(2, ones, b);
        auto u = up_arrow(2, 2, 2 * k - 1, b);
        REQUIRE(t.has_value());
        REQUIRE(u.has_value());
        CHECK(*t == *u);
    }
    // a = 3, k = 3 still materializes inside the default bit budget
    Evaluation deep = bound(Family::kRamsey, 3, 3, 2);
    REQUIRE(deep.exact.has_value());
    CHECK(*deep.exact == BigNat(1) << 65536);
    // one more rung is symbolic, never silently wrong
    Evaluation big = bound(Family::kRamsey, 3, 4, 2);
    CHECK_FALSE(big.exact.has_value());
    CHECK(big.overflow);
    CHECK(compare_norms(big.norm, TowerNorm::from_exact(BigNat(1) << 65536)) > 0);
    CHECK_FALSE(big.asymptotic_only);
}

TEST_CASE("halving-family pins") {
    // a = 2 form c^(c(k-1)-c+2)
    CHECK(*bound(Family::kErdosRado, 2, 3, 2).exact == 16);
    // a = 3 squared form c^(R(2,k-1,c)^2)+1; R(2,2,2) = 2 is exact
    Evaluation er33 = bound(Family::kErdosRado, 3, 3, 2);
    REQUIRE(er33.exact.has_value());
    CHECK(*er33.exact == 17);
    CHECK_FALSE(er33.surrogate);
    CHECK(er33.addend == 1);
    // k > a puts an upper bound where the inner R should be, and says so
    CHECK(bound(Family::kErdosRado, 3, 4, 2).surrogate);
    CHECK(bound(Family::kErdosRado, 4, 5, 2).surrogate);
    // k = a keeps the inner value exact: 2^C(4,3) + 2
    Evaluation er44 = bound(Family::kErdosRado, 4, 4, 2);
    CHECK_FALSE(er44.surrogate);
    REQUIRE(er44.exact.has_value());
    CHECK(*er44.exact == (BigNat(1) << 4) + 2);
}

TEST_CASE("halving bound grows with k") {
    BigNat prev = 0;
    for (int k = 3; k <= 7; ++k) {
        Evaluation ev = bound(Family::kErdosRado, 3, k, 2);
        REQUIRE(ev.exact.has_value());
        CHECK(*ev.exact > prev);
        prev = *ev.exact;
    }
}

TEST_CASE("fingerprint-family pins") {
    Evaluation cfs = bound(Family::kCfs, 3, 5, 2);
    REQUIRE(cfs.exp_of_c.has_value());
    CHECK(*cfs.exp_of_c == 2612);
    Evaluation cfs3 = bound(Family::kCfs, 3, 3, 2);
    REQUIRE(cfs3.exp_of_c.has_value());
    CHECK(*cfs3.exp_of_c == 116); // ceil(B sqrt(2) 2^6)
}

TEST_CASE("tower corollaries carry their asymptotic caveat") {
    // the 2-color halving tower at a = 3 is claimed for every k >= 4
    Evaluation t3 = bound(Family::kErdosRadoTower, 3, 4, 2);
    CHECK_FALSE(t3.asymptotic_only);
    REQUIRE(t3.exp_of_c.has_value());
    CHECK(*t3.exp_of_c == (BigNat(1) << 16) / 2); // ceil(2^16 / 2)
    // at a >= 4 the formula is almost-all-k; small k flags it
    CHECK(bound(Family::kErdosRadoTower, 4, 5, 2).asymptotic_only);
    CHECK_FALSE(bound(Family::kErdosRadoTower, 4, 7, 2).asymptotic_only);
    CHECK(bound(Family::kCfsTower, 6, 7, 2).asymptotic_only);
    CHECK_FALSE(bound(Family::kCfsTower, 3, 5, 2).asymptotic_only);
}

TEST_CASE("family applicability matrix") {
    CHECK(family_applies(Family::kBase, 1, 3, 2));
    CHECK(family_applies(Family::kBase, 2, 3, 2));
    CHECK_FALSE(family_applies(Family::kBase, 3, 3, 2));
    CHECK_FALSE(family_applies(Family::kErdosRado, 1, 3, 2));
    CHECK_FALSE(family_applies(Family::kErdosRadoTower, 3, 3, 3)); // 2 colors only
    CHECK_FALSE(family_applies(Family::kCfs, 4, 5, 2));
    CHECK(family_applies(Family::kCfsTower, 4, 5, 2));
    CHECK_FALSE(family_applies(Family::kRamsey, 2, 1, 2)); // k below a
    CHECK_THROWS_AS(bound(Family::kCfs, 4, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(bound(Family::kBase, 2, 3, 1), std::invalid_argument);
}

TEST_CASE("family names round-trip") {
    for (Family f : {Family::kBase, Family::kRamsey, Family::kErdosRado,
                     Family::kErdosRadoTower, Family::kCfs, Family::kCfsTower}) {
        auto back = family_from_name(family_name(f));
        REQUIRE(back.has_value());
        CHECK(*back == f);
    }
    CHECK_FALSE(family_from_name("no_such_family").has_value());
}

TEST_CASE("comparison table at the worked point") {
    auto all = compare_bounds(3, 5, 2);
    REQUIRE(all.size() == 5);
    CHECK(all[0].family == Family::kErdosRado);
    CHECK(all[1].family == Family::kCfs);
    CHECK(all[2].family == Family::kCfsTower);
    CHECK(all[3].family == Family::kErdosRadoTower);
    CHECK(all[4].family == Family::kRamsey);
    // adjacent exact pairs really are ordered
    for (size_t i = 1; i < all.size(); ++i)
        if (all[i - 1].exact && all[i].exact)
            CHECK(*all[i - 1].exact <= *all[i].exact);
}

TEST_CASE("bit budget turns huge values symbolic without losing the exponent") {
    EvalBudget tiny{256};
    Evaluation ev = bound(Family::kCfs, 3, 5, 2, tiny);
    CHECK_FALSE(ev.exact.has_value());
    CHECK(ev.overflow);
    REQUIRE(ev.exp_of_c.has_value());
    CHECK(*ev.exp_of_c == 2612);
    Evaluation small = bound(Family::kCfs, 3, 3, 2, tiny);
    REQUIRE(small.exact.has_value()); // 2^116 fits 256 bits
    CHECK(*small.exact == BigNat(1) << 116);
}

TEST_CASE("norm ordering ranks towers by height then top") {
    TowerNorm a = TowerNorm::from_exact(BigNat(1) << 100);
    TowerNorm b = TowerNorm::from_exact((BigNat(1) << 100) + 5);
    TowerNorm c = up_arrow_norm(2, 2, 9);
    CHECK(compare_norms(a, b) <= 0);
    CHECK(compare_norms(a, c) < 0);
    CHECK(compare_norms(c, a) > 0);
    CHECK(compare_norms(c, c) == 0);
}
