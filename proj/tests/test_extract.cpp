#include "doctest.h"

#include "ramsey/extract.hpp"
#include "ramsey/homog_search.hpp"
#include "ramsey/trace.hpp"
#include "ramsey/verify.hpp"

using namespace ramsey;

namespace {

Coloring constant_coloring(int a, int n, int c, int value) {
    Coloring col(a, n, c);
    for (uint64_t r = 0; r < col.edge_count(); ++r) col.set_color_by_rank(r, value);
    return col;
}

const Method kAll[] = {Method::kRamsey, Method::kErdosRado, Method::kCfs3,
                       Method::kCfsGeneral};

} // namespace

TEST_CASE("constant colorings yield a full-size set under every method") {
    for (Method m : kAll) {
        int a = (m == Method::kCfs3 || m == Method::kCfsGeneral) ? 3 : 2;
        Coloring col = constant_coloring(a, 14, 2, 1);
        ExtractResult r = extract(m, col, 4);
        REQUIRE(r.status == ExtractStatus::kOk);
        REQUIRE(static_cast<int>(r.set.size()) >= 4);
        CHECK(r.color == 1);
        auto h = is_homogeneous(col, r.set);
        REQUIRE(h.has_value());
        CHECK(*h == 1);
        CHECK(validate_run(col, r.trace).all_pass);
    }
}

TEST_CASE("exhaustive soundness at a = 2 on six points") {
    // every 2-coloring of the 15 pairs: the result must always be homogeneous
    // and the two pair methods must always certify at least a pair
    for (uint32_t bits = 0; bits < (1u << 15); ++bits) {
        Coloring col(2, 6, 2);
        for (uint64_t r = 0; r < 15; ++r)
            col.set_color_by_rank(r, (bits >> r) & 1u);
        for (Method m : {Method::kRamsey, Method::kErdosRado}) {
            ExtractResult res = extract(m, col, 3);
            REQUIRE(res.set.size() >= 2);
            if (res.set.size() >= 2) {
                auto h = is_homogeneous(col, res.set);
                REQUIRE(h.has_value());
                CHECK(*h == res.color);
            }
            if (res.status == ExtractStatus::kOk) CHECK(res.set.size() >= 3);
        }
    }
}

TEST_CASE("same seed, same trace, byte for byte") {
    for (Method m : kAll) {
        int a = (m == Method::kRamsey) ? 2 : 3;
        Coloring col = random_coloring(36, a, 2, 0xfeedbeef);
        ExtractResult r1 = extract(m, col, 3);
        ExtractResult r2 = extract(m, col, 3);
        CHECK(r1.trace.serialize() == r2.trace.serialize());
        CHECK(r1.set == r2.set);
        CHECK(r1.color == r2.color);
    }
}

TEST_CASE("the general fingerprint walk retraces the ternary one") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Coloring col = random_coloring(48, 3, 2, seed);
        ExtractResult s = extract_cfs3(col, 4);
        ExtractResult g = extract_cfs_general(col, 4);
        CHECK(s.set == g.set);
        CHECK(s.color == g.color);
        CHECK(s.status == g.status);
        std::string a = s.trace.serialize(), b = g.trace.serialize();
        // the method token is the single sanctioned difference
        size_t pa = a.find("cfs3");
        REQUIRE(pa != std::string::npos);
        a.replace(pa, 4, "cfs_general");
        CHECK(a == b);
    }
}

TEST_CASE("exhaustive inner search never shrinks the stepping result") {
    for (uint64_t seed = 2; seed <= 10; ++seed) {
        Coloring col = random_coloring(30, 2, 2, seed);
        ExtractOptions plain;
        ExtractOptions maxed;
        maxed.true_max_inner = true;
        ExtractResult a = extract_ramsey(col, 3, plain);
        ExtractResult b = extract_ramsey(col, 3, maxed);
        CHECK(b.set.size() >= a.set.size());
        if (!b.set.empty()) {
            CHECK(validate_run(col, b.trace).all_pass);
        }
    }
}

TEST_CASE("target below the arity is an input error") {
    Coloring col = random_coloring(10, 3, 2, 5);
    CHECK_THROWS_AS(extract_cfs3(col, 2), std::invalid_argument);
    CHECK_THROWS_AS(extract_erdos_rado(col, 1), std::invalid_argument);
    Coloring pairs = random_coloring(10, 2, 2, 5);
    CHECK_THROWS_AS(extract_ramsey(pairs, 1), std::invalid_argument);
}

TEST_CASE("the ternary fingerprint method rejects other arities") {
    Coloring pairs = random_coloring(12, 2, 2, 9);
    CHECK_THROWS_AS(extract_cfs3(pairs, 3), std::invalid_argument);
    // the general form accepts a = 4
    Coloring quads = random_coloring(16, 4, 2, 9);
    ExtractResult r = extract_cfs_general(quads, 4);
    CHECK(validate_run(quads, r.trace).all_pass);
}

TEST_CASE("every method validates across a small random grid") {
    for (Method m : kAll) {
        for (int a : {1, 2, 3}) {
            if ((m == Method::kCfs3 || m == Method::kCfsGeneral) && a != 3) continue;
            if (m == Method::kErdosRado && a < 2) continue;
            for (int c : {2, 3}) {
                for (uint64_t seed : {11ull, 12ull}) {
                    int n = 20 + static_cast<int>(seed);
                    Coloring col = random_coloring(n, a, c, seed);
                    ExtractResult r = extract(m, col, a + 1);
                    ValidateReport rep = validate_run(col, r.trace);
                    CHECK(rep.all_pass);
                    if (static_cast<int>(r.set.size()) >= a) {
                        auto h = is_homogeneous(col, r.set);
                        REQUIRE(h.has_value());
                        CHECK(*h == r.color);
                    }
                    if (r.status == ExtractStatus::kOk)
                        CHECK(static_cast<int>(r.set.size()) >= a + 1);
                }
            }
        }
    }
}

TEST_CASE("halving construction reaches its guarantee on seventeen points") {
    for (uint64_t seed = 100; seed < 110; ++seed) {
        Coloring col = random_coloring(17, 3, 2, seed);
        ExtractResult r = extract_erdos_rado(col, 3);
        REQUIRE(r.status == ExtractStatus::kOk);
        CHECK(r.set.size() >= 3);
        auto h = is_homogeneous(col, r.set);
        REQUIRE(h.has_value());
        CHECK(*h == r.color);
        CHECK(validate_run(col, r.trace).all_pass);
    }
}
