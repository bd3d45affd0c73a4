#include "doctest.h"

#include "ramsey/coloring.hpp"

#include <cmath>
#include <sstream>

using namespace ramsey;

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(Coloring(0, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(Coloring(3, 2, 2), std::invalid_argument); // n < a
    CHECK_THROWS_AS(Coloring(2, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(Coloring(2, 5, 257), std::invalid_argument);
    Coloring ok(2, 5, 256);
    CHECK(ok.edge_count() == 10);
    CHECK(ok.bits_per_edge() == 8);
}

TEST_CASE("colors store and read back through both access paths") {
    Coloring col(3, 9, 5);
    uint64_t edges = col.edge_count();
    REQUIRE(edges == 84);
    for (uint64_t r = 0; r < edges; ++r)
        col.set_color_by_rank(r, static_cast<int>((r * 7 + 3) % 5));
    for (uint64_t r = 0; r < edges; ++r)
        CHECK(col.color_by_rank(r) == static_cast<int>((r * 7 + 3) % 5));
    // the edge path agrees with the rank path
    CHECK(col.color({1, 2, 3}) == 3);
    CHECK(col.color({3, 4, 5}) == col.color_by_rank(9));
}

TEST_CASE("straddled bit packing survives a full write-read cycle") {
    // 3 bits per edge with 84 edges forces many word-boundary straddles
    Coloring col(2, 25, 7);
    for (uint64_t r = 0; r < col.edge_count(); ++r)
        col.set_color_by_rank(r, static_cast<int>(r % 7));
    // overwrite out of order, then verify nothing bled into neighbors
    for (uint64_t r = 0; r < col.edge_count(); r += 3)
        col.set_color_by_rank(r, 6);
    for (uint64_t r = 0; r < col.edge_count(); ++r)
        CHECK(col.color_by_rank(r) ==
              (r % 3 == 0 ? 6 : static_cast<int>(r % 7)));
}

TEST_CASE("seeded generation is deterministic and seed-sensitive") {
    Coloring a = random_coloring(30, 3, 4, 42);
    Coloring b = random_coloring(30, 3, 4, 42);
    Coloring c = random_coloring(30, 3, 4, 43);
    CHECK(a.words() == b.words());
    CHECK(a.words() != c.words());
}

TEST_CASE("seeded colors are uniform across seeds") {
    // count color 0 over 100 seeds; a 5 sigma band around the binomial mean
    // keeps false alarms out while catching any biased sampler
    const int n = 16, a = 2, c = 3;
    const uint64_t per = binom_u64(n, a);
    uint64_t zeros = 0, total = 0;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        Coloring col = random_coloring(n, a, c, seed);
        for (uint64_t r = 0; r < per; ++r) zeros += col.color_by_rank(r) == 0;
        total += per;
    }
    double mean = static_cast<double>(total) / c;
    double sigma = std::sqrt(mean * (1.0 - 1.0 / c));
    CHECK(std::abs(static_cast<double>(zeros) - mean) < 5 * sigma);
}

TEST_CASE("text round trip is identical") {
    Coloring col = random_coloring(12, 3, 3, 7);
    std::ostringstream os;
    save_coloring_text(col, os);
    std::istringstream is(os.str());
    Coloring back = load_coloring_text(is);
    CHECK(back.a() == col.a());
    CHECK(back.n() == col.n());
    CHECK(back.c() == col.c());
    std::ostringstream os2;
    save_coloring_text(back, os2);
    CHECK(os.str() == os2.str());
}

TEST_CASE("binary round trip is bit-exact") {
    Coloring col = random_coloring(40, 2, 5, 99);
    std::ostringstream os(std::ios::binary);
    save_coloring_binary(col, os);
    std::istringstream is(os.str());
    Coloring back = load_coloring_binary(is);
    CHECK(back.words() == col.words());
    CHECK(back.n() == col.n());
}

TEST_CASE("format sniffing picks the right loader") {
    Coloring col = random_coloring(8, 2, 2, 1);
    std::ostringstream t, b(std::ios::binary);
    save_coloring_text(col, t);
    save_coloring_binary(col, b);
    std::istringstream ti(t.str()), bi(b.str());
    CHECK(load_coloring_any(ti).words() == col.words());
    CHECK(load_coloring_any(bi).words() == col.words());
}
