#include "doctest.h"

#include "ramsey/coloring.hpp"
#include "ramsey/trace.hpp"

#include <sstream>

using namespace ramsey;

TEST_CASE("text coloring grammar") {
    // header "a n c", one colex-ordered line per edge, trailing color
    Coloring col(2, 3, 2);
    col.set_color({1, 3}, 1);
    std::ostringstream os;
    save_coloring_text(col, os);
    CHECK(os.str() == "2 3 2\n1 2 0\n1 3 1\n2 3 0\n");
}

TEST_CASE("text parse rejections") {
    auto load = [](const std::string& s) {
        std::istringstream is(s);
        return load_coloring_text(is);
    };
    CHECK_THROWS_WITH_AS(load("nope"), doctest::Contains("bad header"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(load("2 3 2\n1 2 0\n1 3 1\n"),
                         doctest::Contains("missing edges"), std::runtime_error);
    CHECK_THROWS_WITH_AS(load("2 3 2\n1 2 0\n1 3 1\n2 3 2\n"),
                         doctest::Contains("color out of range"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(load("2 3 2\n1 2 0\n3 1 1\n2 3 0\n"),
                         doctest::Contains("must increase"), std::runtime_error);
    CHECK_THROWS_WITH_AS(load("2 3 2\n1 2 0\n1 4 1\n2 3 0\n"),
                         doctest::Contains("out of range"), std::runtime_error);
    CHECK_THROWS_WITH_AS(load("2 3 2\n1 2 0\n1 3 1\n1 3 0\n2 3 0\n"),
                         doctest::Contains("duplicate edge"), std::runtime_error);
    // whitespace is free-form, so a missing color only shows at end of input
    CHECK_THROWS_WITH_AS(load("2 3 2\n1 2 0\n2 3 0\n1 3"),
                         doctest::Contains("missing color"), std::runtime_error);
}

TEST_CASE("binary rejections") {
    Coloring col = random_coloring(6, 2, 2, 5);
    std::ostringstream os(std::ios::binary);
    save_coloring_binary(col, os);
    std::string good = os.str();

    std::string bad_magic = good;
    bad_magic[0] = 'X';
    std::istringstream m(bad_magic);
    CHECK_THROWS_WITH_AS(load_coloring_binary(m), doctest::Contains("magic"),
                         std::runtime_error);

    std::string truncated = good.substr(0, good.size() - 3);
    std::istringstream t(truncated);
    CHECK_THROWS_AS(load_coloring_binary(t), std::runtime_error);
}

TEST_CASE("trace serialization round trips byte for byte") {
    Trace t;
    t.push("meta").add("method", "demo").add("a", 3).add("k", 4);
    t.push("stage").add("i", 1).add("x", 2).add("vb", 17);
    t.push("event")
        .add("kind", "halve")
        .add("A", "1.3")
        .add("col", 0)
        .add("v", "2,5,9");
    t.push("result").add("h", "-").add("color", "-").add("status", "ok");
    std::string s1 = t.serialize();
    Trace back = Trace::parse_string(s1);
    CHECK(back.serialize() == s1);
    CHECK(back.recs.size() == 4);
    CHECK(back.recs[2].get("A") == "1.3");
    // field order is part of the format
    CHECK(back.recs[0].kv[0].first == "method");
    CHECK(back.recs[0].kv[2].first == "k");
}

TEST_CASE("trace field editing keeps everything else intact") {
    Trace t;
    t.push("php").add("color", 1).add("stages", "1,4,6");
    std::string before = t.serialize();
    Trace u = Trace::parse_string(before);
    u.recs[0].set("color", "0");
    std::string after = u.serialize();
    CHECK(after != before);
    u.recs[0].set("color", "1");
    CHECK(u.serialize() == before);
}

TEST_CASE("integer list helpers") {
    CHECK(join_ints({}) == "-");
    CHECK(join_ints({4}) == "4");
    CHECK(join_ints({1, 2, 3}) == "1,2,3");
    CHECK(join_ints({1, 2, 3}, '.') == "1.2.3");
    CHECK(split_ints("-") == std::vector<int>{});
    CHECK(split_ints("7") == std::vector<int>{7});
    CHECK(split_ints("1.2.3", '.') == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(split_ints("1,x,3"), std::exception);
}

TEST_CASE("geti parses and rejects") {
    TraceRec r("stage");
    r.add("i", 12);
    r.add("x", "abc");
    CHECK(r.geti("i") == 12);
    CHECK_THROWS_AS(r.geti("x"), std::exception);
    CHECK_THROWS_AS(r.geti("missing"), std::exception);
}
