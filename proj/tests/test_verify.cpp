#include "doctest.h"

#include "ramsey/extract.hpp"
#include "ramsey/verify.hpp"

using namespace ramsey;

namespace {

// flip one field of the first record matching kind that carries it
bool tamper(Trace& t, const std::string& kind, const std::string& key,
            const std::string& value) {
    for (TraceRec& r : t.recs)
        if (r.kind == kind && r.has(key)) {
            r.set(key, value);
            return true;
        }
    return false;
}

} // namespace

TEST_CASE("exhaustive scan pins") {
    {
        RamseyQuery q;
        q.a = 2, q.k = 3, q.c = 2, q.n_max = 8;
        BruteForceResult r = brute_force_ramsey(q);
        REQUIRE(r.exact);
        CHECK(r.value == 6);
        CHECK(r.colorings == 16512);
        CHECK_FALSE(r.budget_hit);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->n() == 5);
        CHECK(check_witness(*r.witness, 3).status == WitnessCheck::kConfirmed);
    }
    {
        RamseyQuery q;
        q.a = 1, q.k = 3, q.c = 2, q.n_max = 8;
        CHECK(brute_force_ramsey(q).value == 5);
    }
    {
        RamseyQuery q;
        q.a = 1, q.k = 4, q.c = 3, q.n_max = 12;
        CHECK(brute_force_ramsey(q).value == 10);
    }
    {
        // k = a: any a vertices form one edge, vacuously homogeneous
        RamseyQuery q;
        q.a = 4, q.k = 4, q.c = 2, q.n_max = 6;
        BruteForceResult r = brute_force_ramsey(q);
        REQUIRE(r.exact);
        CHECK(r.value == 4);
        CHECK_FALSE(r.witness.has_value()); // n = 3 carries no 4-edges at all
    }
}

TEST_CASE("exhaustive scan stops honestly on its budget") {
    RamseyQuery q;
    q.a = 2, q.k = 3, q.c = 2, q.n_max = 8;
    q.budget = 100;
    BruteForceResult r = brute_force_ramsey(q);
    CHECK_FALSE(r.exact);
    CHECK(r.budget_hit);
}

TEST_CASE("witness checks distinguish refuted from confirmed") {
    // all-same coloring on 6 points has a homogeneous triple everywhere
    Coloring bad(2, 6, 2);
    WitnessCheck wc = check_witness(bad, 3);
    CHECK(wc.status == WitnessCheck::kRefuted);
    REQUIRE(wc.homog.size() == 3);
    CHECK(wc.homog == std::vector<int>{1, 2, 3});
    CHECK(wc.color == 0);
}

TEST_CASE("honest traces pass validation for every method") {
    for (Method m : {Method::kRamsey, Method::kErdosRado, Method::kCfs3,
                     Method::kCfsGeneral}) {
        int a = (m == Method::kRamsey) ? 2 : 3;
        Coloring col = random_coloring(33, a, 2, 0xabcdef);
        ExtractResult r = extract(m, col, 3);
        ValidateReport rep = validate_run(col, r.trace);
        CHECK(rep.all_pass);
        for (const LawCheck& lc : rep.laws)
            CHECK(lc.result != LawCheck::kFail);
    }
}

TEST_CASE("forged records are flagged") {
    Coloring col = random_coloring(17, 3, 2, 424242);
    ExtractResult r = extract_erdos_rado(col, 3);
    REQUIRE(validate_run(col, r.trace).all_pass);

    SUBCASE("halving event color") {
        Trace t = r.trace;
        const TraceRec* ev = t.find("event");
        REQUIRE(ev != nullptr);
        long long col_was = ev->geti("col");
        REQUIRE(tamper(t, "event", "col", std::to_string(1 - col_was)));
        CHECK_FALSE(validate_run(col, t).all_pass);
    }
    SUBCASE("result set") {
        Trace t = r.trace;
        const TraceRec* res = t.find("result");
        REQUIRE(res != nullptr);
        std::vector<int> h = split_ints(*res->get("h"));
        REQUIRE(!h.empty());
        // move one element to a free slot, keeping the set strictly increasing
        bool moved = false;
        for (size_t i = 0; i < h.size() && !moved; ++i) {
            int room = (i + 1 < h.size()) ? h[i + 1] : col.n() + 1;
            if (h[i] + 1 < room) h[i] += 1, moved = true;
            else if (h[i] - 1 > (i > 0 ? h[i - 1] : 0)) h[i] -= 1, moved = true;
        }
        REQUIRE(moved);
        REQUIRE(tamper(t, "result", "h", join_ints(h)));
        CHECK_FALSE(validate_run(col, t).all_pass);
    }
    SUBCASE("claimed status") {
        Trace t = r.trace;
        REQUIRE(tamper(t, "result", "status", "below_target"));
        CHECK_FALSE(validate_run(col, t).all_pass);
    }
    SUBCASE("survivor pool of a stage") {
        Trace t = r.trace;
        const TraceRec* ev = t.find("event");
        REQUIRE(ev != nullptr);
        std::vector<int> v = split_ints(*ev->get("v"));
        REQUIRE(!v.empty());
        v.pop_back();
        REQUIRE(tamper(t, "event", "v", join_ints(v)));
        CHECK_FALSE(validate_run(col, t).all_pass);
    }
}

TEST_CASE("forged pigeonhole class is flagged on the stepping method") {
    Coloring col = random_coloring(40, 2, 2, 777);
    ExtractResult r = extract_ramsey(col, 3);
    REQUIRE(validate_run(col, r.trace).all_pass);
    Trace t = r.trace;
    const TraceRec* php = t.find("php");
    REQUIRE(php != nullptr);
    long long was = php->geti("col");
    REQUIRE(tamper(t, "php", "col", std::to_string(1 - was)));
    CHECK_FALSE(validate_run(col, t).all_pass);
}

TEST_CASE("structurally broken traces throw instead of passing") {
    Coloring col = random_coloring(17, 3, 2, 31337);
    ExtractResult r = extract_erdos_rado(col, 3);

    // drop the result record entirely
    Trace cut = r.trace;
    while (!cut.recs.empty() && cut.recs.back().kind != "result") cut.recs.pop_back();
    REQUIRE(!cut.recs.empty());
    cut.recs.pop_back();
    CHECK_THROWS_AS(validate_run(col, cut), std::invalid_argument);

    // unparseable integer field
    Trace garbled = r.trace;
    REQUIRE(tamper(garbled, "meta", "n", "banana"));
    CHECK_THROWS_AS(validate_run(col, garbled), std::invalid_argument);

    // records after the result record
    Trace trailing = r.trace;
    trailing.push("stage").add("i", 99);
    CHECK_THROWS_AS(validate_run(col, trailing), std::invalid_argument);
}

TEST_CASE("a starved validator skips laws but never fails them") {
    Coloring col = random_coloring(33, 3, 2, 99);
    ExtractResult r = extract_cfs3(col, 3);
    ValidateReport rep = validate_run(col, r.trace, 1);
    CHECK(rep.all_pass);
    bool skipped = false;
    for (const LawCheck& lc : rep.laws) skipped |= (lc.result == LawCheck::kSkipped);
    CHECK(skipped);
}

TEST_CASE("validation rejects a trace replayed against the wrong coloring") {
    Coloring col = random_coloring(17, 3, 2, 1001);
    Coloring other = random_coloring(17, 3, 2, 1002);
    ExtractResult r = extract_erdos_rado(col, 3);
    REQUIRE(validate_run(col, r.trace).all_pass);
    CHECK_FALSE(validate_run(other, r.trace).all_pass);
}
