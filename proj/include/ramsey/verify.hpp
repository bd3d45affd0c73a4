#pragma once

#include "ramsey/coloring.hpp"
#include "ramsey/trace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ramsey {

// One re-derived law of a recorded run. A law fails with the first
// counterexample spelled out; it is skipped only when the probe budget died
// before it could be settled.
struct LawCheck {
    enum Result { kPass, kFail, kSkipped };
    std::string law;
    Result result = kPass;
    std::string detail;
};

struct ValidateReport {
    bool all_pass = true; // no law failed (skips are not failures)
    std::vector<LawCheck> laws;
    uint64_t work = 0;
    std::string render() const;
};

// Replays a run record against the coloring it claims to describe and
// re-checks every construction law independently of the extractor code:
// pool evolution, majority classes, sweep order and qualification,
// fingerprint bookkeeping, stop rule, pigeonhole, and final assembly.
// Throws std::invalid_argument on structurally malformed traces.
ValidateReport validate_run(const Coloring& col, const Trace& trace,
                            uint64_t budget = 200'000'000);

struct WitnessCheck {
    enum Status { kConfirmed, kRefuted, kIndeterminate };
    Status status = kIndeterminate;
    std::vector<int> homog; // a homogeneous k-set when refuted
    int color = -1;
    uint64_t work = 0;
};

// true lower-bound witness test: confirmed iff no homogeneous k-set exists
WitnessCheck check_witness(const Coloring& col, int k,
                           uint64_t budget = 100'000'000);

struct RamseyQuery {
    int a = 2, k = 3, c = 2;
    int n_max = 64;
    uint64_t budget = 100'000'000; // colorings enumerated across the whole scan
};

struct BruteForceResult {
    bool exact = false;
    int value = -1;   // least n forcing a homogeneous k-set, when exact
    int lo = -1;      // otherwise the scan proved R >= lo
    int hi = -1;      // -1: open above (budget or ceiling stopped the scan)
    bool budget_hit = false; // the scan stopped on its budget, not on n_max
    std::optional<Coloring> witness; // homogeneous-free coloring one below
    uint64_t colorings = 0;
    std::string note;
};

// Exhaustive scan over n, enumerating every coloring with the first edge
// pinned to color 0 (color swaps preserve homogeneity, so one representative
// per orbit of that swap suffices).
BruteForceResult brute_force_ramsey(const RamseyQuery& q);

} // namespace ramsey
