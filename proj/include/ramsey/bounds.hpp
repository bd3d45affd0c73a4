#pragma once

#include "ramsey/tower.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ramsey {

// Upper-bound families for R(a,k,c), one per proof route:
//   base             closed forms at a = 1 (exact) and a = 2
//   ramsey           c up^{a-1} (ck-c+1)
//   erdos_rado       stage-counting recurrence (squared form at a = 3)
//   erdos_rado_tower tower corollaries of the recurrence (2 colors only)
//   cfs              2^{ceil(B (k-1)^{1/2} 2^{2k})} and its c-color form (a = 3)
//   cfs_tower        tower corollaries seeded by the cfs form (a >= 3)
enum class Family {
    kBase,
    kRamsey,
    kErdosRado,
    kErdosRadoTower,
    kCfs,
    kCfsTower,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct Evaluation {
    Family family = Family::kBase;
    int a = 0, k = 0, c = 0;
    // full value, when it fits the bit budget
    std::optional<BigNat> exact;
    // when the bound has shape c^E + addend, E and the addend, so callers can
    // reason about bounds whose full value does not materialize
    std::optional<BigNat> exp_of_c;
    BigNat addend = 0;
    // ordering key for astronomically large values
    TowerNorm norm;
    // stable human-readable formula with parameters substituted
    std::string symbolic;
    // base at a=1 is the true Ramsey number, not merely an upper bound
    bool is_exact_ramsey = false;
    // exact evaluation was skipped because the value exceeds the bit budget
    bool overflow = false;
    // an unknown R value inside the formula was replaced by an upper bound
    bool surrogate = false;
    // the formula is only claimed for almost all k, and k is below a+3
    bool asymptotic_only = false;
};

// throws std::invalid_argument on family/parameter mismatch
Evaluation bound(Family f, int a, int k, int c,
                 const EvalBudget& budget = default_budget());

bool family_applies(Family f, int a, int k, int c);

// all applicable families, ordered smallest bound first (exact comparison
// when both sides materialize, tower-norm comparison otherwise)
std::vector<Evaluation> compare_bounds(int a, int k, int c,
                                       const EvalBudget& budget = default_budget());

} // namespace ramsey
