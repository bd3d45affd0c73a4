#pragma once

#include "ramsey/bignum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ramsey {

// Cap, in bits, on any exactly materialized value. Tower values overflow
// physical memory at tiny heights; everything beyond the budget is handled
// symbolically.
struct EvalBudget {
    uint64_t bits = 1ull << 20;
};

// default budget, honoring the RAMSEY_BIT_BUDGET environment variable
EvalBudget default_budget();

// c^e when the result fits the budget, nullopt otherwise
std::optional<BigNat> pow_checked(const BigNat& c, const BigNat& e,
                                  const EvalBudget& budget);

// Knuth arrow: c up^a k. Cases in order: a=0 -> ck; a=1 -> c^k; k=0 -> 1;
// else c up^{a-1} (c up^a (k-1)).
std::optional<BigNat> up_arrow(const BigNat& c, int a, const BigNat& k,
                               const EvalBudget& budget);

// TOW_c(b) = c^b; TOW_c(b1,...,bL) = c^(b1 * TOW_c(b2,...,bL))
std::optional<BigNat> tow(const BigNat& c, const std::vector<BigNat>& args,
                          const EvalBudget& budget);

// Normal form for ordering values far beyond exact range: lg applied h times
// brings the value down to top, kept within [1, 1e15). Doubles make this an
// ordering device, not an exact quantity; exact comparisons are used instead
// whenever both sides materialize.
struct TowerNorm {
    double height = 0;
    double top = 0;

    static TowerNorm from_exact(const BigNat& v);
    static TowerNorm from_double(double v);
    std::string render() const;
};

// -1, 0, +1 by (height, top) after lifting both to a common height
int compare_norms(const TowerNorm& a, const TowerNorm& b);

// helpers that build norms structurally
TowerNorm scale_norm(const TowerNorm& x, double s);       // s * value
TowerNorm pow_norm(double base, const TowerNorm& e);      // base^value
TowerNorm pow_int_norm(const TowerNorm& x, int e);        // value^e
TowerNorm tower_norm(double base, const TowerNorm& count); // base tower of height count
TowerNorm up_arrow_norm(int c, int a, const BigNat& k);
TowerNorm tow_norm(int c, const std::vector<double>& args);

// Tower rewrite identities: parts 2, 5, 7 are equalities, parts 1, 3, 4, 6
// are upper bounds. Base is 2 except parts 2, 3, 4, which hold for any c.
struct IdentityCheck {
    BigNat lhs;
    BigNat rhs;
    bool is_equality = false;
    bool holds = false;
};

struct IdentityBindings {
    std::vector<unsigned long> args; // b_1..b_L
    unsigned long b = 1;             // parts 2, 4, 6
    unsigned long delta = 0;         // parts 3, 4, 6
    int i_pos = 1;                   // part 1: replaced position, 1-based, < L
    int c = 2;                       // base for parts 2/3/4; count of ones for part 7
};

std::optional<IdentityCheck> tow_identity(int id, const IdentityBindings& bind,
                                          const EvalBudget& budget);

} // namespace ramsey
