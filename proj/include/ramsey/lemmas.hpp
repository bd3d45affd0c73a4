#pragma once

#include "ramsey/bignum.hpp"
#include "ramsey/interval.hpp"

#include <optional>
#include <vector>

namespace ramsey {

// Sum of |s| over all strings s on an alphabet of c symbols in which every
// symbol appears at most k-1 times (and, when total_cap >= 0, |s| <= total_cap).
// Two independent routes: a closed multinomial sum and a brute enumeration.
// Both return nothing when their work budget is exceeded.
std::optional<BigNat> sigma_sum_exact(int c, int k, long total_cap = -1,
                                      unsigned long tuple_cap = 10'000'000);
std::optional<BigNat> sigma_sum_enumerated(int c, int k, long total_cap = -1,
                                           unsigned long string_cap = 10'000'000);

// Closed-form upper bounds for the string sum, evaluated with outward
// rounding so the quoted inequalities are rigorous.
struct SigmaBound {
    RatInterval closed_form;   // k^{(3-c)/2} * c^{c(k-1)+2} * (e/sqrt(2pi))^{c+1}
    BigNat closed_form_ceil;
    // two-color restatements (c == 2 only)
    std::optional<RatInterval> two_color;          // B * k^{1/2} * 2^{2k}
    std::optional<BigNat> two_color_ceil;
    std::optional<RatInterval> two_color_shifted;  // B * (k-1)^{1/2} * 2^{2k}
    std::optional<BigNat> two_color_shifted_ceil;
};
SigmaBound sigma_bound(int c, int k, unsigned prec_bits = 192);

// sum_{b=0}^{n} C(a+b, b) versus C(a+n+1, n), both exact
struct PascalCheck {
    BigNat lhs;
    BigNat rhs;
    bool equal;
};
PascalCheck pascal_second_identity(int a, int n);

// sqrt(2 pi n) (n/e)^n <= n! <= e sqrt(n) (n/e)^n, brackets outward-rounded
struct StirlingBracket {
    RatInterval lower;
    BigNat factorial;
    RatInterval upper;
    bool verified; // lower.hi <= n! <= upper.lo, so the chain is rigorous
};
StirlingBracket stirling_bracket(int n, unsigned prec_bits = 192);

// Sum of edge counts over every c-colored complete (a-2)-uniform hypergraph
// on a vertex set {1..m} that has no homogeneous set of size k-1, summed over
// all m.  The scan stops at the first m where no coloring qualifies (all
// larger m inherit a homogeneous set by restriction).
struct HyperEdgeSum {
    BigNat total;
    int forced_at;            // least m where every coloring is disqualified
    std::vector<BigNat> per_m; // contribution of m = 1 .. forced_at
};
std::optional<HyperEdgeSum> hyper_edge_sum_exact(int a, int c, int k,
                                                 unsigned long graph_cap = 10'000'000);

// r^{a-1} * c^{r^{a-2}}: dominates the exact sum whenever r bounds the least
// forcing m above
std::optional<BigNat> hyper_edge_sum_bound(int a, int c, int r);

} // namespace ramsey
