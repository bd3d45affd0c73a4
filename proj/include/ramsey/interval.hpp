#pragma once

#include "ramsey/bignum.hpp"

#include <optional>

namespace ramsey {

// Closed rational interval [lo, hi] guaranteed to contain the real value it
// stands for. All operations round outward; nothing here ever narrows an
// interval below the truth.
struct RatInterval {
    BigRat lo;
    BigRat hi;

    static RatInterval exact(const BigRat& v) { return {v, v}; }
    BigRat width() const { return hi - lo; }
    bool contains(const BigRat& v) const { return lo <= v && v <= hi; }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);

// integer power, exponent >= 0
RatInterval pow_interval(const RatInterval& a, unsigned long e);

// e as a partial sum of 1/i! plus a rigorous tail bound
RatInterval e_bracket(unsigned terms);

// pi via Machin's formula; arctan partial sums bracket the value because the
// series alternates with strictly decreasing terms for 0 < x < 1
RatInterval pi_bracket(unsigned terms);
RatInterval arctan_bracket(const BigRat& x, unsigned terms);

// sqrt(x) for x >= 0, outward within 2^-bits; exact for perfect squares
RatInterval sqrt_bracket(const BigRat& x, unsigned bits);
RatInterval sqrt_bracket(const RatInterval& x, unsigned bits);

// B_c = (e / sqrt(2 pi))^(c+1); the 2-color constant is B_2, roughly 1.28
RatInterval b_constant(int c, unsigned prec);

// ceil of the real number known to lie in x, if the interval pins it down
// (i.e. both endpoints have the same ceiling)
std::optional<BigNat> ceil_if_determined(const RatInterval& x);

} // namespace ramsey
