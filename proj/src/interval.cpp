#include "ramsey/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    BigRat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RatInterval pow_interval(const RatInterval& a, unsigned long e) {
    RatInterval r = RatInterval::exact(BigRat(1));
    RatInterval base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

RatInterval e_bracket(unsigned terms) {
    if (terms < 2) terms = 2;
    BigRat sum = 0;
    BigNat fact = 1;
    for (unsigned i = 0; i <= terms; ++i) {
        if (i > 0) fact *= i;
        sum += BigRat(1) / BigRat(fact);
    }
    // tail: sum_{i>N} 1/i! < (N+2) / ((N+1)! * (N+1))
    BigNat next_fact = fact * (terms + 1);
    BigRat tail = BigRat(terms + 2) / (BigRat(next_fact) * BigRat(terms + 1));
    return {sum, sum + tail};
}

RatInterval arctan_bracket(const BigRat& x, unsigned terms) {
    if (x <= 0 || x >= 1)
        throw std::invalid_argument("arctan_bracket needs 0 < x < 1");
    // partial sums alternate around the limit; take two consecutive ones
    BigRat s = 0;
    BigRat xp = x;
    BigRat x2 = x * x;
    BigRat prev = 0;
    for (unsigned j = 0; j <= terms; ++j) {
        prev = s;
        BigRat term = xp / BigRat(2 * j + 1);
        if (j % 2 == 0) s += term; else s -= term;
        xp *= x2;
    }
    return {std::min(prev, s), std::max(prev, s)};
}

RatInterval pi_bracket(unsigned terms) {
    RatInterval a5 = arctan_bracket(BigRat(1, 5), terms);
    RatInterval a239 = arctan_bracket(BigRat(1, 239), terms);
    RatInterval sixteen = RatInterval::exact(BigRat(16));
    RatInterval four = RatInterval::exact(BigRat(4));
    return sixteen * a5 - four * a239;
}

RatInterval sqrt_bracket(const BigRat& x, unsigned bits) {
    if (x < 0) throw std::invalid_argument("sqrt_bracket needs x >= 0");
    BigNat p = x.get_num();
    BigNat q = x.get_den();
    BigNat pq = p * q;
    if (is_perfect_square(pq)) {
        BigRat r = BigRat(big_isqrt(pq)) / BigRat(q);
        r.canonicalize();
        return RatInterval::exact(r);
    }
    // sqrt(p/q) = sqrt(pq)/q; scale by 4^bits and take integer sqrt
    BigNat scaled = pq << (2 * bits);
    BigNat s = big_isqrt(scaled);
    BigRat denom = BigRat(q) * BigRat(big_pow2(bits));
    BigRat lo = BigRat(s) / denom;
    BigRat hi = BigRat(s + 1) / denom;
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

RatInterval sqrt_bracket(const RatInterval& x, unsigned bits) {
    RatInterval lo = sqrt_bracket(x.lo, bits);
    RatInterval hi = sqrt_bracket(x.hi, bits);
    return {lo.lo, hi.hi};
}

RatInterval b_constant(int c, unsigned prec) {
    if (c < 2) throw std::invalid_argument("b_constant needs c >= 2");
    RatInterval e = e_bracket(prec);
    RatInterval pi = pi_bracket(prec);
    RatInterval two_pi = RatInterval::exact(BigRat(2)) * pi;
    RatInterval root = sqrt_bracket(two_pi, 8 * prec);
    // e / sqrt(2 pi), all quantities positive
    RatInterval ratio = {e.lo / root.hi, e.hi / root.lo};
    return pow_interval(ratio, static_cast<unsigned long>(c) + 1);
}

std::optional<BigNat> ceil_if_determined(const RatInterval& x) {
    BigNat clo = ceil_rat(x.lo);
    BigNat chi = ceil_rat(x.hi);
    if (clo == chi) return clo;
    return std::nullopt;
}

} // namespace ramsey
