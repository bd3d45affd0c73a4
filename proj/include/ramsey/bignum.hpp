#pragma once

#include <gmpxx.h>
#include <cmath>
#include <cstdint>
#include <string>

namespace ramsey {

using BigNat = mpz_class;
using BigRat = mpq_class;

inline BigNat big_pow(const BigNat& base, unsigned long exp) {
    BigNat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigNat big_pow2(unsigned long exp) {
    BigNat r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, exp);
    return r;
}

// number of bits in |n|; 0 for n == 0
inline uint64_t bit_length(const BigNat& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline BigNat big_binomial(const BigNat& n, unsigned long k) {
    BigNat r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline BigNat big_binomial(unsigned long n, unsigned long k) {
    BigNat r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigNat big_factorial(unsigned long n) {
    BigNat r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// floor(sqrt(n)); n must be >= 0
inline BigNat big_isqrt(const BigNat& n) {
    BigNat r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const BigNat& n) {
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// true iff n == 2^j for some j >= 0
inline bool is_power_of_two(const BigNat& n) {
    if (n <= 0) return false;
    return mpz_scan1(n.get_mpz_t(), 0) == bit_length(n) - 1;
}

// exact log2 when n is a power of two; caller must check first
inline uint64_t exact_log2(const BigNat& n) {
    return bit_length(n) - 1;
}

// approximate log2 of a positive integer, safe for values far beyond
// double range (GMP splits into mantissa and binary exponent)
inline double log2_approx(const BigNat& n) {
    signed long ex;
    double m = mpz_get_d_2exp(&ex, n.get_mpz_t());
    return static_cast<double>(ex) + std::log2(m);
}

inline BigNat ceil_rat(const BigRat& q) {
    BigNat r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline BigNat floor_rat(const BigRat& q) {
    BigNat r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline std::string to_string(const BigNat& n) { return n.get_str(); }
inline std::string to_string(const BigRat& q) { return q.get_str(); }

} // namespace ramsey
