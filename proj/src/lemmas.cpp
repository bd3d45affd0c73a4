#include "ramsey/lemmas.hpp"

#include "ramsey/coloring.hpp"
#include "ramsey/combinatorics.hpp"
#include "ramsey/homog_search.hpp"
#include "ramsey/tower.hpp"

#include <stdexcept>

namespace ramsey {

namespace {

void check_sigma_args(int c, int k) {
    if (c < 1) throw std::invalid_argument("sigma_sum: c must be >= 1");
    if (k < 1) throw std::invalid_argument("sigma_sum: k must be >= 1");
}

BigRat rat_ipow(const BigRat& x, long e) {
    unsigned long m = static_cast<unsigned long>(e >= 0 ? e : -e);
    BigNat np = big_pow(BigNat(x.get_num()), m);
    BigNat dp = big_pow(BigNat(x.get_den()), m);
    BigRat r = (e >= 0) ? BigRat(np, dp) : BigRat(dp, np);
    r.canonicalize();
    return r;
}

RatInterval invert(const RatInterval& x) {
    if (!(x.lo > 0)) throw std::invalid_argument("invert: interval must be positive");
    return {BigRat(1) / x.hi, BigRat(1) / x.lo};
}

} // namespace

std::optional<BigNat> sigma_sum_exact(int c, int k, long total_cap,
                                      unsigned long tuple_cap) {
    check_sigma_args(c, k);
    if (static_cast<long>(c) * k > 64) return std::nullopt;
    // tuple count is k^c; keep the odometer within budget
    double est = std::pow(static_cast<double>(k), c);
    if (est > static_cast<double>(tuple_cap)) return std::nullopt;

    std::vector<int> j(static_cast<size_t>(c), 0);
    BigNat sum = 0;
    for (;;) {
        long s = 0;
        for (int v : j) s += v;
        if (total_cap < 0 || s <= total_cap) {
            BigNat term = big_factorial(static_cast<unsigned long>(s)) * s;
            for (int v : j) term /= big_factorial(static_cast<unsigned long>(v));
            sum += term;
        }
        size_t i = 0;
        while (i < j.size() && j[i] == k - 1) j[i++] = 0;
        if (i == j.size()) break;
        ++j[i];
    }
    return sum;
}

namespace {

// depth-first over strings; every node is itself a qualifying string
bool enumerate_strings(int c, int k, long total_cap, int len,
                       std::vector<int>& counts, unsigned long& left,
                       BigNat& sum) {
    if (left == 0) return false;
    --left;
    sum += len;
    if (total_cap >= 0 && len >= total_cap) return true;
    for (int i = 0; i < c; ++i) {
        if (counts[static_cast<size_t>(i)] == k - 1) continue;
        ++counts[static_cast<size_t>(i)];
        bool ok = enumerate_strings(c, k, total_cap, len + 1, counts, left, sum);
        --counts[static_cast<size_t>(i)];
        if (!ok) return false;
    }
    return true;
}

} // namespace

std::optional<BigNat> sigma_sum_enumerated(int c, int k, long total_cap,
                                           unsigned long string_cap) {
    check_sigma_args(c, k);
    std::vector<int> counts(static_cast<size_t>(c), 0);
    unsigned long left = string_cap;
    BigNat sum = 0;
    if (!enumerate_strings(c, k, total_cap, 0, counts, left, sum))
        return std::nullopt;
    return sum;
}

SigmaBound sigma_bound(int c, int k, unsigned prec_bits) {
    if (c < 2) throw std::invalid_argument("sigma_bound: c must be >= 2");
    if (k < 2) throw std::invalid_argument("sigma_bound: k must be >= 2");
    SigmaBound out;

    // k^{(3-c)/2}: split into an exact integer power and at most one sqrt
    int p = 3 - c;
    RatInterval kpow = RatInterval::exact(rat_ipow(BigRat(k), p / 2));
    if (p % 2 != 0) {
        RatInterval root = sqrt_bracket(BigRat(k), prec_bits);
        kpow = (p > 0) ? kpow * root : kpow * invert(root);
    }
    long e = static_cast<long>(c) * (k - 1) + 2;
    RatInterval cpow = RatInterval::exact(rat_ipow(BigRat(c), e));
    RatInterval b = b_constant(c, prec_bits);
    out.closed_form = kpow * cpow * b;
    out.closed_form_ceil = ceil_rat(out.closed_form.hi);

    if (c == 2) {
        RatInterval b2 = b_constant(2, prec_bits);
        RatInterval four_k = RatInterval::exact(rat_ipow(BigRat(2), 2l * k));
        RatInterval t = b2 * sqrt_bracket(BigRat(k), prec_bits) * four_k;
        out.two_color = t;
        out.two_color_ceil = ceil_rat(t.hi);
        RatInterval ts = b2 * sqrt_bracket(BigRat(k - 1), prec_bits) * four_k;
        out.two_color_shifted = ts;
        out.two_color_shifted_ceil = ceil_rat(ts.hi);
    }
    return out;
}

PascalCheck pascal_second_identity(int a, int n) {
    if (a < 0 || n < 0)
        throw std::invalid_argument("pascal_second_identity: a, n must be >= 0");
    PascalCheck out;
    out.lhs = 0;
    for (int b = 0; b <= n; ++b)
        out.lhs += big_binomial(static_cast<unsigned long>(a + b),
                                static_cast<unsigned long>(b));
    out.rhs = big_binomial(static_cast<unsigned long>(a + n + 1),
                           static_cast<unsigned long>(n));
    out.equal = (out.lhs == out.rhs);
    return out;
}

StirlingBracket stirling_bracket(int n, unsigned prec_bits) {
    if (n < 1) throw std::invalid_argument("stirling_bracket: n must be >= 1");
    unsigned terms = prec_bits / 4 + 16;
    RatInterval e_iv = e_bracket(terms);
    RatInterval pi_iv = pi_bracket(terms);
    RatInterval n_pow = RatInterval::exact(
        BigRat(big_pow(BigNat(n), static_cast<unsigned long>(n))));

    StirlingBracket out;
    out.factorial = big_factorial(static_cast<unsigned long>(n));
    out.lower = sqrt_bracket(pi_iv * RatInterval::exact(BigRat(2 * n)), prec_bits)
              * n_pow
              * invert(pow_interval(e_iv, static_cast<unsigned long>(n)));
    // written as sqrt(n) n^n e^{1-n} so n = 1 evaluates to exactly one
    out.upper = sqrt_bracket(BigRat(n), prec_bits)
              * n_pow
              * invert(pow_interval(e_iv, static_cast<unsigned long>(n - 1)));
    BigRat f(out.factorial);
    out.verified = (out.lower.hi <= f) && (f <= out.upper.lo);
    return out;
}

namespace {

bool next_coloring(Coloring& col) {
    for (uint64_t rk = 0; rk < col.edge_count(); ++rk) {
        int v = col.color_by_rank(rk);
        if (v + 1 < col.c()) {
            col.set_color_by_rank(rk, v + 1);
            return true;
        }
        col.set_color_by_rank(rk, 0);
    }
    return false;
}

bool has_homog_set(const Coloring& col, int t) {
    std::vector<int> verts(static_cast<size_t>(col.n()));
    for (int i = 0; i < col.n(); ++i) verts[static_cast<size_t>(i)] = i + 1;
    bool found = false;
    for_each_subset(verts, t, [&](const std::vector<int>& H) {
        if (is_homogeneous(col, H)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

} // namespace

std::optional<HyperEdgeSum> hyper_edge_sum_exact(int a, int c, int k,
                                                 unsigned long graph_cap) {
    int r = a - 2;
    int t = k - 1;
    if (r < 1) throw std::invalid_argument("hyper_edge_sum_exact: a must be >= 3");
    if (c < 1) throw std::invalid_argument("hyper_edge_sum_exact: c must be >= 1");
    if (t < r)
        throw std::invalid_argument("hyper_edge_sum_exact: k-1 below the arity");

    HyperEdgeSum out;
    out.total = 0;
    unsigned long used = 0;
    for (int m = 1;; ++m) {
        if (m < r) {
            // single empty coloring; no t-set fits in [m], so it qualifies
            out.per_m.push_back(BigNat(0));
            if (++used > graph_cap) return std::nullopt;
            continue;
        }
        uint64_t edges = binom_u64(static_cast<uint64_t>(m),
                                   static_cast<uint64_t>(r));
        double est = std::pow(static_cast<double>(c), static_cast<double>(edges));
        if (est > static_cast<double>(graph_cap - used)) return std::nullopt;

        Coloring col(r, m, c);
        uint64_t qualifying = 0;
        do {
            ++used;
            if (m < t || !has_homog_set(col, t)) ++qualifying;
        } while (next_coloring(col));

        out.per_m.push_back(BigNat(qualifying) * edges);
        out.total += out.per_m.back();
        if (qualifying == 0) {
            out.forced_at = m;
            return out;
        }
    }
}

std::optional<BigNat> hyper_edge_sum_bound(int a, int c, int r) {
    if (a < 3) throw std::invalid_argument("hyper_edge_sum_bound: a must be >= 3");
    if (c < 2) throw std::invalid_argument("hyper_edge_sum_bound: c must be >= 2");
    if (r < 1) throw std::invalid_argument("hyper_edge_sum_bound: r must be >= 1");
    BigNat e = big_pow(BigNat(r), static_cast<unsigned long>(a - 2));
    auto p = pow_checked(c, e, default_budget());
    if (!p) return std::nullopt;
    return big_pow(BigNat(r), static_cast<unsigned long>(a - 1)) * *p;
}

} // namespace ramsey
