#include "ramsey/tower.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ramsey {

EvalBudget default_budget() {
    EvalBudget b;
    if (const char* env = std::getenv("RAMSEY_BIT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 64 && v <= (1ull << 32)) b.bits = v;
    }
    return b;
}

std::optional<BigNat> pow_checked(const BigNat& c, const BigNat& e,
                                  const EvalBudget& budget) {
    if (c < 1 || e < 0) throw std::invalid_argument("pow_checked: bad operands");
    if (c == 1) return BigNat(1);
    if (e == 0) return BigNat(1);
    // lg(c) >= 1 here, so e alone already bounds the result's bit count
    if (e > budget.bits) return std::nullopt;
    double est = e.get_d() * std::log2(c.get_d());
    if (est > static_cast<double>(budget.bits)) return std::nullopt;
    return big_pow(c, e.get_ui());
}

std::optional<BigNat> up_arrow(const BigNat& c, int a, const BigNat& k,
                               const EvalBudget& budget) {
    if (c < 2) throw std::invalid_argument("up_arrow: c must be >= 2");
    if (a < 0 || k < 0) throw std::invalid_argument("up_arrow: negative input");
    if (a == 0) return BigNat(c * k);
    if (a == 1) return pow_checked(c, k, budget);
    if (k == 0) return BigNat(1);
    // c up^a k unfolds to k applications of c up^{a-1} starting from 1;
    // values strictly grow, so overflow cuts the loop off early
    BigNat v = 1;
    for (BigNat i = 0; i < k; ++i) {
        auto nv = up_arrow(c, a - 1, v, budget);
        if (!nv) return std::nullopt;
        v = std::move(*nv);
    }
    return v;
}

std::optional<BigNat> tow(const BigNat& c, const std::vector<BigNat>& args,
                          const EvalBudget& budget) {
    if (c < 2) throw std::invalid_argument("tow: c must be >= 2");
    if (args.empty()) throw std::invalid_argument("tow: needs at least one argument");
    for (const BigNat& b : args)
        if (b < 1) throw std::invalid_argument("tow: arguments must be positive");
    BigNat v = 1;
    for (size_t j = args.size(); j-- > 0;) {
        auto nv = pow_checked(c, args[j] * v, budget);
        if (!nv) return std::nullopt;
        v = std::move(*nv);
    }
    return v;
}

namespace {

constexpr double kTopWindow = 1e15;

} // namespace

TowerNorm TowerNorm::from_double(double v) {
    TowerNorm n{0, v};
    while (n.top >= kTopWindow) {
        n.top = std::log2(n.top);
        n.height += 1;
    }
    return n;
}

TowerNorm TowerNorm::from_exact(const BigNat& v) {
    if (v <= 0) return {0, v.get_d()};
    if (bit_length(v) <= 50) return from_double(v.get_d());
    TowerNorm n = from_double(log2_approx(v));
    n.height += 1;
    return n;
}

std::string TowerNorm::render() const {
    std::ostringstream out;
    if (height == 0) {
        out << top;
        return out.str();
    }
    out << "lg^(" << height << ") = " << top;
    return out.str();
}

TowerNorm scale_norm(const TowerNorm& x, double s) {
    if (s <= 0) throw std::invalid_argument("scale_norm: scale must be positive");
    if (x.height == 0) return TowerNorm::from_double(x.top * s);
    if (x.height == 1) return {1, x.top + std::log2(s)};
    return x; // additive shift vanishes below double precision at depth >= 2
}

TowerNorm pow_norm(double base, const TowerNorm& e) {
    TowerNorm lg = scale_norm(e, std::log2(base));
    return {lg.height + 1, lg.top};
}

TowerNorm pow_int_norm(const TowerNorm& x, int e) {
    if (e < 1) throw std::invalid_argument("pow_int_norm: exponent must be positive");
    if (x.height == 0) {
        double l = e * std::log2(x.top);
        if (l < 50) return TowerNorm::from_double(std::pow(x.top, e));
        return {1, l};
    }
    TowerNorm lg = scale_norm({x.height - 1, x.top}, static_cast<double>(e));
    return {lg.height + 1, lg.top};
}

TowerNorm tower_norm(double base, const TowerNorm& count) {
    double m;
    if (count.height == 0) m = count.top;
    else if (count.height == 1 && count.top < 1000) m = std::exp2(count.top);
    else m = std::numeric_limits<double>::infinity();

    if (m < 1) return TowerNorm::from_double(1);
    if (m <= 64) {
        TowerNorm v = TowerNorm::from_double(base);
        for (int i = 1; i < static_cast<int>(m); ++i) v = pow_norm(base, v);
        return v;
    }
    return {m - 1, base};
}

namespace {

// norm of c up^level (count)
TowerNorm up_apply(int c, int level, const TowerNorm& count) {
    if (level == 0) return scale_norm(count, static_cast<double>(c));
    if (level == 1) return pow_norm(c, count);
    if (level == 2) return tower_norm(c, count);
    if (count.height > 0 || count.top > 20)
        return {std::numeric_limits<double>::infinity(), static_cast<double>(c)};
    TowerNorm v = TowerNorm::from_double(1);
    for (int i = 0; i < static_cast<int>(count.top); ++i) {
        v = up_apply(c, level - 1, v);
        if (std::isinf(v.height)) break;
    }
    return v;
}

} // namespace

TowerNorm up_arrow_norm(int c, int a, const BigNat& k) {
    if (k == 0 && a != 0) return TowerNorm::from_double(1);
    return up_apply(c, a, TowerNorm::from_exact(k));
}

TowerNorm tow_norm(int c, const std::vector<double>& args) {
    TowerNorm v = TowerNorm::from_double(1);
    for (size_t j = args.size(); j-- > 0;)
        v = pow_norm(c, scale_norm(v, args[j]));
    return v;
}

int compare_norms(const TowerNorm& a, const TowerNorm& b) {
    if (std::isinf(a.height) || std::isinf(b.height)) {
        if (std::isinf(a.height) && std::isinf(b.height)) return 0;
        return std::isinf(a.height) ? 1 : -1;
    }
    TowerNorm x = a, y = b;
    double target = std::max(x.height, y.height);
    auto lift = [&](TowerNorm& n) {
        while (n.height < target) {
            n.top = n.top > 0 ? std::log2(n.top)
                              : -std::numeric_limits<double>::infinity();
            n.height += 1;
        }
    };
    lift(x);
    lift(y);
    if (x.top < y.top) return -1;
    if (x.top > y.top) return 1;
    return 0;
}

namespace {

std::optional<BigNat> pow_big_base(const BigNat& base, unsigned long e,
                                   const EvalBudget& budget) {
    if (base == 0) return BigNat(e == 0 ? 1 : 0);
    if (e != 0 && bit_length(base) > budget.bits / e) return std::nullopt;
    return big_pow(base, e);
}

std::vector<BigNat> to_big(const std::vector<unsigned long>& v) {
    std::vector<BigNat> r;
    r.reserve(v.size());
    for (unsigned long x : v) r.emplace_back(x);
    return r;
}

} // namespace

std::optional<IdentityCheck> tow_identity(int id, const IdentityBindings& bind,
                                          const EvalBudget& budget) {
    const auto& args = bind.args;
    size_t L = args.size();
    BigNat base(bind.c);
    auto require = [](bool cond, const char* msg) {
        if (!cond) throw std::invalid_argument(msg);
    };
    for (unsigned long x : args)
        require(x >= 1, "tow_identity: arguments must be positive");
    if (id == 2 || id == 4 || id == 6)
        require(bind.b >= 1, "tow_identity: b must be positive");
    if (id != 7)
        require(!args.empty(), "tow_identity: needs arguments");

    IdentityCheck out;
    switch (id) {
    case 1: {
        // TOW(...,b_i,b_{i+1},...) <= TOW(...,1,b_{i+1}+lg(b_i),...), base 2.
        // The lg may be irrational; the right side still evaluates exactly
        // because 2^{(x+lg g) t} = 2^{x t} g^t.
        require(L >= 2, "tow_identity 1: needs at least two arguments");
        require(bind.i_pos >= 1 && bind.i_pos < static_cast<int>(L),
                "tow_identity 1: position out of range");
        size_t idx = static_cast<size_t>(bind.i_pos) - 1;
        auto lhs = tow(2, to_big(args), budget);
        if (!lhs) return std::nullopt;
        BigNat tail = 1;
        if (idx + 2 < L) {
            auto t = tow(2, to_big({args.begin() + idx + 2, args.end()}), budget);
            if (!t) return std::nullopt;
            tail = *t;
        }
        auto p1 = pow_checked(2, BigNat(args[idx + 1]) * tail, budget);
        auto p2 = pow_checked(BigNat(args[idx]), tail, budget);
        if (!p1 || !p2) return std::nullopt;
        BigNat level = *p1 * *p2; // value at position i+1 after the rewrite
        auto v = pow_checked(2, level, budget);
        if (!v) return std::nullopt;
        for (size_t j = idx; j-- > 0;) {
            v = pow_checked(2, BigNat(args[j]) * *v, budget);
            if (!v) return std::nullopt;
        }
        out.lhs = *lhs;
        out.rhs = *v;
        out.is_equality = false;
        break;
    }
    case 2: {
        // TOW_c(b_1,...,b_L)^b = TOW_c(b b_1, b_2,...,b_L)
        auto t = tow(base, to_big(args), budget);
        if (!t) return std::nullopt;
        auto lhs = pow_big_base(*t, bind.b, budget);
        if (!lhs) return std::nullopt;
        auto rargs = to_big(args);
        rargs[0] *= bind.b;
        auto rhs = tow(base, rargs, budget);
        if (!rhs) return std::nullopt;
        out.lhs = *lhs;
        out.rhs = *rhs;
        out.is_equality = true;
        break;
    }
    case 3: {
        // (1+d) TOW_c(...) <= TOW_c(..., b_L + d)
        auto t = tow(base, to_big(args), budget);
        if (!t) return std::nullopt;
        auto rargs = to_big(args);
        rargs.back() += bind.delta;
        auto rhs = tow(base, rargs, budget);
        if (!rhs) return std::nullopt;
        out.lhs = BigNat(1 + bind.delta) * *t;
        out.rhs = *rhs;
        out.is_equality = false;
        break;
    }
    case 4: {
        // (1+d) TOW_c(...)^b <= TOW_c(b b_1, b_2, ..., b_L + d)
        auto t = tow(base, to_big(args), budget);
        if (!t) return std::nullopt;
        auto p = pow_big_base(*t, bind.b, budget);
        if (!p) return std::nullopt;
        auto rargs = to_big(args);
        rargs[0] *= bind.b;
        rargs.back() += bind.delta;
        auto rhs = tow(base, rargs, budget);
        if (!rhs) return std::nullopt;
        out.lhs = BigNat(1 + bind.delta) * *p;
        out.rhs = *rhs;
        out.is_equality = false;
        break;
    }
    case 5: {
        // 2^{TOW(...)} = TOW(1, ...), base 2
        auto t = tow(2, to_big(args), budget);
        if (!t) return std::nullopt;
        auto lhs = pow_checked(2, *t, budget);
        if (!lhs) return std::nullopt;
        std::vector<BigNat> rargs;
        rargs.emplace_back(1);
        for (unsigned long x : args) rargs.emplace_back(x);
        auto rhs = tow(2, rargs, budget);
        if (!rhs) return std::nullopt;
        out.lhs = *lhs;
        out.rhs = *rhs;
        out.is_equality = true;
        break;
    }
    case 6: {
        // 2^{(1+d) TOW(...)^b} <= TOW(1, b b_1, b_2, ..., b_L + d), base 2
        auto t = tow(2, to_big(args), budget);
        if (!t) return std::nullopt;
        auto p = pow_big_base(*t, bind.b, budget);
        if (!p) return std::nullopt;
        auto lhs = pow_checked(2, BigNat(1 + bind.delta) * *p, budget);
        if (!lhs) return std::nullopt;
        std::vector<BigNat> rargs;
        rargs.emplace_back(1);
        for (unsigned long x : args) rargs.emplace_back(x);
        rargs[1] *= bind.b;
        rargs.back() += bind.delta;
        auto rhs = tow(2, rargs, budget);
        if (!rhs) return std::nullopt;
        out.lhs = *lhs;
        out.rhs = *rhs;
        out.is_equality = false;
        break;
    }
    case 7: {
        // lg^{(c)}(TOW(1,...,1)) = 1 with c ones; every intermediate is a
        // power of two, so the logs are exact
        require(bind.c >= 1, "tow_identity 7: needs c >= 1");
        std::vector<BigNat> ones(static_cast<size_t>(bind.c), BigNat(1));
        auto t = tow(2, ones, budget);
        if (!t) return std::nullopt;
        BigNat v = *t;
        for (int i = 0; i < bind.c; ++i) {
            require(is_power_of_two(v), "tow_identity 7: non-power-of-two");
            v = BigNat(static_cast<unsigned long>(exact_log2(v)));
        }
        out.lhs = v;
        out.rhs = 1;
        out.is_equality = true;
        break;
    }
    default:
        throw std::invalid_argument("tow_identity: id must be 1..7");
    }
    out.holds = out.is_equality ? (out.lhs == out.rhs) : (out.lhs <= out.rhs);
    return out;
}

} // namespace ramsey
