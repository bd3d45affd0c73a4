#include "ramsey/bounds.hpp"

#include "ramsey/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ramsey {

const char* family_name(Family f) {
    switch (f) {
    case Family::kBase: return "base";
    case Family::kRamsey: return "ramsey";
    case Family::kErdosRado: return "erdos_rado";
    case Family::kErdosRadoTower: return "erdos_rado_tower";
    case Family::kCfs: return "cfs";
    case Family::kCfsTower: return "cfs_tower";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::kBase, Family::kRamsey, Family::kErdosRado,
                     Family::kErdosRadoTower, Family::kCfs, Family::kCfsTower})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

namespace {

BigNat base_value(int a, int k, int c) {
    if (a == 1) return BigNat(c) * k - c + 1;
    if (c == 2) return big_binomial(2ul * k - 2, static_cast<unsigned long>(k - 1));
    BigNat num = big_factorial(static_cast<unsigned long>(c) * (k - 1));
    BigNat den = big_pow(big_factorial(static_cast<unsigned long>(k - 1)),
                         static_cast<unsigned long>(c));
    return num / den; // exact: the quotient is a multinomial coefficient
}

// known-exact tiny Ramsey values, otherwise an upper bound (surrogate)
struct RUpper {
    std::optional<BigNat> value;
    TowerNorm norm;
    bool is_true_r = false;
};

Evaluation eval_family(Family f, int a, int k, int c, const EvalBudget& budget);

RUpper r_upper(int a, int k, int c, const EvalBudget& budget) {
    RUpper r;
    if (k == a) {
        r.value = BigNat(a); // any a vertices span one edge
        r.norm = TowerNorm::from_exact(*r.value);
        r.is_true_r = true;
        return r;
    }
    if (a == 1) {
        r.value = BigNat(c) * k - c + 1;
        r.norm = TowerNorm::from_exact(*r.value);
        r.is_true_r = true;
        return r;
    }
    if (a == 2) {
        r.value = base_value(2, k, c);
        r.norm = TowerNorm::from_exact(*r.value);
        return r;
    }
    Evaluation ev = eval_family(Family::kErdosRado, a, k, c, budget);
    r.value = ev.exact;
    r.norm = ev.norm;
    return r;
}

// factorial that stays in double range for the norm path
double small_factorial(int n) {
    double r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// ceil(coef * B * sqrt(s) * mult), rigorous via outward intervals with
// escalating precision; the product is irrational, so some precision decides
BigNat ceil_b_product(int b_index, long coef, const BigNat& s, const BigNat& mult) {
    for (unsigned prec = 32; prec <= 8192; prec *= 2) {
        RatInterval b = b_constant(b_index, prec);
        RatInterval root = sqrt_bracket(BigRat(s), 16 * prec);
        RatInterval rest = RatInterval::exact(BigRat(mult) * coef);
        RatInterval x = b * root * rest;
        if (auto e = ceil_if_determined(x)) return *e;
    }
    throw std::runtime_error("bound: interval precision cap exceeded");
}

Evaluation eval_base(int a, int k, int c) {
    Evaluation ev;
    ev.exact = base_value(a, k, c);
    ev.is_exact_ramsey = (a == 1);
    std::ostringstream sym;
    if (a == 1) {
        sym << *ev.exact;
    } else if (c == 2) {
        sym << "C(" << 2 * k - 2 << "," << k - 1 << ")";
    } else {
        sym << "(" << c * (k - 1) << ")!/(" << k - 1 << "!)^" << c;
    }
    ev.symbolic = sym.str();
    return ev;
}

Evaluation eval_ramsey(int a, int k, int c, const EvalBudget& budget) {
    Evaluation ev;
    long m = static_cast<long>(c) * k - c + 1;
    ev.exact = up_arrow(c, a - 1, m, budget);
    ev.norm = up_arrow_norm(c, a - 1, m);
    if (a == 2) ev.exp_of_c = BigNat(m);
    std::ostringstream sym;
    sym << "up_arrow(" << c << "," << a - 1 << "," << m << ")";
    ev.symbolic = sym.str();
    return ev;
}

Evaluation eval_erdos_rado(int a, int k, int c, const EvalBudget& budget) {
    Evaluation ev;
    std::ostringstream sym;
    if (a == 2) {
        // one PHP stage per chosen point: c^{R(1,k-1,c)+1}
        long e = static_cast<long>(c) * (k - 1) - c + 2;
        ev.exp_of_c = BigNat(e);
        ev.exact = pow_checked(c, BigNat(e), budget);
        ev.norm = ev.exact ? TowerNorm::from_exact(*ev.exact)
                           : pow_norm(c, TowerNorm::from_double(static_cast<double>(e)));
        sym << c << "^" << e;
        ev.symbolic = sym.str();
        return ev;
    }
    if (a == 3) {
        // squared stage-count form: c^{R(2,k-1,c)^2} + 1
        RUpper ru = r_upper(2, k - 1, c, budget);
        ev.surrogate = !ru.is_true_r;
        BigNat e = *ru.value * *ru.value;
        ev.exp_of_c = e;
        ev.addend = 1;
        auto p = pow_checked(c, e, budget);
        if (p) ev.exact = *p + 1;
        ev.norm = ev.exact ? TowerNorm::from_exact(*ev.exact)
                           : pow_norm(c, TowerNorm::from_exact(e));
        sym << c << "^" << e << "+1";
        ev.symbolic = sym.str();
        return ev;
    }
    // general recurrence: c^{C(R(a-1,k-1,c)+1, a-1)} + a - 2
    RUpper ru = r_upper(a - 1, k - 1, c, budget);
    ev.surrogate = !ru.is_true_r;
    ev.addend = a - 2;
    if (ru.value) {
        BigNat e = big_binomial(BigNat(*ru.value + 1),
                                static_cast<unsigned long>(a - 1));
        ev.exp_of_c = e;
        auto p = pow_checked(c, e, budget);
        if (p) ev.exact = *p + (a - 2);
        ev.norm = ev.exact ? TowerNorm::from_exact(*ev.exact)
                           : pow_norm(c, TowerNorm::from_exact(e));
        sym << c << "^C(" << *ru.value + 1 << "," << a - 1 << ")+" << a - 2;
    } else {
        // inner bound itself never materialized; order by norms alone
        TowerNorm e = scale_norm(pow_int_norm(ru.norm, a - 1),
                                 1.0 / small_factorial(a - 1));
        ev.norm = pow_norm(c, e);
        sym << c << "^C(R+1," << a - 1 << ")+" << a - 2 << " [R not materialized]";
    }
    ev.symbolic = sym.str();
    return ev;
}

Evaluation eval_er_tower(int a, int k, const EvalBudget& budget) {
    Evaluation ev;
    std::ostringstream sym;
    // bottom level of the tower is 2^{X}/y, a rational; the one ceil happens
    // when it first becomes an exponent, preserving the upper-bound direction
    long X;
    long y;
    std::vector<long> above; // integer args above the bottom, outermost first
    if (a == 3) {
        X = 4l * k;
        y = k - 2;
        above = {1};
        sym << "TOW(1," << X << "-lg(" << y << "))";
    } else {
        X = 4l * k - 4l * (a - 3);
        y = k - a + 1;
        above.push_back(1);
        for (int j = a - 1; j >= 3; --j) above.push_back(j);
        sym << "TOW(1";
        for (int j = a - 1; j >= 4; --j) sym << "," << j;
        sym << ",3," << 4 * k << "-lg(" << y << ")-" << 4 * (a - 3) << ")";
        ev.asymptotic_only = (k < a + 3);
    }
    BigRat bottom(big_pow2(static_cast<unsigned long>(X)), BigNat(y));
    bottom.canonicalize();
    std::optional<BigNat> v;
    for (size_t j = above.size(); j-- > 0;) {
        BigNat e;
        if (!v) {
            BigRat prod = bottom * above[j];
            e = ceil_rat(prod);
        } else {
            e = BigNat(above[j]) * *v;
        }
        if (j == 0) ev.exp_of_c = e;
        v = pow_checked(2, e, budget);
        if (!v) break;
    }
    ev.exact = v;
    std::vector<double> nargs;
    for (long g : above) nargs.push_back(static_cast<double>(g));
    nargs.push_back(static_cast<double>(X) - std::log2(static_cast<double>(y)));
    ev.norm = ev.exact ? TowerNorm::from_exact(*ev.exact) : tow_norm(2, nargs);
    ev.symbolic = sym.str();
    return ev;
}

Evaluation eval_cfs(int k, int c, const EvalBudget& budget) {
    Evaluation ev;
    std::ostringstream sym;
    long t = static_cast<long>(c) * k;
    auto inner = pow_checked(c, BigNat(t), budget);
    if (inner) {
        BigNat e = ceil_b_product(c, 1, BigNat(k - 1), *inner);
        ev.exp_of_c = e;
        ev.exact = pow_checked(c, e, budget);
        sym << c << "^" << e;
    } else {
        sym << c << "^ceil(B_" << c << "*sqrt(" << k - 1 << ")*" << c << "^"
            << t << ")";
    }
    if (ev.exact) {
        ev.norm = TowerNorm::from_exact(*ev.exact);
    } else {
        double bc = std::pow(std::exp(1.0) / std::sqrt(2 * M_PI), c + 1);
        TowerNorm e = scale_norm(pow_norm(c, TowerNorm::from_double(t)),
                                 bc * std::sqrt(static_cast<double>(k - 1)));
        if (ev.exp_of_c) e = TowerNorm::from_exact(*ev.exp_of_c);
        ev.norm = pow_norm(c, e);
    }
    ev.symbolic = sym.str();
    return ev;
}

Evaluation eval_cfs_tower(int a, int k, int c, const EvalBudget& budget) {
    Evaluation ev;
    std::ostringstream sym;
    // arg list: [1, a-1, ..., 4,] coef*B*sqrt(k-a+2), c^{ck-(a-3)c}
    long coef = (a == 3) ? 1 : 3;
    int b_index = (a == 3) ? c : 2; // deeper parts reuse the 2-color constant
    long s = k - (a - 2);
    long t = static_cast<long>(c) * k - static_cast<long>(a - 3) * c;
    std::vector<long> above = {};
    if (a >= 4) {
        above.push_back(1);
        for (int j = a - 1; j >= 4; --j) above.push_back(j);
    }
    ev.asymptotic_only = (a >= 6 && k < a + 3);

    sym << "TOW";
    if (c != 2) sym << "_" << c;
    sym << "(";
    for (long g : above) sym << g << ",";
    if (coef != 1) sym << coef;
    sym << "B";
    if (a == 3 && c != 2) sym << "_" << c;
    sym << "*sqrt(" << s << ")," << c << "^" << t << ")";

    auto bottom = pow_checked(c, BigNat(t), budget);
    std::optional<BigNat> v;
    if (bottom) {
        // level above the bottom carries the irrational coefficient
        BigNat e = ceil_b_product(b_index, coef, BigNat(s), *bottom);
        if (above.empty()) ev.exp_of_c = e;
        v = pow_checked(c, e, budget);
        for (size_t j = above.size(); v && j-- > 0;) {
            BigNat e2 = BigNat(above[j]) * *v;
            if (j == 0) ev.exp_of_c = e2;
            v = pow_checked(c, e2, budget);
        }
    }
    ev.exact = v;
    if (ev.exact) {
        ev.norm = TowerNorm::from_exact(*ev.exact);
    } else {
        double bc = std::pow(std::exp(1.0) / std::sqrt(2 * M_PI), b_index + 1);
        std::vector<double> nargs;
        for (long g : above) nargs.push_back(static_cast<double>(g));
        nargs.push_back(coef * bc * std::sqrt(static_cast<double>(s)));
        nargs.push_back(std::pow(static_cast<double>(c), static_cast<double>(t)));
        ev.norm = tow_norm(c, nargs);
    }
    ev.symbolic = sym.str();
    return ev;
}

Evaluation eval_family(Family f, int a, int k, int c, const EvalBudget& budget) {
    Evaluation ev;
    switch (f) {
    case Family::kBase: ev = eval_base(a, k, c); break;
    case Family::kRamsey: ev = eval_ramsey(a, k, c, budget); break;
    case Family::kErdosRado: ev = eval_erdos_rado(a, k, c, budget); break;
    case Family::kErdosRadoTower: ev = eval_er_tower(a, k, budget); break;
    case Family::kCfs: ev = eval_cfs(k, c, budget); break;
    case Family::kCfsTower: ev = eval_cfs_tower(a, k, c, budget); break;
    }
    ev.family = f;
    ev.a = a;
    ev.k = k;
    ev.c = c;
    ev.overflow = !ev.exact.has_value();
    return ev;
}

} // namespace

bool family_applies(Family f, int a, int k, int c) {
    if (a < 1 || k < a || c < 2) return false;
    switch (f) {
    case Family::kBase: return a <= 2;
    case Family::kRamsey: return true;
    case Family::kErdosRado: return a >= 2;
    case Family::kErdosRadoTower: return a >= 3 && c == 2;
    case Family::kCfs: return a == 3;
    case Family::kCfsTower: return a >= 3;
    }
    return false;
}

Evaluation bound(Family f, int a, int k, int c, const EvalBudget& budget) {
    if (a < 1) throw std::invalid_argument("bound: a must be >= 1");
    if (k < a) throw std::invalid_argument("bound: k must be >= a");
    if (c < 2) throw std::invalid_argument("bound: c must be >= 2");
    if (!family_applies(f, a, k, c)) {
        std::ostringstream msg;
        msg << "bound: family " << family_name(f) << " does not apply at a=" << a
            << ", c=" << c;
        throw std::invalid_argument(msg.str());
    }
    return eval_family(f, a, k, c, budget);
}

std::vector<Evaluation> compare_bounds(int a, int k, int c,
                                       const EvalBudget& budget) {
    std::vector<Evaluation> out;
    for (Family f : {Family::kBase, Family::kRamsey, Family::kErdosRado,
                     Family::kErdosRadoTower, Family::kCfs, Family::kCfsTower})
        if (family_applies(f, a, k, c)) out.push_back(bound(f, a, k, c, budget));
    std::stable_sort(out.begin(), out.end(),
                     [](const Evaluation& x, const Evaluation& y) {
        if (x.exact && y.exact) return *x.exact < *y.exact;
        return compare_norms(x.norm, y.norm) < 0;
    });
    return out;
}

} // namespace ramsey
