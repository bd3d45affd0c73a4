// Command-line surface for the homogeneous-set toolkit: extraction runs,
// bound tables, lemma oracles, exhaustive search, and trace validation.
//
// Exit codes: 0 success, 1 validated but below the requested size, 2 input
// error, 3 budget abort, 4 invariant violation.

#include "CLI11.hpp"

#include "ramsey/bounds.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/extract.hpp"
#include "ramsey/lemmas.hpp"
#include "ramsey/tower.hpp"
#include "ramsey/trace.hpp"
#include "ramsey/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ramsey;

namespace {

constexpr int kOk = 0;
constexpr int kBelowTarget = 1;
constexpr int kInputError = 2;
constexpr int kBudgetAbort = 3;
constexpr int kInvariantViolation = 4;

int fail_input(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kInputError;
}

// every run starts by echoing the exact parameters it resolved to, so any
// output can be reproduced from its first line
struct ConfigEcho {
    std::ostringstream line;
    explicit ConfigEcho(const std::string& cmd) { line << "config cmd=" << cmd; }
    ConfigEcho& kv(const std::string& k, const std::string& v) {
        line << " " << k << "=" << (v.empty() ? "-" : v);
        return *this;
    }
    ConfigEcho& kv(const std::string& k, long long v) {
        line << " " << k << "=" << v;
        return *this;
    }
    void print() const { std::cout << line.str() << "\n"; }
};

Coloring load_coloring_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open coloring file " + path);
    return load_coloring_any(in);
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return bool(out);
}

// ------------------------------------------------------------- extract ----

struct ExtractArgs {
    std::string method = "ramsey";
    int k = 0;
    std::string coloring_path;
    int n = 0, a = 0, c = 0;
    uint64_t seed = 0;
    bool have_seed = false;
    std::string result_out, trace_out, coloring_out;
    std::string format = "text";
    bool true_max_inner = false;
    int search_max_points = 24;
    uint64_t detect_budget = 50'000'000;
    uint64_t validate_budget = 200'000'000;
};

int cmd_extract(const ExtractArgs& ar) {
    auto m = method_from_name(ar.method);
    if (!m) return fail_input("unknown method " + ar.method);

    std::optional<Coloring> col;
    if (!ar.coloring_path.empty()) {
        col = load_coloring_file(ar.coloring_path);
    } else {
        if (ar.n <= 0 || ar.a <= 0 || ar.c <= 0 || !ar.have_seed)
            return fail_input(
                "need either --coloring or all of --n --a --c --seed");
        col = random_coloring(ar.n, ar.a, ar.c, ar.seed);
    }

    ConfigEcho echo("extract");
    echo.kv("method", method_name(*m)).kv("k", ar.k);
    if (!ar.coloring_path.empty())
        echo.kv("coloring", ar.coloring_path);
    else
        echo.kv("n", ar.n).kv("a", ar.a).kv("c", ar.c).kv(
            "seed", static_cast<long long>(ar.seed));
    echo.kv("true_max_inner", ar.true_max_inner ? 1 : 0)
        .kv("search_max_points", ar.search_max_points)
        .kv("detect_budget", static_cast<long long>(ar.detect_budget))
        .kv("validate_budget", static_cast<long long>(ar.validate_budget))
        .kv("format", ar.format);
    echo.print();

    ExtractOptions opt;
    opt.true_max_inner = ar.true_max_inner;
    opt.search_max_points = ar.search_max_points;
    opt.detect_budget = ar.detect_budget;
    ExtractResult res = extract(*m, *col, ar.k, opt);
    ValidateReport rep = validate_run(*col, res.trace, ar.validate_budget);

    if (!ar.coloring_out.empty()) {
        std::ofstream out(ar.coloring_out, std::ios::binary);
        if (!out) return fail_input("cannot write coloring file " + ar.coloring_out);
        save_coloring_text(*col, out);
    }
    if (!ar.trace_out.empty() && !write_file(ar.trace_out, res.trace.serialize()))
        return fail_input("cannot write trace file " + ar.trace_out);
    std::ostringstream rs;
    rs << "h=" << join_ints(res.set) << " color="
       << (res.color < 0 ? std::string("-") : std::to_string(res.color))
       << " status=" << status_name(res.status)
       << " validate=" << (rep.all_pass ? "all-pass" : "violations") << "\n";
    if (!ar.result_out.empty() && !write_file(ar.result_out, rs.str()))
        return fail_input("cannot write result file " + ar.result_out);

    if (ar.format == "structured") {
        std::cout << "result " << rs.str();
    } else {
        std::cout << "homogeneous set: "
                  << (res.set.empty() ? "-" : join_ints(res.set)) << "\n";
        std::cout << "size: " << res.set.size() << " (target " << ar.k << ")\n";
        if (res.color >= 0) std::cout << "color: " << res.color << "\n";
        std::cout << "status: " << status_name(res.status) << "\n";
        std::cout << "validation: " << (rep.all_pass ? "all-pass" : "VIOLATIONS")
                  << " (" << rep.work << " probes)\n";
        if (!rep.all_pass) std::cout << rep.render();
    }

    if (res.status == ExtractStatus::kAborted) return kBudgetAbort;
    if (!rep.all_pass) return kInvariantViolation;
    return res.status == ExtractStatus::kOk ? kOk : kBelowTarget;
}

// --------------------------------------------------------------- bound ----

void print_evaluation(const Evaluation& ev, const std::string& format) {
    if (format == "structured") {
        std::cout << "bound family=" << family_name(ev.family) << " a=" << ev.a
                  << " k=" << ev.k << " c=" << ev.c;
        if (ev.exact) std::cout << " exact=" << *ev.exact;
        if (!ev.exact && ev.exp_of_c)
            std::cout << " exp_of_c=" << *ev.exp_of_c << " addend=" << ev.addend;
        std::cout << " norm=" << ev.norm.render()
                  << " ramsey_exact=" << (ev.is_exact_ramsey ? 1 : 0)
                  << " overflow=" << (ev.overflow ? 1 : 0)
                  << " surrogate=" << (ev.surrogate ? 1 : 0)
                  << " asymptotic_only=" << (ev.asymptotic_only ? 1 : 0)
                  << " formula=" << ev.symbolic << "\n";
        return;
    }
    std::cout << family_name(ev.family) << ": " << ev.symbolic;
    if (ev.exact) {
        std::string d = to_string(*ev.exact);
        if (d.size() <= 100)
            std::cout << " = " << d;
        else
            std::cout << " = [" << d.size() << "-digit integer] ~ "
                      << ev.norm.render();
    } else if (ev.exp_of_c) {
        std::string e = to_string(*ev.exp_of_c);
        if (e.size() > 100)
            e = "[" + std::to_string(e.size()) + "-digit integer]";
        std::cout << " = " << ev.c << "^" << e
                  << (ev.addend > 0 ? "+" + to_string(ev.addend) : "");
    } else {
        std::cout << " ~ " << ev.norm.render();
    }
    if (ev.is_exact_ramsey) std::cout << "  [exact value, not just a bound]";
    if (ev.surrogate) std::cout << "  [inner R replaced by an upper bound]";
    if (ev.asymptotic_only) std::cout << "  [claimed for large k only]";
    std::cout << "\n";
}

int cmd_bound(const std::string& family, int a, int k, int c,
              const std::string& format) {
    ConfigEcho echo("bound");
    echo.kv("family", family.empty() ? "all" : family)
        .kv("a", a)
        .kv("k", k)
        .kv("c", c)
        .kv("bit_budget", static_cast<long long>(default_budget().bits))
        .kv("format", format);
    echo.print();

    if (!family.empty()) {
        auto f = family_from_name(family);
        if (!f) return fail_input("unknown family " + family);
        print_evaluation(bound(*f, a, k, c), format);
        return kOk;
    }
    auto all = compare_bounds(a, k, c);
    if (all.empty()) {
        std::cout << "no family covers a=" << a << " k=" << k << " c=" << c
                  << "\n";
        return kOk;
    }
    for (const auto& ev : all) print_evaluation(ev, format);
    return kOk;
}

// --------------------------------------------------------------- lemma ----

int cmd_lemma_sigma(int c, int k_from, int k_to, const std::string& format) {
    ConfigEcho echo("lemma");
    echo.kv("which", "sigma").kv("c", c).kv("k", k_from).kv("k_to", k_to).kv(
        "format", format);
    echo.print();
    if (format == "text")
        std::cout << "c k exact enumerated bound ratio\n";
    for (int k = k_from; k <= k_to; ++k) {
        auto ex = sigma_sum_exact(c, k);
        auto en = sigma_sum_enumerated(c, k);
        SigmaBound sb = sigma_bound(c, k);
        std::string exs = ex ? to_string(*ex) : "budget";
        std::string ens = en ? to_string(*en) : "budget";
        std::string ratio = "-";
        if (ex && sb.closed_form_ceil > 0) {
            BigRat r(*ex);
            r /= BigRat(sb.closed_form_ceil);
            std::ostringstream os;
            os.precision(4);
            os << r.get_d();
            ratio = os.str();
        }
        if (format == "structured") {
            std::cout << "sigma c=" << c << " k=" << k << " exact=" << exs
                      << " enumerated=" << ens
                      << " equal=" << (ex && en && *ex == *en ? 1 : 0)
                      << " bound=" << sb.closed_form_ceil << " ratio=" << ratio
                      << "\n";
        } else {
            std::cout << c << " " << k << " " << exs << " " << ens << " "
                      << sb.closed_form_ceil << " " << ratio << "\n";
        }
        if (ex && en && *ex != *en) return kInvariantViolation;
    }
    return kOk;
}

int cmd_lemma_pascal(int a, int n, const std::string& format) {
    ConfigEcho echo("lemma");
    echo.kv("which", "pascal").kv("a", a).kv("n", n).kv("format", format);
    echo.print();
    PascalCheck pc = pascal_second_identity(a, n);
    if (format == "structured")
        std::cout << "pascal a=" << a << " n=" << n << " lhs=" << pc.lhs
                  << " rhs=" << pc.rhs << " equal=" << (pc.equal ? 1 : 0)
                  << "\n";
    else
        std::cout << "sum C(a+b,b) = " << pc.lhs << ", C(a+n+1,n) = " << pc.rhs
                  << " -> " << (pc.equal ? "equal" : "DIFFER") << "\n";
    return pc.equal ? kOk : kInvariantViolation;
}

int cmd_lemma_stirling(int n, const std::string& format) {
    ConfigEcho echo("lemma");
    echo.kv("which", "stirling").kv("n", n).kv("format", format);
    echo.print();
    StirlingBracket sb = stirling_bracket(n);
    if (format == "structured")
        std::cout << "stirling n=" << n << " factorial=" << sb.factorial
                  << " verified=" << (sb.verified ? 1 : 0) << "\n";
    else
        std::cout << n << "! = " << sb.factorial << "\nbrackets "
                  << (sb.verified ? "verified" : "FAILED") << "\n";
    return sb.verified ? kOk : kInvariantViolation;
}

int cmd_lemma_hyper(int a, int c, int k, int r, const std::string& format) {
    ConfigEcho echo("lemma");
    echo.kv("which", "hyper").kv("a", a).kv("c", c).kv("k", k).kv("r", r).kv(
        "format", format);
    echo.print();
    auto hs = hyper_edge_sum_exact(a, c, k);
    if (!hs) {
        std::cerr << "enumeration budget exceeded\n";
        return kBudgetAbort;
    }
    std::optional<BigNat> bd = r > 0 ? hyper_edge_sum_bound(a, c, r) : std::nullopt;
    if (format == "structured") {
        std::cout << "hyper a=" << a << " c=" << c << " k=" << k
                  << " total=" << hs->total << " forced_at=" << hs->forced_at;
        if (bd) std::cout << " r=" << r << " bound=" << *bd;
        std::cout << "\n";
    } else {
        std::cout << "edge-count sum: " << hs->total
                  << " (every coloring forced from m=" << hs->forced_at
                  << ")\nper m:";
        for (size_t m = 0; m < hs->per_m.size(); ++m)
            std::cout << " " << (m + 1) << ":" << hs->per_m[m];
        std::cout << "\n";
        if (bd)
            std::cout << "bound at r=" << r << ": " << *bd << " -> "
                      << (hs->total <= *bd ? "dominates" : "VIOLATED") << "\n";
    }
    if (bd && hs->total > *bd) return kInvariantViolation;
    return kOk;
}

int cmd_lemma_identity(int id, const std::vector<unsigned long>& args,
                       unsigned long b, unsigned long delta, int i_pos, int base,
                       const std::string& format) {
    ConfigEcho echo("lemma");
    std::string as;
    for (size_t i = 0; i < args.size(); ++i)
        as += (i ? "," : "") + std::to_string(args[i]);
    echo.kv("which", "identity")
        .kv("id", id)
        .kv("args", as)
        .kv("b", static_cast<long long>(b))
        .kv("delta", static_cast<long long>(delta))
        .kv("i_pos", i_pos)
        .kv("base", base)
        .kv("format", format);
    echo.print();
    IdentityBindings bind;
    bind.args = args;
    bind.b = b;
    bind.delta = delta;
    bind.i_pos = i_pos;
    bind.c = base;
    auto chk = tow_identity(id, bind, default_budget());
    if (!chk) {
        std::cerr << "bit budget exceeded\n";
        return kBudgetAbort;
    }
    if (format == "structured")
        std::cout << "identity id=" << id << " lhs=" << chk->lhs
                  << " rhs=" << chk->rhs
                  << " relation=" << (chk->is_equality ? "eq" : "le")
                  << " holds=" << (chk->holds ? 1 : 0) << "\n";
    else
        std::cout << "lhs = " << chk->lhs << "\nrhs = " << chk->rhs << "\n"
                  << (chk->is_equality ? "equality " : "inequality ")
                  << (chk->holds ? "holds" : "FAILS") << "\n";
    return chk->holds ? kOk : kInvariantViolation;
}

// -------------------------------------------------------------- search ----

int cmd_search(int a, int k, int c, int n_max, uint64_t budget,
               const std::string& witness_out, const std::string& format) {
    ConfigEcho echo("search");
    echo.kv("a", a).kv("k", k).kv("c", c).kv("n_max", n_max).kv(
        "budget", static_cast<long long>(budget));
    echo.kv("witness_out", witness_out).kv("format", format);
    echo.print();

    RamseyQuery q;
    q.a = a;
    q.k = k;
    q.c = c;
    q.n_max = n_max;
    q.budget = budget;
    BruteForceResult r = brute_force_ramsey(q);

    if (format == "structured") {
        std::cout << "search exact=" << (r.exact ? 1 : 0);
        if (r.exact) std::cout << " value=" << r.value;
        std::cout << " lo=" << r.lo << " hi=" << r.hi
                  << " colorings=" << r.colorings
                  << " witness=" << (r.witness ? 1 : 0);
        if (!r.note.empty()) std::cout << " note=" << r.note;
        std::cout << "\n";
    } else {
        if (r.exact)
            std::cout << "R(" << a << "," << k << ";" << c << ") = " << r.value
                      << "\n";
        else
            std::cout << "R(" << a << "," << k << ";" << c << ") >= " << r.lo
                      << (r.hi > 0 ? " and <= " + std::to_string(r.hi) : "")
                      << "\n";
        std::cout << "colorings scanned: " << r.colorings << "\n";
        if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
    }
    if (r.witness && !witness_out.empty()) {
        std::ofstream out(witness_out, std::ios::binary);
        if (!out) return fail_input("cannot write witness file " + witness_out);
        save_coloring_text(*r.witness, out);
        std::cout << "witness (" << r.witness->n() << " points) written to "
                  << witness_out << "\n";
    }
    return r.budget_hit ? kBudgetAbort : kOk;
}

// ------------------------------------------------------------ validate ----

int cmd_validate(const std::string& coloring_path, const std::string& trace_path,
                 uint64_t budget, const std::string& format) {
    ConfigEcho echo("validate");
    echo.kv("coloring", coloring_path)
        .kv("trace", trace_path)
        .kv("budget", static_cast<long long>(budget))
        .kv("format", format);
    echo.print();

    Coloring col = load_coloring_file(coloring_path);
    std::ifstream tin(trace_path, std::ios::binary);
    if (!tin) return fail_input("cannot open trace file " + trace_path);
    Trace tr = Trace::parse(tin);
    ValidateReport rep = validate_run(col, tr, budget);
    if (format == "structured") {
        for (const auto& l : rep.laws)
            std::cout << "law name=" << l.law << " result="
                      << (l.result == LawCheck::kPass     ? "pass"
                          : l.result == LawCheck::kFail   ? "fail"
                                                          : "skipped")
                      << (l.detail.empty() ? "" : " detail=" + l.detail) << "\n";
        std::cout << "validate all_pass=" << (rep.all_pass ? 1 : 0)
                  << " work=" << rep.work << "\n";
    } else {
        std::cout << rep.render();
    }
    return rep.all_pass ? kOk : kInvariantViolation;
}

// ------------------------------------------------------------ selftest ----

int cmd_selftest() {
    ConfigEcho echo("selftest");
    echo.print();
    int bad = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "pass " : "FAIL ") << name << "\n";
        if (!ok) ++bad;
    };

    {
        RamseyQuery q;
        q.a = 2;
        q.k = 3;
        q.c = 2;
        q.n_max = 8;
        BruteForceResult r = brute_force_ramsey(q);
        report("exhaustive pair search pins R(2,3;2)=6",
               r.exact && r.value == 6 && r.witness.has_value());
    }
    {
        // only the halving construction is guaranteed at 40 points for k=3
        // (17 suffice); the others must still validate whatever they return
        bool ok = true;
        for (Method m : {Method::kRamsey, Method::kErdosRado, Method::kCfs3,
                         Method::kCfsGeneral}) {
            Coloring col = random_coloring(40, 3, 2, 12345);
            ExtractResult res = extract(m, col, 3);
            ValidateReport rep = validate_run(col, res.trace);
            ok = ok && res.status != ExtractStatus::kAborted && rep.all_pass;
            if (m == Method::kErdosRado)
                ok = ok && res.status == ExtractStatus::kOk &&
                     static_cast<int>(res.set.size()) >= 3;
        }
        report("every extractor validates on 40 points; halving reaches its 3-set",
               ok);
    }
    {
        Coloring col = random_coloring(25, 2, 3, 999);
        std::ostringstream os;
        save_coloring_text(col, os);
        std::istringstream is(os.str());
        Coloring back = load_coloring_text(is);
        bool ok = back.n() == col.n() && back.a() == col.a() && back.c() == col.c();
        std::ostringstream os2;
        save_coloring_text(back, os2);
        report("coloring text round-trip is identical", ok && os.str() == os2.str());
    }
    {
        auto ex = sigma_sum_exact(2, 3);
        auto en = sigma_sum_enumerated(2, 3);
        report("string-sum closed form matches enumeration at c=2,k=3",
               ex && en && *ex == *en && *ex == 52);
    }
    {
        Evaluation ev = bound(Family::kErdosRado, 3, 3, 2);
        report("halving-family bound pins R(3,3;2) <= 17",
               ev.exact && *ev.exact == 17);
    }
    {
        auto t = tow(2, {BigNat(1), BigNat(1), BigNat(1)}, default_budget());
        report("TOW(1,1,1) = 2^2^2", t && *t == 16);
    }
    std::cout << (bad ? "selftest: FAILURES\n" : "selftest: all pass\n");
    return bad ? kInvariantViolation : kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"homogeneous-set extraction and bound toolkit for colored "
                 "complete hypergraphs"};
    app.require_subcommand(1);

    // extract
    ExtractArgs ex;
    CLI::App* s_ex = app.add_subcommand(
        "extract", "run one construction on a coloring and validate its trace");
    s_ex->add_option("--method", ex.method,
                     "ramsey | erdos-rado | cfs | cfs-general");
    s_ex->add_option("--k", ex.k, "target homogeneous-set size")->required();
    s_ex->add_option("--coloring", ex.coloring_path, "coloring file (text or binary)");
    s_ex->add_option("--n", ex.n, "points for a generated coloring");
    s_ex->add_option("--a", ex.a, "arity for a generated coloring");
    s_ex->add_option("--c", ex.c, "colors for a generated coloring");
    s_ex->add_option("--seed", ex.seed, "seed for a generated coloring")
        ->each([&](const std::string&) { ex.have_seed = true; });
    s_ex->add_option("--result-out", ex.result_out, "write the result line here");
    s_ex->add_option("--trace-out", ex.trace_out, "write the run trace here");
    s_ex->add_option("--coloring-out", ex.coloring_out,
                     "save the coloring that was extracted from (text format)");
    s_ex->add_option("--format", ex.format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
    s_ex->add_flag("--true-max-inner", ex.true_max_inner,
                   "exhaustive inner maximum instead of recursion (<= 20 points)");
    s_ex->add_option("--search-max-points", ex.search_max_points,
                     "cap for exhaustive fallback searches");
    s_ex->add_option("--detect-budget", ex.detect_budget,
                     "edge-probe budget for stop-rule searches");
    s_ex->add_option("--validate-budget", ex.validate_budget,
                     "edge-probe budget for trace validation");

    // bound
    std::string bd_family, bd_format = "text";
    int bd_a = 2, bd_k = 3, bd_c = 2;
    CLI::App* s_bd = app.add_subcommand(
        "bound", "evaluate upper-bound families (all of them when no --family)");
    s_bd->add_option("--family", bd_family,
                     "base | ramsey | erdos_rado | erdos_rado_tower | cfs | cfs_tower");
    s_bd->add_option("--a", bd_a, "edge arity")->required();
    s_bd->add_option("--k", bd_k, "target size")->required();
    s_bd->add_option("--c", bd_c, "colors")->required();
    s_bd->add_option("--format", bd_format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));

    // lemma
    std::string lm_which, lm_format = "text";
    int lm_a = 1, lm_c = 2, lm_k = 3, lm_n = 10, lm_r = 0, lm_k_to = 0;
    int lm_id = 2, lm_ipos = 1, lm_base = 2;
    unsigned long lm_b = 1, lm_delta = 0;
    std::vector<unsigned long> lm_args;
    CLI::App* s_lm = app.add_subcommand(
        "lemma", "counting-lemma oracles: dual routes, brackets, identities");
    s_lm->add_option("--which", lm_which,
                     "sigma | pascal | stirling | hyper | identity")
        ->required()
        ->check(CLI::IsMember({"sigma", "pascal", "stirling", "hyper", "identity"}));
    s_lm->add_option("--a", lm_a, "pascal: a; hyper: edge arity");
    s_lm->add_option("--c", lm_c, "alphabet / color count");
    s_lm->add_option("--k", lm_k, "per-symbol cap (sigma) or target size (hyper)");
    s_lm->add_option("--k-to", lm_k_to, "sigma: table rows up to this k");
    s_lm->add_option("--n", lm_n, "pascal / stirling argument");
    s_lm->add_option("--r", lm_r, "hyper: bound parameter (0 = skip the bound)");
    s_lm->add_option("--id", lm_id, "identity number 1..7");
    s_lm->add_option("--args", lm_args, "identity: tower argument list");
    s_lm->add_option("--b", lm_b, "identity: b parameter");
    s_lm->add_option("--delta", lm_delta, "identity: delta parameter");
    s_lm->add_option("--i-pos", lm_ipos, "identity 1: replaced position");
    s_lm->add_option("--base", lm_base, "identity: base c / count of ones");
    s_lm->add_option("--format", lm_format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));

    // search
    int sr_a = 2, sr_k = 3, sr_c = 2, sr_nmax = 64;
    uint64_t sr_budget = 100'000'000;
    std::string sr_witness, sr_format = "text";
    CLI::App* s_sr = app.add_subcommand(
        "search", "exhaustive forcing-threshold scan with witness output");
    s_sr->add_option("--a", sr_a, "edge arity")->required();
    s_sr->add_option("--k", sr_k, "target size")->required();
    s_sr->add_option("--c", sr_c, "colors")->required();
    s_sr->add_option("--n-max", sr_nmax, "largest point count to scan");
    s_sr->add_option("--budget", sr_budget, "colorings enumerated across the scan");
    s_sr->add_option("--witness-out", sr_witness, "write the witness coloring here");
    s_sr->add_option("--format", sr_format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));

    // validate
    std::string vl_coloring, vl_trace, vl_format = "text";
    uint64_t vl_budget = 200'000'000;
    CLI::App* s_vl = app.add_subcommand(
        "validate", "replay a stored trace against its coloring");
    s_vl->add_option("--coloring", vl_coloring, "coloring file")->required();
    s_vl->add_option("--trace", vl_trace, "trace file")->required();
    s_vl->add_option("--budget", vl_budget, "edge-probe budget");
    s_vl->add_option("--format", vl_format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));

    // selftest
    app.add_subcommand("selftest", "quick internal consistency suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (s_ex->parsed()) return cmd_extract(ex);
        if (s_bd->parsed()) return cmd_bound(bd_family, bd_a, bd_k, bd_c, bd_format);
        if (s_lm->parsed()) {
            if (lm_which == "sigma")
                return cmd_lemma_sigma(lm_c, lm_k, lm_k_to > 0 ? lm_k_to : lm_k,
                                       lm_format);
            if (lm_which == "pascal") return cmd_lemma_pascal(lm_a, lm_n, lm_format);
            if (lm_which == "stirling") return cmd_lemma_stirling(lm_n, lm_format);
            if (lm_which == "hyper")
                return cmd_lemma_hyper(lm_a, lm_c, lm_k, lm_r, lm_format);
            return cmd_lemma_identity(lm_id, lm_args, lm_b, lm_delta, lm_ipos,
                                      lm_base, lm_format);
        }
        if (s_sr->parsed())
            return cmd_search(sr_a, sr_k, sr_c, sr_nmax, sr_budget, sr_witness,
                              sr_format);
        if (s_vl->parsed())
            return cmd_validate(vl_coloring, vl_trace, vl_budget, vl_format);
        return cmd_selftest();
    } catch (const std::invalid_argument& e) {
        return fail_input(e.what());
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudgetAbort;
    } catch (const std::runtime_error& e) {
        // file parse failures land here
        return fail_input(e.what());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvariantViolation;
    }
}
