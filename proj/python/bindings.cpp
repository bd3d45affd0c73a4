// Python bindings for the extractor library. Results cross the boundary as
// plain dicts, strings, and ints (arbitrary precision survives via decimal
// strings), so the python side needs no wrapper types beyond Coloring.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ramsey/bounds.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/extract.hpp"
#include "ramsey/homog_search.hpp"
#include "ramsey/lemmas.hpp"
#include "ramsey/tower.hpp"
#include "ramsey/trace.hpp"
#include "ramsey/verify.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace py = pybind11;
using namespace ramsey;

namespace {

py::object big_to_py(const BigNat& v) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object opt_big(const std::optional<BigNat>& v) {
    return v ? big_to_py(*v) : py::none();
}

EvalBudget budget_from(std::optional<uint64_t> bits) {
    if (!bits) return default_budget();
    return EvalBudget{*bits};
}

Method parse_method(const std::string& name) {
    auto m = method_from_name(name);
    if (!m)
        throw std::invalid_argument(
            "unknown method '" + name +
            "' (expected ramsey, erdos-rado, cfs, or cfs-general)");
    return *m;
}

Family parse_family(const std::string& name) {
    auto f = family_from_name(name);
    if (!f)
        throw std::invalid_argument(
            "unknown bound family '" + name +
            "' (expected base, ramsey, erdos_rado, erdos_rado_tower, cfs, "
            "or cfs_tower)");
    return *f;
}

py::dict evaluation_dict(const Evaluation& e) {
    py::dict d;
    d["family"] = family_name(e.family);
    d["a"] = e.a;
    d["k"] = e.k;
    d["c"] = e.c;
    d["exact"] = opt_big(e.exact);
    d["exp_of_c"] = opt_big(e.exp_of_c);
    d["addend"] = big_to_py(e.addend);
    d["norm"] = e.norm.render();
    d["symbolic"] = e.symbolic;
    d["is_exact_ramsey"] = e.is_exact_ramsey;
    d["overflow"] = e.overflow;
    d["surrogate"] = e.surrogate;
    d["asymptotic_only"] = e.asymptotic_only;
    return d;
}

py::dict extract_dict(const ExtractResult& r) {
    py::dict d;
    d["set"] = r.set;
    d["color"] = r.color;
    d["status"] = status_name(r.status);
    d["trace"] = r.trace.serialize();
    d["work"] = r.work;
    return d;
}

py::dict validate_dict(const ValidateReport& rep) {
    py::list laws;
    for (const auto& l : rep.laws) {
        const char* res = l.result == LawCheck::kPass     ? "pass"
                          : l.result == LawCheck::kFail   ? "fail"
                                                          : "skipped";
        laws.append(py::make_tuple(l.law, res, l.detail));
    }
    py::dict d;
    d["all_pass"] = rep.all_pass;
    d["laws"] = laws;
    d["work"] = rep.work;
    d["report"] = rep.render();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Homogeneous-set extractors for colored hypergraphs, their run-trace "
        "validator, exact bound calculators, and brute-force search.";

    py::class_<Coloring>(m, "Coloring",
                         "A c-coloring of all a-subsets of {1..n}.")
        .def(py::init<int, int, int>(), py::arg("a"), py::arg("n"),
             py::arg("c"))
        .def_property_readonly("a", &Coloring::a)
        .def_property_readonly("n", &Coloring::n)
        .def_property_readonly("c", &Coloring::c)
        .def_property_readonly("edge_count", &Coloring::edge_count)
        .def("color", &Coloring::color, py::arg("edge"),
             "Color of one strictly increasing a-subset.")
        .def("set_color", &Coloring::set_color, py::arg("edge"),
             py::arg("color"))
        .def("to_text",
             [](const Coloring& col) {
                 std::ostringstream out;
                 save_coloring_text(col, out);
                 return out.str();
             })
        .def_static("from_text",
                    [](const std::string& text) {
                        std::istringstream in(text);
                        return load_coloring_text(in);
                    },
                    py::arg("text"))
        .def_static("load_file",
                    [](const std::string& path) {
                        std::ifstream in(path, std::ios::binary);
                        if (!in)
                            throw std::invalid_argument("cannot open " + path);
                        return load_coloring_any(in);
                    },
                    py::arg("path"), "Load either the text or binary format.")
        .def("save_file",
             [](const Coloring& col, const std::string& path, bool binary) {
                 std::ofstream out(path, std::ios::binary);
                 if (!out)
                     throw std::invalid_argument("cannot open " + path);
                 if (binary)
                     save_coloring_binary(col, out);
                 else
                     save_coloring_text(col, out);
             },
             py::arg("path"), py::arg("binary") = false)
        .def("__repr__", [](const Coloring& col) {
            std::ostringstream out;
            out << "Coloring(a=" << col.a() << ", n=" << col.n()
                << ", c=" << col.c() << ")";
            return out.str();
        });

    m.def("random_coloring", &random_coloring, py::arg("n"), py::arg("a"),
          py::arg("c"), py::arg("seed"),
          "Uniform independent edge colors; identical for a seed everywhere.");

    m.def("is_homogeneous",
          [](const Coloring& col, const std::vector<int>& H) -> py::object {
              auto r = is_homogeneous(col, H);
              return r ? py::cast(*r) : py::none();
          },
          py::arg("coloring"), py::arg("vertices"),
          "Shared color of all a-subsets of the set, or None.");

    m.def("extract",
          [](const std::string& method, const Coloring& col, int k,
             bool true_max_inner, int search_max_points,
             uint64_t detect_budget) {
              ExtractOptions opt;
              opt.true_max_inner = true_max_inner;
              opt.search_max_points = search_max_points;
              opt.detect_budget = detect_budget;
              return extract_dict(extract(parse_method(method), col, k, opt));
          },
          py::arg("method"), py::arg("coloring"), py::arg("k"),
          py::arg("true_max_inner") = false, py::arg("search_max_points") = 24,
          py::arg("detect_budget") = uint64_t{50'000'000},
          "Run one extractor; returns set, color, status, trace, work.");

    m.def("validate",
          [](const Coloring& col, const std::string& trace_text,
             uint64_t budget) {
              return validate_dict(
                  validate_run(col, Trace::parse_string(trace_text), budget));
          },
          py::arg("coloring"), py::arg("trace"),
          py::arg("budget") = uint64_t{200'000'000},
          "Replay a serialized run against its coloring and re-check every "
          "construction law.");

    m.def("check_witness",
          [](const Coloring& col, int k, uint64_t budget) {
              auto w = check_witness(col, k, budget);
              const char* st = w.status == WitnessCheck::kConfirmed ? "confirmed"
                               : w.status == WitnessCheck::kRefuted ? "refuted"
                                                                    : "indeterminate";
              py::dict d;
              d["status"] = st;
              d["homog"] = w.homog;
              d["color"] = w.color;
              d["work"] = w.work;
              return d;
          },
          py::arg("coloring"), py::arg("k"),
          py::arg("budget") = uint64_t{100'000'000},
          "Confirmed iff the coloring has no homogeneous k-set.");

    m.def("brute_force",
          [](int a, int k, int c, int n_max, uint64_t budget) {
              RamseyQuery q;
              q.a = a;
              q.k = k;
              q.c = c;
              q.n_max = n_max;
              q.budget = budget;
              auto r = brute_force_ramsey(q);
              py::dict d;
              d["exact"] = r.exact;
              d["value"] = r.value;
              d["lo"] = r.lo;
              d["hi"] = r.hi;
              d["budget_hit"] = r.budget_hit;
              d["colorings"] = r.colorings;
              d["note"] = r.note;
              d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
              return d;
          },
          py::arg("a"), py::arg("k"), py::arg("c"), py::arg("n_max") = 64,
          py::arg("budget") = uint64_t{100'000'000},
          "Exhaustive scan for the least n forcing a homogeneous k-set.");

    m.def("bound",
          [](const std::string& family, int a, int k, int c,
             std::optional<uint64_t> bits) {
              return evaluation_dict(
                  bound(parse_family(family), a, k, c, budget_from(bits)));
          },
          py::arg("family"), py::arg("a"), py::arg("k"), py::arg("c"),
          py::arg("bits") = py::none(),
          "Evaluate one upper-bound family at R(a,k;c).");

    m.def("compare_bounds",
          [](int a, int k, int c, std::optional<uint64_t> bits) {
              py::list out;
              for (const auto& e : compare_bounds(a, k, c, budget_from(bits)))
                  out.append(evaluation_dict(e));
              return out;
          },
          py::arg("a"), py::arg("k"), py::arg("c"),
          py::arg("bits") = py::none(),
          "All applicable families, smallest bound first.");

    m.def("family_applies",
          [](const std::string& family, int a, int k, int c) {
              return family_applies(parse_family(family), a, k, c);
          },
          py::arg("family"), py::arg("a"), py::arg("k"), py::arg("c"));

    m.def("up_arrow",
          [](long c, int a, long k, std::optional<uint64_t> bits) {
              return opt_big(
                  up_arrow(BigNat(c), a, BigNat(k), budget_from(bits)));
          },
          py::arg("c"), py::arg("a"), py::arg("k"),
          py::arg("bits") = py::none(),
          "Knuth arrow c up^a k, or None past the bit budget.");

    m.def("tow",
          [](long c, const std::vector<long>& args,
             std::optional<uint64_t> bits) {
              std::vector<BigNat> xs(args.begin(), args.end());
              return opt_big(tow(BigNat(c), xs, budget_from(bits)));
          },
          py::arg("c"), py::arg("args"), py::arg("bits") = py::none(),
          "Nested tower TOW_c(b1,...,bL), or None past the bit budget.");

    m.def("tow_identity",
          [](int id, const std::vector<unsigned long>& args, unsigned long b,
             unsigned long delta, int i_pos, int c,
             std::optional<uint64_t> bits) -> py::object {
              IdentityBindings bind;
              bind.args = args;
              bind.b = b;
              bind.delta = delta;
              bind.i_pos = i_pos;
              bind.c = c;
              auto r = tow_identity(id, bind, budget_from(bits));
              if (!r) return py::none();
              py::dict d;
              d["lhs"] = big_to_py(r->lhs);
              d["rhs"] = big_to_py(r->rhs);
              d["is_equality"] = r->is_equality;
              d["holds"] = r->holds;
              return d;
          },
          py::arg("id"), py::arg("args"), py::arg("b") = 1ul,
          py::arg("delta") = 0ul, py::arg("i_pos") = 1, py::arg("c") = 2,
          py::arg("bits") = py::none(),
          "Check one tower rewrite identity at concrete bindings.");

    m.def("sigma_sum_exact",
          [](int c, int k, long total_cap, unsigned long cap) {
              return opt_big(sigma_sum_exact(c, k, total_cap, cap));
          },
          py::arg("c"), py::arg("k"), py::arg("total_cap") = -1l,
          py::arg("cap") = 10'000'000ul,
          "Closed multinomial route for the bounded-repetition string sum.");

    m.def("sigma_sum_enumerated",
          [](int c, int k, long total_cap, unsigned long cap) {
              return opt_big(sigma_sum_enumerated(c, k, total_cap, cap));
          },
          py::arg("c"), py::arg("k"), py::arg("total_cap") = -1l,
          py::arg("cap") = 10'000'000ul,
          "Brute enumeration route for the same sum.");

    m.def("sigma_bound",
          [](int c, int k, unsigned prec_bits) {
              auto b = sigma_bound(c, k, prec_bits);
              py::dict d;
              d["closed_form_ceil"] = big_to_py(b.closed_form_ceil);
              d["two_color_ceil"] = opt_big(b.two_color_ceil);
              d["two_color_shifted_ceil"] = opt_big(b.two_color_shifted_ceil);
              return d;
          },
          py::arg("c"), py::arg("k"), py::arg("prec_bits") = 192u,
          "Outward-rounded closed-form ceilings for the string sum.");

    m.def("pascal_second_identity",
          [](int a, int n) {
              auto p = pascal_second_identity(a, n);
              py::dict d;
              d["lhs"] = big_to_py(p.lhs);
              d["rhs"] = big_to_py(p.rhs);
              d["equal"] = p.equal;
              return d;
          },
          py::arg("a"), py::arg("n"));

    m.def("stirling_bracket",
          [](int n, unsigned prec_bits) {
              auto s = stirling_bracket(n, prec_bits);
              py::dict d;
              d["factorial"] = big_to_py(s.factorial);
              d["verified"] = s.verified;
              return d;
          },
          py::arg("n"), py::arg("prec_bits") = 192u,
          "n! against its outward-rounded analytic brackets.");

    m.def("hyper_edge_sum_exact",
          [](int a, int c, int k, unsigned long cap) -> py::object {
              auto h = hyper_edge_sum_exact(a, c, k, cap);
              if (!h) return py::none();
              py::list per_m;
              for (const auto& v : h->per_m) per_m.append(big_to_py(v));
              py::dict d;
              d["total"] = big_to_py(h->total);
              d["forced_at"] = h->forced_at;
              d["per_m"] = per_m;
              return d;
          },
          py::arg("a"), py::arg("c"), py::arg("k"),
          py::arg("cap") = 10'000'000ul,
          "Edge-count sum over homogeneous-free lower-arity colorings.");

    m.def("hyper_edge_sum_bound",
          [](int a, int c, int r) {
              return opt_big(hyper_edge_sum_bound(a, c, r));
          },
          py::arg("a"), py::arg("c"), py::arg("r"),
          "r^{a-1} * c^{r^{a-2}}, dominating the exact sum.");
}
