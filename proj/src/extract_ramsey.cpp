#include "ramsey/extract.hpp"

#include "ramsey/homog_search.hpp"

#include <numeric>
#include <stdexcept>

namespace ramsey {

const char* status_name(ExtractStatus s) {
    switch (s) {
        case ExtractStatus::kOk: return "ok";
        case ExtractStatus::kBelowTarget: return "below_target";
        case ExtractStatus::kAborted: return "aborted";
    }
    return "?";
}

const char* method_name(Method m) {
    switch (m) {
        case Method::kRamsey: return "ramsey";
        case Method::kErdosRado: return "erdos_rado";
        case Method::kCfs3: return "cfs3";
        case Method::kCfsGeneral: return "cfs_general";
    }
    return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "ramsey") return Method::kRamsey;
    if (name == "erdos-rado" || name == "erdos_rado") return Method::kErdosRado;
    if (name == "cfs" || name == "cfs3") return Method::kCfs3;
    if (name == "cfs-general" || name == "cfs_general") return Method::kCfsGeneral;
    return std::nullopt;
}

ExtractResult extract(Method m, const Coloring& col, int k,
                      const ExtractOptions& opt) {
    switch (m) {
        case Method::kRamsey: return extract_ramsey(col, k, opt);
        case Method::kErdosRado: return extract_erdos_rado(col, k, opt);
        case Method::kCfs3: return extract_cfs3(col, k, opt);
        case Method::kCfsGeneral: return extract_cfs_general(col, k, opt);
    }
    throw std::invalid_argument("extract: unknown method");
}

namespace detail {

void check_extract_args(const Coloring& col, int k) {
    if (col.a() < 1) throw std::invalid_argument("extract: arity must be at least 1");
    if (col.c() < 1) throw std::invalid_argument("extract: need at least one color");
    if (k < col.a())
        throw std::invalid_argument(
            "extract: a target below the arity is vacuously met; sizes start at the arity");
}

} // namespace detail

namespace {

// Coloring induced on pts by the a-subsets through x: inner edge E (labels
// 1..|pts|) gets the color of {x} ∪ pts[E]. Requires x < min(pts).
Coloring project_through(const Coloring& col, int x, const std::vector<int>& pts,
                         uint64_t& work) {
    int r = col.a() - 1;
    Coloring inner(r, static_cast<int>(pts.size()), col.c());
    std::vector<int> edge(col.a());
    edge[0] = x;
    uint64_t rank = 0;
    for_each_combination(static_cast<int>(pts.size()), r,
                         [&](const std::vector<int>& idx) {
                             for (int t = 0; t < r; ++t) edge[t + 1] = pts[idx[t]];
                             inner.set_color_by_rank(rank++, col.color(edge));
                             ++work;
                             return true;
                         });
    return inner;
}

// exhaustive maximum homogeneous set of the inner coloring; nullopt when the
// search ran out of budget
std::optional<std::pair<std::vector<int>, int>> true_max_set(
    const Coloring& inner, uint64_t budget, uint64_t& work) {
    for (int t = inner.n(); t >= inner.a(); --t) {
        HomogSearch s = find_homogeneous_subset(inner, t, budget);
        work += s.work;
        if (s.status == HomogSearch::kIndeterminate) return std::nullopt;
        if (s.status == HomogSearch::kFound) return std::make_pair(s.set, s.color);
    }
    return std::make_pair(std::vector<int>{}, -1);
}

} // namespace

ExtractResult extract_ramsey(const Coloring& col, int k, const ExtractOptions& opt) {
    detail::check_extract_args(col, k);
    const int a = col.a(), n = col.n(), c = col.c();

    ExtractResult res;
    res.trace.push("meta")
        .add("method", "ramsey")
        .add("a", a)
        .add("k", k)
        .add("c", c)
        .add("n", n);

    if (a == 1) {
        std::vector<int> pts(n);
        std::iota(pts.begin(), pts.end(), 1);
        auto [mcol, mset] = majority_class(
            pts,
            [&](int v) {
                ++res.work;
                return col.color({v});
            },
            c);
        res.trace.push("event")
            .add("kind", "majority")
            .add("col", mset.empty() ? "-" : std::to_string(mcol))
            .add("vb", n)
            .add("va", static_cast<long long>(mset.size()))
            .add("v", join_ints(mset));
        res.set = mset;
        res.color = mset.empty() ? -1 : mcol;
        res.status = static_cast<int>(mset.size()) >= k ? ExtractStatus::kOk
                                                        : ExtractStatus::kBelowTarget;
        res.trace.push("result")
            .add("h", join_ints(res.set))
            .add("color", res.color < 0 ? "-" : std::to_string(res.color))
            .add("status", status_name(res.status));
        return res;
    }

    std::vector<int> V(n);
    std::iota(V.begin(), V.end(), 1);

    struct Stage {
        int i, x, col;
    };
    std::vector<Stage> stages;

    int i = 0;
    while (!V.empty()) {
        ++i;
        int x = V.front();
        V.erase(V.begin());
        res.trace.push("stage").add("i", i).add("x", x).add(
            "vb", static_cast<long long>(V.size()));

        int scol = -1;
        if (static_cast<int>(V.size()) >= a - 1) {
            Coloring inner = project_through(col, x, V, res.work);
            std::vector<int> hin;
            int icol = -1;
            bool solved = false;
            if (opt.true_max_inner && inner.n() <= 20) {
                if (auto best = true_max_set(inner, opt.detect_budget, res.work)) {
                    hin = best->first;
                    icol = best->second;
                    solved = true;
                }
            }
            if (!solved) {
                ExtractResult sub = extract_ramsey(inner, a - 1, opt);
                res.work += sub.work;
                hin = sub.set;
                icol = sub.color;
                if (icol < 0 && !hin.empty()) {
                    // a set below the inner arity leaves the result color
                    // unset, but the pigeonhole class it came from still has
                    // one, and that class color is the stage color
                    if (const TraceRec* php = sub.trace.find("php")) {
                        auto pc = php->get("color");
                        if (pc && *pc != "-") icol = std::stoi(*pc);
                    }
                }
            }
            std::vector<int> keep;
            keep.reserve(hin.size());
            for (int l : hin) keep.push_back(V[l - 1]);
            V = keep;
            scol = icol;
        }
        // |V| < a-1 leaves nothing to recolor: the stage only consumes x

        stages.push_back({i, x, scol});
        res.trace.push("end")
            .add("i", i)
            .add("col", scol < 0 ? "-" : std::to_string(scol))
            .add("va", static_cast<long long>(V.size()))
            .add("v", join_ints(V));
    }
    res.trace.push("stop").add("reason", "exhausted").add("i", i);

    // pigeonhole over the stage colors; ties go to the smallest color
    std::vector<std::vector<int>> groups(c);
    for (size_t s = 0; s < stages.size(); ++s)
        if (stages[s].col >= 0) groups[stages[s].col].push_back(static_cast<int>(s));
    int best = -1;
    for (int col2 = 0; col2 < c; ++col2)
        if (best < 0 || groups[col2].size() > groups[best].size()) best = col2;
    if (best >= 0 && groups[best].empty()) best = -1;

    std::vector<int> hstages;
    if (best >= 0) {
        for (int s : groups[best]) {
            hstages.push_back(stages[s].i);
            res.set.push_back(stages[s].x);
        }
    }
    res.trace.push("php")
        .add("color", best < 0 ? "-" : std::to_string(best))
        .add("stages", join_ints(hstages));

    res.color = static_cast<int>(res.set.size()) >= a ? best : -1;
    res.status = static_cast<int>(res.set.size()) >= k ? ExtractStatus::kOk
                                                       : ExtractStatus::kBelowTarget;
    res.trace.push("result")
        .add("h", join_ints(res.set))
        .add("color", res.color < 0 ? "-" : std::to_string(res.color))
        .add("status", status_name(res.status));
    return res;
}

} // namespace ramsey
