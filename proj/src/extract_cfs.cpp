#include "ramsey/extract.hpp"

#include "ramsey/homog_search.hpp"
#include "ramsey/partial_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ramsey {

namespace {

std::string dotted(const std::vector<int>& xs) { return join_ints(xs, '.'); }

// indices whose pairwise-through-r subsets are all colored alike, searched
// over a partially colored index graph; uncolored subsets block a candidate
struct StopSearch {
    enum { kFound, kNone, kAborted } status = kNone;
    std::vector<int> set;
    int color = -1;
};

StopSearch mono_defined(
    const std::vector<int>& verts, int r,
    const std::function<std::optional<int>(const std::vector<int>&)>& edge_color,
    int s, int guard_points, uint64_t budget, uint64_t& work) {
    StopSearch out;
    if (static_cast<int>(verts.size()) < s) return out;
    if (r >= 2 && static_cast<int>(verts.size()) > guard_points) {
        out.status = StopSearch::kAborted;
        return out;
    }
    HomogSearch h = find_homogeneous_in(verts, r, edge_color, s, budget);
    work += h.work;
    if (h.status == HomogSearch::kIndeterminate) out.status = StopSearch::kAborted;
    else if (h.status == HomogSearch::kFound) {
        out.status = StopSearch::kFound;
        out.set = h.set;
        out.color = h.color;
    }
    return out;
}

// trace helpers shared by both fingerprint extractors so that at a = 3 the
// two emit byte-identical records
struct CfsEmit {
    ExtractResult* res;
    int a, k, c;

    void meta(const char* method, int n) const {
        res->trace.push("meta")
            .add("method", method)
            .add("a", a)
            .add("k", k)
            .add("c", c)
            .add("n", n);
    }
    void stage(int i, int x, size_t vb) const {
        res->trace.push("stage").add("i", i).add("x", x).add(
            "vb", static_cast<long long>(vb));
    }
    void event(const std::vector<int>& J, int col, size_t vb,
               const std::vector<int>& V) const {
        res->trace.push("event")
            .add("kind", "color")
            .add("J", dotted(J))
            .add("col", col)
            .add("vb", static_cast<long long>(vb))
            .add("va", static_cast<long long>(V.size()))
            .add("v", join_ints(V));
    }
    void g(int i, const std::string& edges) const {
        res->trace.push("g").add("i", i).add("e", edges);
    }
    void end(int i, const std::vector<int>& V) const {
        res->trace.push("end")
            .add("i", i)
            .add("va", static_cast<long long>(V.size()))
            .add("v", join_ints(V));
    }
};

// assemble the run result from a stop decision; `hit` holds indices into X
// and the stage whose vertex closes the set
void finish_cfs(ExtractResult& res, const CfsEmit& em, const std::vector<int>& X,
                const std::optional<std::pair<StopSearch, int>>& hit,
                bool aborted, int last_stage) {
    if (aborted) {
        res.trace.push("stop").add("reason", "budget").add("i", last_stage);
        res.status = ExtractStatus::kAborted;
        res.trace.push("result").add("h", "-").add("color", "-").add(
            "status", status_name(res.status));
        return;
    }
    if (hit) {
        const auto& [mono, t] = *hit;
        for (int idx : mono.set) res.set.push_back(X[idx - 1]);
        res.set.push_back(X[t - 1]);
        res.color = static_cast<int>(res.set.size()) >= em.a ? mono.color : -1;
    }
    res.status = static_cast<int>(res.set.size()) >= em.k
                     ? ExtractStatus::kOk
                     : ExtractStatus::kBelowTarget;
    res.trace.push("result")
        .add("h", join_ints(res.set))
        .add("color", res.color < 0 ? "-" : std::to_string(res.color))
        .add("status", status_name(res.status));
}

// best set the fingerprints certify once the pool is exhausted: a largest
// same-colored fully-defined index set in some G_t plus that stage's vertex
std::optional<std::pair<StopSearch, int>> best_effort(
    int last_stage, int r, int k,
    const std::function<std::vector<int>(int)>& verts_of,
    const std::function<std::function<std::optional<int>(const std::vector<int>&)>(int)>&
        oracle_of,
    const ExtractOptions& opt, uint64_t& work, Trace& trace) {
    int best_size = -1, best_t = -1;
    StopSearch best;
    for (int t = 1; t <= last_stage; ++t) {
        std::vector<int> verts = verts_of(t);
        auto oracle = oracle_of(t);
        int cap = std::min<int>(k - 2, static_cast<int>(verts.size()));
        for (int s = cap; s >= 1; --s) {
            if (s <= best_size) break;
            StopSearch got = mono_defined(verts, r, oracle, s, opt.search_max_points,
                                          opt.detect_budget, work);
            if (got.status == StopSearch::kFound) {
                best = got;
                best_size = s;
                best_t = t;
                break;
            }
            if (got.status == StopSearch::kAborted) break; // skip this stage's graph
        }
    }
    if (best_t < 0) {
        if (last_stage == 0) return std::nullopt;
        best.set = {};
        best.color = -1;
        best_t = 1; // no colored fingerprint anywhere: fall back to one vertex
    }
    trace.push("append")
        .add("t", best_t)
        .add("set", join_ints(best.set))
        .add("col", best.color < 0 ? "-" : std::to_string(best.color))
        .add("x", "@"); // filled by the caller, which knows X
    return std::make_pair(best, best_t);
}

} // namespace

ExtractResult extract_cfs3(const Coloring& col, int k, const ExtractOptions& opt) {
    detail::check_extract_args(col, k);
    const int a = col.a(), n = col.n(), c = col.c();
    if (a != 3) throw std::invalid_argument("extract_cfs3: arity must be 3");

    ExtractResult res;
    CfsEmit em{&res, a, k, c};
    em.meta("cfs3", n);

    std::vector<int> V(n);
    std::iota(V.begin(), V.end(), 1);
    std::vector<int> X;
    std::vector<std::vector<std::pair<int, int>>> G(1); // G[i] = fingerprint of stage i

    auto oracle_of = [&](int t) {
        return std::function<std::optional<int>(const std::vector<int>&)>(
            [&G, t](const std::vector<int>& e) -> std::optional<int> {
                for (const auto& [j, cc] : G[t])
                    if (j == e[0]) return cc;
                return std::nullopt;
            });
    };
    auto verts_of = [&](int t) {
        std::vector<int> v;
        for (const auto& [j, cc] : G[t]) v.push_back(j);
        return v;
    };

    for (int i = 1;; ++i) {
        if (i >= 2) {
            StopSearch hit = mono_defined(verts_of(i - 1), 1, oracle_of(i - 1), k - 1,
                                          opt.search_max_points, opt.detect_budget,
                                          res.work);
            if (hit.status == StopSearch::kAborted) {
                finish_cfs(res, em, X, std::nullopt, true, i - 1);
                return res;
            }
            if (hit.status == StopSearch::kFound) {
                res.trace.push("stop")
                    .add("reason", "target")
                    .add("i", i - 1)
                    .add("set", join_ints(hit.set))
                    .add("col", hit.color);
                finish_cfs(res, em, X, std::make_pair(hit, i - 1), false, i - 1);
                return res;
            }
        }
        if (V.empty()) {
            res.trace.push("stop").add("reason", "exhausted").add("i", i - 1);
            auto pick = best_effort(
                i - 1, 1, k, verts_of, oracle_of, opt, res.work, res.trace);
            if (pick) res.trace.recs.back().set("x", std::to_string(X[pick->second - 1]));
            finish_cfs(res, em, X, pick, false, i - 1);
            return res;
        }

        int x = V.front();
        V.erase(V.begin());
        X.push_back(x);
        em.stage(i, x, V.size());

        std::vector<std::pair<int, int>> Gi;
        for (int j = 1; j < i; ++j) {
            if (G[j] != Gi) continue; // fingerprints must match exactly
            if (V.empty()) break;     // pool died: the rest stays uncolored
            size_t vb = V.size();
            auto [mcol, next] = majority_class(
                V,
                [&](int y) {
                    ++res.work;
                    return col.color({X[j - 1], x, y});
                },
                c);
            V = std::move(next);
            Gi.emplace_back(j, mcol);
            em.event({j}, mcol, vb, V);
        }
        G.push_back(std::move(Gi));

        std::string ge;
        for (const auto& [j, cc] : G[i]) {
            if (!ge.empty()) ge += ',';
            ge += std::to_string(j) + "=" + std::to_string(cc);
        }
        em.g(i, ge.empty() ? "-" : ge);
        em.end(i, V);
    }
}

ExtractResult extract_cfs_general(const Coloring& col, int k,
                                  const ExtractOptions& opt) {
    detail::check_extract_args(col, k);
    const int a = col.a(), n = col.n(), c = col.c();
    if (a < 3) throw std::invalid_argument("extract_cfs_general: needs arity at least 3");
    const int r = a - 2;

    ExtractResult res;
    CfsEmit em{&res, a, k, c};
    em.meta("cfs_general", n);

    std::vector<int> V(n);
    std::iota(V.begin(), V.end(), 1);
    std::vector<int> X;
    std::vector<PartialColoredGraph> G;
    G.emplace_back(r); // index 0 unused

    auto oracle_of = [&](int t) {
        return std::function<std::optional<int>(const std::vector<int>&)>(
            [&G, t](const std::vector<int>& e) { return G[t].edge_color(e); });
    };
    auto verts_of = [&](int t) { return G[t].vertices(); };

    for (int i = 1;; ++i) {
        if (i >= 2) {
            StopSearch hit = mono_defined(verts_of(i - 1), r, oracle_of(i - 1), k - 1,
                                          opt.search_max_points, opt.detect_budget,
                                          res.work);
            if (hit.status == StopSearch::kAborted) {
                finish_cfs(res, em, X, std::nullopt, true, i - 1);
                return res;
            }
            if (hit.status == StopSearch::kFound) {
                res.trace.push("stop")
                    .add("reason", "target")
                    .add("i", i - 1)
                    .add("set", join_ints(hit.set))
                    .add("col", hit.color);
                finish_cfs(res, em, X, std::make_pair(hit, i - 1), false, i - 1);
                return res;
            }
        }
        if (V.empty()) {
            res.trace.push("stop").add("reason", "exhausted").add("i", i - 1);
            auto pick = best_effort(
                i - 1, r, k, verts_of, oracle_of, opt, res.work, res.trace);
            if (pick) res.trace.recs.back().set("x", std::to_string(X[pick->second - 1]));
            finish_cfs(res, em, X, pick, false, i - 1);
            return res;
        }

        int x = V.front();
        V.erase(V.begin());
        X.push_back(x);
        em.stage(i, x, V.size());

        PartialColoredGraph Gi(r);
        // qualification memo: an index's verdict cannot change later in the
        // stage, because subsets are swept in colex order (nondecreasing max)
        // and a verdict about j reads only edges strictly below j
        std::vector<int8_t> memo(static_cast<size_t>(i), -1);
        auto qualifies = [&](int j) {
            if (memo[j] < 0) memo[j] = agree_prefix(G[j], Gi, j) ? 1 : 0;
            return memo[j] == 1;
        };

        std::vector<int> edge(a);
        for_each_combination(i - 1, r, [&](const std::vector<int>& idx) {
            std::vector<int> J(r);
            for (int t = 0; t < r; ++t) J[t] = idx[t] + 1;
            for (int j : J)
                if (!qualifies(j)) return true;
            if (V.empty()) return false; // pool died: the rest stays uncolored
            for (int t = 0; t < r; ++t) edge[t] = X[J[t] - 1];
            edge[a - 2] = x;
            size_t vb = V.size();
            auto [mcol, next] = majority_class(
                V,
                [&](int y) {
                    edge[a - 1] = y;
                    ++res.work;
                    return col.color(edge);
                },
                c);
            V = std::move(next);
            Gi.set_edge(J, mcol);
            em.event(J, mcol, vb, V);
            return true;
        });
        G.push_back(std::move(Gi));

        std::string ge;
        for (const auto& [J, cc] : G[i].edges()) {
            if (!ge.empty()) ge += ',';
            ge += dotted(J) + "=" + std::to_string(cc);
        }
        em.g(i, ge.empty() ? "-" : ge);
        em.end(i, V);
    }
}

} // namespace ramsey
