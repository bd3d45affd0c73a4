#include "ramsey/verify.hpp"

#include "ramsey/bignum.hpp"
#include "ramsey/combinatorics.hpp"
#include "ramsey/homog_search.hpp"
#include "ramsey/partial_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ramsey {

std::string ValidateReport::render() const {
    std::string out;
    for (const auto& l : laws) {
        out += l.law;
        out += ": ";
        out += l.result == LawCheck::kPass     ? "pass"
               : l.result == LawCheck::kFail   ? "FAIL"
                                               : "skipped";
        if (!l.detail.empty()) {
            out += " (";
            out += l.detail;
            out += ")";
        }
        out += '\n';
    }
    out += all_pass ? "all-pass\n" : "violations found\n";
    return out;
}

namespace {

[[noreturn]] void malformed(const std::string& why) {
    throw std::invalid_argument("validate_run: malformed trace: " + why);
}

struct Checker {
    ValidateReport rep;
    uint64_t budget;
    bool over = false;
    std::map<std::string, size_t> idx;

    LawCheck& law(const std::string& name) {
        auto it = idx.find(name);
        if (it == idx.end()) {
            idx.emplace(name, rep.laws.size());
            rep.laws.push_back({name, LawCheck::kPass, ""});
            return rep.laws.back();
        }
        return rep.laws[it->second];
    }
    void fail(const std::string& name, const std::string& detail) {
        LawCheck& l = law(name);
        if (l.result != LawCheck::kFail) {
            l.result = LawCheck::kFail;
            l.detail = detail;
        }
        rep.all_pass = false;
    }
    void skip(const std::string& name, const std::string& why) {
        LawCheck& l = law(name);
        if (l.result == LawCheck::kPass) {
            l.result = LawCheck::kSkipped;
            l.detail = why;
        }
    }
    // probe accounting; false once the budget is gone
    bool charge(uint64_t n) {
        rep.work += n;
        if (rep.work > budget) over = true;
        return !over;
    }
};

// sequential cursor over trace records
struct Cursor {
    const std::vector<TraceRec>& recs;
    size_t pos = 0;

    bool at(const char* kind) const {
        return pos < recs.size() && recs[pos].kind == kind;
    }
    const TraceRec& need(const char* kind) {
        if (!at(kind))
            malformed(std::string("expected '") + kind + "' record at index " +
                      std::to_string(pos));
        return recs[pos++];
    }
    const TraceRec& take() {
        if (pos >= recs.size()) malformed("unexpected end of trace");
        return recs[pos++];
    }
    bool done() const { return pos >= recs.size(); }
};

std::vector<int> field_list(const TraceRec& r, const char* key, char sep = ',') {
    auto v = r.get(key);
    if (!v) malformed(std::string("missing field ") + key + " in '" + r.kind + "'");
    return split_ints(*v, sep);
}

std::string field_str(const TraceRec& r, const char* key) {
    auto v = r.get(key);
    if (!v) malformed(std::string("missing field ") + key + " in '" + r.kind + "'");
    return *v;
}

// "-" or a color index
int field_opt_color(const TraceRec& r, const char* key) {
    std::string v = field_str(r, key);
    if (v == "-") return -1;
    return static_cast<int>(r.geti(key));
}

bool strictly_increasing(const std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1]) return false;
    return true;
}

bool subset_of_sorted(const std::vector<int>& sub, const std::vector<int>& super) {
    size_t j = 0;
    for (int x : sub) {
        while (j < super.size() && super[j] < x) ++j;
        if (j == super.size() || super[j] != x) return false;
        ++j;
    }
    return true;
}

std::string where(int stage, const std::string& what) {
    return "stage " + std::to_string(stage) + ": " + what;
}

// shared replay of one pool-halving event: recompute the majority class and
// demand an exact match of color, size, and survivor list
struct EventCheck {
    int col;
    int vb, va;
    std::vector<int> v;
};

EventCheck read_event(const TraceRec& r) {
    EventCheck e;
    e.col = field_opt_color(r, "col");
    e.vb = static_cast<int>(r.geti("vb"));
    e.va = static_cast<int>(r.geti("va"));
    e.v = field_list(r, "v");
    return e;
}

// declared survivors may only be adopted once they prove to come from the
// pool; anything else is cut away so later replay never touches a vertex
// outside [1..n]
void adopt_survivors(Checker& ck, int stage, const std::vector<int>& v,
                     std::vector<int>& pool) {
    if (subset_of_sorted(v, pool)) {
        pool = v;
        return;
    }
    ck.fail("event_shape", where(stage, "survivors are not drawn from the pool"));
    std::vector<int> cut;
    size_t j = 0;
    for (int y : v) {
        while (j < pool.size() && pool[j] < y) ++j;
        if (j < pool.size() && pool[j] == y) cut.push_back(y);
    }
    pool = std::move(cut);
}

void replay_event(Checker& ck, int stage, const EventCheck& e,
                  std::vector<int>& pool, int c,
                  const std::function<int(int)>& point_color) {
    if (e.vb != static_cast<int>(pool.size()))
        ck.fail("stage_order", where(stage, "event vb=" + std::to_string(e.vb) +
                                                " but pool has " +
                                                std::to_string(pool.size())));
    if (e.va != static_cast<int>(e.v.size()))
        ck.fail("event_shape", where(stage, "event va disagrees with its v list"));
    if (!strictly_increasing(e.v))
        ck.fail("event_shape", where(stage, "event v list is not increasing"));
    // majority size law holds even if the replay below is skipped
    if (e.va < (static_cast<int>(pool.size()) + c - 1) / c)
        ck.fail("halving_law",
                where(stage, "class smaller than a majority share: " +
                                 std::to_string(e.va) + " of " +
                                 std::to_string(pool.size())));
    if (!ck.charge(pool.size())) {
        ck.skip("event_majority", "budget exhausted");
        adopt_survivors(ck, stage, e.v, pool);
        return;
    }
    if (pool.empty()) {
        ck.fail("event_shape", where(stage, "event over an empty pool"));
    } else {
        auto [mcol, cls] = majority_class(pool, point_color, c);
        if (mcol != e.col || cls != e.v)
            ck.fail("event_majority",
                    where(stage, "declared class (col=" + std::to_string(e.col) +
                                     ", size " + std::to_string(e.v.size()) +
                                     ") is not the majority class (col=" +
                                     std::to_string(mcol) + ", size " +
                                     std::to_string(cls.size()) + ")"));
    }
    adopt_survivors(ck, stage, e.v, pool);
}

struct RunHeader {
    std::string method;
    int a, k, c, n;
};

RunHeader read_meta(Checker& ck, Cursor& cur, const Coloring& col) {
    const TraceRec& m = cur.need("meta");
    RunHeader h;
    h.method = field_str(m, "method");
    h.a = static_cast<int>(m.geti("a"));
    h.k = static_cast<int>(m.geti("k"));
    h.c = static_cast<int>(m.geti("c"));
    h.n = static_cast<int>(m.geti("n"));
    if (h.a != col.a() || h.c != col.c() || h.n != col.n())
        ck.fail("meta", "trace (a,c,n)=(" + std::to_string(h.a) + "," +
                            std::to_string(h.c) + "," + std::to_string(h.n) +
                            ") does not match the coloring (" +
                            std::to_string(col.a()) + "," + std::to_string(col.c()) +
                            "," + std::to_string(col.n()) + ")");
    if (h.k < h.a) ck.fail("meta", "target below the arity");
    return h;
}

void check_result(Checker& ck, const Coloring& col, const RunHeader& h,
                  const TraceRec& res, const std::vector<int>& expect_h,
                  int expect_color) {
    std::vector<int> got = field_list(res, "h");
    int rcol = field_opt_color(res, "color");
    std::string status = field_str(res, "status");

    if (got != expect_h)
        ck.fail("assembly", "result set differs from the assembled one");
    bool shaped = strictly_increasing(got) &&
                  (got.empty() || (got.front() >= 1 && got.back() <= h.n));
    if (!shaped)
        ck.fail("assembly", "result set is not an increasing vertex list in range");

    if (static_cast<int>(got.size()) >= h.a) {
        uint64_t cost = 1;
        for (int t = 0; t < h.a; ++t) cost *= (got.size() - t);
        if (!shaped) {
            // nothing to probe: the set does not name vertices
        } else if (ck.charge(cost)) {
            auto hc = is_homogeneous(col, got);
            if (!hc)
                ck.fail("homogeneity", "result set is not homogeneous");
            else if (*hc != rcol)
                ck.fail("homogeneity", "result color " + std::to_string(rcol) +
                                           " but the set is " +
                                           std::to_string(*hc) + "-homogeneous");
        } else {
            ck.skip("homogeneity", "budget exhausted");
        }
        if (rcol != expect_color)
            ck.fail("assembly", "result color differs from the assembled one");
    } else if (rcol != -1) {
        ck.fail("homogeneity", "color declared for a set below the arity");
    }

    if (status != "aborted") {
        const char* s =
            static_cast<int>(got.size()) >= h.k ? "ok" : "below_target";
        if (status != s)
            ck.fail("assembly", std::string("status should be ") + s);
    }
}

// ---------------------------------------------------------------- ramsey --

void validate_majority_run(Checker& ck, Cursor& cur, const Coloring& col,
                           const RunHeader& h) {
    const TraceRec& ev = cur.need("event");
    if (field_str(ev, "kind") != "majority") malformed("a=1 run without majority event");
    EventCheck e = read_event(ev);
    std::vector<int> pool(h.n);
    std::iota(pool.begin(), pool.end(), 1);
    if (h.n > 0) {
        replay_event(ck, 1, e, pool, h.c, [&](int y) { return col.color({y}); });
    } else if (e.va != 0 || !e.v.empty()) {
        ck.fail("event_shape", "nonempty class over an empty point set");
    }
    int ecol = e.col;
    check_result(ck, col, h, cur.need("result"), e.v,
                 static_cast<int>(e.v.size()) >= h.a ? ecol : -1);
}

void validate_ramsey(Checker& ck, Cursor& cur, const Coloring& col,
                     const RunHeader& h) {
    if (h.a == 1) {
        validate_majority_run(ck, cur, col, h);
        return;
    }
    std::vector<int> pool(h.n);
    std::iota(pool.begin(), pool.end(), 1);

    struct Stage {
        int i, x, col;
    };
    std::vector<Stage> stages;

    while (cur.at("stage")) {
        const TraceRec& st = cur.take();
        // indices below run on the lawful stage counter so a lying i field
        // cannot steer any lookup
        int i = static_cast<int>(stages.size()) + 1;
        int vb = static_cast<int>(st.geti("vb"));
        if (st.geti("i") != i)
            ck.fail("stage_order", where(i, "stage numbers must be consecutive"));
        if (pool.empty()) {
            ck.fail("stage_order", where(i, "stage after the pool emptied"));
            break;
        }
        // the lawful stage vertex is the least pool element; replay sticks to
        // it so a lying record cannot steer probes outside the coloring
        int x = pool.front();
        if (st.geti("x") != x)
            ck.fail("stage_order",
                    where(i, "x=" + std::to_string(st.geti("x")) +
                                 " is not the least pool vertex " + std::to_string(x)));
        pool.erase(pool.begin());
        if (vb != static_cast<int>(pool.size()))
            ck.fail("stage_order", where(i, "vb disagrees with the pool size"));

        const TraceRec& en = cur.need("end");
        if (en.geti("i") != i) malformed("end record out of step");
        int scol = field_opt_color(en, "col");
        if (scol >= h.c || scol < -1) {
            ck.fail("stage_homogeneity", where(i, "stage color out of range"));
            scol = -2; // poisoned: never grouped, never probed
        }
        std::vector<int> v = field_list(en, "v");
        if (static_cast<int>(v.size()) != en.geti("va"))
            ck.fail("event_shape", where(i, "end va disagrees with its v list"));
        if (!strictly_increasing(v) || !subset_of_sorted(v, pool)) {
            ck.fail("stage_order", where(i, "survivors are not a subset of the pool"));
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            std::vector<int> cut;
            size_t j = 0;
            for (int y : v) {
                while (j < pool.size() && pool[j] < y) ++j;
                if (j < pool.size() && pool[j] == y) cut.push_back(y);
            }
            v = std::move(cut);
        }

        if (scol < 0) {
            // only a pool too small to recolor may go unlabeled, and it must
            // pass through unchanged
            if (static_cast<int>(pool.size()) >= h.a - 1)
                ck.fail("stage_homogeneity",
                        where(i, "stage left uncolored despite a usable pool"));
            if (v != pool)
                ck.fail("stage_order", where(i, "unlabeled stage changed the pool"));
        } else {
            if (static_cast<int>(pool.size()) < h.a - 1)
                ck.fail("stage_order", where(i, "colored stage without enough points"));
            // KEY law: every (a-1)-subset of the survivors forms a scol-colored
            // edge with x
            uint64_t cost = 1;
            for (int t = 0; t < h.a - 1 && cost <= (uint64_t)1 << 40; ++t)
                cost *= std::max<size_t>(v.size(), 1) ;
            if (!ck.charge(cost)) {
                ck.skip("stage_homogeneity", "budget exhausted");
            } else {
                bool ok = true;
                std::vector<int> edge(h.a);
                edge[0] = x;
                for_each_subset(v, h.a - 1, [&](const std::vector<int>& A) {
                    for (int t = 0; t < h.a - 1; ++t) edge[t + 1] = A[t];
                    if (col.color(edge) != scol) {
                        ok = false;
                        return false;
                    }
                    return true;
                });
                if (!ok)
                    ck.fail("stage_homogeneity",
                            where(i, "survivors are not " + std::to_string(scol) +
                                         "-homogeneous through x=" + std::to_string(x)));
            }
        }
        pool = v;
        stages.push_back({i, x, scol});
    }

    const TraceRec& stop = cur.need("stop");
    if (field_str(stop, "reason") != "exhausted")
        ck.fail("stop_rule", "stepping runs always end by exhaustion");
    if (!pool.empty())
        ck.fail("stop_rule", "run stopped while the pool still had " +
                                 std::to_string(pool.size()) + " points");
    if (stop.geti("i") != static_cast<long long>(stages.size()))
        ck.fail("stop_rule", "stop index disagrees with the stage count");

    // pigeonhole: the largest color group, ties to the smaller color
    const TraceRec& php = cur.need("php");
    std::vector<std::vector<int>> groups(h.c);
    for (const auto& s : stages)
        if (s.col >= 0) groups[s.col].push_back(s.i);
    int best = -1;
    for (int col2 = 0; col2 < h.c; ++col2)
        if (best < 0 || groups[col2].size() > groups[best].size()) best = col2;
    if (best >= 0 && groups[best].empty()) best = -1;
    int pcol = field_opt_color(php, "color");
    std::vector<int> pstages = field_list(php, "stages");
    if (pcol != best || pstages != (best < 0 ? std::vector<int>{} : groups[best]))
        ck.fail("php", "declared group is not the largest color class of stages");

    std::vector<int> expect;
    if (best >= 0)
        for (int si : groups[best]) expect.push_back(stages[si - 1].x);
    check_result(ck, col, h, cur.need("result"), expect,
                 static_cast<int>(expect.size()) >= h.a ? best : -1);
}

// ----------------------------------------------------------- erdos-rado --

void validate_erdos_rado(Checker& ck, Cursor& cur, const Coloring& col,
                         const RunHeader& h) {
    std::vector<int> pool(h.n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> X;                      // accepted vertices
    std::map<std::vector<int>, int> table;   // (a-1)-position sets -> color
    int stage_count = 0;

    while (cur.at("stage")) {
        const TraceRec& st = cur.take();
        int i = ++stage_count; // lawful position; the i field is only checked
        if (st.geti("i") != i)
            ck.fail("stage_order", where(i, "stage numbers must be consecutive"));
        if (pool.empty()) {
            ck.fail("stage_order", where(i, "stage after the pool emptied"));
            break;
        }
        int x = pool.front(); // lawful stage vertex, whatever the record says
        if (st.geti("x") != x)
            ck.fail("stage_order", where(i, "x is not the least pool vertex"));
        pool.erase(pool.begin());
        if (st.geti("vb") != static_cast<long long>(pool.size()))
            ck.fail("stage_order", where(i, "vb disagrees with the pool size"));

        const int m_now = static_cast<int>(X.size());
        // expected sweep: all (a-2)-subsets of accepted positions, colex
        std::vector<std::vector<int>> sweep;
        for_each_combination(m_now, h.a - 2, [&](const std::vector<int>& idx) {
            std::vector<int> J(h.a - 2);
            for (int t = 0; t < h.a - 2; ++t) J[t] = idx[t] + 1;
            sweep.push_back(std::move(J));
            return true;
        });

        size_t seen = 0;
        std::vector<std::pair<std::vector<int>, int>> pending;
        while (cur.at("event")) {
            const TraceRec& ev = cur.take();
            if (field_str(ev, "kind") != "halve") malformed("wrong event kind");
            std::vector<int> A = field_list(ev, "A", '.');
            if (seen >= sweep.size()) {
                ck.fail("qualification", where(i, "more events than position subsets"));
                break;
            }
            if (A != sweep[seen])
                ck.fail("qualification",
                        where(i, "event subset out of sweep order"));
            // replay against the subset the sweep order dictates; a lying A
            // field is already flagged and cannot name foreign positions
            EventCheck e = read_event(ev);
            std::vector<int> edge(h.a);
            for (int t = 0; t < h.a - 2; ++t) edge[t] = X[sweep[seen][t] - 1];
            edge[h.a - 2] = x;
            replay_event(ck, i, e, pool, h.c, [&](int y) {
                edge[h.a - 1] = y;
                return col.color(edge);
            });
            pending.emplace_back(sweep[seen], e.col);
            ++seen;
        }

        const TraceRec& en = cur.need("end");
        if (en.geti("i") != i) malformed("end record out of step");
        int accepted = static_cast<int>(en.geti("accepted"));
        bool should_accept = seen == sweep.size();
        if (accepted != (should_accept ? 1 : 0))
            ck.fail("qualification",
                    where(i, should_accept ? "full sweep must be accepted"
                                           : "incomplete sweep must be rejected"));
        if (!should_accept && !pool.empty())
            ck.fail("qualification",
                    where(i, "sweep stopped early with a live pool"));
        std::vector<int> v = field_list(en, "v");
        if (en.geti("va") != static_cast<long long>(v.size()) || v != pool)
            ck.fail("stage_order", where(i, "end survivors disagree with the pool"));

        if (should_accept) {
            X.push_back(x);
            for (auto& [A, ecol] : pending) {
                A.push_back(m_now + 1);
                table[A] = ecol;
            }
        }
    }

    const TraceRec& stop = cur.need("stop");
    if (field_str(stop, "reason") != "exhausted" || !pool.empty())
        ck.fail("stop_rule", "halving runs end only by exhaustion");
    if (stop.geti("i") != stage_count)
        ck.fail("stop_rule", "stop index disagrees with the stage count");

    const int m = static_cast<int>(X.size());
    // every position set must have picked up a color at its top's stage
    {
        bool complete = true;
        for_each_combination(m, h.a - 1, [&](const std::vector<int>& idx) {
            std::vector<int> P(h.a - 1);
            for (int t = 0; t < h.a - 1; ++t) P[t] = idx[t] + 1;
            if (!table.count(P)) {
                complete = false;
                return false;
            }
            return true;
        });
        if (!complete)
            ck.fail("table_complete", "derived coloring misses a position set");
        else
            ck.law("table_complete");
    }

    // aggregate halving law |V_i| >= (n-1)/2^{(i-1)^2}; exact only when the
    // pool size below the first vertex is a power of two
    if (h.a == 3 && h.c == 2 && h.n >= 2) {
        BigNat base = h.n - 1;
        if (is_power_of_two(base)) {
            int i = 0;
            for (const auto& rec : cur.recs) {
                if (rec.kind != "end") continue;
                ++i;
                if (rec.geti("accepted") != 1) continue;
                BigNat lhs = BigNat(static_cast<long>(rec.geti("va")))
                             << static_cast<unsigned long>((i - 1)) *
                                    static_cast<unsigned long>(i - 1);
                if (lhs < base) {
                    ck.fail("halving_aggregate",
                            where(i, "pool fell below (n-1)/2^((i-1)^2)"));
                    break;
                }
            }
            ck.law("halving_aggregate");
        } else {
            ck.skip("halving_aggregate", "n-1 is not a power of two");
        }
    }

    // phase 2: declared positions must be homogeneous in the derived
    // coloring, the appended point must obey the append rule, and the result
    // must assemble from exactly these parts
    const TraceRec& p2 = cur.need("phase2");
    std::vector<int> pre = field_list(p2, "pre");
    std::string app = field_str(p2, "append");
    int col2 = -1;
    if (!pre.empty()) {
        if (!strictly_increasing(pre) || pre.front() < 1 || pre.back() > m)
            ck.fail("phase2", "positions out of range");
        else {
            bool ok = true;
            for_each_subset(pre, h.a - 1, [&](const std::vector<int>& P) {
                auto it = table.find(P);
                int pc = it == table.end() ? -2 : it->second;
                if (col2 == -1) col2 = pc;
                if (pc != col2 || pc == -2) {
                    ok = false;
                    return false;
                }
                return true;
            });
            if (!ok) {
                ck.fail("phase2", "positions are not homogeneous in the derived coloring");
                col2 = -1;
            }
        }
    }
    std::vector<int> expect;
    for (int p : pre)
        if (p >= 1 && p <= m) expect.push_back(X[p - 1]);
    if (app != "-") {
        int y = static_cast<int>(p2.geti("append"));
        int want = -1;
        if (!pre.empty() && pre.back() >= 1) {
            int top = pre.back();
            if (top < m) want = X[top];
            else if (!pool.empty()) want = pool.front();
        }
        if (y != want)
            ck.fail("phase2", "appended point violates the append rule");
        expect.push_back(y);
    } else if (!pre.empty() && (pre.back() < m || !pool.empty())) {
        ck.fail("phase2", "append available but skipped");
    }
    check_result(ck, col, h, cur.need("result"), expect,
                 static_cast<int>(expect.size()) >= h.a ? col2 : -1);
}

// ----------------------------------------------------------------- cfs ----

void validate_cfs(Checker& ck, Cursor& cur, const Coloring& col,
                  const RunHeader& h, uint64_t detect_budget) {
    const int r = h.a - 2;
    std::vector<int> pool(h.n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> X;
    std::vector<PartialColoredGraph> G;
    G.emplace_back(r); // index 0 unused
    std::vector<bool> completed{false};

    auto mono_in = [&](int t, int s) {
        return find_homogeneous_in(
            G[t].vertices(), r,
            [&](const std::vector<int>& e) { return G[t].edge_color(e); }, s,
            detect_budget);
    };

    int last = 0;
    bool replay_live = true;
    while (cur.at("stage")) {
        const TraceRec& st = cur.take();
        int i = ++last; // lawful position; fingerprints are indexed by it
        if (st.geti("i") != i)
            ck.fail("stage_order", where(i, "stage numbers must be consecutive"));
        if (pool.empty()) {
            ck.fail("stage_order", where(i, "stage after the pool emptied"));
            replay_live = false;
            break;
        }
        // the stop rule must not have fired before this stage ran
        if (i >= 2) {
            HomogSearch hs = mono_in(i - 1, h.k - 1);
            ck.charge(hs.work);
            if (hs.status == HomogSearch::kFound)
                ck.fail("stop_rule",
                        where(i, "previous fingerprint already held a target set"));
        }
        int x = pool.front(); // lawful stage vertex, whatever the record says
        if (st.geti("x") != x)
            ck.fail("stage_order", where(i, "x is not the least pool vertex"));
        pool.erase(pool.begin());
        if (st.geti("vb") != static_cast<long long>(pool.size()))
            ck.fail("stage_order", where(i, "vb disagrees with the pool size"));
        X.push_back(x);

        PartialColoredGraph Gi(r);
        bool full_sweep = true;
        size_t next_event = cur.pos;
        for_each_combination(i - 1, r, [&](const std::vector<int>& idx) {
            std::vector<int> J(r);
            for (int t = 0; t < r; ++t) J[t] = idx[t] + 1;
            bool qual = true;
            for (int j : J)
                if (!agree_prefix(G[j], Gi, j)) {
                    qual = false;
                    break;
                }
            if (!qual) return true;
            if (pool.empty()) {
                full_sweep = false;
                return false;
            }
            // a qualifying subset must come with a recorded halving
            if (next_event >= cur.recs.size() || cur.recs[next_event].kind != "event") {
                ck.fail("qualification",
                        where(i, "missing halving for a qualifying subset"));
                full_sweep = false;
                return false;
            }
            const TraceRec& ev = cur.recs[next_event++];
            if (field_str(ev, "kind") != "color") malformed("wrong event kind");
            if (field_list(ev, "J", '.') != J) {
                ck.fail("qualification", where(i, "event subset out of sweep order"));
                full_sweep = false;
                return false;
            }
            EventCheck e = read_event(ev);
            std::vector<int> edge(h.a);
            for (int t = 0; t < r; ++t) edge[t] = X[J[t] - 1];
            edge[h.a - 2] = x;
            replay_event(ck, i, e, pool, h.c, [&](int y) {
                edge[h.a - 1] = y;
                return col.color(edge);
            });
            Gi.set_edge(J, e.col);
            return true;
        });
        while (next_event < cur.recs.size() && cur.recs[next_event].kind == "event") {
            ck.fail("qualification", where(i, "halving for a non-qualifying subset"));
            ++next_event;
        }
        cur.pos = next_event;

        const TraceRec& gr = cur.need("g");
        if (gr.geti("i") != i) malformed("g record out of step");
        {
            // parse "J=c" items and compare against the rebuilt fingerprint
            std::string e = field_str(gr, "e");
            PartialColoredGraph want(r);
            bool parsed = true;
            if (e != "-") {
                std::istringstream es(e);
                std::string item;
                while (parsed && std::getline(es, item, ',')) {
                    auto eq = item.rfind('=');
                    if (eq == std::string::npos) {
                        parsed = false;
                        break;
                    }
                    try {
                        want.set_edge(split_ints(item.substr(0, eq), '.'),
                                      std::stoi(item.substr(eq + 1)));
                    } catch (const std::exception&) {
                        parsed = false;
                    }
                }
            }
            if (!parsed || !(want == Gi))
                ck.fail("fingerprint_graphs",
                        where(i, "g record disagrees with the rebuilt fingerprint"));
        }
        const TraceRec& en = cur.need("end");
        if (en.geti("i") != i) malformed("end record out of step");
        std::vector<int> v = field_list(en, "v");
        if (en.geti("va") != static_cast<long long>(v.size()) || v != pool)
            ck.fail("stage_order", where(i, "end survivors disagree with the pool"));

        G.push_back(std::move(Gi));
        completed.push_back(full_sweep);

        // a completed fingerprint colors every subset of its vertex set
        if (full_sweep && !G[i].complete())
            ck.fail("fingerprint_complete",
                    where(i, "completed fingerprint misses a subset"));
    }

    // squash-distinctness over completed fingerprints: an empty one can only
    // arise while the sweep is vacuous (fewer prior vertices than the edge
    // size), and nonempty ones never repeat even after relabeling
    if (replay_live) {
        for (int i1 = 1; i1 <= last && ck.rep.all_pass; ++i1) {
            if (!completed[i1]) continue;
            if (G[i1].edge_count() == 0) {
                if (i1 > r)
                    ck.fail("squash_distinct",
                            "stage " + std::to_string(i1) +
                                " completed with an empty fingerprint");
                continue;
            }
            for (int i2 = i1 + 1; i2 <= last; ++i2) {
                if (!completed[i2] || G[i2].edge_count() == 0) continue;
                if (G[i1].squash() == G[i2].squash()) {
                    ck.fail("squash_distinct",
                            "stages " + std::to_string(i1) + " and " +
                                std::to_string(i2) + " squash to the same fingerprint");
                    break;
                }
            }
        }
        ck.law("squash_distinct");
    }

    // stage-count cap via the counting bound on distinct fingerprints
    if (h.a == 3 && h.c == 2) {
        if (2 * h.k - 2 < 62) {
            long long cap = (1LL << (2 * h.k - 2)) - 1;
            int done = 0;
            for (int i1 = 1; i1 <= last; ++i1) done += completed[i1] ? 1 : 0;
            if (done > cap)
                ck.fail("stage_cap", std::to_string(done) +
                                         " completed stages exceed the cap " +
                                         std::to_string(cap));
            else
                ck.law("stage_cap");
        } else {
            ck.law("stage_cap"); // cap astronomically above any finite run
        }
    }

    const TraceRec& stop = cur.need("stop");
    std::string reason = field_str(stop, "reason");
    std::vector<int> expect;
    int ecol = -1;

    if (reason == "target") {
        int L = static_cast<int>(stop.geti("i"));
        if (L != last)
            ck.fail("stop_rule", "target cited at a stage other than the last");
        std::vector<int> set = field_list(stop, "set");
        int scol = field_opt_color(stop, "col");
        if (L >= 1 && L < static_cast<int>(G.size())) {
            HomogSearch hs = mono_in(L, h.k - 1);
            ck.charge(hs.work);
            if (hs.status != HomogSearch::kFound || hs.set != set || hs.color != scol)
                ck.fail("stop_rule",
                        "declared target set is not the first same-colored full set");
        } else {
            ck.fail("stop_rule", "target cites a missing fingerprint");
        }
        for (int idx : set)
            if (idx >= 1 && idx <= static_cast<int>(X.size()))
                expect.push_back(X[idx - 1]);
        if (L >= 1 && L <= static_cast<int>(X.size())) expect.push_back(X[L - 1]);
        ecol = static_cast<int>(expect.size()) >= h.a ? scol : -1;
    } else if (reason == "exhausted") {
        if (!pool.empty())
            ck.fail("stop_rule", "run stopped while the pool still had points");
        if (stop.geti("i") != last)
            ck.fail("stop_rule", "stop index disagrees with the stage count");
        if (last >= 1 && last < static_cast<int>(G.size())) {
            HomogSearch hs = mono_in(last, h.k - 1);
            ck.charge(hs.work);
            if (hs.status == HomogSearch::kFound)
                ck.fail("stop_rule", "exhaustion declared with a target set present");
        }
        if (cur.at("append")) {
            const TraceRec& ap = cur.take();
            int t = static_cast<int>(ap.geti("t"));
            std::vector<int> set = field_list(ap, "set");
            int acol = field_opt_color(ap, "col");
            int ax = static_cast<int>(ap.geti("x"));
            // re-derive the best certified set: largest same-colored fully
            // defined index set over all fingerprints, earliest stage wins
            int best_size = -1, best_t = -1;
            std::vector<int> best_set;
            int best_col = -1;
            for (int t1 = 1; t1 <= last; ++t1) {
                int capsz = std::min<int>(h.k - 2,
                                          static_cast<int>(G[t1].vertices().size()));
                for (int s = capsz; s > best_size && s >= 1; --s) {
                    HomogSearch hs = mono_in(t1, s);
                    ck.charge(hs.work);
                    if (hs.status == HomogSearch::kFound) {
                        best_size = s;
                        best_t = t1;
                        best_set = hs.set;
                        best_col = hs.color;
                        break;
                    }
                    if (hs.status == HomogSearch::kIndeterminate) break;
                }
            }
            if (best_t < 0 && last >= 1) {
                best_t = 1;
                best_col = -1;
            }
            if (t != best_t || set != best_set || acol != best_col)
                ck.fail("assembly", "appended stage is not the best certified one");
            for (int idx : set)
                if (idx >= 1 && idx <= static_cast<int>(X.size()))
                    expect.push_back(X[idx - 1]);
            if (t >= 1 && t <= static_cast<int>(X.size())) {
                expect.push_back(X[t - 1]);
                if (ax != X[t - 1])
                    ck.fail("assembly", "appended vertex is not the cited stage's");
            }
            ecol = static_cast<int>(expect.size()) >= h.a ? acol : -1;
        }
    } else if (reason == "budget") {
        ck.skip("stop_rule", "run aborted on its search budget");
    } else {
        malformed("unknown stop reason '" + reason + "'");
    }

    check_result(ck, col, h, cur.need("result"), expect, ecol);
}

} // namespace

ValidateReport validate_run(const Coloring& col, const Trace& trace,
                            uint64_t budget) {
    Checker ck;
    ck.budget = budget;
    Cursor cur{trace.recs, 0};
    RunHeader h = read_meta(ck, cur, col);
    if (!ck.rep.all_pass) return ck.rep; // geometry mismatch: replay would be garbage

    // touch the laws every run answers for, so the report lists them even
    // when they never get a chance to fail
    for (const char* l : {"meta", "stage_order", "event_shape", "halving_law",
                          "event_majority", "assembly", "homogeneity"})
        ck.law(l);

    if (h.method == "ramsey") {
        ck.law("stage_homogeneity");
        ck.law("php");
        validate_ramsey(ck, cur, col, h);
    } else if (h.method == "erdos_rado") {
        ck.law("qualification");
        validate_erdos_rado(ck, cur, col, h);
    } else if (h.method == "cfs3" || h.method == "cfs_general") {
        if (h.method == "cfs3" && h.a != 3) ck.fail("meta", "cfs3 requires a=3");
        ck.law("qualification");
        ck.law("fingerprint_graphs");
        ck.law("fingerprint_complete");
        ck.law("stop_rule");
        validate_cfs(ck, cur, col, h, budget);
    } else {
        malformed("unknown method '" + h.method + "'");
    }
    if (!cur.done()) malformed("trailing records after the result");
    return ck.rep;
}

WitnessCheck check_witness(const Coloring& col, int k, uint64_t budget) {
    if (k < col.a())
        throw std::invalid_argument("check_witness: k below the arity is vacuous");
    WitnessCheck w;
    if (k > col.n()) {
        w.status = WitnessCheck::kConfirmed; // no k-subset exists at all
        return w;
    }
    HomogSearch h = find_homogeneous_subset(col, k, budget);
    w.work = h.work;
    switch (h.status) {
        case HomogSearch::kFound:
            w.status = WitnessCheck::kRefuted;
            w.homog = h.set;
            w.color = h.color;
            break;
        case HomogSearch::kNone: w.status = WitnessCheck::kConfirmed; break;
        case HomogSearch::kIndeterminate: w.status = WitnessCheck::kIndeterminate; break;
    }
    return w;
}

} // namespace ramsey
