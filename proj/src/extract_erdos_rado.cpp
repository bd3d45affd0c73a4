#include "ramsey/extract.hpp"

#include "ramsey/homog_search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace ramsey {

namespace {

std::string dotted(const std::vector<int>& xs) { return join_ints(xs, '.'); }

} // namespace

ExtractResult extract_erdos_rado(const Coloring& col, int k,
                                 const ExtractOptions& opt) {
    detail::check_extract_args(col, k);
    const int a = col.a(), n = col.n(), c = col.c();
    if (a < 2)
        throw std::invalid_argument("extract_erdos_rado: needs arity at least 2");

    ExtractResult res;
    res.trace.push("meta")
        .add("method", "erdos_rado")
        .add("a", a)
        .add("k", k)
        .add("c", c)
        .add("n", n);

    std::vector<int> V(n);
    std::iota(V.begin(), V.end(), 1);

    std::vector<int> X;                         // accepted vertices, position p holds X[p-1]
    std::unordered_map<uint64_t, int> table;    // colex rank of a (a-1)-position-set -> color

    // Stage sweep: every (a-2)-subset of the accepted positions refines the
    // pool once. While fewer than a-2 vertices are accepted there is no such
    // subset and the stage just accepts its vertex, which reproduces the
    // fixed opening prefix 1..a-2.
    int i = 0;
    while (!V.empty()) {
        ++i;
        int x = V.front();
        V.erase(V.begin());
        res.trace.push("stage").add("i", i).add("x", x).add(
            "vb", static_cast<long long>(V.size()));

        const int m_now = static_cast<int>(X.size());
        bool accepted = true;
        std::vector<std::pair<std::vector<int>, int>> pending; // (positions 1-based, color)
        std::vector<int> edge(a);
        for_each_combination(m_now, a - 2, [&](const std::vector<int>& idx) {
            if (V.empty()) {
                // the pool died mid-sweep: the remaining subsets can not be
                // assigned a color, so the vertex is rejected
                accepted = false;
                return false;
            }
            for (int t = 0; t < a - 2; ++t) edge[t] = X[idx[t]];
            edge[a - 2] = x;
            int vb = static_cast<int>(V.size());
            auto [mcol, next] = majority_class(
                V,
                [&](int y) {
                    edge[a - 1] = y;
                    ++res.work;
                    return col.color(edge);
                },
                c);
            V = std::move(next);
            std::vector<int> pos(a - 2);
            for (int t = 0; t < a - 2; ++t) pos[t] = idx[t] + 1;
            res.trace.push("event")
                .add("kind", "halve")
                .add("A", dotted(pos))
                .add("col", mcol)
                .add("vb", vb)
                .add("va", static_cast<long long>(V.size()))
                .add("v", join_ints(V));
            pending.emplace_back(std::move(pos), mcol);
            return true;
        });

        if (accepted) {
            X.push_back(x);
            for (auto& [pos, pcol] : pending) {
                pos.push_back(m_now + 1);
                table[edge_rank(pos)] = pcol;
            }
        }
        res.trace.push("end")
            .add("i", i)
            .add("accepted", accepted ? 1 : 0)
            .add("va", static_cast<long long>(V.size()))
            .add("v", join_ints(V));
    }
    res.trace.push("stop").add("reason", "exhausted").add("i", i);

    // Second phase: the accepted vertices carry a complete (a-1)-uniform
    // coloring (each position set was colored at the stage that accepted its
    // top position). Extract a homogeneous set of positions one arity down,
    // then append one later point; any point that survived every refinement
    // of those positions' stages extends the set by one.
    const int m = static_cast<int>(X.size());
    Coloring inner(a - 1, m, c);
    {
        uint64_t rank = 0;
        for_each_combination(m, a - 1, [&](const std::vector<int>& idx) {
            std::vector<int> pos(a - 1);
            for (int t = 0; t < a - 1; ++t) pos[t] = idx[t] + 1;
            auto it = table.find(edge_rank(pos));
            if (it == table.end())
                throw std::logic_error("extract_erdos_rado: halving table incomplete");
            inner.set_color_by_rank(rank++, it->second);
            return true;
        });
    }

    std::vector<int> pre; // positions, 1-based into X
    int col2 = -1;
    std::string found = "none";
    auto appendable = [&](const std::vector<int>& p) {
        return !p.empty() && (p.back() < m || !V.empty());
    };
    if (m > 0) {
        ExtractResult sub = extract_ramsey(inner, std::max(k - 1, a - 1), opt);
        res.work += sub.work;
        pre = sub.set;
        col2 = sub.color;
        if (static_cast<int>(pre.size()) >= k - 1) found = "extract";
    }
    int projected = static_cast<int>(pre.size()) + (appendable(pre) ? 1 : 0);
    if (projected < k && m >= a - 1 && m <= opt.search_max_points &&
        binom_u64(m, k - 1) <= 5'000'000) {
        // colex enumeration meets small position sets first, which keeps the
        // appended point available whenever any choice would
        const uint64_t probe = binom_u64(k - 1, a - 1);
        for_each_combination(m, k - 1, [&](const std::vector<int>& idx) {
            std::vector<int> pos(k - 1);
            for (int t = 0; t < k - 1; ++t) pos[t] = idx[t] + 1;
            if (!appendable(pos)) return true; // nothing left to append
            res.work += probe;
            if (auto hc = is_homogeneous(inner, pos)) {
                pre = pos;
                col2 = *hc;
                found = "search";
                return false;
            }
            return true;
        });
    }

    std::optional<int> append;
    if (!pre.empty()) {
        int top = pre.back();
        if (top < m) append = X[top]; // the next accepted position
        else if (!V.empty()) append = V.front();
    }

    for (int p : pre) res.set.push_back(X[p - 1]);
    if (append) res.set.push_back(*append);

    res.trace.push("phase2")
        .add("found", found)
        .add("pre", join_ints(pre))
        .add("append", append ? std::to_string(*append) : "-");

    res.color = static_cast<int>(res.set.size()) >= a ? col2 : -1;
    res.status = static_cast<int>(res.set.size()) >= k ? ExtractStatus::kOk
                                                       : ExtractStatus::kBelowTarget;
    res.trace.push("result")
        .add("h", join_ints(res.set))
        .add("color", res.color < 0 ? "-" : std::to_string(res.color))
        .add("status", status_name(res.status));
    return res;
}

} // namespace ramsey
