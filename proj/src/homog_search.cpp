#include "ramsey/homog_search.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

std::optional<int> is_homogeneous(const Coloring& col, const std::vector<int>& H) {
    if (static_cast<int>(H.size()) < col.a())
        throw std::invalid_argument(
            "is_homogeneous: set smaller than the arity has no defined color");
    for (size_t i = 0; i < H.size(); ++i) {
        if (H[i] < 1 || H[i] > col.n())
            throw std::invalid_argument("is_homogeneous: vertex out of range");
        if (i > 0 && H[i] <= H[i - 1])
            throw std::invalid_argument("is_homogeneous: set must increase");
    }
    int c0 = -1;
    bool ok = true;
    for_each_subset(H, col.a(), [&](const std::vector<int>& e) {
        int c = col.color(e);
        if (c0 == -1) c0 = c;
        else if (c != c0) { ok = false; return false; }
        return true;
    });
    if (!ok) return std::nullopt;
    return c0;
}

std::pair<int, std::vector<int>> majority_class(
    const std::vector<int>& pts, const std::function<int(int)>& point_color,
    int c) {
    std::vector<std::vector<int>> classes(c);
    for (int p : pts) {
        int col = point_color(p);
        if (col < 0 || col >= c)
            throw std::invalid_argument("majority_class: color out of range");
        classes[col].push_back(p);
    }
    int best = 0;
    for (int i = 1; i < c; ++i)
        if (classes[i].size() > classes[best].size()) best = i;
    return {best, std::move(classes[best])};
}

namespace {

struct Searcher {
    const std::vector<int>& verts;
    int r;
    const std::function<std::optional<int>(const std::vector<int>&)>& color;
    int k;
    uint64_t budget;
    uint64_t work = 0;
    std::vector<int> chosen;
    int copt = -1;

    // 0 = exhausted, 1 = found, 2 = budget blown
    int dfs(size_t start) {
        if (static_cast<int>(chosen.size()) == k) return 1;
        size_t need = static_cast<size_t>(k) - chosen.size();
        for (size_t idx = start; idx + need <= verts.size(); ++idx) {
            int v = verts[idx];
            int saved = copt;
            if (static_cast<int>(chosen.size()) >= r - 1) {
                // every new edge, i.e. every r-subset containing v, must
                // carry one shared color consistent with what is fixed
                bool ok = true;
                int first = copt;
                bool blown = false;
                for_each_subset(chosen, r - 1, [&](const std::vector<int>& t) {
                    std::vector<int> e(t);
                    e.push_back(v); // v exceeds everything chosen
                    if (++work > budget) { blown = true; return false; }
                    auto oc = color(e);
                    if (!oc || (first != -1 && *oc != first)) {
                        ok = false;
                        return false;
                    }
                    if (first == -1) first = *oc;
                    return true;
                });
                if (blown) return 2;
                if (!ok) continue;
                copt = first;
            }
            chosen.push_back(v);
            int sub = dfs(idx + 1);
            if (sub != 0) return sub;
            chosen.pop_back();
            copt = saved;
        }
        return 0;
    }
};

} // namespace

HomogSearch find_homogeneous_in(
    const std::vector<int>& verts, int r,
    const std::function<std::optional<int>(const std::vector<int>&)>& color,
    int k, uint64_t budget) {
    if (k < r)
        throw std::invalid_argument("find_homogeneous_in: k below the arity");
    Searcher s{verts, r, color, k, budget};
    int rc = s.dfs(0);
    HomogSearch res;
    res.work = s.work;
    if (rc == 1) {
        res.status = HomogSearch::kFound;
        res.set = s.chosen;
        res.color = s.copt;
    } else if (rc == 2) {
        res.status = HomogSearch::kIndeterminate;
    } else {
        res.status = HomogSearch::kNone;
    }
    return res;
}

HomogSearch find_homogeneous_subset(const Coloring& col, int k, uint64_t budget) {
    std::vector<int> verts(col.n());
    for (int i = 0; i < col.n(); ++i) verts[i] = i + 1;
    return find_homogeneous_in(
        verts, col.a(),
        [&](const std::vector<int>& e) -> std::optional<int> {
            return col.color(e);
        },
        k, budget);
}

} // namespace ramsey
