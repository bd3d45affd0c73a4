#include "ramsey/verify.hpp"

#include "ramsey/combinatorics.hpp"
#include "ramsey/homog_search.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

namespace {

// last coloring in the fixed-first-edge enumeration order, or nothing once
// the odometer wraps; rank 0 stays pinned to color 0 throughout
bool next_coloring(Coloring& col) {
    for (uint64_t r = 1; r < col.edge_count(); ++r) {
        int cc = col.color_by_rank(r);
        if (cc + 1 < col.c()) {
            col.set_color_by_rank(r, cc + 1);
            return true;
        }
        col.set_color_by_rank(r, 0);
    }
    return false;
}

} // namespace

// Scan n upward from the smallest candidate. A point count n is settled by
// exhausting every coloring with the first edge pinned to color 0: permuting
// colors moves homogeneous sets around without destroying them, so a witness
// in the restricted class is a genuine witness and forcing over the class is
// forcing outright.
BruteForceResult brute_force_ramsey(const RamseyQuery& q) {
    if (q.a < 1 || q.c < 1)
        throw std::invalid_argument("brute_force_ramsey: need a >= 1 and c >= 1");
    if (q.k < q.a)
        throw std::invalid_argument("brute_force_ramsey: target below the arity");
    if (q.n_max < q.k)
        throw std::invalid_argument("brute_force_ramsey: n_max below the target");

    BruteForceResult out;
    // below k no k-subset exists, so those n never force
    for (int n = q.k; n <= q.n_max; ++n) {
        Coloring col(q.a, n, q.c);
        bool forced = true;
        while (true) {
            if (out.colorings >= q.budget) {
                out.lo = n;
                out.budget_hit = true;
                out.note = "budget spent at n=" + std::to_string(n) +
                           " after " + std::to_string(out.colorings) + " colorings";
                return out;
            }
            ++out.colorings;
            HomogSearch h = find_homogeneous_subset(col, q.k, 100'000'000);
            if (h.status == HomogSearch::kIndeterminate) {
                out.lo = n;
                out.budget_hit = true;
                out.note = "subset search gave out at n=" + std::to_string(n);
                return out;
            }
            if (h.status == HomogSearch::kNone) {
                forced = false;
                out.witness = col; // this coloring shows n does not force
                break;
            }
            if (!next_coloring(col)) break; // every coloring forces
        }
        if (forced) {
            out.exact = true;
            out.value = n;
            out.lo = n;
            out.hi = n;
            if (!out.witness && n - 1 >= q.a) {
                // n-1 < k admits any coloring as a witness: no k-subset exists
                out.witness = Coloring(q.a, n - 1, q.c);
            }
            if (!out.witness)
                out.note = "no witness representable below the arity";
            return out;
        }
        out.lo = n + 1; // n carries a witness, so the value lies above it
    }
    out.note = "no forcing found up to n=" + std::to_string(q.n_max);
    return out;
}

} // namespace ramsey
