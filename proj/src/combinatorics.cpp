#include "ramsey/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace ramsey {

uint64_t binom_u64(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        // partial products are C(n-k+i, i), increasing in i, so the result
        // fits in 64 bits iff every intermediate does
        unsigned __int128 t = static_cast<unsigned __int128>(r) * (n - k + i);
        t /= i; // exact: r*(n-k+i) = C(n-k+i, i) * i
        if (t > std::numeric_limits<uint64_t>::max())
            throw std::overflow_error("binom_u64 overflow");
        r = static_cast<uint64_t>(t);
    }
    return r;
}

uint64_t edge_rank(const std::vector<int>& edge) {
    uint64_t r = 0;
    for (size_t i = 0; i < edge.size(); ++i)
        r += binom_u64(static_cast<uint64_t>(edge[i]) - 1, i + 1);
    return r;
}

std::vector<int> edge_unrank(uint64_t rank, int a) {
    std::vector<int> edge(a);
    for (int i = a; i >= 1; --i) {
        // largest s with C(s-1, i) <= rank
        uint64_t s = i; // C(i-1, i) = 0, always admissible
        while (binom_u64(s, i) <= rank) ++s;
        edge[i - 1] = static_cast<int>(s);
        rank -= binom_u64(s - 1, i);
    }
    return edge;
}

bool next_combination_colex(std::vector<int>& v, int m) {
    int r = static_cast<int>(v.size());
    for (int i = 0; i < r; ++i) {
        int limit = (i + 1 < r) ? v[i + 1] : m;
        if (v[i] + 1 < limit) {
            ++v[i];
            for (int j = 0; j < i; ++j) v[j] = j;
            return true;
        }
    }
    return false;
}

void for_each_combination(int m, int r,
                          const std::function<bool(const std::vector<int>&)>& f) {
    if (r < 0 || r > m) return;
    std::vector<int> v(r);
    for (int i = 0; i < r; ++i) v[i] = i;
    for (;;) {
        if (!f(v)) return;
        if (!next_combination_colex(v, m)) return;
    }
}

void for_each_subset(const std::vector<int>& items, int r,
                     const std::function<bool(const std::vector<int>&)>& f) {
    if (r < 0 || static_cast<size_t>(r) > items.size()) return;
    std::vector<int> subset(r);
    for_each_combination(static_cast<int>(items.size()), r,
                         [&](const std::vector<int>& idx) {
        for (int i = 0; i < r; ++i) subset[i] = items[idx[i]];
        return f(subset);
    });
}

} // namespace ramsey
