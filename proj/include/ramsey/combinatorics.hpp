#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace ramsey {

// Exact C(n, k) in 64 bits. Throws std::overflow_error if the true value
// does not fit; callers that only count edges of small complete hypergraphs
// never hit that.
uint64_t binom_u64(uint64_t n, uint64_t k);

// Colex rank of a sorted a-subset of positive vertex labels:
//   rank{s_1 < ... < s_a} = sum_i C(s_i - 1, i).
// Ranks run 0 .. C(n,a)-1 over subsets of [n] and do not depend on n.
uint64_t edge_rank(const std::vector<int>& edge);

// Inverse of edge_rank for subsets of size a.
std::vector<int> edge_unrank(uint64_t rank, int a);

// Advance a sorted r-subset of {0,...,m-1} to its colex successor.
// Returns false (v unchanged) when v is already the last subset.
bool next_combination_colex(std::vector<int>& v, int m);

// Visit all r-subsets of {0,...,m-1} in colex order. Colex sorts by the
// largest element first, so this is also the (max, colex-of-rest) order.
// Stops early if f returns false.
void for_each_combination(int m, int r,
                          const std::function<bool(const std::vector<int>&)>& f);

// Visit all r-subsets of the given items (picked by colex order on index
// positions; items need not be sorted, subsets preserve item order).
void for_each_subset(const std::vector<int>& items, int r,
                     const std::function<bool(const std::vector<int>&)>& f);

} // namespace ramsey
