#pragma once

#include "ramsey/coloring.hpp"

#include <functional>
#include <optional>

namespace ramsey {

// color shared by all a-subsets of H, or nullopt if H is not homogeneous.
// H must be strictly increasing with at least a elements; smaller sets are
// rejected (homogeneity below the arity is undefined).
std::optional<int> is_homogeneous(const Coloring& col, const std::vector<int>& H);

// largest color class among pts; ties broken toward the smallest color index.
// Result size is always >= ceil(|pts| / c).
std::pair<int, std::vector<int>> majority_class(
    const std::vector<int>& pts, const std::function<int(int)>& point_color,
    int c);

struct HomogSearch {
    enum Status { kFound, kNone, kIndeterminate };
    Status status = kNone;
    std::vector<int> set;
    int color = -1;
    uint64_t work = 0;
};

// Exact search for a homogeneous k-subset under an edge-color oracle over the
// given vertices (nullopt from the oracle means uncolored, which blocks any
// set containing that edge). Depth-first over ascending vertices, so the
// first hit is the lexicographically least one. Work is counted per edge
// probe; exceeding the budget yields kIndeterminate, never a wrong answer.
HomogSearch find_homogeneous_in(
    const std::vector<int>& verts, int r,
    const std::function<std::optional<int>(const std::vector<int>&)>& color,
    int k, uint64_t budget);

// same search against a complete coloring
HomogSearch find_homogeneous_subset(const Coloring& col, int k, uint64_t budget);

} // namespace ramsey
