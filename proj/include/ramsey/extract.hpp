#pragma once

#include "ramsey/coloring.hpp"
#include "ramsey/trace.hpp"

#include <optional>
#include <string_view>

namespace ramsey {

// Every extractor consumes a complete coloring and walks it deterministically:
// the same coloring always yields the same set, the same trace, byte for byte.
// A run never fails silently. Either it returns a homogeneous set of the
// requested size (kOk), or the largest one its construction could certify
// (kBelowTarget), or it stopped early on a search budget (kAborted).
enum class ExtractStatus { kOk, kBelowTarget, kAborted };

const char* status_name(ExtractStatus s);

struct ExtractResult {
    std::vector<int> set;    // strictly increasing vertices, possibly empty
    int color = -1;          // shared color; -1 when |set| < a (vacuous)
    ExtractStatus status = ExtractStatus::kBelowTarget;
    Trace trace;
    uint64_t work = 0;       // edge probes performed
};

struct ExtractOptions {
    // replace the recursive inner extraction of the stepping construction by
    // an exhaustive maximum search; only honored when the inner point count
    // is at most 20 (the search is exponential)
    bool true_max_inner = false;
    // cap on the point count for the exhaustive fallback searches
    int search_max_points = 24;
    // edge-probe budget for stop-rule searches; exceeding it aborts the run
    uint64_t detect_budget = 50'000'000;
};

// minimum-excluding stepping: peel the least vertex, recolor the rest by the
// subsets through it, recurse one arity down, keep the survivors
ExtractResult extract_ramsey(const Coloring& col, int k,
                             const ExtractOptions& opt = {});

// halving construction: each new vertex refines the pool once per subset of
// its predecessors, building a complete lower-arity coloring on the x's
ExtractResult extract_erdos_rado(const Coloring& col, int k,
                                 const ExtractOptions& opt = {});

// fingerprint construction for a = 3: vertices halve the pool only against
// predecessors whose fingerprint graphs match exactly
ExtractResult extract_cfs3(const Coloring& col, int k,
                           const ExtractOptions& opt = {});

// the same construction at any a >= 3, with (a-2)-uniform fingerprints and
// prefix-agreement qualification; at a = 3 it retraces extract_cfs3 move for
// move and must produce the identical trace
ExtractResult extract_cfs_general(const Coloring& col, int k,
                                  const ExtractOptions& opt = {});

enum class Method { kRamsey, kErdosRado, kCfs3, kCfsGeneral };

const char* method_name(Method m); // trace token: ramsey, erdos_rado, cfs3, cfs_general
std::optional<Method> method_from_name(std::string_view name); // CLI spelling

ExtractResult extract(Method m, const Coloring& col, int k,
                      const ExtractOptions& opt = {});

namespace detail {
// shared precondition: a >= 1, c >= 1, k >= a (throws std::invalid_argument)
void check_extract_args(const Coloring& col, int k);
} // namespace detail

} // namespace ramsey
