#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathmax/graph.hpp"
#include "pathmax/paths.hpp"

namespace pathmax {

enum class ShapeKind { OpenPath, Loop, NotExtremal };

// Result of testing a graph against the two extremal shapes for
// length-k paths: the open k-path and the m-loop with k <= m <= 2k-1.
struct ShapeClass {
  ShapeKind kind = ShapeKind::NotExtremal;
  // Edge count of the path or loop (k for OpenPath, m for Loop).
  std::size_t length = 0;
  // Populated for NotExtremal: the first structural obstruction found.
  std::string reason;
  // Populated for OpenPath/Loop: edge ids in traversal order. Paths
  // start at the source; loops start at their smallest vertex.
  std::vector<EdgeId> order;
};

ShapeClass classify_extremal_shape(const Graph& g, std::uint64_t k);

// A graph has the coverage property for length k when every two edges
// lie on a common k-path. Returns the first pair (e < f, lexicographic)
// sharing no k-path, or nullopt. Decided by inclusion-exclusion on
// k-contents, which is exact because labels are positive.
std::optional<std::pair<EdgeId, EdgeId>> chirvasitu_violation(
    const Graph& g, std::uint64_t k);

// Sum over the k-paths through e of the path content with e's own
// label factored out, computed as (ct(g) - ct(g - e)) / l(e). This is
// the quantity that decides merge orientation.
Label exclusive_content_sum(const Graph& g, std::uint64_t k, EdgeId e);

// Removes `drop` and adds its label onto `keep`. Requires that the two
// edges share no k-path and that exclusive_content_sum(keep) >=
// exclusive_content_sum(drop); under these the k-content does not
// decrease. Isolated vertices are pruned from the result.
Graph merge_edges(const Graph& g, EdgeId keep, EdgeId drop, std::uint64_t k);

// On an m-loop with m > k: contracts a minimum-label edge into its
// successor (one edge spanning both endpoints, labels added), giving
// an (m-1)-loop of the same weight. Strictly increases the k-content
// for k >= 2.
Graph shrink_loop(const Graph& g, std::uint64_t k);

// On an m-loop: redistributes the total weight evenly along the loop.
// Nat mode splits an integer weight N >= m as r labels of n+1 followed
// by m-r of n (N = n*m + r), starting from the smallest vertex; rat
// mode gives every edge weight/m. Maximizes the label product, so the
// k-content does not decrease.
Graph balance_labels(const Graph& g, Mode mode);

enum class StepKind { Merge, Close, Rebuild, Shrink, Balance };

const char* step_kind_name(StepKind k);

// One rewrite applied by optimize. `edges` are ids in the graph the
// step was applied to; the two contents sandwich the step and never
// decrease; `weight` is the (conserved) total weight after the step.
struct TraceStep {
  StepKind kind = StepKind::Merge;
  std::vector<EdgeId> edges;
  Label ct_before;
  Label ct_after;
  Label weight;
};

struct Trace {
  std::vector<TraceStep> steps;
  // One line per step: "step=merge edges=3,5 ct_before=.. ct_after=.. weight=..".
  std::string to_text() const;
};

// Called after each recorded step with the rewritten graph.
using OptimizeObserver =
    std::function<void(const Graph& after, const TraceStep& step)>;

// Drives a graph with no loop shorter than k to an extremal one of the
// same total weight by content-non-decreasing rewrites:
//
//   merge    while some edge pair shares no k-path
//   close    turn the open k-path fixpoint into a k-loop
//   rebuild  replace the single-edge fixpoint (k-content zero) by the
//            balanced k-loop of the same weight
//   shrink   contract an in-range loop down to length k
//   balance  spread the weight evenly
//
// Nat mode requires a nat graph of integer weight N >= 2 and reaches
// the k-loop of content k * P when N >= k (when N < k no k-loop of
// weight N exists and the merge fixpoint, of content zero, is
// returned). Rat mode requires positive weight W and reaches the
// uniform k-loop of content k * (W/k)^k. A graph that is already an
// extremal balanced loop comes back unchanged with an empty trace.
std::pair<Graph, Trace> optimize(const Graph& g, std::uint64_t k, Mode mode,
                                 const OptimizeObserver& observer = {});

}  // namespace pathmax
