#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pathmax/graph.hpp"

namespace pathmax {

// Outcome of checking a bound formula against exhaustive enumeration.
struct VerifyReport {
  std::uint64_t N = 0;
  std::uint64_t k = 0;
  std::uint64_t graphs_examined = 0;
  Label max_count;
  Label bound;
  // One canonical representative per isomorphism class attaining
  // max_count.
  std::vector<Graph> argmax;
  bool bound_matched = false;

  // "key: value" lines.
  std::string to_text() const;
};

// Streams every graph with positive integer labels summing to N, no
// isolated vertices, no loop shorter than k, and at most max_vertices
// vertices, one canonical representative per isomorphism class, in a
// deterministic order. A weight-N graph without isolated vertices has
// at most N edges and 2N vertices, so max_vertices = 2N makes the
// stream exhaustive.
void enumerate_graphs(std::uint64_t N, std::uint64_t k,
                      std::uint64_t max_vertices,
                      const std::function<void(const Graph&)>& yield);

// The acyclic sub-stream (no directed cycle at all).
void enumerate_acyclic_graphs(std::uint64_t N, std::uint64_t max_vertices,
                              const std::function<void(const Graph&)>& yield);

// Exhausts enumerate_graphs(N, k, 2N) and compares the maximum
// k-content to loop_bound(N, k). fast caps vertices at N+1 instead,
// which still contains every extremal shape but is not an exhaustive
// check. `progress`, when set, receives the running examined count
// every 1000 graphs.
VerifyReport verify_bound(std::uint64_t N, std::uint64_t k, bool fast = false,
                          const std::function<void(std::uint64_t)>& progress = {});

// Same over the acyclic stream against acyclic_bound(N, k).
VerifyReport verify_acyclic_bound(
    std::uint64_t N, std::uint64_t k, bool fast = false,
    const std::function<void(std::uint64_t)>& progress = {});

// Isomorphism-invariant serialization: two graphs map to the same
// string iff one is a vertex relabelling of the other (labels and
// directions preserved; mode ignored). Cost grows with the graph's
// symmetry; intended for the small graphs of the enumeration.
std::string canonical_form(const Graph& g);

// The representative behind canonical_form, on vertices 0..V-1, same
// mode as g.
Graph canonical_graph(const Graph& g);

}  // namespace pathmax
