#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pathmax/graph.hpp"

namespace pathmax {

// A path of length n is a sequence of n edges with t(e_i) = s(e_{i+1}).
// Edges and vertices may repeat. Stored as edge ids into a fixed graph.
struct Path {
  std::vector<EdgeId> edge_ids;

  std::size_t length() const { return edge_ids.size(); }
  bool operator==(const Path& o) const { return edge_ids == o.edge_ids; }
};

// Throws HypothesisError unless p is a nonempty chained edge sequence
// with ids valid in g.
void validate_path(const Graph& g, const Path& p);
Vertex path_source(const Graph& g, const Path& p);
Vertex path_target(const Graph& g, const Path& p);
// True iff the path returns to its source.
bool is_loop(const Graph& g, const Path& p);

// Product of the labels along p.
Label path_content(const Graph& g, const Path& p);
// Product of the labels along p skipping position `skip_index`
// (0-based). The empty product is 1.
Label exclusive_content(const Graph& g, const Path& p, std::size_t skip_index);

// k-content: sum of path contents over all length-k paths, computed by
// dynamic programming in O(k * (V + E)) label operations. The count of
// length-0 paths is the number of vertices.
Label count_k_paths(const Graph& g, std::uint64_t k);

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

// All length-k paths (k >= 1) in lexicographic order of their edge id
// sequences. Throws LimitError if more than `limit` paths exist.
std::vector<Path> enumerate_k_paths(const Graph& g, std::uint64_t k,
                                    std::uint64_t limit = kDefaultEnumerationLimit);

// Length of a shortest directed cycle; nullopt when the graph is
// acyclic (girth infinity).
std::optional<std::uint64_t> girth(const Graph& g);

// True iff every directed cycle has length >= k, i.e. girth(g) >= k.
bool check_no_short_loops(const Graph& g, std::uint64_t k);

// If p repeats an edge or a target vertex, returns a loop of length at
// most p.length() extracted from p: for the first repeated edge
// e_i = e_j (i < j) the loop (e_i, ..., e_{j-1}); for the first
// repeated target t(e_i) = t(e_j) the loop (e_{i+1}, ..., e_j).
// Returns nullopt when all edges and all targets are distinct.
std::optional<Path> find_loop_from_repetition(const Graph& g, const Path& p);

// Given a path p and a non-identity permutation sigma of its positions
// such that p_sigma (edge at position i is p[sigma[i]], 0-based) is
// again a path, returns a loop contained in the union of p and
// p_sigma's edge sequences. Witnesses that two distinct paths cannot
// use the same edge multiset when the graph has no short loops.
Path permutation_loop_witness(const Graph& g, const Path& p,
                              const std::vector<std::size_t>& sigma);

namespace detail {
// k-content of g with the flagged edges removed.
Label count_k_paths_masked(const Graph& g, std::uint64_t k,
                           const std::vector<bool>& removed);
}  // namespace detail

}  // namespace pathmax
