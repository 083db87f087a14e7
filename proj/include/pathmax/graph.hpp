#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pathmax/label.hpp"

namespace pathmax {

using Vertex = std::uint64_t;
using EdgeId = std::size_t;

// Label domain of a graph. Nat restricts labels to positive integers;
// Rat allows positive rationals. Zero labels are never stored: an edge
// with label zero contributes nothing to any content and is rejected.
enum class Mode { Nat, Rat };

struct Edge {
  Vertex src = 0;
  Vertex tgt = 0;
  Label label;

  bool operator==(const Edge& o) const {
    return src == o.src && tgt == o.tgt && label == o.label;
  }
};

// Unlabelled directed multigraph, the expansion target for integer
// labelled graphs: an edge with label n becomes n parallel unit edges.
struct Multigraph {
  std::vector<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

// Immutable directed graph with at most one edge per ordered vertex
// pair (self-loops allowed) and a positive label on every edge.
// Construction canonicalizes: vertices are kept sorted, edges are kept
// sorted by (src, tgt), and an edge's id is its position in that order.
// Two graphs compare equal iff their canonical forms coincide, mode
// included.
class Graph {
 public:
  Graph() = default;

  // `vertices` may include isolated vertices; endpoints of `edges` must
  // all be listed. Rejects zero labels, duplicate (src, tgt) pairs,
  // dangling endpoints, and non-integer labels in Nat mode.
  static Graph make(std::vector<Vertex> vertices, std::vector<Edge> edges,
                    Mode mode);
  // Vertex set inferred from edge endpoints.
  static Graph from_edges(std::vector<Edge> edges, Mode mode);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;
  Mode mode() const { return mode_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_vertex(Vertex v) const;
  // Position of v in the sorted vertex list; throws if absent.
  std::size_t vertex_index(Vertex v) const;

  // Adjacency by vertex index; edge ids in each list are ascending.
  const std::vector<std::vector<EdgeId>>& out_edges() const { return out_; }
  const std::vector<std::vector<EdgeId>>& in_edges() const { return in_; }

  // Sum of all edge labels.
  Label weight() const;
  // Same vertices, every edge reversed.
  Graph opposite() const;
  // Weak connectivity (edge directions ignored). Graphs with at most
  // one vertex count as connected.
  bool is_connected() const;
  // Drops vertices with no incident edge.
  Graph prune_isolated() const;
  // Same graph under a different label domain (revalidates labels).
  Graph with_mode(Mode mode) const;
  // Nat graphs only: label n becomes n parallel unit edges.
  Multigraph expand_to_multigraph() const;

  bool operator==(const Graph& o) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  Mode mode_ = Mode::Nat;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

}  // namespace pathmax
