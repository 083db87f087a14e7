#include "pathmax/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "pathmax/errors.hpp"

namespace pathmax {

Graph Graph::make(std::vector<Vertex> vertices, std::vector<Edge> edges,
                  Mode mode) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());

  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.tgt < b.tgt;
  });

  Graph g;
  g.vertices_ = std::move(vertices);
  g.mode_ = mode;
  g.out_.assign(g.vertices_.size(), {});
  g.in_.assign(g.vertices_.size(), {});

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.label.is_zero())
      throw HypothesisError("edge label must be nonzero: edge " +
                            std::to_string(e.src) + " -> " +
                            std::to_string(e.tgt));
    if (mode == Mode::Nat && !e.label.is_integer())
      throw HypothesisError("nat graphs require integer labels: edge " +
                            std::to_string(e.src) + " -> " +
                            std::to_string(e.tgt) + " has label " +
                            e.label.str());
    if (!g.has_vertex(e.src) || !g.has_vertex(e.tgt))
      throw HypothesisError("edge endpoint not in vertex set: edge " +
                            std::to_string(e.src) + " -> " +
                            std::to_string(e.tgt));
    if (i > 0 && edges[i - 1].src == e.src && edges[i - 1].tgt == e.tgt)
      throw HypothesisError("duplicate edge " + std::to_string(e.src) +
                            " -> " + std::to_string(e.tgt));
    g.out_[g.vertex_index(e.src)].push_back(i);
    g.in_[g.vertex_index(e.tgt)].push_back(i);
  }
  g.edges_ = std::move(edges);
  return g;
}

Graph Graph::from_edges(std::vector<Edge> edges, Mode mode) {
  std::vector<Vertex> vertices;
  vertices.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    vertices.push_back(e.src);
    vertices.push_back(e.tgt);
  }
  return make(std::move(vertices), std::move(edges), mode);
}

const Edge& Graph::edge(EdgeId e) const {
  if (e >= edges_.size())
    throw HypothesisError("edge id " + std::to_string(e) + " out of range");
  return edges_[e];
}

bool Graph::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t Graph::vertex_index(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    throw HypothesisError("vertex " + std::to_string(v) + " not in graph");
  return static_cast<std::size_t>(it - vertices_.begin());
}

Label Graph::weight() const {
  Label w;
  for (const Edge& e : edges_) w += e.label;
  return w;
}

Graph Graph::opposite() const {
  std::vector<Edge> rev;
  rev.reserve(edges_.size());
  for (const Edge& e : edges_) rev.push_back({e.tgt, e.src, e.label});
  return make(vertices_, std::move(rev), mode_);
}

bool Graph::is_connected() const {
  if (vertices_.size() <= 1) return true;
  std::vector<bool> seen(vertices_.size(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    std::size_t vi = q.front();
    q.pop();
    auto visit = [&](std::size_t ui) {
      if (!seen[ui]) {
        seen[ui] = true;
        ++reached;
        q.push(ui);
      }
    };
    for (EdgeId e : out_[vi]) visit(vertex_index(edges_[e].tgt));
    for (EdgeId e : in_[vi]) visit(vertex_index(edges_[e].src));
  }
  return reached == vertices_.size();
}

Graph Graph::prune_isolated() const {
  std::vector<Vertex> kept;
  for (std::size_t vi = 0; vi < vertices_.size(); ++vi)
    if (!out_[vi].empty() || !in_[vi].empty()) kept.push_back(vertices_[vi]);
  return make(std::move(kept), edges_, mode_);
}

Graph Graph::with_mode(Mode mode) const { return make(vertices_, edges_, mode); }

Multigraph Graph::expand_to_multigraph() const {
  if (mode_ != Mode::Nat)
    throw HypothesisError("multigraph expansion requires a nat graph");
  Multigraph m;
  m.vertices = vertices_;
  for (const Edge& e : edges_) {
    Label::Integer n = e.label.numerator();
    if (n > 1000000)
      throw LimitError("label " + e.label.str() + " too large to expand");
    for (Label::Integer i = 0; i < n; ++i) m.edges.emplace_back(e.src, e.tgt);
  }
  return m;
}

bool Graph::operator==(const Graph& o) const {
  return mode_ == o.mode_ && vertices_ == o.vertices_ && edges_ == o.edges_;
}

}  // namespace pathmax
