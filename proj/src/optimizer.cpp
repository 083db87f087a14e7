#include "pathmax/optimizer.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "pathmax/errors.hpp"
#include "pathmax/extremal.hpp"

namespace pathmax {

namespace {

using Rational = Label::Rational;

Rational masked_ct(const Graph& g, std::uint64_t k,
                   const std::vector<bool>& removed) {
  return detail::count_k_paths_masked(g, k, removed).value();
}

// Shared inclusion-exclusion state: a pair (e, f) lies on a common
// k-path iff ct(g) - ct(g-e) - ct(g-f) + ct(g-e-f) > 0.
struct Coverage {
  const Graph& g;
  std::uint64_t k;
  Rational ct_all;
  std::vector<Rational> ct_without;

  Coverage(const Graph& graph, std::uint64_t kk) : g(graph), k(kk) {
    ct_all = masked_ct(g, k, {});
    ct_without.resize(g.edge_count());
    std::vector<bool> mask(g.edge_count(), false);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      mask[e] = true;
      ct_without[e] = masked_ct(g, k, mask);
      mask[e] = false;
    }
  }

  bool covered(EdgeId e, EdgeId f) const {
    std::vector<bool> mask(g.edge_count(), false);
    mask[e] = mask[f] = true;
    Rational both = masked_ct(g, k, mask);
    return ct_all - ct_without[e] - ct_without[f] + both > 0;
  }
};

// Edge ids of a loop in traversal order from the smallest vertex, or
// nullopt when the graph is not exactly one directed cycle.
std::optional<std::vector<EdgeId>> loop_order(const Graph& g) {
  const std::size_t V = g.vertex_count();
  if (g.edge_count() == 0 || g.edge_count() != V) return std::nullopt;
  for (std::size_t vi = 0; vi < V; ++vi)
    if (g.out_edges()[vi].size() != 1 || g.in_edges()[vi].size() != 1)
      return std::nullopt;
  std::vector<EdgeId> order;
  std::size_t vi = 0;  // smallest vertex
  do {
    EdgeId e = g.out_edges()[vi][0];
    order.push_back(e);
    vi = g.vertex_index(g.edges()[e].tgt);
  } while (vi != 0 && order.size() <= g.edge_count());
  if (order.size() != g.edge_count()) return std::nullopt;  // several cycles
  return order;
}

// Edge ids of an open path covering the whole graph, source first, or
// nullopt.
std::optional<std::vector<EdgeId>> open_path_order(const Graph& g) {
  const std::size_t V = g.vertex_count();
  const std::size_t E = g.edge_count();
  if (E == 0 || V != E + 1) return std::nullopt;
  std::optional<std::size_t> source;
  for (std::size_t vi = 0; vi < V; ++vi) {
    std::size_t out = g.out_edges()[vi].size();
    std::size_t in = g.in_edges()[vi].size();
    if (out == 1 && in == 0) {
      if (source) return std::nullopt;
      source = vi;
    } else if (!((out == 1 && in == 1) || (out == 0 && in == 1))) {
      return std::nullopt;
    }
  }
  if (!source) return std::nullopt;
  std::vector<EdgeId> order;
  std::size_t vi = *source;
  while (!g.out_edges()[vi].empty()) {
    EdgeId e = g.out_edges()[vi][0];
    order.push_back(e);
    vi = g.vertex_index(g.edges()[e].tgt);
    if (order.size() > E) return std::nullopt;
  }
  if (order.size() != E) return std::nullopt;  // disconnected
  return order;
}

// Contraction choice on a loop: first minimum-label edge in traversal
// order, paired with its successor.
std::pair<EdgeId, EdgeId> shrink_selection(const Graph& g,
                                           const std::vector<EdgeId>& order) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < order.size(); ++i)
    if (g.edge(order[i]).label < g.edge(order[best]).label) best = i;
  return {order[best], order[(best + 1) % order.size()]};
}

std::uint64_t weight_as_u64(const Label& w) {
  if (!w.is_integer())
    throw HypothesisError("integer weight required, got " + w.str());
  Label::Integer n = w.numerator();
  if (n > std::numeric_limits<std::uint64_t>::max())
    throw LimitError("weight " + w.str() + " too large");
  return n.convert_to<std::uint64_t>();
}

}  // namespace

ShapeClass classify_extremal_shape(const Graph& g, std::uint64_t k) {
  if (k < 1) throw HypothesisError("shape classification requires k >= 1");
  ShapeClass out;

  if (g.edge_count() == 0) {
    out.reason = "graph has no edges";
    return out;
  }

  if (auto po = open_path_order(g)) {
    if (po->size() == k) {
      out.kind = ShapeKind::OpenPath;
      out.length = po->size();
      out.order = std::move(*po);
    } else {
      out.reason = "open path of length " + std::to_string(po->size()) +
                   ", not k=" + std::to_string(k);
    }
    return out;
  }

  if (auto lo = loop_order(g)) {
    std::size_t m = lo->size();
    if (k <= m && m <= 2 * k - 1) {
      out.kind = ShapeKind::Loop;
      out.length = m;
      out.order = std::move(*lo);
      return out;
    }
    if (m > 2 * k - 1) {
      out.reason = "loop of length " + std::to_string(m) + " exceeds 2k-1=" +
                   std::to_string(2 * k - 1);
      return out;
    }
    // m < k falls through to the girth report below.
  }

  if (auto gi = girth(g); gi && *gi < k) {
    out.reason = "short loop: girth " + std::to_string(*gi) + " < k=" +
                 std::to_string(k);
    return out;
  }

  for (std::size_t vi = 0; vi < g.vertex_count(); ++vi) {
    const auto& in = g.in_edges()[vi];
    if (in.size() >= 2) {
      out.reason = "edges " + std::to_string(in[0]) + " and " +
                   std::to_string(in[1]) + " share target " +
                   std::to_string(g.vertices()[vi]);
      return out;
    }
  }
  for (std::size_t vi = 0; vi < g.vertex_count(); ++vi) {
    const auto& outs = g.out_edges()[vi];
    if (outs.size() >= 2) {
      out.reason = "edges " + std::to_string(outs[0]) + " and " +
                   std::to_string(outs[1]) + " share source " +
                   std::to_string(g.vertices()[vi]);
      return out;
    }
  }

  if (auto v = chirvasitu_violation(g, k)) {
    out.reason = "edges " + std::to_string(v->first) + " and " +
                 std::to_string(v->second) + " lie on no common " +
                 std::to_string(k) + "-path";
    return out;
  }

  for (std::size_t vi = 0; vi < g.vertex_count(); ++vi)
    if (g.out_edges()[vi].empty() && g.in_edges()[vi].empty()) {
      out.reason = "isolated vertex " + std::to_string(g.vertices()[vi]);
      return out;
    }

  out.reason = "not an open k-path or a loop of length in [k, 2k-1]";
  return out;
}

std::optional<std::pair<EdgeId, EdgeId>> chirvasitu_violation(
    const Graph& g, std::uint64_t k) {
  if (k < 1) throw HypothesisError("coverage check requires k >= 1");
  if (g.edge_count() < 2) return std::nullopt;
  Coverage cov(g, k);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for (EdgeId f = e + 1; f < g.edge_count(); ++f)
      if (!cov.covered(e, f)) return std::make_pair(e, f);
  return std::nullopt;
}

Label exclusive_content_sum(const Graph& g, std::uint64_t k, EdgeId e) {
  if (e >= g.edge_count())
    throw HypothesisError("edge id " + std::to_string(e) + " out of range");
  Rational all = masked_ct(g, k, {});
  std::vector<bool> mask(g.edge_count(), false);
  mask[e] = true;
  Rational without = masked_ct(g, k, mask);
  return Label((all - without) / g.edge(e).label.value());
}

Graph merge_edges(const Graph& g, EdgeId keep, EdgeId drop, std::uint64_t k) {
  if (keep >= g.edge_count() || drop >= g.edge_count())
    throw HypothesisError("merge: edge id out of range");
  if (keep == drop) throw HypothesisError("merge: edges must be distinct");

  Coverage cov(g, k);
  if (cov.covered(keep, drop))
    throw HypothesisError("merge: edges " + std::to_string(keep) + " and " +
                          std::to_string(drop) + " share a " +
                          std::to_string(k) + "-path");
  Rational a = (cov.ct_all - cov.ct_without[keep]) / g.edge(keep).label.value();
  Rational b = (cov.ct_all - cov.ct_without[drop]) / g.edge(drop).label.value();
  if (a < b)
    throw HypothesisError(
        "merge: orientation would decrease the k-content (keep " +
        std::to_string(keep) + " carries less exclusive content than drop " +
        std::to_string(drop) + ")");

  std::vector<Edge> edges = g.edges();
  edges[keep].label += edges[drop].label;
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(drop));
  return Graph::make(g.vertices(), std::move(edges), g.mode())
      .prune_isolated();
}

Graph shrink_loop(const Graph& g, std::uint64_t k) {
  if (k < 1) throw HypothesisError("shrink requires k >= 1");
  auto order = loop_order(g);
  if (!order)
    throw HypothesisError("shrink requires the graph to be a single loop");
  std::size_t m = order->size();
  if (m <= k)
    throw HypothesisError("shrink requires loop length > k, got length " +
                          std::to_string(m));

  auto [f1, f2] = shrink_selection(g, *order);
  const Edge& e1 = g.edge(f1);
  const Edge& e2 = g.edge(f2);
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (e != f1 && e != f2) edges.push_back(g.edge(e));
  edges.push_back({e1.src, e2.tgt, e1.label + e2.label});
  return Graph::from_edges(std::move(edges), g.mode());
}

Graph balance_labels(const Graph& g, Mode mode) {
  auto order = loop_order(g);
  if (!order)
    throw HypothesisError("balance requires the graph to be a single loop");
  const std::size_t m = order->size();
  Label W = g.weight();

  std::vector<Edge> edges = g.edges();
  if (mode == Mode::Nat) {
    std::uint64_t N = weight_as_u64(W);
    if (N < m)
      throw HypothesisError("nat balance requires weight >= loop length");
    std::uint64_t n = N / m, r = N % m;
    for (std::size_t i = 0; i < m; ++i)
      edges[(*order)[i]].label = Label(i < r ? n + 1 : n);
  } else {
    Label share = W / Label(static_cast<std::uint64_t>(m));
    for (std::size_t i = 0; i < m; ++i) edges[(*order)[i]].label = share;
  }
  return Graph::make(g.vertices(), std::move(edges), mode);
}

const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::Merge: return "merge";
    case StepKind::Close: return "close";
    case StepKind::Rebuild: return "rebuild";
    case StepKind::Shrink: return "shrink";
    case StepKind::Balance: return "balance";
  }
  return "?";
}

std::string Trace::to_text() const {
  std::ostringstream out;
  for (const TraceStep& st : steps) {
    out << "step=" << step_kind_name(st.kind) << " edges=";
    for (std::size_t i = 0; i < st.edges.size(); ++i) {
      if (i) out << ',';
      out << st.edges[i];
    }
    out << " ct_before=" << st.ct_before.str()
        << " ct_after=" << st.ct_after.str() << " weight=" << st.weight.str()
        << "\n";
  }
  return out.str();
}

namespace {

// Reroute the last edge of an open path onto the path's source.
Graph close_path(const Graph& g, const std::vector<EdgeId>& order) {
  Vertex source = g.edge(order.front()).src;
  std::vector<Edge> edges = g.edges();
  edges[order.back()].tgt = source;
  return Graph::from_edges(std::move(edges), g.mode());
}

}  // namespace

std::pair<Graph, Trace> optimize(const Graph& g, std::uint64_t k, Mode mode,
                                 const OptimizeObserver& observer) {
  if (k < 1) throw HypothesisError("optimize requires k >= 1");
  if (!check_no_short_loops(g, k))
    throw HypothesisError("optimize requires girth >= k");
  if (mode == Mode::Nat) {
    if (g.mode() != Mode::Nat)
      throw HypothesisError("nat optimization requires a nat graph");
    if (g.weight() < Label(2))
      throw HypothesisError("nat optimization requires total weight >= 2");
  } else if (g.weight().is_zero()) {
    throw HypothesisError("optimization requires positive total weight");
  }

  Graph w = g.prune_isolated().with_mode(mode);
  Trace trace;
  auto record = [&](StepKind kind, std::vector<EdgeId> edges, Label before,
                    const Graph& after) {
    TraceStep st{kind, std::move(edges), before, count_k_paths(after, k),
                 after.weight()};
    if (st.ct_after < st.ct_before)
      throw std::logic_error("rewrite decreased the k-content");
    trace.steps.push_back(std::move(st));
    if (observer) observer(after, trace.steps.back());
  };

  // Merge until every pair of edges lies on a common k-path. Each merge
  // removes an edge, so this terminates.
  std::size_t guard = w.edge_count() + 1;
  while (auto v = chirvasitu_violation(w, k)) {
    if (guard-- == 0) throw std::logic_error("merge failed to terminate");
    auto [e, f] = *v;
    Label a = exclusive_content_sum(w, k, e);
    Label b = exclusive_content_sum(w, k, f);
    EdgeId keep = a >= b ? e : f;
    EdgeId drop = a >= b ? f : e;
    Label before = count_k_paths(w, k);
    Graph next = merge_edges(w, keep, drop, k);
    record(StepKind::Merge, {keep, drop}, before, next);
    w = std::move(next);
  }

  // The merge fixpoint is an open k-path, a loop of length in
  // [k, 2k-1], or a single edge (the only shape with fewer than two
  // edges; its k-content is zero for k >= 2).
  ShapeClass shape = classify_extremal_shape(w, k);

  if (shape.kind == ShapeKind::NotExtremal) {
    if (w.edge_count() != 1)
      throw std::logic_error("unexpected merge fixpoint: " + shape.reason);
    Label W = w.weight();
    if (mode == Mode::Nat && W < Label(k))
      return {std::move(w), std::move(trace)};  // no k-loop of this weight
    Label before = count_k_paths(w, k);
    Graph next = mode == Mode::Rat
                     ? construct_extremal_rational(W, k)
                     : construct_extremal_loop(weight_as_u64(W), k);
    record(StepKind::Rebuild, {}, before, next);
    w = std::move(next);
    shape = classify_extremal_shape(w, k);
  }

  if (shape.kind == ShapeKind::OpenPath) {
    // For k = 1 the single remaining edge already carries ct = weight;
    // identifying its endpoints gains nothing.
    if (k == 1) return {std::move(w), std::move(trace)};
    Label before = count_k_paths(w, k);
    Graph next = close_path(w, shape.order);
    if (!check_no_short_loops(next, k))
      throw std::logic_error("closing the path created a short loop");
    record(StepKind::Close, {shape.order.back()}, before, next);
    w = std::move(next);
    shape = classify_extremal_shape(w, k);
  }

  while (shape.kind == ShapeKind::Loop && shape.length > k) {
    auto [f1, f2] = shrink_selection(w, shape.order);
    Label before = count_k_paths(w, k);
    Graph next = shrink_loop(w, k);
    record(StepKind::Shrink, {f1, f2}, before, next);
    w = std::move(next);
    shape = classify_extremal_shape(w, k);
  }

  if (shape.kind != ShapeKind::Loop || shape.length != k)
    throw std::logic_error("optimization did not reach a k-loop");

  Graph balanced = balance_labels(w, mode);
  if (!(balanced == w)) {
    Label before = count_k_paths(w, k);
    record(StepKind::Balance, shape.order, before, balanced);
    w = std::move(balanced);
  }
  return {std::move(w), std::move(trace)};
}

}  // namespace pathmax
