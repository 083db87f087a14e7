#include "pathmax/oracle.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <sstream>

#include "pathmax/errors.hpp"
#include "pathmax/extremal.hpp"
#include "pathmax/paths.hpp"

namespace pathmax {

namespace {

// Canonical labelling by individualization-refinement. Colors are
// refined by in/out neighbourhood signatures until stable; the first
// non-singleton class is split on each of its members in turn; discrete
// colorings are permutations, and the lexicographically least edge
// serialization over all of them is canonical.
struct Canonizer {
  const Graph& g;
  std::size_t V;
  std::vector<std::size_t> src_idx, tgt_idx, lab;
  std::vector<Label> distinct_labels;
  std::vector<std::uint64_t> best;
  std::vector<std::size_t> best_perm;

  explicit Canonizer(const Graph& graph) : g(graph), V(graph.vertex_count()) {
    const auto& edges = g.edges();
    src_idx.resize(edges.size());
    tgt_idx.resize(edges.size());
    lab.resize(edges.size());
    for (const Edge& e : edges) distinct_labels.push_back(e.label);
    std::sort(distinct_labels.begin(), distinct_labels.end());
    distinct_labels.erase(
        std::unique(distinct_labels.begin(), distinct_labels.end()),
        distinct_labels.end());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      src_idx[e] = g.vertex_index(edges[e].src);
      tgt_idx[e] = g.vertex_index(edges[e].tgt);
      lab[e] = static_cast<std::size_t>(
          std::lower_bound(distinct_labels.begin(), distinct_labels.end(),
                           edges[e].label) -
          distinct_labels.begin());
    }
  }

  std::vector<std::size_t> refine(std::vector<std::size_t> col) const {
    std::size_t classes = 0;
    for (;;) {
      std::vector<std::vector<std::uint64_t>> sig(V);
      for (std::size_t v = 0; v < V; ++v) sig[v] = {col[v]};
      std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> outs(V),
          ins(V);
      for (std::size_t e = 0; e < lab.size(); ++e) {
        outs[src_idx[e]].emplace_back(lab[e], col[tgt_idx[e]]);
        ins[tgt_idx[e]].emplace_back(lab[e], col[src_idx[e]]);
      }
      for (std::size_t v = 0; v < V; ++v) {
        std::sort(outs[v].begin(), outs[v].end());
        std::sort(ins[v].begin(), ins[v].end());
        sig[v].push_back(outs[v].size());
        for (auto& [l, c] : outs[v]) {
          sig[v].push_back(l);
          sig[v].push_back(c);
        }
        sig[v].push_back(ins[v].size());
        for (auto& [l, c] : ins[v]) {
          sig[v].push_back(l);
          sig[v].push_back(c);
        }
      }
      std::vector<std::vector<std::uint64_t>> sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (std::size_t v = 0; v < V; ++v)
        col[v] = static_cast<std::size_t>(
            std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
            sorted.begin());
      if (sorted.size() == classes) return col;
      classes = sorted.size();
    }
  }

  void emit(const std::vector<std::size_t>& perm) {
    std::vector<std::array<std::uint64_t, 3>> triples;
    triples.reserve(lab.size());
    for (std::size_t e = 0; e < lab.size(); ++e)
      triples.push_back({static_cast<std::uint64_t>(perm[src_idx[e]]),
                         static_cast<std::uint64_t>(perm[tgt_idx[e]]),
                         static_cast<std::uint64_t>(lab[e])});
    std::sort(triples.begin(), triples.end());
    std::vector<std::uint64_t> flat;
    flat.reserve(2 + triples.size() * 3);
    flat.push_back(V);
    flat.push_back(triples.size());
    for (const auto& t : triples) flat.insert(flat.end(), t.begin(), t.end());
    if (best.empty() || flat < best) {
      best = std::move(flat);
      best_perm = perm;
    }
  }

  void search(std::vector<std::size_t> col) {
    col = refine(std::move(col));
    std::size_t split_color = V, split_size = 0;
    for (std::size_t v = 0; v < V; ++v) {
      // first color class (by color value) with several members
      std::size_t count = 0;
      for (std::size_t u = 0; u < V; ++u)
        if (col[u] == col[v]) ++count;
      if (count > 1 && col[v] < split_color) {
        split_color = col[v];
        split_size = count;
      }
    }
    if (split_color == V) {
      emit(col);  // discrete: colors are 0..V-1
      return;
    }
    (void)split_size;
    for (std::size_t v = 0; v < V; ++v) {
      if (col[v] != split_color) continue;
      std::vector<std::size_t> next(V);
      for (std::size_t u = 0; u < V; ++u)
        next[u] = 2 * col[u] + (u == v ? 0 : 1);
      search(std::move(next));
    }
  }

  void run() {
    if (V == 0) {
      best = {0, 0};
      return;
    }
    search(std::vector<std::size_t>(V, 0));
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  Canonizer c(g);
  c.run();
  std::ostringstream out;
  for (std::size_t i = 0; i < c.best.size(); ++i) {
    if (i) out << ',';
    out << c.best[i];
  }
  out << ';';
  for (std::size_t i = 0; i < c.distinct_labels.size(); ++i) {
    if (i) out << ',';
    out << c.distinct_labels[i].str();
  }
  return out.str();
}

Graph canonical_graph(const Graph& g) {
  Canonizer c(g);
  c.run();
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    edges.push_back({static_cast<Vertex>(c.best_perm[c.src_idx[e]]),
                     static_cast<Vertex>(c.best_perm[c.tgt_idx[e]]),
                     g.edges()[e].label});
  std::vector<Vertex> vertices;
  for (Vertex v = 0; v < g.vertex_count(); ++v) vertices.push_back(v);
  return Graph::make(std::move(vertices), std::move(edges), g.mode());
}

namespace {

using ShapeEdge = std::pair<std::uint64_t, std::uint64_t>;

enum class CycleRule { MinGirth, Acyclic };

// Shortest directed distance t -> s over the accumulated edges; used
// to bound the length of the cycle a candidate edge (s, t) would
// close. ~0 when unreachable.
std::uint64_t shape_dist(const std::vector<ShapeEdge>& acc, std::uint64_t from,
                         std::uint64_t to, std::uint64_t nvertices) {
  constexpr std::uint64_t kInf = ~std::uint64_t{0};
  std::vector<std::uint64_t> dist(nvertices, kInf);
  dist[from] = 0;
  std::queue<std::uint64_t> q;
  q.push(from);
  while (!q.empty()) {
    std::uint64_t u = q.front();
    q.pop();
    if (u == to) return dist[u];
    for (const ShapeEdge& e : acc)
      if (e.first == u && dist[e.second] == kInf) {
        dist[e.second] = dist[u] + 1;
        q.push(e.second);
      }
  }
  return dist[to];
}

// Emits every edge set of the given size, up to isomorphism redundancy,
// as a strictly increasing (src, tgt) list over vertices 0..max_v-1
// introduced in first-use order. Cycle-closing edges violating the
// rule are pruned as soon as they appear, which is sound because later
// edges only add cycles.
void gen_shapes(std::size_t target, std::uint64_t max_v, std::uint64_t k,
                CycleRule rule, std::vector<ShapeEdge>& acc,
                const std::function<void(const std::vector<ShapeEdge>&)>& yield) {
  if (acc.size() == target) {
    yield(acc);
    return;
  }
  std::uint64_t used = 0;  // vertices 0..used-1 appear in acc
  for (const ShapeEdge& e : acc)
    used = std::max({used, e.first + 1, e.second + 1});

  std::uint64_t s_min = acc.empty() ? 0 : acc.back().first;
  std::uint64_t s_max = std::min<std::uint64_t>(used, max_v - 1);
  for (std::uint64_t s = s_min; s <= s_max; ++s) {
    std::uint64_t t_min = (!acc.empty() && s == acc.back().first)
                              ? acc.back().second + 1
                              : 0;
    std::uint64_t t_max =
        std::min<std::uint64_t>(std::max(used, s + 1), max_v - 1);
    for (std::uint64_t t = t_min; t <= t_max; ++t) {
      constexpr std::uint64_t kInf = ~std::uint64_t{0};
      std::uint64_t d = s == t ? 0 : shape_dist(acc, t, s, std::max(used, std::max(s, t) + 1));
      if (d != kInf) {
        if (rule == CycleRule::Acyclic) continue;
        if (d + 1 < k) continue;
      }
      acc.emplace_back(s, t);
      gen_shapes(target, max_v, k, rule, acc, yield);
      acc.pop_back();
    }
  }
}

void partitions_desc(std::uint64_t n, std::uint64_t max_part,
                     std::vector<std::uint64_t>& acc,
                     const std::function<void(const std::vector<std::uint64_t>&)>& yield) {
  if (n == 0) {
    yield(acc);
    return;
  }
  for (std::uint64_t p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_desc(n - p, p, acc, yield);
    acc.pop_back();
  }
}

void enumerate_core(std::uint64_t N, std::uint64_t k,
                    std::uint64_t max_vertices, CycleRule rule,
                    const std::function<void(const Graph&)>& yield) {
  if (N < 1) throw HypothesisError("enumeration requires weight >= 1");
  if (k < 1) throw HypothesisError("enumeration requires k >= 1");
  if (max_vertices < 1)
    throw HypothesisError("enumeration requires at least one vertex");

  std::vector<std::uint64_t> parts;
  partitions_desc(N, N, parts, [&](const std::vector<std::uint64_t>& partition) {
    const std::size_t E = partition.size();
    if (E > max_vertices * max_vertices) return;

    std::vector<Label> labels;
    labels.reserve(E);
    for (auto it = partition.rbegin(); it != partition.rend(); ++it)
      labels.push_back(Label(*it));  // ascending

    std::set<std::string> seen;
    std::vector<ShapeEdge> acc;
    gen_shapes(E, max_vertices, k, rule, acc,
               [&](const std::vector<ShapeEdge>& shape) {
                 std::vector<Label> perm = labels;
                 do {
                   std::vector<Edge> edges;
                   edges.reserve(E);
                   for (std::size_t i = 0; i < E; ++i)
                     edges.push_back({shape[i].first, shape[i].second, perm[i]});
                   Graph g = Graph::from_edges(std::move(edges), Mode::Nat);
                   std::string cf = canonical_form(g);
                   if (seen.insert(std::move(cf)).second) yield(canonical_graph(g));
                 } while (std::next_permutation(perm.begin(), perm.end()));
               });
  });
}

VerifyReport run_verify(std::uint64_t N, std::uint64_t k, bool fast,
                        bool acyclic,
                        const std::function<void(std::uint64_t)>& progress) {
  BoundParams::nat(N, k);
  VerifyReport rep;
  rep.N = N;
  rep.k = k;
  rep.bound = acyclic ? acyclic_bound(N, k) : loop_bound(N, k);
  std::uint64_t max_vertices = fast ? N + 1 : 2 * N;
  auto consume = [&](const Graph& g) {
    ++rep.graphs_examined;
    if (progress && rep.graphs_examined % 1000 == 0)
      progress(rep.graphs_examined);
    Label c = count_k_paths(g, k);
    if (rep.argmax.empty() || c > rep.max_count) {
      rep.max_count = c;
      rep.argmax.clear();
      rep.argmax.push_back(g);
    } else if (c == rep.max_count) {
      rep.argmax.push_back(g);
    }
  };
  if (acyclic)
    enumerate_acyclic_graphs(N, max_vertices, consume);
  else
    enumerate_graphs(N, k, max_vertices, consume);
  rep.bound_matched = rep.max_count == rep.bound;
  return rep;
}

}  // namespace

void enumerate_graphs(std::uint64_t N, std::uint64_t k,
                      std::uint64_t max_vertices,
                      const std::function<void(const Graph&)>& yield) {
  enumerate_core(N, k, max_vertices, CycleRule::MinGirth, yield);
}

void enumerate_acyclic_graphs(std::uint64_t N, std::uint64_t max_vertices,
                              const std::function<void(const Graph&)>& yield) {
  enumerate_core(N, 1, max_vertices, CycleRule::Acyclic, yield);
}

VerifyReport verify_bound(std::uint64_t N, std::uint64_t k, bool fast,
                          const std::function<void(std::uint64_t)>& progress) {
  return run_verify(N, k, fast, false, progress);
}

VerifyReport verify_acyclic_bound(
    std::uint64_t N, std::uint64_t k, bool fast,
    const std::function<void(std::uint64_t)>& progress) {
  return run_verify(N, k, fast, true, progress);
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << "N: " << N << "\n"
      << "k: " << k << "\n"
      << "graphs_examined: " << graphs_examined << "\n"
      << "max_count: " << max_count.str() << "\n"
      << "bound: " << bound.str() << "\n"
      << "argmax_graphs: " << argmax.size() << "\n"
      << "bound_matched: " << (bound_matched ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace pathmax
