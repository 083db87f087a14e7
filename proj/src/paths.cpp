#include "pathmax/paths.hpp"

#include <algorithm>
#include <queue>

#include "pathmax/errors.hpp"

namespace pathmax {

void validate_path(const Graph& g, const Path& p) {
  if (p.edge_ids.empty()) throw HypothesisError("path must be nonempty");
  for (EdgeId e : p.edge_ids)
    if (e >= g.edge_count())
      throw HypothesisError("path uses edge id " + std::to_string(e) +
                            " out of range");
  for (std::size_t i = 1; i < p.edge_ids.size(); ++i)
    if (g.edge(p.edge_ids[i - 1]).tgt != g.edge(p.edge_ids[i]).src)
      throw HypothesisError("path breaks at position " + std::to_string(i) +
                            ": edges do not chain");
}

Vertex path_source(const Graph& g, const Path& p) {
  validate_path(g, p);
  return g.edge(p.edge_ids.front()).src;
}

Vertex path_target(const Graph& g, const Path& p) {
  validate_path(g, p);
  return g.edge(p.edge_ids.back()).tgt;
}

bool is_loop(const Graph& g, const Path& p) {
  return path_source(g, p) == path_target(g, p);
}

Label path_content(const Graph& g, const Path& p) {
  validate_path(g, p);
  Label c = 1;
  for (EdgeId e : p.edge_ids) c *= g.edge(e).label;
  return c;
}

Label exclusive_content(const Graph& g, const Path& p,
                        std::size_t skip_index) {
  validate_path(g, p);
  if (skip_index >= p.edge_ids.size())
    throw HypothesisError("exclusive content: position " +
                          std::to_string(skip_index) + " out of range");
  Label c = 1;
  for (std::size_t i = 0; i < p.edge_ids.size(); ++i)
    if (i != skip_index) c *= g.edge(p.edge_ids[i]).label;
  return c;
}

namespace detail {

Label count_k_paths_masked(const Graph& g, std::uint64_t k,
                           const std::vector<bool>& removed) {
  using Rational = Label::Rational;
  const std::size_t V = g.vertex_count();
  if (k == 0) return Label(static_cast<std::uint64_t>(V));

  // c[v] after i rounds is the total content of length-i paths out of v.
  std::vector<Rational> cur(V, 1), next(V);
  std::vector<std::size_t> src_idx(g.edge_count()), tgt_idx(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    src_idx[e] = g.vertex_index(g.edges()[e].src);
    tgt_idx[e] = g.vertex_index(g.edges()[e].tgt);
  }
  for (std::uint64_t round = 0; round < k; ++round) {
    std::fill(next.begin(), next.end(), Rational(0));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (e < removed.size() && removed[e]) continue;
      next[src_idx[e]] += g.edges()[e].label.value() * cur[tgt_idx[e]];
    }
    cur.swap(next);
  }
  Rational total = 0;
  for (const Rational& c : cur) total += c;
  return Label(total);
}

}  // namespace detail

Label count_k_paths(const Graph& g, std::uint64_t k) {
  return detail::count_k_paths_masked(g, k, {});
}

std::vector<Path> enumerate_k_paths(const Graph& g, std::uint64_t k,
                                    std::uint64_t limit) {
  if (k == 0)
    throw HypothesisError("path enumeration requires k >= 1");
  std::vector<Path> out;

  // Depth-first over edge choices, candidates in ascending id order, so
  // results come out in lexicographic order. Iterative to keep the
  // stack shallow for large k.
  std::vector<EdgeId> chosen;
  // pos[d] = next candidate index at depth d. Depth 0 draws from all
  // edge ids; depth d > 0 draws from out_edges of the previous target.
  std::vector<std::size_t> pos(1, 0);
  chosen.reserve(k);

  auto candidates_size = [&](std::size_t depth) -> std::size_t {
    if (depth == 0) return g.edge_count();
    const Edge& prev = g.edge(chosen[depth - 1]);
    return g.out_edges()[g.vertex_index(prev.tgt)].size();
  };
  auto candidate_at = [&](std::size_t depth, std::size_t i) -> EdgeId {
    if (depth == 0) return i;
    const Edge& prev = g.edge(chosen[depth - 1]);
    return g.out_edges()[g.vertex_index(prev.tgt)][i];
  };

  while (!pos.empty()) {
    std::size_t depth = pos.size() - 1;
    if (pos[depth] >= candidates_size(depth)) {
      pos.pop_back();
      if (!chosen.empty()) chosen.pop_back();
      continue;
    }
    EdgeId e = candidate_at(depth, pos[depth]++);
    chosen.push_back(e);
    if (chosen.size() == k) {
      if (out.size() >= limit)
        throw LimitError("more than " + std::to_string(limit) +
                         " paths of length " + std::to_string(k));
      out.push_back(Path{chosen});
      chosen.pop_back();
    } else {
      pos.push_back(0);
    }
  }
  return out;
}

std::optional<std::uint64_t> girth(const Graph& g) {
  const std::size_t V = g.vertex_count();
  std::optional<std::uint64_t> best;
  std::vector<std::uint64_t> dist(V);
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};

  for (std::size_t s = 0; s < V; ++s) {
    std::fill(dist.begin(), dist.end(), kUnset);
    dist[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (EdgeId e : g.out_edges()[u]) {
        std::size_t w = g.vertex_index(g.edges()[e].tgt);
        if (dist[w] == kUnset) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    // A cycle through s closes with an edge back into s.
    for (EdgeId e : g.in_edges()[s]) {
      std::size_t u = g.vertex_index(g.edges()[e].src);
      if (dist[u] == kUnset) continue;
      std::uint64_t len = dist[u] + 1;
      if (!best || len < *best) best = len;
    }
    if (best && *best == 1) break;
  }
  return best;
}

bool check_no_short_loops(const Graph& g, std::uint64_t k) {
  auto gi = girth(g);
  return !gi || *gi >= k;
}

std::optional<Path> find_loop_from_repetition(const Graph& g, const Path& p) {
  validate_path(g, p);
  const auto& ids = p.edge_ids;
  const std::size_t n = ids.size();

  // Two occurrences of one edge bound a loop: the stretch from the
  // first occurrence up to (not including) the second starts and ends
  // at that edge's source.
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (ids[i] == ids[j])
        return Path{{ids.begin() + i, ids.begin() + j}};

  // Two edges with the same target bound a loop just after the first.
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (g.edge(ids[i]).tgt == g.edge(ids[j]).tgt)
        return Path{{ids.begin() + i + 1, ids.begin() + j + 1}};

  return std::nullopt;
}

Path permutation_loop_witness(const Graph& g, const Path& p,
                              const std::vector<std::size_t>& sigma) {
  validate_path(g, p);
  const auto& ids = p.edge_ids;
  const std::size_t n = ids.size();
  if (sigma.size() != n)
    throw HypothesisError("permutation size does not match path length");

  std::vector<std::size_t> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] >= n || inv[sigma[i]] != n)
      throw HypothesisError("sigma is not a permutation of the positions");
    inv[sigma[i]] = i;
  }

  Path permuted;
  permuted.edge_ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) permuted.edge_ids.push_back(ids[sigma[i]]);
  validate_path(g, permuted);  // rearrangement must itself be a path

  std::size_t j = 0;
  while (j < n && sigma[j] == j) ++j;
  if (j == n) throw HypothesisError("sigma must not be the identity");

  // Positions before j are fixed, so position j of the rearrangement
  // draws a later edge: sigma[j] > j. The stretch of the rearranged
  // path from j to inv[j] starts at t(e_{sigma[j]-1}) and ends at
  // t(e_j); when sigma[j] = j+1 these coincide and the stretch is
  // already a loop, otherwise the original stretch e_{j+1}..e_{sigma[j]-1}
  // closes it.
  if (sigma[j] <= j)
    throw std::logic_error("first moved position must draw a later edge");

  Path loop;
  for (std::size_t i = j; i <= inv[j]; ++i)
    loop.edge_ids.push_back(permuted.edge_ids[i]);
  if (sigma[j] != j + 1)
    for (std::size_t i = j + 1; i <= sigma[j] - 1; ++i)
      loop.edge_ids.push_back(ids[i]);

  if (!is_loop(g, loop))
    throw std::logic_error("constructed witness is not a loop");
  return loop;
}

}  // namespace pathmax
