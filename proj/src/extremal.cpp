#include "pathmax/extremal.hpp"

#include <string>
#include <vector>

#include "pathmax/errors.hpp"

namespace pathmax {

BoundParams BoundParams::nat(std::uint64_t N, std::uint64_t k) {
  if (N < 2)
    throw HypothesisError("total weight must be at least 2, got " +
                          std::to_string(N));
  if (k < 1 || k > N)
    throw HypothesisError("path length k must satisfy 1 <= k <= N, got k=" +
                          std::to_string(k) + ", N=" + std::to_string(N));
  return BoundParams{N, k, N / k, N % k};
}

Label acyclic_bound(std::uint64_t N, std::uint64_t k) {
  BoundParams p = BoundParams::nat(N, k);
  return Label(p.n + 1).pow(p.r) * Label(p.n).pow(p.k - p.r);
}

Label loop_bound(std::uint64_t N, std::uint64_t k) {
  return Label(k) * acyclic_bound(N, k);
}

Label semiring_bound(const Label& W, std::uint64_t k) {
  if (W.is_zero()) throw HypothesisError("total weight must be positive");
  if (k < 1) throw HypothesisError("path length k must be at least 1");
  return Label(k) * (W / Label(k)).pow(k);
}

namespace {

// r labels of n+1 then k-r labels of n, the near-even split of N.
std::vector<Label> balanced_labels(const BoundParams& p) {
  std::vector<Label> out;
  out.reserve(p.k);
  for (std::uint64_t i = 0; i < p.k; ++i)
    out.push_back(Label(i < p.r ? p.n + 1 : p.n));
  return out;
}

}  // namespace

Graph construct_extremal_acyclic(std::uint64_t N, std::uint64_t k) {
  BoundParams p = BoundParams::nat(N, k);
  std::vector<Label> labels = balanced_labels(p);
  std::vector<Edge> edges;
  for (std::uint64_t i = 0; i < k; ++i) edges.push_back({i, i + 1, labels[i]});
  return Graph::from_edges(std::move(edges), Mode::Nat);
}

Graph construct_extremal_loop(std::uint64_t N, std::uint64_t k) {
  BoundParams p = BoundParams::nat(N, k);
  std::vector<Label> labels = balanced_labels(p);
  std::vector<Edge> edges;
  for (std::uint64_t i = 0; i < k; ++i)
    edges.push_back({i, (i + 1) % k, labels[i]});
  return Graph::from_edges(std::move(edges), Mode::Nat);
}

Graph construct_extremal_rational(const Label& W, std::uint64_t k) {
  if (W.is_zero()) throw HypothesisError("total weight must be positive");
  if (k < 1) throw HypothesisError("path length k must be at least 1");
  Label share = W / Label(k);
  std::vector<Edge> edges;
  for (std::uint64_t i = 0; i < k; ++i)
    edges.push_back({i, (i + 1) % k, share});
  return Graph::from_edges(std::move(edges), Mode::Rat);
}

}  // namespace pathmax
