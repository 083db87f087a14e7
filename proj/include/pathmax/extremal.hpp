#pragma once

#include <cstdint>

#include "pathmax/graph.hpp"

namespace pathmax {

// Decomposition N = n*k + r with 0 <= r <= k-1 behind the integer
// bounds. Requires N >= 2 and 1 <= k <= N (so n >= 1).
struct BoundParams {
  std::uint64_t N = 0;
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  std::uint64_t r = 0;

  static BoundParams nat(std::uint64_t N, std::uint64_t k);
};

// Maximum k-content over acyclic graphs of total integer weight N:
// P = (n+1)^r * n^(k-r).
Label acyclic_bound(std::uint64_t N, std::uint64_t k);

// Maximum k-content over integer-weight graphs with no loop shorter
// than k: k * P.
Label loop_bound(std::uint64_t N, std::uint64_t k);

// Supremum (and maximum) of the k-content over rational-weight graphs
// with no loop shorter than k and total weight W > 0: k * (W/k)^k.
Label semiring_bound(const Label& W, std::uint64_t k);

// Open path on k edges, weight N split as evenly as integers allow
// (the r heavier labels first). Achieves acyclic_bound(N, k).
Graph construct_extremal_acyclic(std::uint64_t N, std::uint64_t k);

// k-loop, weight N split as evenly as integers allow. Achieves
// loop_bound(N, k).
Graph construct_extremal_loop(std::uint64_t N, std::uint64_t k);

// k-loop with every label W/k. Achieves semiring_bound(W, k).
Graph construct_extremal_rational(const Label& W, std::uint64_t k);

}  // namespace pathmax
