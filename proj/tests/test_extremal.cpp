#include "doctest.h"
#include "pathmax/errors.hpp"
#include "pathmax/extremal.hpp"
#include "pathmax/paths.hpp"
#include "test_util.hpp"

using namespace pathmax;
using testutil::L;
using testutil::frac;

TEST_CASE("bound parameters require N >= 2 and 1 <= k <= N") {
  auto p = BoundParams::nat(7, 3);
  CHECK(p.n == 2);
  CHECK(p.r == 1);
  CHECK(p.N == p.n * p.k + p.r);
  CHECK_THROWS_AS(BoundParams::nat(1, 1), HypothesisError);
  CHECK_THROWS_AS(BoundParams::nat(5, 0), HypothesisError);
  CHECK_THROWS_AS(BoundParams::nat(5, 6), HypothesisError);
}

TEST_CASE("acyclic bound values") {
  CHECK(acyclic_bound(5, 2) == L(6));
  CHECK(acyclic_bound(6, 3) == L(8));
  CHECK(acyclic_bound(4, 4) == L(1));  // N = k: all labels 1
  CHECK(acyclic_bound(2, 1) == L(2));
  CHECK(acyclic_bound(6, 2) == L(9));
}

TEST_CASE("loop bound is k times the acyclic bound") {
  CHECK(loop_bound(5, 2) == L(12));
  CHECK(loop_bound(6, 3) == L(24));
  CHECK(loop_bound(7, 1) == L(7));  // k = 1: the weight itself
  for (std::uint64_t N = 2; N <= 12; ++N)
    for (std::uint64_t k = 1; k <= N; ++k)
      CHECK(loop_bound(N, k) == L(k) * acyclic_bound(N, k));
}

TEST_CASE("acyclic bound matches its closed form") {
  for (std::uint64_t N = 2; N <= 12; ++N)
    for (std::uint64_t k = 1; k <= N; ++k) {
      std::uint64_t n = N / k, r = N % k;
      CHECK(acyclic_bound(N, k) == L(n + 1).pow(r) * L(n).pow(k - r));
    }
}

TEST_CASE("rational supremum values") {
  CHECK(semiring_bound(L(6), 3) == L(24));
  CHECK(semiring_bound(L(1), 2) == frac(1, 2));
  CHECK(semiring_bound(L(5), 2) == frac(25, 2));
  CHECK(semiring_bound(frac(1, 2), 1) == frac(1, 2));
  CHECK_THROWS_AS(semiring_bound(Label(), 2), HypothesisError);
  CHECK_THROWS_AS(semiring_bound(L(5), 0), HypothesisError);
}

TEST_CASE("rational supremum dominates the integer bound") {
  for (std::uint64_t N = 2; N <= 12; ++N)
    for (std::uint64_t k = 1; k <= N; ++k) {
      CHECK(loop_bound(N, k) <= semiring_bound(L(N), k));
      if (N % k == 0)  // balanced integer split attains the supremum
        CHECK(loop_bound(N, k) == semiring_bound(L(N), k));
    }
}

TEST_CASE("extremal acyclic construction") {
  Graph g = construct_extremal_acyclic(5, 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.weight() == L(5));
  CHECK(!girth(g).has_value());
  CHECK(g.edge(0).label == L(3));  // heavier labels first
  CHECK(g.edge(1).label == L(2));
  CHECK(count_k_paths(g, 2) == acyclic_bound(5, 2));

  Graph h = construct_extremal_acyclic(4, 2);
  CHECK(h.edge(0).label == L(2));
  CHECK(h.edge(1).label == L(2));
  CHECK(count_k_paths(h, 2) == L(4));
}

TEST_CASE("extremal loop construction") {
  Graph g = construct_extremal_loop(6, 3);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(girth(g) == 3);
  CHECK(g.weight() == L(6));
  CHECK(count_k_paths(g, 3) == L(24));

  Graph h = construct_extremal_loop(5, 2);
  CHECK(h.weight() == L(5));
  CHECK(count_k_paths(h, 2) == L(12));

  Graph s = construct_extremal_loop(2, 1);
  CHECK(s.vertex_count() == 1);
  CHECK(girth(s) == 1);
  CHECK(count_k_paths(s, 1) == L(2));
}

TEST_CASE("extremal rational construction") {
  Graph g = construct_extremal_rational(L(5), 2);
  CHECK(g.mode() == Mode::Rat);
  CHECK(g.edge_count() == 2);
  CHECK(g.edge(0).label == frac(5, 2));
  CHECK(g.weight() == L(5));
  CHECK(count_k_paths(g, 2) == frac(25, 2));

  Graph s = construct_extremal_rational(L(1), 1);
  CHECK(s.vertex_count() == 1);
  CHECK(count_k_paths(s, 1) == L(1));
  CHECK_THROWS_AS(construct_extremal_rational(Label(), 2), HypothesisError);
}

TEST_CASE("constructions attain their bounds across the parameter range") {
  for (std::uint64_t N = 2; N <= 12; ++N)
    for (std::uint64_t k = 1; k <= N; ++k) {
      Graph a = construct_extremal_acyclic(N, k);
      CHECK(a.weight() == L(N));
      CHECK(!girth(a).has_value());
      CHECK(count_k_paths(a, k) == acyclic_bound(N, k));

      Graph l = construct_extremal_loop(N, k);
      CHECK(l.weight() == L(N));
      CHECK(girth(l) == k);
      CHECK(count_k_paths(l, k) == loop_bound(N, k));

      Graph r = construct_extremal_rational(L(N), k);
      CHECK(r.weight() == L(N));
      CHECK(girth(r) == k);
      CHECK(count_k_paths(r, k) == semiring_bound(L(N), k));
    }
}

TEST_CASE("rational construction accepts fractional weight") {
  Graph g = construct_extremal_rational(frac(7, 3), 2);
  CHECK(g.weight() == frac(7, 3));
  CHECK(count_k_paths(g, 2) == semiring_bound(frac(7, 3), 2));
}
