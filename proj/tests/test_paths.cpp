#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "pathmax/errors.hpp"
#include "pathmax/paths.hpp"
#include "test_util.hpp"

using namespace pathmax;
using testutil::L;
using testutil::cycle;
using testutil::eid;
using testutil::frac;
using testutil::mk;
using testutil::open_path;

TEST_CASE("path validation and endpoints") {
  Graph g = cycle({L(1), L(1), L(1)});
  Path p{{eid(g, 0, 1), eid(g, 1, 2)}};
  CHECK_NOTHROW(validate_path(g, p));
  CHECK(path_source(g, p) == 0);
  CHECK(path_target(g, p) == 2);
  CHECK(!is_loop(g, p));
  Path full{{eid(g, 0, 1), eid(g, 1, 2), eid(g, 2, 0)}};
  CHECK(is_loop(g, full));

  CHECK_THROWS_AS(validate_path(g, Path{}), HypothesisError);
  CHECK_THROWS_AS(validate_path(g, Path{{99}}), HypothesisError);
  Path broken{{eid(g, 0, 1), eid(g, 2, 0)}};  // 1 != 2
  CHECK_THROWS_AS(validate_path(g, broken), HypothesisError);
}

TEST_CASE("path content multiplies labels") {
  Graph g = open_path({L(2), L(3)});
  CHECK(path_content(g, Path{{0, 1}}) == L(6));
  Graph r = open_path({frac(1, 2), L(4)}, Mode::Rat);
  CHECK(path_content(r, Path{{0, 1}}) == L(2));
}

TEST_CASE("exclusive content skips one position") {
  Graph g = open_path({L(2), L(3), L(5)});
  Path p{{0, 1, 2}};
  CHECK(exclusive_content(g, p, 1) == L(10));  // 2 * 5
  CHECK(exclusive_content(g, p, 0) == L(15));
  CHECK(exclusive_content(g, p, 2) == L(6));
  Graph one = mk({{0, 1, L(9)}});
  CHECK(exclusive_content(one, Path{{0}}, 0) == L(1));  // empty product
  Graph two = open_path({L(4), L(4)});
  CHECK(exclusive_content(two, Path{{0, 1}}, 0) == L(4));
  CHECK_THROWS_AS(exclusive_content(g, p, 3), HypothesisError);
}

TEST_CASE("k-content of the reference shapes") {
  CHECK(count_k_paths(cycle({L(1), L(1), L(1)}), 3) == L(3));
  CHECK(count_k_paths(cycle({L(2), L(2), L(2)}), 3) == L(24));
  CHECK(count_k_paths(open_path({L(1), L(1), L(1), L(1), L(1)}), 2) == L(4));
  CHECK(count_k_paths(mk({{0, 1, L(7)}}), 1) == L(7));
}

TEST_CASE("zero-length paths count vertices") {
  CHECK(count_k_paths(cycle({L(2), L(2), L(2)}), 0) == L(3));
  CHECK(count_k_paths(Graph::make({0, 1, 5, 9}, {}, Mode::Nat), 0) == L(4));
  CHECK_THROWS_AS(enumerate_k_paths(cycle({L(1), L(1)}), 0), HypothesisError);
}

TEST_CASE("enumeration is exhaustive, ordered, and validated") {
  Graph g3 = cycle({L(1), L(1), L(1)});
  auto ps = enumerate_k_paths(g3, 3);
  REQUIRE(ps.size() == 3);
  for (const Path& p : ps) CHECK(is_loop(g3, p));

  Graph g4 = cycle({L(1), L(1), L(1), L(1)});
  CHECK(enumerate_k_paths(g4, 2).size() == 4);

  // Acyclic graphs run out of paths beyond their edge count.
  Graph line = open_path({L(1), L(1), L(1)});
  CHECK(enumerate_k_paths(line, 4).empty());

  // Lexicographic order of edge id sequences.
  auto all = enumerate_k_paths(g4, 3);
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(std::lexicographical_compare(all[i - 1].edge_ids.begin(),
                                       all[i - 1].edge_ids.end(),
                                       all[i].edge_ids.begin(),
                                       all[i].edge_ids.end()));
}

TEST_CASE("enumeration respects its limit") {
  Graph g = cycle({L(1), L(1), L(1)});
  CHECK_THROWS_AS(enumerate_k_paths(g, 3, 2), LimitError);
  CHECK_NOTHROW(enumerate_k_paths(g, 3, 3));
}

TEST_CASE("dynamic program agrees with brute-force recursion") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 80; ++i) {
    Graph g = testutil::random_nat_graph(rng, 5, 3);
    if (i % 3 == 0) g = testutil::random_rat_relabel(rng, g);
    for (std::uint64_t k = 0; k <= 4; ++k)
      CHECK(count_k_paths(g, k) == testutil::naive_count(g, k));
  }
}

TEST_CASE("enumeration agrees with brute-force recursion") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    Graph g = testutil::random_nat_graph(rng, 4, 2);
    for (std::uint64_t k = 1; k <= 3; ++k) {
      auto fast = enumerate_k_paths(g, k);
      auto slow = testutil::naive_k_paths(g, k);
      REQUIRE(fast.size() == slow.size());
      Label sum;
      for (std::size_t j = 0; j < fast.size(); ++j) {
        CHECK(fast[j].edge_ids == slow[j]);
        CHECK_NOTHROW(validate_path(g, fast[j]));
        sum += path_content(g, fast[j]);
      }
      CHECK(sum == count_k_paths(g, k));
    }
  }
}

TEST_CASE("girth of the reference shapes") {
  CHECK(girth(cycle({L(1), L(1), L(1)})) == 3);
  CHECK(!girth(open_path({L(1), L(1)})).has_value());
  CHECK(girth(mk({{0, 0, L(1)}})) == 1);
  CHECK(girth(mk({{0, 1, L(1)}, {1, 0, L(1)}, {1, 2, L(1)}})) == 2);
  CHECK(!girth(Graph()).has_value());
}

TEST_CASE("girth agrees with floyd-warshall") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 120; ++i) {
    Graph g = testutil::random_nat_graph(rng, 6, 2);
    CHECK(girth(g) == testutil::naive_girth(g));
  }
}

TEST_CASE("short-loop check matches girth") {
  Graph tri = cycle({L(1), L(1), L(1)});
  CHECK(check_no_short_loops(tri, 3));
  CHECK(!check_no_short_loops(tri, 4));
  CHECK(check_no_short_loops(open_path({L(1)}), 100));
  std::mt19937_64 rng(14);
  for (int i = 0; i < 40; ++i) {
    Graph g = testutil::random_nat_graph(rng, 5, 2);
    auto gr = girth(g);
    for (std::uint64_t k = 1; k <= 6; ++k)
      CHECK(check_no_short_loops(g, k) == (!gr.has_value() || *gr >= k));
  }
}

TEST_CASE("repetition in a path yields a loop") {
  Graph g = cycle({L(1), L(1), L(1)});

  SUBCASE("repeated edge: loop spans first to second occurrence") {
    Path p{{0, 1, 2, 0, 1}};  // edge 0 repeats at positions 0 and 3
    auto loop = find_loop_from_repetition(g, p);
    REQUIRE(loop.has_value());
    CHECK(loop->edge_ids == std::vector<EdgeId>{0, 1, 2});
    CHECK(is_loop(g, *loop));
  }

  SUBCASE("repeated target without repeated edge") {
    // 0->1 then 2->1 share the target 1.
    Graph h = mk({{0, 1, L(1)}, {1, 2, L(1)}, {2, 1, L(1)}});
    Path p{{eid(h, 0, 1), eid(h, 1, 2), eid(h, 2, 1)}};
    auto loop = find_loop_from_repetition(h, p);
    REQUIRE(loop.has_value());
    CHECK(loop->edge_ids ==
          std::vector<EdgeId>{eid(h, 1, 2), eid(h, 2, 1)});
    CHECK(is_loop(h, *loop));
  }

  SUBCASE("all edges and targets distinct: no loop") {
    Path p{{0, 1}};
    CHECK(!find_loop_from_repetition(g, p).has_value());
  }
}

TEST_CASE("repetition property on random paths") {
  std::mt19937_64 rng(15);
  int found = 0;
  for (int i = 0; i < 60; ++i) {
    Graph g = testutil::random_nat_graph(rng, 4, 2);
    for (const Path& p : enumerate_k_paths(g, 3, 100000)) {
      auto loop = find_loop_from_repetition(g, p);
      std::set<EdgeId> edges(p.edge_ids.begin(), p.edge_ids.end());
      std::set<Vertex> targets;
      for (EdgeId e : p.edge_ids) targets.insert(g.edge(e).tgt);
      bool has_rep = edges.size() < p.edge_ids.size() ||
                     targets.size() < p.edge_ids.size();
      CHECK(loop.has_value() == has_rep);
      if (loop) {
        ++found;
        CHECK_NOTHROW(validate_path(g, *loop));
        CHECK(is_loop(g, *loop));
        CHECK(loop->length() <= p.length());
      }
    }
  }
  CHECK(found > 50);  // the sweep actually exercised the extractor
}

TEST_CASE("permuted path yields a loop witness") {
  SUBCASE("adjacent transposition on a 2-cycle") {
    Graph g = mk({{0, 1, L(1)}, {1, 0, L(1)}});
    Path p{{0, 1}};
    Path w = permutation_loop_witness(g, p, {1, 0});
    CHECK(is_loop(g, w));
    CHECK(w.edge_ids == std::vector<EdgeId>{1, 0});
  }

  SUBCASE("rotation by two on a doubled 2-cycle") {
    Graph g = mk({{0, 1, L(1)}, {1, 0, L(1)}});
    Path p{{0, 1, 0, 1}};
    Path w = permutation_loop_witness(g, p, {2, 3, 0, 1});
    CHECK(is_loop(g, w));
  }

  SUBCASE("hypothesis violations are reported") {
    Graph g = mk({{0, 1, L(1)}, {1, 0, L(1)}});
    Path p{{0, 1}};
    CHECK_THROWS_AS(permutation_loop_witness(g, p, {0, 1}),
                    HypothesisError);  // identity
    CHECK_THROWS_AS(permutation_loop_witness(g, p, {0}),
                    HypothesisError);  // wrong size
    CHECK_THROWS_AS(permutation_loop_witness(g, p, {0, 0}),
                    HypothesisError);  // not bijective
    Graph line = open_path({L(1), L(1)});
    CHECK_THROWS_AS(permutation_loop_witness(line, Path{{0, 1}}, {1, 0}),
                    HypothesisError);  // rearrangement breaks chaining
  }
}

TEST_CASE("permutation witnesses found by search are structurally valid") {
  std::mt19937_64 rng(16);
  int found = 0;
  for (int i = 0; i < 30 || found < 5; ++i) {
    if (i > 300) break;
    Graph g = testutil::random_nat_graph(rng, 4, 2);
    for (const Path& p : enumerate_k_paths(g, 3, 100000)) {
      std::vector<std::size_t> sigma(p.length());
      std::iota(sigma.begin(), sigma.end(), 0);
      while (std::next_permutation(sigma.begin(), sigma.end())) {
        bool chained = true;
        for (std::size_t j = 0; j + 1 < sigma.size() && chained; ++j)
          chained = g.edge(p.edge_ids[sigma[j]]).tgt ==
                    g.edge(p.edge_ids[sigma[j + 1]]).src;
        if (!chained) continue;
        Path w = permutation_loop_witness(g, p, sigma);
        CHECK(is_loop(g, w));
        CHECK_NOTHROW(validate_path(g, w));
        ++found;
      }
    }
  }
  CHECK(found >= 5);
}
