#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "ricci/canonical.hpp"
#include "ricci/named.hpp"

using namespace ricci;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
  return from_edge_list(g.n, edges);
}

}  // namespace

TEST_CASE("canonical form is stable under relabeling") {
  std::mt19937_64 rng(555);
  for (const auto& g : {petersen_graph(), triplex_graph(), cycle_graph(9)}) {
    auto base = canonical_form(g);
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 100; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(relabel(g, perm)) == base);
    }
  }
}

TEST_CASE("canonical graph is isomorphic to its input") {
  std::mt19937_64 rng(556);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = oracle::random_connected_graph(rng, 4 + static_cast<int>(rng() % 6));
    Graph c = canonical_graph(g);
    CHECK(oracle::is_isomorphic(g, c));
    CHECK(canonical_form(c) == canonical_form(g));
  }
}

TEST_CASE("is_isomorphic distinguishes the basics") {
  CHECK(is_isomorphic(petersen_graph(), petersen_graph()));
  CHECK_FALSE(is_isomorphic(petersen_graph(), triplex_graph()));
  Graph path = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph star = from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(is_isomorphic(path, star));  // same degree sums, different shape
}

TEST_CASE("canonical equality agrees with brute-force isomorphism") {
  std::mt19937_64 rng(557);
  int positives = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    Graph a = oracle::random_connected_graph(rng, n);
    Graph b = oracle::random_connected_graph(rng, n);
    if (trial % 2 == 0) {
      std::vector<int> perm(a.n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      b = relabel(a, perm);
    }
    bool brute = oracle::is_isomorphic(a, b);
    CHECK(is_isomorphic(a, b) == brute);
    if (brute) ++positives;
  }
  CHECK(positives >= 30);
}
