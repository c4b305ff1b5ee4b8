#include "doctest.h"

#include "oracles.h"
#include "rank74/graph.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace rank74;

namespace {

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph permuted(const Graph& g, const Permutation& p) {
  Graph h(g.num_nodes());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.endpoints(e);
    h.add_edge(p[u], p[v]);
  }
  return h;
}

bool preserves(const Graph& g, const Graph& h, const Permutation& p) {
  for (Node u = 0; u < g.num_nodes(); ++u) {
    for (Node v = 0; v < g.num_nodes(); ++v) {
      if (g.multiplicity(u, v) != h.multiplicity(p[u], p[v])) return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE("Moebius-Kantor reference shape") {
  Graph mk = mk_reference();
  CHECK(mk.num_nodes() == 16);
  CHECK(mk.num_edges() == 24);
  CHECK(mk.is_regular(3));
  CHECK(mk.is_simple());
  CHECK(girth(mk) == 6);
  CHECK(is_bipartite(mk));
}

TEST_CASE("girth and bipartiteness on small graphs") {
  CHECK(girth(cycle_graph(5)) == 5);
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(is_bipartite(cycle_graph(6)));
  Graph tree(3);
  tree.add_edge(0, 1);
  tree.add_edge(1, 2);
  CHECK_FALSE(girth(tree).has_value());
  Graph multi(2);
  multi.add_edge(0, 1);
  multi.add_edge(0, 1);
  CHECK(girth(multi) == 2);
  CHECK_FALSE(multi.is_simple());
  Graph loop(1);
  loop.add_edge(0, 0);
  CHECK(girth(loop) == 1);
  CHECK(loop.degree(0) == 2);
}

TEST_CASE("isomorphism search") {
  Graph mk = mk_reference();
  auto id = find_isomorphism(mk, mk);
  REQUIRE(id);
  CHECK(preserves(mk, mk, *id));
  CHECK_FALSE(find_isomorphism(mk, cycle_graph(16)));
  CHECK_FALSE(find_isomorphism(cycle_graph(16), mk));

  std::mt19937 rng(7);
  Permutation p(16);
  std::iota(p.begin(), p.end(), 0);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(p.begin(), p.end(), rng);
    Graph h = permuted(mk, p);
    auto f = find_isomorphism(h, mk);
    REQUIRE(f);
    CHECK(preserves(h, mk, *f));
  }
}

TEST_CASE("isomorphism respects multiplicity") {
  Graph a(3), b(3);
  a.add_edge(0, 1);
  a.add_edge(0, 1);
  a.add_edge(1, 2);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(1, 2);
  CHECK(find_isomorphism(a, b));
  b.add_edge(0, 2);
  CHECK_FALSE(find_isomorphism(a, b));
}

TEST_CASE("automorphism group sizes") {
  CHECK(automorphism_group(cycle_graph(3)).size() == 6);
  CHECK(automorphism_group(cycle_graph(16)).size() == 32);
  CHECK(automorphism_group(mk_reference()).size() == 96);
}

TEST_CASE("automorphism group matches the naive permutation filter") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 3 + trial % 6;
    Graph g = random_graph(rng, n, 0.45);
    auto group = automorphism_group(g);
    CHECK(group.size() == oracle::automorphism_count_naive(g));
  }
  CHECK(automorphism_group(complete_graph(6)).size() == oracle::automorphism_count_naive(complete_graph(6)));
}

TEST_CASE("isomorphism is symmetric on random pairs") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 7, 0.4);
    Graph h = random_graph(rng, 7, 0.4);
    CHECK(find_isomorphism(g, h).has_value() == find_isomorphism(h, g).has_value());
  }
}

TEST_CASE("Moebius-Kantor automorphisms form a transitive group") {
  Graph mk = mk_reference();
  auto group = automorphism_group(mk);
  REQUIRE(!group.empty());
  Permutation id(16);
  std::iota(id.begin(), id.end(), 0);
  CHECK(group.front() == id);
  std::set<Permutation> all(group.begin(), group.end());
  CHECK(all.size() == group.size());
  for (const auto& p : group) CHECK(preserves(mk, mk, p));

  std::set<Node> orbit;
  for (const auto& p : group) orbit.insert(p[0]);
  CHECK(orbit.size() == 16);

  // closure under composition and inverse, sampled
  for (std::size_t i = 0; i < group.size(); i += 7) {
    for (std::size_t j = 0; j < group.size(); j += 5) {
      Permutation c(16), inv(16);
      for (Node n = 0; n < 16; ++n) {
        c[n] = group[i][group[j][n]];
        inv[group[i][n]] = n;
      }
      CHECK(all.count(c) == 1);
      CHECK(all.count(inv) == 1);
    }
  }
}

TEST_CASE("distance matrix") {
  auto d = distance_matrix(cycle_graph(6));
  CHECK(d[0][3] == 3);
  CHECK(d[1][5] == 2);
  Graph two(2);
  CHECK(distance_matrix(two)[0][1] == -1);
}
