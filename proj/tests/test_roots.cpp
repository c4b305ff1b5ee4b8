#include "doctest.h"

#include "golden.h"
#include "oracles.h"
#include "rank74/complex.h"
#include "rank74/link.h"
#include "rank74/roots.h"

#include <map>

using namespace rank74;

namespace {

struct V0Link {
  TriangleComplex complex{parse_faces(golden::kTables[0].faces)};
  LinkGraph link{complex, 0};

  Node node(std::string_view name) const { return *link.find_node(name); }
  Root root(std::string_view a, std::string_view b, std::string_view c, std::string_view d) const {
    return make_root(link.graph(), {node(a), node(b), node(c), node(d)});
  }
};

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Node i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

} // namespace

TEST_CASE("root enumeration against exhaustive 4-tuple count") {
  Graph mk = mk_reference();
  CHECK(enumerate_roots(mk).size() == 192);
  CHECK(oracle::simple_3_paths(mk) == 192);
  CHECK(enumerate_roots(path_graph(4)).size() == 2);
  CHECK(enumerate_roots(cycle_graph(16)).size() == 32);
  CHECK(enumerate_roots(cycle_graph(16)).size() == oracle::simple_3_paths(cycle_graph(16)));
  V0Link v;
  CHECK(enumerate_roots(v.link.graph()).size() == oracle::simple_3_paths(v.link.graph()));
}

TEST_CASE("geodesic counts in the V_0 link") {
  V0Link v;
  const Graph& g = v.link.graph();
  CHECK(geodesic3_count(g, v.node("5"), v.node("-7")) == 3);
  CHECK(geodesic3_count(g, v.node("3"), v.node("-3")) == 2);
  CHECK_THROWS_AS(geodesic3_count(g, 0, 0), std::domain_error);
}

TEST_CASE("geodesic counts: exhaustive distance classes") {
  Graph mk = mk_reference();
  auto d = distance_matrix(mk);
  for (Node u = 0; u < 16; ++u) {
    for (Node v = 0; v < 16; ++v) {
      if (u == v) continue;
      std::size_t c = geodesic3_count(mk, u, v);
      CHECK(c == oracle::simple_3_paths_between(mk, u, v));
      if (d[u][v] == 1) CHECK(c == 0);
      if (d[u][v] == 3) CHECK((c == 2 || c == 3));
    }
  }
}

TEST_CASE("named ranks in the V_0 link") {
  V0Link v;
  const Graph& g = v.link.graph();
  Rank r1 = root_rank(g, v.root("3", "-6", "2", "-3"));
  Rank r2 = root_rank(g, v.root("5", "-1", "6", "-7"));
  Rank r3 = root_rank(g, v.root("7", "-2", "1", "-4"));
  CHECK(r1.is_three_halves());
  CHECK(r2.is_two());
  CHECK(r3.is_three_halves());
  CHECK(r1.to_string() == "3/2");
  CHECK(r2.to_string() == "2");
  CHECK(r2 == Rank{2, 2});
}

TEST_CASE("rank is symmetric under reversal and bounded") {
  Graph mk = mk_reference();
  for (const Root& r : enumerate_roots(mk)) {
    Rank a = root_rank(mk, r);
    CHECK(a == root_rank(mk, r.reversed()));
    CHECK((a.is_two() || a.is_three_halves()));
  }
}

TEST_CASE("sum of N over roots with fixed endpoints is c(c-1)") {
  Graph mk = mk_reference();
  std::map<std::pair<Node, Node>, std::pair<int, int>> acc; // endpoints -> (count, sum N)
  for (const Root& r : enumerate_roots(mk)) {
    auto& [count, sum] = acc[{r.nodes[0], r.nodes[3]}];
    ++count;
    sum += root_rank(mk, r).n_value;
  }
  for (const auto& [ends, v] : acc) CHECK(v.second == v.first * (v.first - 1));
}

TEST_CASE("make_root and root_rank reject bad input") {
  Graph mk = mk_reference();
  CHECK_THROWS_AS(make_root(mk, {0, 0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_root(mk, {0, 2, 4, 6}), std::invalid_argument);
  Root r = enumerate_roots(mk).front();
  r.edges[1] = r.edges[0];
  CHECK_THROWS_AS(root_rank(mk, r), std::invalid_argument);
}

TEST_CASE("extension of 3 -> -6 -> 2 at its end") {
  V0Link v;
  const Graph& g = v.link.graph();
  auto ext = root_extensions(g, {v.node("3"), v.node("-6"), v.node("2")}, PathEnd::Back);
  Rank a = root_rank(g, ext[0]), b = root_rank(g, ext[1]);
  CHECK(a.is_two() != b.is_two());
  const Root& three_halves = a.is_three_halves() ? ext[0] : ext[1];
  CHECK(three_halves.nodes[3] == v.node("-3"));
}

TEST_CASE("extension dichotomy over every 2-path of the reference") {
  Graph mk = mk_reference();
  std::size_t paths = 0;
  for (Node a = 0; a < 16; ++a) {
    for (const auto& ab : mk.incident(a)) {
      for (const auto& bc : mk.incident(ab.neighbor)) {
        if (bc.neighbor == a) continue;
        ++paths;
        for (PathEnd end : {PathEnd::Front, PathEnd::Back}) {
          auto ext = root_extensions(mk, {a, ab.neighbor, bc.neighbor}, end);
          CHECK(ext[0] != ext[1]);
          CHECK(root_rank(mk, ext[0]).is_two() != root_rank(mk, ext[1]).is_two());
        }
      }
    }
  }
  CHECK(paths == 96);
}

TEST_CASE("extension requires valency 3") {
  Graph p = path_graph(4);
  CHECK_THROWS_AS(root_extensions(p, {0, 1, 2}, PathEnd::Back), std::invalid_argument);
}
