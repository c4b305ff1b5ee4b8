#include "rank74/roots.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rank74 {

Root Root::reversed() const {
  return Root{{nodes[3], nodes[2], nodes[1], nodes[0]}, {edges[2], edges[1], edges[0]}};
}

int Rank::numerator() const { return (q_value + n_value) / std::gcd(q_value + n_value, q_value); }

int Rank::denominator() const { return q_value / std::gcd(q_value + n_value, q_value); }

std::string Rank::to_string() const {
  if (q_value == 0) return "undefined";
  int den = denominator();
  return den == 1 ? std::to_string(numerator()) : std::to_string(numerator()) + "/" + std::to_string(den);
}

namespace {

bool distinct(const std::array<Node, 4>& nodes) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (nodes[i] == nodes[j]) return false;
    }
  }
  return true;
}

void require_node(const Graph& link, Node n) {
  if (n >= link.num_nodes()) throw std::invalid_argument("node is not in the link");
}

} // namespace

Root make_root(const Graph& link, const std::array<Node, 4>& nodes) {
  Root root{nodes, {}};
  for (Node n : nodes) require_node(link, n);
  if (!distinct(nodes)) throw std::invalid_argument("root nodes are not distinct");
  for (int i = 0; i < 3; ++i) {
    auto e = link.edge_between(nodes[i], nodes[i + 1]);
    if (!e) throw std::invalid_argument("consecutive root nodes are not adjacent");
    root.edges[i] = *e;
  }
  return root;
}

std::vector<Root> enumerate_roots(const Graph& link) {
  if (!link.is_simple()) throw std::invalid_argument("root enumeration needs a simple link");
  std::vector<Root> roots;
  for (Node a = 0; a < link.num_nodes(); ++a) {
    for (const auto& ab : link.incident(a)) {
      for (const auto& bc : link.incident(ab.neighbor)) {
        if (bc.neighbor == a) continue;
        for (const auto& cd : link.incident(bc.neighbor)) {
          if (cd.neighbor == ab.neighbor || cd.neighbor == a) continue;
          roots.push_back(Root{{a, ab.neighbor, bc.neighbor, cd.neighbor}, {ab.edge, bc.edge, cd.edge}});
        }
      }
    }
  }
  return roots;
}

std::size_t geodesic3_count(const Graph& link, Node u, Node v) {
  require_node(link, u);
  require_node(link, v);
  if (u == v) throw std::domain_error("geodesic3_count needs distinct endpoints");
  std::size_t count = 0;
  for (const auto& ab : link.incident(u)) {
    Node b = ab.neighbor;
    if (b == u || b == v) continue;
    for (const auto& bc : link.incident(b)) {
      Node c = bc.neighbor;
      if (c == u || c == b || c == v) continue;
      for (const auto& cd : link.incident(c)) {
        if (cd.neighbor == v) ++count;
      }
    }
  }
  return count;
}

Rank root_rank(const Graph& link, const Root& root) {
  for (Node n : root.nodes) require_node(link, n);
  if (!distinct(root.nodes)) throw std::invalid_argument("root nodes are not distinct");
  for (int i = 0; i < 3; ++i) {
    if (root.edges[i] >= link.num_edges()) throw std::invalid_argument("root edge is not in the link");
    auto [x, y] = link.endpoints(root.edges[i]);
    bool matches = (x == root.nodes[i] && y == root.nodes[i + 1]) || (y == root.nodes[i] && x == root.nodes[i + 1]);
    if (!matches) throw std::invalid_argument("root edge does not join consecutive root nodes");
  }
  std::size_t paths = geodesic3_count(link, root.nodes[0], root.nodes[3]);
  return Rank{static_cast<int>(paths) - 1, static_cast<int>(link.degree(root.nodes[0])) - 1};
}

std::array<Root, 2> root_extensions(const Graph& link, const std::array<Node, 3>& path, PathEnd at_end) {
  for (Node n : path) require_node(link, n);
  if (path[0] == path[1] || path[1] == path[2] || path[0] == path[2]) {
    throw std::invalid_argument("extension needs a simple 2-edge path");
  }
  auto e01 = link.edge_between(path[0], path[1]);
  auto e12 = link.edge_between(path[1], path[2]);
  if (!e01 || !e12) throw std::invalid_argument("path is not in the link");

  const Node tip = at_end == PathEnd::Back ? path[2] : path[0];
  const Node inner = path[1];
  if (link.degree(tip) != 3) throw std::invalid_argument("extension node does not have valency 3");

  std::vector<Root> out;
  for (const auto& inc : link.incident(tip)) {
    if (inc.neighbor == inner) continue;
    std::array<Node, 4> nodes = at_end == PathEnd::Back
                                    ? std::array<Node, 4>{path[0], path[1], path[2], inc.neighbor}
                                    : std::array<Node, 4>{inc.neighbor, path[0], path[1], path[2]};
    out.push_back(make_root(link, nodes));
  }
  if (out.size() != 2) throw std::invalid_argument("extension node does not have exactly two free edges");
  return {out[0], out[1]};
}

} // namespace rank74
