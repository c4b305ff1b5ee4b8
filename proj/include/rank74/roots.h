#pragma once

#include "rank74/graph.h"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace rank74 {

// A root: a 3-edge path in a link, each edge spanning an angle of pi/3.
// nodes[0] and nodes[3] are its endpoints at angles 0 and pi. Directed; a
// root and its reversal are distinct roots.
struct Root {
  std::array<Node, 4> nodes;
  std::array<EdgeId, 3> edges;

  Root reversed() const;
  bool operator==(const Root&) const = default;
};

// rank = 1 + n_value / q_value, where n_value counts the other roots sharing
// both endpoints and q_value is the valency of the start node minus one.
struct Rank {
  int n_value = 0;
  int q_value = 0;

  int numerator() const;
  int denominator() const;
  bool is_two() const { return n_value == q_value; }
  bool is_three_halves() const { return 2 * n_value == q_value; }
  // "2", "3/2", ...
  std::string to_string() const;

  bool operator==(const Rank&) const = default;
};

// Builds a root from four nodes of a simple graph; throws std::invalid_argument
// when consecutive nodes are not adjacent or the nodes are not distinct.
Root make_root(const Graph& link, const std::array<Node, 4>& nodes);

// Every simple 3-edge path, both directions. Requires a simple graph.
std::vector<Root> enumerate_roots(const Graph& link);

// Number of simple 3-edge paths from u to v. Throws std::domain_error when u == v.
std::size_t geodesic3_count(const Graph& link, Node u, Node v);

// Throws std::invalid_argument when the root does not lie in the link.
Rank root_rank(const Graph& link, const Root& root);

enum class PathEnd { Front, Back };

// The two roots extending a simple 2-edge path (three nodes) by one edge at
// the given end. Throws std::invalid_argument when the node at that end does
// not have valency 3 or the path is not a simple path of the link.
std::array<Root, 2> root_extensions(const Graph& link, const std::array<Node, 3>& path, PathEnd at_end);

} // namespace rank74
