#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rank74 {

using Node = std::size_t;
using EdgeId = std::size_t;

// Node i of the first graph maps to perm[i] of the second.
using Permutation = std::vector<Node>;

// Undirected multigraph with stable edge ids. Loops count twice toward degree.
class Graph {
public:
  struct Incidence {
    Node neighbor;
    EdgeId edge;
  };

  Graph() = default;
  explicit Graph(std::size_t num_nodes);

  EdgeId add_edge(Node u, Node v);

  std::size_t num_nodes() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::pair<Node, Node> endpoints(EdgeId e) const { return edges_.at(e); }
  std::span<const Incidence> incident(Node u) const { return adjacency_.at(u); }
  std::size_t degree(Node u) const { return adjacency_.at(u).size(); }

  std::size_t multiplicity(Node u, Node v) const;
  std::optional<EdgeId> edge_between(Node u, Node v) const;

  // No loops and no parallel edges.
  bool is_simple() const;
  bool is_regular(std::size_t degree) const;

private:
  std::vector<std::pair<Node, Node>> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

Graph cycle_graph(std::size_t n);

// The Moebius-Kantor graph drawn as a 16-cycle v0..v15 with chords
// {v(2j), v(2j+5 mod 16)}, j = 0..7 (LCF [5,-5]^8).
Graph mk_reference();

// All-pairs BFS distances; -1 marks unreachable pairs.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

// Length of a shortest cycle (loops count 1, parallel edges 2); nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

bool is_bipartite(const Graph& g);

// Adjacency- and multiplicity-preserving bijection g -> h, if one exists.
// The search is deterministic for fixed inputs.
std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h);

// Every automorphism of g, identity first.
std::vector<Permutation> automorphism_group(const Graph& g);

} // namespace rank74
