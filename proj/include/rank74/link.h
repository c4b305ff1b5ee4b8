#pragma once

#include "rank74/complex.h"
#include "rank74/graph.h"

#include <optional>
#include <string>
#include <vector>

namespace rank74 {

// The link at a vertex: one node per edge end at the vertex, one edge per
// face corner there. The corner between slots (a, b) of a face yields the
// link edge {+a, -b}.
class LinkGraph {
public:
  LinkGraph(const TriangleComplex& complex, VertexId vertex);

  VertexId vertex() const { return vertex_; }
  const Graph& graph() const { return graph_; }

  std::size_t num_nodes() const { return nodes_.size(); }
  const EdgeEnd& node(Node n) const { return nodes_.at(n); }
  const std::string& node_name(Node n) const { return names_.at(n); }
  std::optional<Node> find_node(EdgeEnd end) const;
  // Looks a node up by its printed name, e.g. "5" or "-7".
  std::optional<Node> find_node(std::string_view name) const;

  const Corner& corner(EdgeId e) const { return corners_.at(e); }
  std::optional<EdgeId> edge_for_corner(Corner c) const;

private:
  VertexId vertex_;
  Graph graph_;
  std::vector<EdgeEnd> nodes_;
  std::vector<std::string> names_;
  std::vector<Corner> corners_;
};

LinkGraph link_at(const TriangleComplex& complex, VertexId vertex);

// Owns a complex together with its links and their Moebius-Kantor status.
class LinkAtlas {
public:
  explicit LinkAtlas(TriangleComplex complex);

  const TriangleComplex& complex() const { return complex_; }
  const LinkGraph& at(VertexId v) const { return links_.at(v); }
  bool is_moebius_kantor(VertexId v) const { return mk_.at(v); }

private:
  TriangleComplex complex_;
  std::vector<LinkGraph> links_;
  std::vector<bool> mk_;
};

struct Rank74Report {
  std::vector<bool> vertex_pass;
  bool all_pass = false;
};

// A vertex passes when its link is isomorphic to the Moebius-Kantor graph.
Rank74Report is_rank_74(const TriangleComplex& complex);

bool is_moebius_kantor(const Graph& g);

} // namespace rank74
