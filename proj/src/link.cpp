#include "rank74/link.h"

#include <algorithm>
#include <stdexcept>

namespace rank74 {

LinkGraph::LinkGraph(const TriangleComplex& complex, VertexId vertex) : vertex_(vertex) {
  if (vertex >= complex.num_vertices()) {
    throw std::out_of_range("unknown vertex id " + std::to_string(vertex));
  }
  for (LabelId l = 0; l < complex.num_labels(); ++l) {
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      EdgeEnd end{l, sign};
      if (complex.vertex_of(end) == vertex) {
        nodes_.push_back(end);
        names_.push_back(complex.edge_end_name(end));
      }
    }
  }
  graph_ = Graph(nodes_.size());
  for (const Corner& c : complex.corners_at(vertex)) {
    const auto& ids = complex.face_ids(c.face);
    Node in = *find_node(EdgeEnd{ids[c.slot], Sign::Plus});
    Node out = *find_node(EdgeEnd{ids[(c.slot + 1) % 3], Sign::Minus});
    graph_.add_edge(in, out);
    corners_.push_back(c);
  }
}

std::optional<Node> LinkGraph::find_node(EdgeEnd end) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), end);
  if (it == nodes_.end() || *it != end) return std::nullopt;
  return static_cast<Node>(it - nodes_.begin());
}

std::optional<Node> LinkGraph::find_node(std::string_view name) const {
  if (name.starts_with('+')) name.remove_prefix(1);
  for (Node n = 0; n < names_.size(); ++n) {
    if (names_[n] == name) return n;
  }
  return std::nullopt;
}

std::optional<EdgeId> LinkGraph::edge_for_corner(Corner c) const {
  for (EdgeId e = 0; e < corners_.size(); ++e) {
    if (corners_[e] == c) return e;
  }
  return std::nullopt;
}

LinkGraph link_at(const TriangleComplex& complex, VertexId vertex) { return LinkGraph(complex, vertex); }

bool is_moebius_kantor(const Graph& g) {
  static const Graph reference = mk_reference();
  if (g.num_nodes() != 16 || g.num_edges() != 24 || !g.is_regular(3)) return false;
  return find_isomorphism(g, reference).has_value();
}

LinkAtlas::LinkAtlas(TriangleComplex complex) : complex_(std::move(complex)) {
  links_.reserve(complex_.num_vertices());
  for (VertexId v = 0; v < complex_.num_vertices(); ++v) {
    links_.emplace_back(complex_, v);
    mk_.push_back(rank74::is_moebius_kantor(links_.back().graph()));
  }
}

Rank74Report is_rank_74(const TriangleComplex& complex) {
  Rank74Report report;
  for (VertexId v = 0; v < complex.num_vertices(); ++v) {
    report.vertex_pass.push_back(is_moebius_kantor(link_at(complex, v).graph()));
  }
  report.all_pass = complex.num_vertices() > 0 &&
                    std::all_of(report.vertex_pass.begin(), report.vertex_pass.end(), [](bool b) { return b; });
  return report;
}

} // namespace rank74
