#pragma once

#include "rank74/face_list.h"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rank74 {

using LabelId = std::size_t;
using VertexId = std::size_t;

// +l is the terminal end of edge l (incoming at term(l)), -l the initial end.
enum class Sign { Plus, Minus };

struct EdgeEnd {
  LabelId label;
  Sign sign;

  auto operator<=>(const EdgeEnd&) const = default;
};

// (face, slot): one place where a label is used.
struct FaceOccurrence {
  std::size_t face;
  int slot;

  auto operator<=>(const FaceOccurrence&) const = default;
};

// The corner of `face` between slot `slot` and slot `slot+1`; it sits at
// term(slot label) = init(next slot label).
struct Corner {
  std::size_t face;
  int slot;

  auto operator<=>(const Corner&) const = default;
};

// A triangle 2-complex glued from oriented labeled faces. Edges are the
// distinct labels; vertices are classes of edge endpoints under
// term(slot i) ~ init(slot i+1).
class TriangleComplex {
public:
  TriangleComplex() = default;
  explicit TriangleComplex(FaceList faces);

  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_labels() const { return labels_.size(); }
  std::size_t num_vertices() const { return num_vertices_; }

  const FaceList& face_list() const { return faces_; }
  const FaceTriple& face(std::size_t f) const { return faces_.at(f); }
  const std::array<LabelId, 3>& face_ids(std::size_t f) const { return face_ids_.at(f); }

  // Labels are numbered by first appearance in the face list.
  const Label& label(LabelId id) const { return labels_.at(id); }
  std::optional<LabelId> find_label(const Label& label) const;
  std::optional<LabelId> find_label(std::string_view name) const;
  LabelId label_id(std::string_view name) const;

  // All (face, slot) pairs carrying the label, in input order.
  std::span<const FaceOccurrence> occurrences(LabelId id) const { return occurrences_.at(id); }

  // Vertex ids are ordered by the smallest endpoint in each class, endpoints
  // being ordered by (label id, initial before terminal).
  VertexId initial_vertex(LabelId id) const { return endpoint_vertex_.at(2 * id); }
  VertexId terminal_vertex(LabelId id) const { return endpoint_vertex_.at(2 * id + 1); }
  VertexId vertex_of(EdgeEnd end) const {
    return end.sign == Sign::Plus ? terminal_vertex(end.label) : initial_vertex(end.label);
  }
  VertexId corner_vertex(Corner c) const { return terminal_vertex(face_ids(c.face)[c.slot]); }

  std::vector<Corner> corners_at(VertexId v) const;

  // "+a" / "-a", with the plus sign omitted.
  std::string edge_end_name(EdgeEnd end) const;
  // Accepts "a", "+a", "-a" and the Unicode minus sign.
  std::optional<EdgeEnd> parse_edge_end(std::string_view text) const;

private:
  FaceList faces_;
  std::vector<std::array<LabelId, 3>> face_ids_;
  std::vector<Label> labels_;
  std::map<Label, LabelId> label_index_;
  std::vector<std::vector<FaceOccurrence>> occurrences_;
  std::vector<VertexId> endpoint_vertex_;
  std::size_t num_vertices_ = 0;
};

inline TriangleComplex build_complex(FaceList faces) { return TriangleComplex(std::move(faces)); }

} // namespace rank74
