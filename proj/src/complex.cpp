#include "rank74/complex.h"

#include <numeric>
#include <stdexcept>

namespace rank74 {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller representative so roots are class minima.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

private:
  std::vector<std::size_t> parent_;
};

} // namespace

TriangleComplex::TriangleComplex(FaceList faces) : faces_(std::move(faces)) {
  face_ids_.reserve(faces_.size());
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    std::array<LabelId, 3> ids{};
    for (int s = 0; s < 3; ++s) {
      const Label& l = faces_[f][s];
      auto [it, inserted] = label_index_.try_emplace(l, labels_.size());
      if (inserted) {
        labels_.push_back(l);
        occurrences_.emplace_back();
      }
      ids[s] = it->second;
      occurrences_[it->second].push_back({f, s});
    }
    face_ids_.push_back(ids);
  }

  // endpoint 2l = init(l), 2l+1 = term(l)
  DisjointSets sets(2 * labels_.size());
  for (const auto& ids : face_ids_) {
    for (int s = 0; s < 3; ++s) {
      sets.unite(2 * ids[s] + 1, 2 * ids[(s + 1) % 3]);
    }
  }
  endpoint_vertex_.assign(2 * labels_.size(), 0);
  std::vector<std::size_t> root_to_vertex(2 * labels_.size(), static_cast<std::size_t>(-1));
  for (std::size_t e = 0; e < endpoint_vertex_.size(); ++e) {
    std::size_t r = sets.find(e);
    if (root_to_vertex[r] == static_cast<std::size_t>(-1)) root_to_vertex[r] = num_vertices_++;
    endpoint_vertex_[e] = root_to_vertex[r];
  }
}

std::optional<LabelId> TriangleComplex::find_label(const Label& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<LabelId> TriangleComplex::find_label(std::string_view name) const {
  if (name.empty()) return std::nullopt;
  return find_label(Label(std::string(name)));
}

LabelId TriangleComplex::label_id(std::string_view name) const {
  auto id = find_label(name);
  if (!id) throw std::out_of_range("unknown label '" + std::string(name) + "'");
  return *id;
}

std::vector<Corner> TriangleComplex::corners_at(VertexId v) const {
  if (v >= num_vertices_) throw std::out_of_range("unknown vertex id " + std::to_string(v));
  std::vector<Corner> out;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    for (int s = 0; s < 3; ++s) {
      if (corner_vertex({f, s}) == v) out.push_back({f, s});
    }
  }
  return out;
}

std::string TriangleComplex::edge_end_name(EdgeEnd end) const {
  const std::string& name = label(end.label).name();
  return end.sign == Sign::Plus ? name : "-" + name;
}

std::optional<EdgeEnd> TriangleComplex::parse_edge_end(std::string_view text) const {
  Sign sign = Sign::Plus;
  static constexpr std::string_view kUnicodeMinus = "−";
  if (text.starts_with('-')) {
    sign = Sign::Minus;
    text.remove_prefix(1);
  } else if (text.starts_with(kUnicodeMinus)) {
    sign = Sign::Minus;
    text.remove_prefix(kUnicodeMinus.size());
  } else if (text.starts_with('+')) {
    text.remove_prefix(1);
  }
  auto id = find_label(text);
  if (!id) return std::nullopt;
  return EdgeEnd{*id, sign};
}

} // namespace rank74
