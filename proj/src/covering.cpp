#include "rank74/covering.h"

#include <algorithm>
#include <queue>
#include <set>

namespace rank74 {

namespace {

constexpr LabelId kNone = static_cast<LabelId>(-1);

// Cover faces in BFS order over shared labels, so that each face after the
// first of its component already has a mapped label.
std::vector<std::size_t> face_order(const TriangleComplex& cover) {
  std::vector<std::size_t> order;
  std::vector<bool> seen(cover.num_faces(), false);
  for (std::size_t s = 0; s < cover.num_faces(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::queue<std::size_t> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      std::size_t f = frontier.front();
      frontier.pop();
      order.push_back(f);
      for (LabelId l : cover.face_ids(f)) {
        for (const auto& occ : cover.occurrences(l)) {
          if (!seen[occ.face]) {
            seen[occ.face] = true;
            frontier.push(occ.face);
          }
        }
      }
    }
  }
  return order;
}

class CoveringSearch {
public:
  CoveringSearch(const TriangleComplex& cover, const TriangleComplex& base)
      : cover_(cover), base_(base), order_(face_order(cover)) {
    map_.sheets = cover.num_faces() / base.num_faces();
    map_.label_map.assign(cover.num_labels(), kNone);
    map_.face_map.assign(cover.num_faces(), 0);
    map_.rotation.assign(cover.num_faces(), 0);
    load_.assign(base.num_faces(), 0);
    used_.assign(cover.num_labels(), {});
  }

  std::optional<CoveringMap> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return is_covering_map(cover_, base_, map_);
    const std::size_t f = order_[depth];
    const auto& ids = cover_.face_ids(f);
    for (std::size_t g = 0; g < base_.num_faces(); ++g) {
      if (load_[g] == map_.sheets) continue;
      const auto& gids = base_.face_ids(g);
      for (int r = 0; r < 3; ++r) {
        if (!fits(ids, gids, g, r)) continue;
        // assign
        std::vector<LabelId> newly;
        for (int s = 0; s < 3; ++s) {
          if (map_.label_map[ids[s]] == kNone) {
            map_.label_map[ids[s]] = gids[(s + r) % 3];
            newly.push_back(ids[s]);
          }
          used_[ids[s]].insert({g, (s + r) % 3});
        }
        map_.face_map[f] = g;
        map_.rotation[f] = r;
        ++load_[g];
        if (extend(depth + 1)) return true;
        --load_[g];
        for (int s = 0; s < 3; ++s) used_[ids[s]].erase({g, (s + r) % 3});
        for (LabelId l : newly) map_.label_map[l] = kNone;
      }
    }
    return false;
  }

  bool fits(const std::array<LabelId, 3>& ids, const std::array<LabelId, 3>& gids, std::size_t g, int r) const {
    for (int s = 0; s < 3; ++s) {
      const LabelId target = gids[(s + r) % 3];
      LabelId current = map_.label_map[ids[s]];
      // repeated labels inside the face must agree too
      for (int t = 0; t < s; ++t) {
        if (ids[t] == ids[s] && gids[(t + r) % 3] != target) return false;
      }
      if (current != kNone && current != target) return false;
      if (used_[ids[s]].contains({g, (s + r) % 3})) return false;
    }
    return true;
  }

  const TriangleComplex& cover_;
  const TriangleComplex& base_;
  std::vector<std::size_t> order_;
  CoveringMap map_;
  std::vector<std::size_t> load_;
  std::vector<std::set<FaceOccurrence>> used_;
};

} // namespace

bool is_covering_map(const TriangleComplex& cover, const TriangleComplex& base, const CoveringMap& map) {
  if (base.num_faces() == 0 || map.sheets == 0) return false;
  if (cover.num_faces() != map.sheets * base.num_faces()) return false;
  if (map.label_map.size() != cover.num_labels() || map.face_map.size() != cover.num_faces() ||
      map.rotation.size() != cover.num_faces()) {
    return false;
  }
  std::vector<std::size_t> load(base.num_faces(), 0);
  for (std::size_t f = 0; f < cover.num_faces(); ++f) {
    const std::size_t g = map.face_map[f];
    const int r = map.rotation[f];
    if (g >= base.num_faces() || r < 0 || r > 2) return false;
    ++load[g];
    for (int s = 0; s < 3; ++s) {
      if (map.label_map[cover.face_ids(f)[s]] != base.face_ids(g)[(s + r) % 3]) return false;
    }
  }
  if (std::any_of(load.begin(), load.end(), [&](std::size_t n) { return n != map.sheets; })) return false;

  // the faces around each edge map bijectively
  for (LabelId l = 0; l < cover.num_labels(); ++l) {
    std::set<FaceOccurrence> image;
    for (const auto& occ : cover.occurrences(l)) {
      image.insert({map.face_map[occ.face], (occ.slot + map.rotation[occ.face]) % 3});
    }
    if (image.size() != cover.occurrences(l).size() || image.size() != base.occurrences(map.label_map[l]).size()) {
      return false;
    }
  }

  // vertex map, then link isomorphism at every vertex
  std::vector<VertexId> vertex_map(cover.num_vertices(), static_cast<VertexId>(-1));
  for (LabelId l = 0; l < cover.num_labels(); ++l) {
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      VertexId v = cover.vertex_of({l, sign});
      VertexId w = base.vertex_of({map.label_map[l], sign});
      if (vertex_map[v] == static_cast<VertexId>(-1)) vertex_map[v] = w;
      if (vertex_map[v] != w) return false;
    }
  }
  for (VertexId v = 0; v < cover.num_vertices(); ++v) {
    const VertexId w = vertex_map[v];
    std::set<EdgeEnd> nodes;
    std::size_t cover_nodes = 0;
    for (LabelId l = 0; l < cover.num_labels(); ++l) {
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        if (cover.vertex_of({l, sign}) != v) continue;
        ++cover_nodes;
        nodes.insert({map.label_map[l], sign});
      }
    }
    std::size_t base_nodes = 0;
    for (LabelId l = 0; l < base.num_labels(); ++l) {
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        if (base.vertex_of({l, sign}) == w) ++base_nodes;
      }
    }
    if (nodes.size() != cover_nodes || cover_nodes != base_nodes) return false;

    std::set<Corner> corners;
    auto cover_corners = cover.corners_at(v);
    for (const Corner& c : cover_corners) {
      corners.insert({map.face_map[c.face], (c.slot + map.rotation[c.face]) % 3});
    }
    if (corners.size() != cover_corners.size() || corners.size() != base.corners_at(w).size()) return false;
  }
  return true;
}

std::optional<CoveringMap> verify_covering(const TriangleComplex& cover, const TriangleComplex& base) {
  if (base.num_faces() == 0 || cover.num_faces() % base.num_faces() != 0) return std::nullopt;
  const std::size_t sheets = cover.num_faces() / base.num_faces();
  if (cover.num_labels() != sheets * base.num_labels()) return std::nullopt;
  if (cover.num_vertices() != sheets * base.num_vertices()) return std::nullopt;
  return CoveringSearch(cover, base).run();
}

} // namespace rank74
