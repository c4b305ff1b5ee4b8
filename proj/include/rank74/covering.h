#pragma once

#include "rank74/complex.h"

#include <cstddef>
#include <optional>
#include <vector>

namespace rank74 {

// A combinatorial covering map between finite triangle complexes: each
// cover face f goes to base face face_map[f] with cover slot s landing on
// base slot (s + rotation[f]) % 3.
struct CoveringMap {
  std::vector<LabelId> label_map;
  std::vector<std::size_t> face_map;
  std::vector<int> rotation;
  std::size_t sheets = 0;
};

// Backtracking search for an orientation-preserving label map that sends
// faces to faces, is bijective on the faces around each edge, and is a
// local isomorphism on every vertex link. Returns the first witness found.
std::optional<CoveringMap> verify_covering(const TriangleComplex& cover, const TriangleComplex& base);

// Checks a candidate map independently of how it was found.
bool is_covering_map(const TriangleComplex& cover, const TriangleComplex& base, const CoveringMap& map);

} // namespace rank74
