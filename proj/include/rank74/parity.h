#pragma once

#include "rank74/complex.h"
#include "rank74/link.h"
#include "rank74/roots.h"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rank74 {

// Raised when a face or link needed for parity is not locally of rank 7/4
// (an edge not shared by exactly three face slots, or a link that is not
// the Moebius-Kantor graph).
class Rank74Violation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when a 2-triangle side does not trace a simple path in its link.
class MalformedComplex : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when the 2-triangles over one face disagree on its parity.
class ParityInconsistency : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A centerpiece face with one flap glued across each of its slots.
// flaps[i] carries the label of centerpiece slot i.
struct TwoTriangle {
  std::size_t centerpiece;
  std::array<FaceOccurrence, 3> flaps;

  bool operator==(const TwoTriangle&) const = default;
};

// Side i has its midpoint at the centerpiece vertex between slots i-1 and i.
// Its root runs through the corner of flap i, the centerpiece corner, and
// the corner of flap i-1.
struct SideRank {
  int side;
  VertexId midpoint;
  Root root;
  Rank rank;
};

enum class Parity { Even = 0, Odd = 1 };

enum class Classification { Even, Odd, Mixed };

enum class ParityCheck {
  AllTwoTriangles, // evaluate all 8 and fail on disagreement
  FirstOnly,
};

struct ParityMap {
  std::vector<Parity> bits;
  Classification classification = Classification::Even;
};

std::vector<FaceOccurrence> faces_across_edge(const TriangleComplex& complex, LabelId label);

// The 8 two-triangles over a face; flap choice for slot 0 varies slowest.
// Throws Rank74Violation naming the label when a slot label does not occur
// exactly three times.
std::vector<TwoTriangle> two_triangles(const TriangleComplex& complex, std::size_t face);

std::array<SideRank, 3> side_roots(const LinkAtlas& atlas, const TwoTriangle& t);

int rank_two_sides(const std::array<SideRank, 3>& sides);

Parity face_parity(const LinkAtlas& atlas, std::size_t face, ParityCheck check = ParityCheck::AllTwoTriangles);

ParityMap parity_map(const LinkAtlas& atlas, ParityCheck check = ParityCheck::AllTwoTriangles);

Classification classify(const std::vector<Parity>& bits);

// Replaces flap `flap` by the other occurrence of its label (the branching
// permutation with the centerpiece fixed). Involutive.
TwoTriangle flap_swap(const TriangleComplex& complex, const TwoTriangle& t, int flap);

// Exhaustive check of the branching rank swap over every two-triangle and flap.
struct BranchingReport {
  std::size_t two_triangles = 0;
  std::size_t swaps = 0;
  // Sides adjacent to the swapped flap whose rank stayed the same although the root changed.
  std::size_t violations = 0;
  // Sides adjacent to the swapped flap whose root is literally unchanged.
  std::size_t unchanged_roots = 0;
  // Faces whose 8 two-triangles disagree on parity.
  std::size_t parity_disagreements = 0;
  // The side opposite the swapped flap changed (should never happen).
  std::size_t far_side_changes = 0;
};

BranchingReport verify_branching(const LinkAtlas& atlas);

// True when some two-triangle over the face has three sides of rank 2.
bool admits_all_rank_two(const LinkAtlas& atlas, std::size_t face);

std::string to_string(Classification c);

} // namespace rank74
