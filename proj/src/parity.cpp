#include "rank74/parity.h"

#include <algorithm>
#include <functional>

namespace rank74 {

std::vector<FaceOccurrence> faces_across_edge(const TriangleComplex& complex, LabelId label) {
  auto occ = complex.occurrences(label);
  return {occ.begin(), occ.end()};
}

namespace {

std::array<std::array<FaceOccurrence, 2>, 3> flap_choices(const TriangleComplex& complex, std::size_t face) {
  if (face >= complex.num_faces()) throw std::out_of_range("unknown face index " + std::to_string(face));
  std::array<std::array<FaceOccurrence, 2>, 3> choices{};
  const auto& ids = complex.face_ids(face);
  for (int s = 0; s < 3; ++s) {
    auto occ = complex.occurrences(ids[s]);
    if (occ.size() != 3) {
      throw Rank74Violation("edge '" + complex.label(ids[s]).name() + "' occurs in " + std::to_string(occ.size()) +
                            " face slots, expected 3");
    }
    int k = 0;
    for (const FaceOccurrence& o : occ) {
      if (o == FaceOccurrence{face, s}) continue;
      choices[s][k++] = o;
    }
  }
  return choices;
}

} // namespace

std::vector<TwoTriangle> two_triangles(const TriangleComplex& complex, std::size_t face) {
  auto choices = flap_choices(complex, face);
  std::vector<TwoTriangle> out;
  for (const auto& f0 : choices[0]) {
    for (const auto& f1 : choices[1]) {
      for (const auto& f2 : choices[2]) {
        out.push_back(TwoTriangle{face, {f0, f1, f2}});
      }
    }
  }
  return out;
}

std::array<SideRank, 3> side_roots(const LinkAtlas& atlas, const TwoTriangle& t) {
  const TriangleComplex& complex = atlas.complex();
  const auto& center = complex.face_ids(t.centerpiece);
  for (int s = 0; s < 3; ++s) {
    const auto& f = t.flaps[s];
    if (f.face >= complex.num_faces() || f.slot < 0 || f.slot > 2 ||
        complex.face_ids(f.face)[f.slot] != center[s] || f == FaceOccurrence{t.centerpiece, s}) {
      throw std::invalid_argument("two-triangle flap does not match its centerpiece slot");
    }
  }

  std::array<SideRank, 3> sides{};
  for (int i = 0; i < 3; ++i) {
    const int prev = (i + 2) % 3;
    const FaceOccurrence& out_flap = t.flaps[i];  // carries the outgoing edge at the midpoint
    const FaceOccurrence& in_flap = t.flaps[prev]; // carries the incoming edge
    const auto& out_ids = complex.face_ids(out_flap.face);
    const auto& in_ids = complex.face_ids(in_flap.face);

    const Corner first{out_flap.face, (out_flap.slot + 2) % 3};
    const Corner middle{t.centerpiece, prev};
    const Corner last{in_flap.face, in_flap.slot};
    if (first == middle || middle == last || first == last) {
      throw MalformedComplex("side " + std::to_string(i) + " of a two-triangle over face " +
                             std::to_string(t.centerpiece) + " reuses a face corner");
    }

    const VertexId v = complex.corner_vertex(middle);
    if (!atlas.is_moebius_kantor(v)) {
      throw Rank74Violation("link at vertex " + std::to_string(v) + " is not the Moebius-Kantor graph");
    }
    const LinkGraph& link = atlas.at(v);

    const std::array<EdgeEnd, 4> ends{EdgeEnd{out_ids[(out_flap.slot + 2) % 3], Sign::Plus},
                                      EdgeEnd{center[i], Sign::Minus}, EdgeEnd{center[prev], Sign::Plus},
                                      EdgeEnd{in_ids[(in_flap.slot + 1) % 3], Sign::Minus}};
    Root root{};
    for (int k = 0; k < 4; ++k) root.nodes[k] = *link.find_node(ends[k]);
    const std::array<Corner, 3> corners{first, middle, last};
    for (int k = 0; k < 3; ++k) root.edges[k] = *link.edge_for_corner(corners[k]);
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        if (root.nodes[a] == root.nodes[b]) {
          throw MalformedComplex("side " + std::to_string(i) + " of a two-triangle over face " +
                                 std::to_string(t.centerpiece) + " is not a simple path in its link");
        }
      }
    }
    sides[i] = SideRank{i, v, root, root_rank(link.graph(), root)};
  }
  return sides;
}

int rank_two_sides(const std::array<SideRank, 3>& sides) {
  return static_cast<int>(std::count_if(sides.begin(), sides.end(), [](const SideRank& s) { return s.rank.is_two(); }));
}

Parity face_parity(const LinkAtlas& atlas, std::size_t face, ParityCheck check) {
  auto all = two_triangles(atlas.complex(), face);
  const int first = rank_two_sides(side_roots(atlas, all.front())) % 2;
  if (check == ParityCheck::AllTwoTriangles) {
    for (std::size_t k = 1; k < all.size(); ++k) {
      if (rank_two_sides(side_roots(atlas, all[k])) % 2 != first) {
        throw ParityInconsistency("two-triangles over face " + std::to_string(face) + " " +
                                  format_face(atlas.complex().face(face)) + " disagree on parity");
      }
    }
  }
  return first ? Parity::Odd : Parity::Even;
}

Classification classify(const std::vector<Parity>& bits) {
  bool any_even = std::find(bits.begin(), bits.end(), Parity::Even) != bits.end();
  bool any_odd = std::find(bits.begin(), bits.end(), Parity::Odd) != bits.end();
  if (any_even && any_odd) return Classification::Mixed;
  return any_odd ? Classification::Odd : Classification::Even;
}

ParityMap parity_map(const LinkAtlas& atlas, ParityCheck check) {
  ParityMap map;
  for (std::size_t f = 0; f < atlas.complex().num_faces(); ++f) {
    map.bits.push_back(face_parity(atlas, f, check));
  }
  map.classification = classify(map.bits);
  return map;
}

TwoTriangle flap_swap(const TriangleComplex& complex, const TwoTriangle& t, int flap) {
  if (flap < 0 || flap > 2) throw std::out_of_range("flap index must be 0, 1 or 2");
  auto choices = flap_choices(complex, t.centerpiece);
  const auto& pair = choices[flap];
  TwoTriangle swapped = t;
  if (t.flaps[flap] == pair[0]) {
    swapped.flaps[flap] = pair[1];
  } else if (t.flaps[flap] == pair[1]) {
    swapped.flaps[flap] = pair[0];
  } else {
    throw std::invalid_argument("flap is not an occurrence across its centerpiece slot");
  }
  return swapped;
}

BranchingReport verify_branching(const LinkAtlas& atlas) {
  BranchingReport report;
  const TriangleComplex& complex = atlas.complex();
  for (std::size_t f = 0; f < complex.num_faces(); ++f) {
    auto all = two_triangles(complex, f);
    std::vector<int> parities;
    for (const TwoTriangle& t : all) {
      ++report.two_triangles;
      auto before = side_roots(atlas, t);
      parities.push_back(rank_two_sides(before) % 2);
      for (int i = 0; i < 3; ++i) {
        ++report.swaps;
        auto after = side_roots(atlas, flap_swap(complex, t, i));
        for (int side : {i, (i + 1) % 3}) {
          if (before[side].root == after[side].root) {
            ++report.unchanged_roots;
          } else if (before[side].rank == after[side].rank) {
            ++report.violations;
          }
        }
        int far = (i + 2) % 3;
        if (!(before[far].root == after[far].root)) ++report.far_side_changes;
      }
    }
    if (std::adjacent_find(parities.begin(), parities.end(), std::not_equal_to<>()) != parities.end()) {
      ++report.parity_disagreements;
    }
  }
  return report;
}

bool admits_all_rank_two(const LinkAtlas& atlas, std::size_t face) {
  for (const TwoTriangle& t : two_triangles(atlas.complex(), face)) {
    if (rank_two_sides(side_roots(atlas, t)) == 3) return true;
  }
  return false;
}

std::string to_string(Classification c) {
  switch (c) {
  case Classification::Even:
    return "Even";
  case Classification::Odd:
    return "Odd";
  case Classification::Mixed:
    return "Mixed";
  }
  return "?";
}

} // namespace rank74
