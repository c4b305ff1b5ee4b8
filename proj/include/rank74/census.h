#pragma once

#include "rank74/face_list.h"
#include "rank74/graph.h"
#include "rank74/parity.h"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rank74 {

// One of the thirteen known compact complexes of rank 7/4 with one vertex,
// together with its published parity table.
struct CatalogEntry {
  std::string name;
  FaceList faces;
  std::vector<Parity> expected;
  Classification expected_classification;
};

// Names: V_0, V_0^1, V_0^2, Vcheck_0^2, V_1, V_2^1 .. V_2^4, V_3, V_4^1, V_4^2, V_5.
const std::vector<CatalogEntry>& catalog_entries();

// Throws std::invalid_argument for an unknown name. "V̌_0^2" is accepted
// as an alias of Vcheck_0^2.
const CatalogEntry& catalog(std::string_view name);

struct CatalogCheck {
  std::string name;
  bool rank74 = false;
  std::vector<Parity> computed;
  std::vector<Parity> expected;
  Classification classification = Classification::Even;
  bool match = false;
  // Set when parity could not be computed.
  std::string error;
};

std::vector<CatalogCheck> verify_catalog();

// Orbits of 2-colourings of the 24 faces of a radius-1 ball (the 24 link
// edges) under the automorphism group of the Moebius-Kantor graph.
struct SphereCountReport {
  std::size_t automorphisms = 0;
  // sum over automorphisms of 2^(number of edge cycles)
  std::uint64_t burnside_sum = 0;
  std::uint64_t orbit_count = 0;
  // The rational lower bound 2^24 / |Aut|.
  std::uint64_t bound_numerator = 0;
  std::uint64_t bound_denominator = 0;
  std::uint64_t bound_ceiling = 0;
  // Previously published figure, kept for comparison.
  std::uint64_t printed_figure = 174163;
  std::vector<std::size_t> edge_cycles;

  double bound_value() const { return static_cast<double>(bound_numerator) / static_cast<double>(bound_denominator); }
};

// Number of cycles of the permutation that `node_perm` induces on the edges of g.
std::size_t edge_cycle_count(const Graph& g, const Permutation& node_perm);

SphereCountReport burnside_sphere_count();

} // namespace rank74
