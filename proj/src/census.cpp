#include "rank74/census.h"

#include "rank74/link.h"

#include <stdexcept>

namespace rank74 {

namespace {

CatalogEntry entry(std::string name, std::string_view faces, std::vector<int> bits) {
  std::vector<Parity> expected;
  for (int b : bits) expected.push_back(b ? Parity::Odd : Parity::Even);
  Classification cls = classify(expected);
  return CatalogEntry{std::move(name), parse_faces(faces), std::move(expected), cls};
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      entry("V_0", "[[1,2,6],[2,3,7],[3,4,8],[4,5,1],[5,6,2],[6,7,3],[7,8,4],[8,1,5]]", {1, 1, 1, 1, 1, 1, 1, 1}),
      entry("V_0^1", "[[1,2,3],[1,4,5],[1,6,4],[2,6,8],[2,8,5],[3,6,7],[3,7,5],[4,8,7]]", {0, 0, 0, 0, 0, 0, 0, 0}),
      entry("V_0^2", "[[1,2,3],[1,4,5],[1,6,7],[2,4,6],[2,8,5],[3,6,8],[3,7,5],[4,8,7]]", {0, 0, 0, 0, 0, 0, 0, 0}),
      entry("Vcheck_0^2", "[[1,2,3],[1,4,5],[1,6,7],[2,6,4],[2,8,5],[3,6,8],[3,7,5],[4,8,7]]",
            {0, 0, 0, 0, 0, 0, 0, 0}),
      entry("V_1", "[[1,1,2],[1,3,4],[2,5,6],[2,7,8],[3,5,7],[3,6,5],[4,6,8],[4,8,7]]", {0, 0, 1, 1, 0, 0, 0, 0}),
      entry("V_2^1", "[[1,1,3],[2,2,3],[1,4,5],[2,7,8],[3,5,7],[4,6,8],[4,7,6],[5,8,6]]", {0, 0, 1, 1, 0, 0, 0, 0}),
      entry("V_2^2", "[[1,1,3],[2,2,4],[3,7,4],[1,4,6],[2,5,3],[5,7,8],[5,8,6],[6,8,7]]", {1, 1, 0, 1, 1, 0, 0, 0}),
      entry("V_2^3", "[[1,1,3],[2,2,4],[1,5,2],[3,6,4],[3,7,6],[4,6,8],[5,7,8],[5,8,7]]", {0, 0, 0, 1, 1, 1, 0, 0}),
      entry("V_2^4", "[[1,1,3],[2,2,4],[1,5,2],[3,6,5],[3,7,8],[4,5,8],[4,6,7],[6,8,7]]", {0, 0, 0, 1, 1, 1, 1, 0}),
      entry("V_3", "[[1,1,4],[2,2,4],[3,3,5],[1,3,6],[2,5,7],[4,7,8],[5,8,6],[6,8,7]]", {0, 0, 0, 0, 1, 1, 1, 0}),
      entry("V_4^1", "[[1,1,5],[2,2,5],[3,3,6],[4,4,6],[1,3,8],[2,7,4],[5,8,7],[6,7,8]]", {0, 0, 0, 0, 0, 0, 0, 0}),
      entry("V_4^2", "[[1,1,5],[2,2,5],[3,3,6],[4,4,7],[1,3,8],[2,7,6],[4,8,6],[5,8,7]]", {0, 0, 1, 1, 0, 1, 1, 1}),
      entry("V_5", "[[1,1,2],[3,3,2],[4,4,2],[5,5,6],[7,7,8],[1,8,6],[3,6,7],[5,8,4]]", {0, 0, 0, 1, 1, 0, 0, 0}),
  };
  return entries;
}

const CatalogEntry& catalog(std::string_view name) {
  if (name == "V̌_0^2") name = "Vcheck_0^2";
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return e;
  }
  throw std::invalid_argument("unknown catalog complex '" + std::string(name) + "'");
}

std::vector<CatalogCheck> verify_catalog() {
  std::vector<CatalogCheck> out;
  for (const auto& e : catalog_entries()) {
    CatalogCheck check;
    check.name = e.name;
    check.expected = e.expected;
    TriangleComplex complex(e.faces);
    check.rank74 = is_rank_74(complex).all_pass;
    try {
      ParityMap pm = parity_map(LinkAtlas(complex));
      check.computed = pm.bits;
      check.classification = pm.classification;
    } catch (const std::exception& ex) {
      check.error = ex.what();
    }
    check.match = check.rank74 && check.error.empty() && check.computed == check.expected;
    out.push_back(std::move(check));
  }
  return out;
}

std::size_t edge_cycle_count(const Graph& g, const Permutation& node_perm) {
  // edges are matched by endpoints; the graph must be simple
  std::vector<EdgeId> image(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.endpoints(e);
    auto mapped = g.edge_between(node_perm.at(u), node_perm.at(v));
    if (!mapped) throw std::invalid_argument("permutation is not an automorphism");
    image[e] = *mapped;
  }
  std::vector<bool> seen(g.num_edges(), false);
  std::size_t cycles = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (seen[e]) continue;
    ++cycles;
    for (EdgeId x = e; !seen[x]; x = image[x]) seen[x] = true;
  }
  return cycles;
}

SphereCountReport burnside_sphere_count() {
  const Graph mk = mk_reference();
  const auto group = automorphism_group(mk);
  SphereCountReport report;
  report.automorphisms = group.size();
  for (const auto& g : group) {
    std::size_t c = edge_cycle_count(mk, g);
    report.edge_cycles.push_back(c);
    report.burnside_sum += std::uint64_t{1} << c;
  }
  if (report.burnside_sum % group.size() != 0) throw std::logic_error("Burnside sum is not divisible by |Aut|");
  report.orbit_count = report.burnside_sum / group.size();
  report.bound_numerator = std::uint64_t{1} << mk.num_edges();
  report.bound_denominator = group.size();
  report.bound_ceiling = (report.bound_numerator + report.bound_denominator - 1) / report.bound_denominator;
  return report;
}

} // namespace rank74
