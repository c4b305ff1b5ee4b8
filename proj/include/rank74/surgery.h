#pragma once

#include "rank74/complex.h"
#include "rank74/face_list.h"
#include "rank74/parity.h"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rank74 {

class CompositionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Collar label -> label of the ambient complex.
using LabelMap = std::map<Label, Label>;

// The collar C: (x,a,d) (y,c,d) (z,c,b) (x',d,a) (y',b,a) (z',b,c).
const FaceList& collar_faces();
const std::vector<Label>& collar_labels();

// A complex with a left and a right embedding of the collar.
struct Cobordism {
  FaceList faces;
  LabelMap left;
  LabelMap right;
  // Face indices of the core (faces in neither collar image) of each factor.
  std::vector<std::vector<std::size_t>> cores;
  // Face indices of each interior collar, in composition order.
  std::vector<std::vector<std::size_t>> seams;

  std::size_t factors() const { return cores.size(); }
};

// "C" (the collar as the identity cobordism), "X00" or "Y00".
// Throws std::invalid_argument for other names.
Cobordism builtin_cobordism(std::string_view name);

// Face indices of the image of the collar faces under a label map, in
// collar face order. Throws CompositionError when an image face is missing.
std::vector<std::size_t> collar_image(const Cobordism& c, const LabelMap& map);

// Relabels a label of the factor at `depth`: numerals are shifted by
// 10 * depth, other labels get `depth` extra primes.
Label fresh_label(const Label& label, std::size_t depth);

// Glues b after a: b is relabeled with fresh_label(., a.factors()), then
// L_b(c) is identified with R_a(c) for every collar label c. The shared
// collar faces appear once. When a class merges a numeral with a letter the
// numeral names it; otherwise a's name wins. Throws CompositionError when
// the identification merges two labels of the same factor.
Cobordism compose(const Cobordism& a, const Cobordism& b);

struct Closure {
  TriangleComplex complex;
  // Index in the cobordism of each face of the closed complex.
  std::vector<std::size_t> source_face;
};

// Identifies L(c) with R(c) for every collar label c and drops the right
// collar faces. Classes are named by a numeral member when there is one,
// else by a left-collar label.
Closure close_up_tracked(const Cobordism& c);
TriangleComplex close_up(const Cobordism& c);

// Whitespace-separated builtin names with an optional trailing "close",
// e.g. "X00 Y00 Y00 close".
struct CompositionWord {
  std::vector<std::string> names;
  bool close = false;
};

CompositionWord parse_word(std::string_view text);
Cobordism evaluate_word(const CompositionWord& word);

// X00 followed by 2n copies of Y00, not yet closed.
Cobordism v_n_chain(std::size_t n);
TriangleComplex v_n(std::size_t n);

// BFS distance in the 1-skeleton from v to the nearest vertex of an odd
// face; nullopt (infinity) when no odd face is reachable.
std::optional<std::size_t> distance_to_nearest_odd(const TriangleComplex& complex, const ParityMap& parity,
                                                   VertexId v);

std::vector<std::optional<std::size_t>> odd_distances(const TriangleComplex& complex, const ParityMap& parity);

} // namespace rank74
