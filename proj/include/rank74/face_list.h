#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rank74 {

// A symbolic edge label. Integer tokens ("12"), letters ("a") and primed
// letters ("d''") are all labels; equality is exact token equality.
class Label {
public:
  Label() = default;
  explicit Label(std::string name);

  const std::string& name() const { return name_; }

  // True when the token is made only of decimal digits.
  bool is_numeral() const;

  auto operator<=>(const Label&) const = default;

private:
  std::string name_;
};

// Slot i holds the label of the i-th directed edge of the face boundary.
using FaceTriple = std::array<Label, 3>;
using FaceList = std::vector<FaceTriple>;

FaceTriple make_face(std::string_view a, std::string_view b, std::string_view c);

// Faces equal up to cyclic rotation of the slots (same orientation).
bool same_oriented_face(const FaceTriple& f, const FaceTriple& g);

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t face_index);
  // Index of the offending face, or npos when the error is not tied to a face.
  std::size_t face_index() const { return face_index_; }

private:
  std::size_t face_index_;
};

// Parses a face-list document: an array of 3-element arrays of tokens,
// e.g. [["1","2","6"],["2","3","7"]] or [[a,b,c]]. Tokens may be quoted or
// bare (letters, digits, '_' and '\''). Whitespace is ignored, and so are
// lines whose first non-blank character is '#'.
FaceList parse_faces(std::string_view text);

// Writes the canonical document form, [["1","2","6"],...], on one line.
std::string format_faces(const FaceList& faces);

std::string format_face(const FaceTriple& face);

} // namespace rank74
