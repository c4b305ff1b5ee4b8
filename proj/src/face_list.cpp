#include "rank74/face_list.h"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rank74 {

Label::Label(std::string name) : name_(std::move(name)) {
  if (name_.empty()) {
    throw std::invalid_argument("empty label");
  }
}

bool Label::is_numeral() const {
  return !name_.empty() &&
         std::all_of(name_.begin(), name_.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

FaceTriple make_face(std::string_view a, std::string_view b, std::string_view c) {
  return {Label(std::string(a)), Label(std::string(b)), Label(std::string(c))};
}

bool same_oriented_face(const FaceTriple& f, const FaceTriple& g) {
  for (int r = 0; r < 3; ++r) {
    if (f[0] == g[r] && f[1] == g[(r + 1) % 3] && f[2] == g[(r + 2) % 3]) {
      return true;
    }
  }
  return false;
}

ParseError::ParseError(const std::string& what, std::size_t face_index)
    : std::runtime_error(what), face_index_(face_index) {}

namespace {

bool is_bare_token_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

class Scanner {
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#' && at_line_start()) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip_blank();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_blank();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, std::size_t face) {
    if (!accept(c)) {
      std::ostringstream msg;
      msg << "expected '" << c << "' at offset " << pos_;
      throw ParseError(msg.str(), face);
    }
  }

  std::string token(std::size_t face) {
    char c = peek();
    if (c == '"') {
      ++pos_;
      auto end = text_.find('"', pos_);
      if (end == std::string_view::npos) {
        throw ParseError("unterminated string token", face);
      }
      std::string tok(text_.substr(pos_, end - pos_));
      pos_ = end + 1;
      if (tok.empty()) throw ParseError("empty label token", face);
      return tok;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_bare_token_char(text_[pos_])) ++pos_;
    if (start == pos_) {
      std::ostringstream msg;
      msg << "expected a label token at offset " << pos_;
      throw ParseError(msg.str(), face);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

private:
  bool at_line_start() const {
    for (std::size_t i = pos_; i-- > 0;) {
      if (text_[i] == '\n') return true;
      if (!std::isspace(static_cast<unsigned char>(text_[i]))) return false;
    }
    return true;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

FaceList parse_faces(std::string_view text) {
  constexpr auto npos = static_cast<std::size_t>(-1);
  Scanner in(text);
  FaceList faces;
  in.expect('[', npos);
  if (in.accept(']')) {
    if (!in.done()) throw ParseError("trailing characters after document", npos);
    return faces;
  }
  do {
    std::size_t index = faces.size();
    in.expect('[', index);
    std::vector<std::string> slots;
    if (!in.accept(']')) {
      do {
        slots.push_back(in.token(index));
      } while (in.accept(','));
      in.expect(']', index);
    }
    if (slots.size() != 3) {
      std::ostringstream msg;
      msg << "face " << index << " has " << slots.size() << " slots, expected 3";
      throw ParseError(msg.str(), index);
    }
    faces.push_back({Label(slots[0]), Label(slots[1]), Label(slots[2])});
  } while (in.accept(','));
  in.expect(']', npos);
  if (!in.done()) throw ParseError("trailing characters after document", npos);
  return faces;
}

std::string format_faces(const FaceList& faces) {
  std::string out = "[";
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (int s = 0; s < 3; ++s) {
      if (s) out += ',';
      out += '"';
      out += faces[i][s].name();
      out += '"';
    }
    out += ']';
  }
  out += ']';
  return out;
}

std::string format_face(const FaceTriple& face) {
  return "[" + face[0].name() + "," + face[1].name() + "," + face[2].name() + "]";
}

} // namespace rank74
