#include "rank74/surgery.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace rank74 {

namespace {

FaceList faces_of(std::initializer_list<std::array<const char*, 3>> rows) {
  FaceList out;
  for (const auto& r : rows) out.push_back(make_face(r[0], r[1], r[2]));
  return out;
}

LabelMap identity_map() {
  LabelMap m;
  for (const Label& l : collar_labels()) m.emplace(l, l);
  return m;
}

LabelMap with(LabelMap base, std::initializer_list<std::pair<const char*, const char*>> changes) {
  for (const auto& [from, to] : changes) base[Label(from)] = Label(to);
  return base;
}

std::vector<std::size_t> core_faces(const Cobordism& c) {
  auto l = collar_image(c, c.left);
  auto r = collar_image(c, c.right);
  std::vector<std::size_t> core;
  for (std::size_t f = 0; f < c.faces.size(); ++f) {
    if (std::find(l.begin(), l.end(), f) == l.end() && std::find(r.begin(), r.end(), f) == r.end()) {
      core.push_back(f);
    }
  }
  return core;
}

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

// Distinct labels of a face list in order of first appearance.
std::vector<Label> labels_in_order(const FaceList& faces) {
  std::vector<Label> out;
  std::set<Label> seen;
  for (const auto& f : faces) {
    for (const Label& l : f) {
      if (seen.insert(l).second) out.push_back(l);
    }
  }
  return out;
}

std::size_t index_of(const std::vector<Label>& labels, const Label& l) {
  auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end()) throw CompositionError("collar map sends into missing label '" + l.name() + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

void check_total(const LabelMap& map, const char* side) {
  for (const Label& l : collar_labels()) {
    if (!map.contains(l)) throw CompositionError(std::string(side) + " collar map misses label '" + l.name() + "'");
  }
}

} // namespace

const FaceList& collar_faces() {
  static const FaceList faces =
      faces_of({{"x", "a", "d"}, {"y", "c", "d"}, {"z", "c", "b"}, {"x'", "d", "a"}, {"y'", "b", "a"}, {"z'", "b", "c"}});
  return faces;
}

const std::vector<Label>& collar_labels() {
  static const std::vector<Label> labels = [] {
    std::vector<Label> out;
    for (const char* n : {"x", "y", "z", "x'", "y'", "z'", "a", "b", "c", "d"}) out.emplace_back(n);
    return out;
  }();
  return labels;
}

Cobordism builtin_cobordism(std::string_view name) {
  Cobordism c;
  if (name == "C") {
    c.faces = collar_faces();
    c.left = identity_map();
    c.right = identity_map();
  } else if (name == "X00") {
    c.faces = faces_of({{"x", "a", "d"},
                        {"y", "c", "d"},
                        {"z", "c", "b"},
                        {"1", "1", "2"},
                        {"2", "a'", "d'"},
                        {"4", "c'", "d'"},
                        {"3", "c'", "b'"},
                        {"4", "d", "a"},
                        {"3", "b", "a"},
                        {"2", "b", "c"},
                        {"1", "3", "4"},
                        {"x'", "d'", "a'"},
                        {"y'", "b'", "a'"},
                        {"z'", "b'", "c'"}});
    c.left = with(identity_map(), {{"x'", "4"}, {"y'", "3"}, {"z'", "2"}});
    c.right = with(identity_map(), {{"x", "2"}, {"y", "4"}, {"z", "3"}, {"a", "a'"}, {"b", "b'"}, {"c", "c'"}, {"d", "d'"}});
  } else if (name == "Y00") {
    c.faces = faces_of({{"x", "a", "d"},
                        {"y", "c", "d"},
                        {"z", "c", "b"},
                        {"1", "2", "3"},
                        {"4", "a'", "d'"},
                        {"2", "c'", "d'"},
                        {"1", "c'", "b'"},
                        {"1", "d", "a"},
                        {"3", "b", "a"},
                        {"4", "b", "c"},
                        {"2", "4", "3"},
                        {"x'", "d'", "a'"},
                        {"y'", "b'", "a'"},
                        {"z'", "b'", "c'"}});
    c.left = with(identity_map(), {{"x'", "1"}, {"y'", "3"}, {"z'", "4"}});
    c.right = with(identity_map(), {{"x", "4"}, {"y", "2"}, {"z", "1"}, {"a", "a'"}, {"b", "b'"}, {"c", "c'"}, {"d", "d'"}});
  } else {
    throw std::invalid_argument("unknown cobordism '" + std::string(name) + "' (expected C, X00 or Y00)");
  }
  c.cores.push_back(core_faces(c));
  return c;
}

std::vector<std::size_t> collar_image(const Cobordism& c, const LabelMap& map) {
  std::vector<std::size_t> out;
  for (const FaceTriple& cf : collar_faces()) {
    FaceTriple image{};
    for (int s = 0; s < 3; ++s) {
      auto it = map.find(cf[s]);
      if (it == map.end()) throw CompositionError("collar map misses label '" + cf[s].name() + "'");
      image[s] = it->second;
    }
    auto hit = std::find_if(c.faces.begin(), c.faces.end(),
                            [&image](const FaceTriple& f) { return same_oriented_face(f, image); });
    if (hit == c.faces.end()) throw CompositionError("collar face image " + format_face(image) + " is not a face");
    out.push_back(static_cast<std::size_t>(hit - c.faces.begin()));
  }
  return out;
}

Label fresh_label(const Label& label, std::size_t depth) {
  if (label.is_numeral()) {
    return Label(std::to_string(std::stoull(label.name()) + 10 * depth));
  }
  return Label(label.name() + std::string(depth, '\''));
}

Cobordism compose(const Cobordism& a, const Cobordism& b) {
  check_total(a.right, "right");
  check_total(b.left, "left");
  const std::size_t depth = a.factors();

  Cobordism fb;
  for (const auto& f : b.faces) fb.faces.push_back({fresh_label(f[0], depth), fresh_label(f[1], depth), fresh_label(f[2], depth)});
  for (const auto& [k, v] : b.left) fb.left.emplace(k, fresh_label(v, depth));
  for (const auto& [k, v] : b.right) fb.right.emplace(k, fresh_label(v, depth));

  const auto labels_a = labels_in_order(a.faces);
  const auto labels_b = labels_in_order(fb.faces);
  const std::size_t na = labels_a.size();
  DisjointSets sets(na + labels_b.size());
  for (const Label& c : collar_labels()) {
    sets.unite(index_of(labels_a, a.right.at(c)), na + index_of(labels_b, fb.left.at(c)));
  }

  // class root -> (a member, b member)
  std::map<std::size_t, std::pair<std::optional<std::size_t>, std::optional<std::size_t>>> members;
  for (std::size_t i = 0; i < na + labels_b.size(); ++i) {
    auto& slot = members[sets.find(i)];
    auto& side = i < na ? slot.first : slot.second;
    if (side) {
      const Label& x = i < na ? labels_a[*side] : labels_b[*side - na];
      const Label& y = i < na ? labels_a[i] : labels_b[i - na];
      throw CompositionError("composition identifies '" + x.name() + "' with '" + y.name() +
                             "' of the same factor; the collars do not match");
    }
    side = i;
  }
  std::vector<Label> name(na + labels_b.size());
  std::set<Label> used;
  for (const auto& [root, m] : members) {
    std::optional<Label> la = m.first ? std::optional(labels_a[*m.first]) : std::nullopt;
    std::optional<Label> lb = m.second ? std::optional(labels_b[*m.second - na]) : std::nullopt;
    Label chosen = la ? *la : *lb;
    if (la && lb && !la->is_numeral() && lb->is_numeral()) chosen = *lb;
    if (!used.insert(chosen).second) {
      throw CompositionError("relabeling produced the label '" + chosen.name() + "' twice");
    }
    if (m.first) name[*m.first] = chosen;
    if (m.second) name[*m.second] = chosen;
  }
  auto rename_a = [&](const Label& l) { return name[index_of(labels_a, l)]; };
  auto rename_b = [&](const Label& l) { return name[na + index_of(labels_b, l)]; };

  Cobordism out;
  for (const auto& f : a.faces) out.faces.push_back({rename_a(f[0]), rename_a(f[1]), rename_a(f[2])});

  const auto a_right = collar_image(a, a.right);
  const auto b_left = collar_image(fb, fb.left);
  std::vector<std::size_t> b_index(fb.faces.size());
  for (std::size_t k = 0; k < b_left.size(); ++k) b_index[b_left[k]] = a_right[k];
  for (std::size_t f = 0; f < fb.faces.size(); ++f) {
    if (std::find(b_left.begin(), b_left.end(), f) != b_left.end()) continue;
    b_index[f] = out.faces.size();
    const auto& g = fb.faces[f];
    out.faces.push_back({rename_b(g[0]), rename_b(g[1]), rename_b(g[2])});
  }
  for (const auto& [k, v] : a.left) out.left.emplace(k, rename_a(v));
  for (const auto& [k, v] : fb.right) out.right.emplace(k, rename_b(v));

  out.cores = a.cores;
  out.seams = a.seams;
  out.seams.push_back(a_right);
  auto remap = [&b_index](const std::vector<std::size_t>& idx) {
    std::vector<std::size_t> r;
    for (std::size_t i : idx) r.push_back(b_index[i]);
    return r;
  };
  for (const auto& c : b.cores) out.cores.push_back(remap(c));
  for (const auto& s : b.seams) out.seams.push_back(remap(s));
  return out;
}

Closure close_up_tracked(const Cobordism& c) {
  check_total(c.left, "left");
  check_total(c.right, "right");
  const auto right_faces = collar_image(c, c.right);
  collar_image(c, c.left);

  const auto labels = labels_in_order(c.faces);
  DisjointSets sets(labels.size());
  for (const Label& l : collar_labels()) {
    sets.unite(index_of(labels, c.left.at(l)), index_of(labels, c.right.at(l)));
  }
  std::set<Label> left_image;
  for (const auto& [k, v] : c.left) left_image.insert(v);

  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < labels.size(); ++i) classes[sets.find(i)].push_back(i);
  std::vector<Label> name(labels.size());
  for (const auto& [root, members] : classes) {
    auto pick = [&](auto pred) -> std::optional<Label> {
      for (std::size_t i : members) {
        if (pred(labels[i])) return labels[i];
      }
      return std::nullopt;
    };
    auto chosen = pick([](const Label& l) { return l.is_numeral(); });
    if (!chosen) chosen = pick([&](const Label& l) { return left_image.contains(l); });
    if (!chosen) chosen = labels[members.front()];
    for (std::size_t i : members) name[i] = *chosen;
  }

  FaceList faces;
  std::vector<std::size_t> source;
  for (std::size_t f = 0; f < c.faces.size(); ++f) {
    if (std::find(right_faces.begin(), right_faces.end(), f) != right_faces.end()) continue;
    const auto& g = c.faces[f];
    faces.push_back({name[index_of(labels, g[0])], name[index_of(labels, g[1])], name[index_of(labels, g[2])]});
    source.push_back(f);
  }
  return Closure{TriangleComplex(std::move(faces)), std::move(source)};
}

TriangleComplex close_up(const Cobordism& c) { return close_up_tracked(c).complex; }

CompositionWord parse_word(std::string_view text) {
  CompositionWord word;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (word.close) throw std::invalid_argument("'close' must be the last word");
    if (tok == "close") {
      word.close = true;
    } else if (tok == "C" || tok == "X00" || tok == "Y00") {
      word.names.push_back(tok);
    } else {
      throw std::invalid_argument("unknown cobordism '" + tok + "' in composition word");
    }
  }
  if (word.names.empty()) throw std::invalid_argument("composition word names no cobordism");
  return word;
}

Cobordism evaluate_word(const CompositionWord& word) {
  if (word.names.empty()) throw std::invalid_argument("composition word names no cobordism");
  Cobordism acc = builtin_cobordism(word.names.front());
  for (std::size_t k = 1; k < word.names.size(); ++k) acc = compose(acc, builtin_cobordism(word.names[k]));
  return acc;
}

Cobordism v_n_chain(std::size_t n) {
  CompositionWord word;
  word.names.push_back("X00");
  for (std::size_t k = 0; k < 2 * n; ++k) word.names.push_back("Y00");
  return evaluate_word(word);
}

TriangleComplex v_n(std::size_t n) { return close_up(v_n_chain(n)); }

std::vector<std::optional<std::size_t>> odd_distances(const TriangleComplex& complex, const ParityMap& parity) {
  if (parity.bits.size() != complex.num_faces()) throw std::invalid_argument("parity map does not match complex");
  const std::size_t nv = complex.num_vertices();
  std::vector<std::vector<VertexId>> adjacent(nv);
  for (LabelId l = 0; l < complex.num_labels(); ++l) {
    VertexId u = complex.initial_vertex(l);
    VertexId v = complex.terminal_vertex(l);
    adjacent[u].push_back(v);
    adjacent[v].push_back(u);
  }
  // multi-source BFS from every vertex of an odd face
  std::vector<std::optional<std::size_t>> dist(nv);
  std::queue<VertexId> frontier;
  for (std::size_t f = 0; f < complex.num_faces(); ++f) {
    if (parity.bits[f] != Parity::Odd) continue;
    for (int s = 0; s < 3; ++s) {
      VertexId v = complex.corner_vertex({f, s});
      if (!dist[v]) {
        dist[v] = 0;
        frontier.push(v);
      }
    }
  }
  while (!frontier.empty()) {
    VertexId u = frontier.front();
    frontier.pop();
    for (VertexId w : adjacent[u]) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> distance_to_nearest_odd(const TriangleComplex& complex, const ParityMap& parity,
                                                   VertexId v) {
  if (v >= complex.num_vertices()) throw std::out_of_range("unknown vertex id " + std::to_string(v));
  return odd_distances(complex, parity)[v];
}

} // namespace rank74
