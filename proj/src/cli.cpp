#include "rank74/cli.h"

#include "rank74/census.h"
#include "rank74/link.h"
#include "rank74/parity.h"
#include "rank74/surgery.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace rank74::cli {

namespace {

using nlohmann::json;

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SourceOptions {
  std::string faces_path;
  std::string builtin;
  std::string word;
  std::optional<std::size_t> n;
};

struct Resolved {
  std::string name;
  TriangleComplex complex;
  const CatalogEntry* entry = nullptr;
};

void add_source_options(CLI::App* sub, SourceOptions& src, bool with_n) {
  sub->add_option("--faces", src.faces_path, "face-list document ('-' for stdin)");
  sub->add_option("--builtin", src.builtin, "catalog complex (V_0, V_2^3, ...) or cobordism (C, X00, Y00)");
  sub->add_option("--word", src.word, "composition word, e.g. \"X00 Y00 Y00 close\"");
  if (with_n) sub->add_option("--n", src.n, "use the closed complex V_n");
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Resolved resolve(const SourceOptions& src) {
  int given = !src.faces_path.empty() + !src.builtin.empty() + !src.word.empty() + src.n.has_value();
  if (given != 1) throw InputError("give exactly one of --faces, --builtin, --word, --n");

  if (!src.faces_path.empty()) {
    std::string text;
    if (src.faces_path == "-") {
      text = read_all(std::cin);
    } else {
      std::ifstream in(src.faces_path);
      if (!in) throw InputError("cannot read '" + src.faces_path + "'");
      text = read_all(in);
    }
    return {src.faces_path, TriangleComplex(parse_faces(text))};
  }
  if (!src.builtin.empty()) {
    if (src.builtin == "C" || src.builtin == "X00" || src.builtin == "Y00") {
      return {src.builtin, TriangleComplex(builtin_cobordism(src.builtin).faces)};
    }
    const CatalogEntry& e = catalog(src.builtin);
    return {e.name, TriangleComplex(e.faces), &e};
  }
  if (!src.word.empty()) {
    CompositionWord w = parse_word(src.word);
    Cobordism c = evaluate_word(w);
    return {src.word, w.close ? close_up(c) : TriangleComplex(c.faces)};
  }
  return {"V_" + std::to_string(*src.n), v_n(*src.n)};
}

std::string bits_string(const std::vector<Parity>& bits) {
  std::string s;
  for (Parity p : bits) s += p == Parity::Odd ? '1' : '0';
  return s;
}

json faces_json(const FaceList& faces) {
  json arr = json::array();
  for (const auto& f : faces) arr.push_back({f[0].name(), f[1].name(), f[2].name()});
  return arr;
}

json map_json(const LabelMap& m) {
  json obj = json::object();
  for (const auto& [k, v] : m) obj[k.name()] = v.name();
  return obj;
}

std::string map_line(const LabelMap& m) {
  std::string s;
  for (const Label& l : collar_labels()) {
    if (!s.empty()) s += ' ';
    s += l.name() + "=" + m.at(l).name();
  }
  return s;
}

int cmd_verify(const Resolved& r, bool as_json, std::ostream& out) {
  Rank74Report rep = is_rank_74(r.complex);
  if (as_json) {
    out << json{{"complex", r.name}, {"vertices", rep.vertex_pass}, {"rank74", rep.all_pass}}.dump() << '\n';
  } else {
    for (std::size_t v = 0; v < rep.vertex_pass.size(); ++v) {
      out << "vertex " << v << ": " << (rep.vertex_pass[v] ? "pass" : "fail") << '\n';
    }
    out << "rank74: " << (rep.all_pass ? "yes" : "no") << '\n';
  }
  return rep.all_pass ? kOk : kMismatch;
}

int cmd_parity(const Resolved& r, bool as_json, std::ostream& out) {
  ParityMap pm = parity_map(LinkAtlas(r.complex));
  const FaceList& faces = r.complex.face_list();
  std::optional<bool> match;
  if (r.entry) match = pm.bits == r.entry->expected;
  if (as_json) {
    json rows = json::array();
    for (std::size_t f = 0; f < faces.size(); ++f) {
      rows.push_back(json::array({faces_json({faces[f]})[0], static_cast<int>(pm.bits[f])}));
    }
    json doc{{"complex", r.name}, {"faces", rows}, {"classification", to_string(pm.classification)}};
    if (r.entry) {
      doc["expected"] = bits_string(r.entry->expected);
      doc["match"] = *match;
    }
    out << doc.dump() << '\n';
  } else {
    for (std::size_t f = 0; f < faces.size(); ++f) {
      out << format_face(faces[f]) << ' ' << static_cast<int>(pm.bits[f]) << '\n';
    }
    out << "classification: " << to_string(pm.classification) << '\n';
    if (r.entry) {
      out << "expected: " << bits_string(r.entry->expected) << '\n';
      out << "match: " << (*match ? "yes" : "no") << '\n';
    }
  }
  return match.value_or(true) ? kOk : kMismatch;
}

void emit_cobordism(const Cobordism& c, bool as_json, std::ostream& out) {
  if (as_json) {
    out << json{{"faces", faces_json(c.faces)}, {"left", map_json(c.left)}, {"right", map_json(c.right)}}.dump()
        << '\n';
  } else {
    out << format_faces(c.faces) << '\n';
    out << "# left " << map_line(c.left) << '\n';
    out << "# right " << map_line(c.right) << '\n';
  }
}

void emit_complex(const TriangleComplex& c, bool as_json, std::ostream& out) {
  if (as_json) {
    out << json{{"faces", faces_json(c.face_list())}}.dump() << '\n';
  } else {
    out << format_faces(c.face_list()) << '\n';
  }
}

int cmd_distances(const Resolved& r, bool as_json, std::ostream& out) {
  ParityMap pm = parity_map(LinkAtlas(r.complex));
  auto dist = odd_distances(r.complex, pm);
  std::optional<std::size_t> max;
  bool infinite = false;
  for (const auto& d : dist) {
    if (!d) infinite = true;
    else if (!max || *d > *max) max = d;
  }
  if (as_json) {
    json arr = json::array();
    for (const auto& d : dist) arr.push_back(d ? json(*d) : json(nullptr));
    json mx = infinite || !max ? json(nullptr) : json(*max);
    out << json{{"complex", r.name}, {"classification", to_string(pm.classification)}, {"distances", arr}, {"max", mx}}
               .dump()
        << '\n';
  } else {
    for (std::size_t v = 0; v < dist.size(); ++v) {
      out << "vertex " << v << ": " << (dist[v] ? std::to_string(*dist[v]) : "inf") << '\n';
    }
    out << "classification: " << to_string(pm.classification) << '\n';
    out << "max: " << (infinite || !max ? "inf" : std::to_string(*max)) << '\n';
  }
  return kOk;
}

int cmd_census(bool as_json, std::ostream& out) {
  auto checks = verify_catalog();
  bool all = true;
  json rows = json::array();
  if (!as_json) {
    out << std::left << std::setw(12) << "name" << std::setw(8) << "rank74" << std::setw(10) << "computed"
        << std::setw(10) << "expected" << std::setw(8) << "class" << std::setw(12) << "full-rank-2"
        << "match\n";
  }
  for (const auto& c : checks) {
    all = all && c.match;
    bool full = false;
    if (c.error.empty()) {
      LinkAtlas atlas{TriangleComplex(catalog(c.name).faces)};
      full = true;
      for (std::size_t f = 0; f < atlas.complex().num_faces(); ++f) full = full && admits_all_rank_two(atlas, f);
    }
    if (as_json) {
      rows.push_back({{"name", c.name},
                      {"rank74", c.rank74},
                      {"computed", bits_string(c.computed)},
                      {"expected", bits_string(c.expected)},
                      {"classification", to_string(c.classification)},
                      {"full_rank_two", full},
                      {"match", c.match},
                      {"error", c.error}});
    } else {
      out << std::left << std::setw(12) << c.name << std::setw(8) << (c.rank74 ? "yes" : "no") << std::setw(10)
          << bits_string(c.computed) << std::setw(10) << bits_string(c.expected) << std::setw(8)
          << to_string(c.classification) << std::setw(12) << (full ? "yes" : "no") << (c.match ? "yes" : "no");
      if (!c.error.empty()) out << "  (" << c.error << ")";
      out << '\n';
    }
  }
  if (as_json) out << json{{"entries", rows}, {"all_match", all}}.dump() << '\n';
  else out << "all match: " << (all ? "yes" : "no") << '\n';
  return all ? kOk : kMismatch;
}

int cmd_burnside(bool as_json, std::ostream& out) {
  SphereCountReport r = burnside_sphere_count();
  std::ostringstream bound;
  bound << std::fixed << std::setprecision(4) << r.bound_value();
  const bool ok = r.orbit_count >= r.bound_ceiling;
  if (as_json) {
    out << json{{"automorphisms", r.automorphisms},
                {"burnside_sum", r.burnside_sum},
                {"orbits", r.orbit_count},
                {"bound", std::to_string(r.bound_numerator) + "/" + std::to_string(r.bound_denominator)},
                {"bound_value", bound.str()},
                {"bound_ceiling", r.bound_ceiling},
                {"printed_figure", r.printed_figure},
                {"printed_figure_below_bound", r.printed_figure < r.bound_ceiling}}
               .dump()
        << '\n';
  } else {
    out << "automorphisms: " << r.automorphisms << '\n';
    out << "burnside sum: " << r.burnside_sum << '\n';
    out << "orbits: " << r.orbit_count << '\n';
    out << "bound: " << r.bound_numerator << "/" << r.bound_denominator << " = " << bound.str() << '\n';
    out << "bound ceiling: " << r.bound_ceiling << '\n';
    out << "printed figure: " << r.printed_figure
        << (r.printed_figure < r.bound_ceiling ? " (inconsistent: below the bound)" : "") << '\n';
  }
  return ok ? kOk : kMismatch;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parity and surgery computations for triangle complexes of rank 7/4", "rank74"};
  app.require_subcommand(1, 1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  SourceOptions src;
  auto* verify = app.add_subcommand("verify", "check that every link is the Moebius-Kantor graph");
  auto* parity = app.add_subcommand("parity", "parity map and classification");
  auto* compose_cmd = app.add_subcommand("compose", "compose cobordisms; trailing 'close' closes up");
  auto* close_cmd = app.add_subcommand("close", "close up a cobordism");
  auto* vn = app.add_subcommand("vn", "emit V_n = X00 (Y00)^2n closed up");
  auto* distances = app.add_subcommand("distances", "distance from each vertex to the nearest odd face");
  auto* census = app.add_subcommand("census", "verify the catalog parity tables");
  auto* burnside = app.add_subcommand("burnside", "Burnside count of radius-1 parity assignments");
  for (auto* sub : {verify, parity, distances}) add_source_options(sub, src, true);
  compose_cmd->add_option("--word", src.word, "composition word, e.g. \"X00 Y00 Y00\"")->required();
  add_source_options(close_cmd, src, false);
  std::size_t n = 0;
  vn->add_option("--n", n, "number of Y00 pairs")->required();
  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    if (verify->parsed()) return cmd_verify(resolve(src), as_json, out);
    if (parity->parsed()) return cmd_parity(resolve(src), as_json, out);
    if (distances->parsed()) return cmd_distances(resolve(src), as_json, out);
    if (compose_cmd->parsed()) {
      CompositionWord w = parse_word(src.word);
      Cobordism c = evaluate_word(w);
      if (w.close) emit_complex(close_up(c), as_json, out);
      else emit_cobordism(c, as_json, out);
      return kOk;
    }
    if (close_cmd->parsed()) {
      Cobordism c;
      if (!src.word.empty() && src.builtin.empty() && src.faces_path.empty()) {
        c = evaluate_word(parse_word(src.word));
      } else if (!src.builtin.empty() && src.word.empty() && src.faces_path.empty()) {
        c = builtin_cobordism(src.builtin);
      } else {
        throw InputError("close takes exactly one of --word or --builtin (C, X00, Y00)");
      }
      emit_complex(close_up(c), as_json, out);
      return kOk;
    }
    if (vn->parsed()) {
      emit_complex(v_n(n), as_json, out);
      return kOk;
    }
    if (census->parsed()) return cmd_census(as_json, out);
    if (burnside->parsed()) return cmd_burnside(as_json, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const CompositionError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    // not locally of rank 7/4, inconsistent parity, ...
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kInputError;
}

} // namespace rank74::cli
