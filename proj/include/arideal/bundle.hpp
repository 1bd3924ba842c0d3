#pragma once
// A bundle is a presentation plus named ideals and an optional triangle table.
//
//   [ideal <name>]    generators: expr, expr, ...   (may repeat)
//                     jacobson
//                     objects: X, Y, ...
//   [triangles]       file = relative/path.json
//
// Triangle files hold a JSON list of records
//   {"label": ..., "ideal": optional name, "X": [names], "Y": [...], "Z": [...],
//    "u": rows, "v": rows, "w": rows}
// where each matrix is a list of rows (one per target summand) and each cell is
// an expression string or a list of basis coordinates. w ends at X[1], taken
// through the functor named "shift".

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "arideal/ideal.hpp"
#include "arideal/mutation.hpp"
#include "arideal/presentation.hpp"

namespace arideal {

struct IdealSpec {
  enum class Kind { generators, jacobson, objects };
  std::string name;
  Kind kind = Kind::generators;
  std::vector<SectionLine> generators;  // one expression per entry
  std::vector<std::pair<std::string, SectionLine>> objects;
  std::size_t line = 0;
};

struct BundleText {
  std::filesystem::path path;  // empty when read from memory
  std::string text;
  Presentation presentation;
  std::vector<IdealSpec> ideals;
  std::optional<std::filesystem::path> triangle_file;
};

namespace detail {

/// Split "a, b, c" keeping the column of each entry.
inline std::vector<SectionLine> split_commas(const SectionLine& l, std::size_t start) {
  std::vector<SectionLine> out;
  std::size_t pos = start;
  while (pos <= l.text.size()) {
    auto comma = l.text.find(',', pos);
    if (comma == std::string::npos) comma = l.text.size();
    std::string piece = l.text.substr(pos, comma - pos);
    std::size_t lead = 0;
    while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
    std::string body = trim(piece);
    if (body.empty()) throw ParseError(l.line, l.column + pos, "empty list entry");
    out.push_back({l.line, l.column + pos + lead, body});
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

inline BundleText parse_bundle(std::string text, std::filesystem::path path = {}) {
  BundleText b;
  b.path = std::move(path);
  b.text = std::move(text);
  b.presentation = parse_presentation(b.text);
  for (const auto& s : b.presentation.extra_sections) {
    if (s.name == "ideal") {
      IdealSpec spec;
      spec.name = s.argument;
      spec.line = s.line;
      if (spec.name.empty()) throw ParseError(s.line, 1, "[ideal] needs a name");
      for (const auto& other : b.ideals)
        if (other.name == spec.name) throw ParseError(s.line, 1, "duplicate ideal '" + spec.name + "'");
      bool have_kind = false;
      for (const auto& l : s.lines) {
        auto colon = l.text.find(':');
        std::string key = trim(std::string_view(l.text).substr(0, colon));
        IdealSpec::Kind kind;
        if (key == "generators" && colon != std::string::npos) {
          kind = IdealSpec::Kind::generators;
          for (auto& e : detail::split_commas(l, colon + 1)) spec.generators.push_back(std::move(e));
        } else if (key == "objects" && colon != std::string::npos) {
          kind = IdealSpec::Kind::objects;
          for (auto& e : detail::split_commas(l, colon + 1)) {
            if (!b.presentation.vertex(e.text)) throw ParseError(e.line, e.column, "unknown vertex '" + e.text + "'");
            spec.objects.emplace_back(e.text, e);
          }
        } else if (key == "jacobson" && colon == std::string::npos) {
          kind = IdealSpec::Kind::jacobson;
        } else {
          throw ParseError(l.line, l.column, "expected 'generators: ...', 'objects: ...' or 'jacobson'");
        }
        if (have_kind && kind != spec.kind)
          throw ParseError(l.line, l.column, "ideal '" + spec.name + "' mixes different kinds of definition");
        spec.kind = kind;
        have_kind = true;
      }
      if (!have_kind) throw ParseError(s.line, 1, "ideal '" + spec.name + "' is empty");
      // Validate generator expressions early so errors carry bundle locations.
      for (const auto& g : spec.generators) {
        auto e = parse_resolved(b.presentation, g);
        if (!e.endpoints) throw ParseError(g.line, g.column, "a generator must not be the literal 0");
      }
      b.ideals.push_back(std::move(spec));
    } else if (s.name == "triangles") {
      for (const auto& l : s.lines) {
        auto eq = l.text.find('=');
        if (eq == std::string::npos || trim(std::string_view(l.text).substr(0, eq)) != "file")
          throw ParseError(l.line, l.column, "expected 'file = <path>'");
        std::filesystem::path rel = trim(std::string_view(l.text).substr(eq + 1));
        b.triangle_file = b.path.empty() ? rel : b.path.parent_path() / rel;
      }
    } else {
      throw ParseError(s.line, 1, "unknown section [" + s.name + "]");
    }
  }
  return b;
}

inline BundleText load_bundle_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open bundle " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bundle(ss.str(), path);
}

/// A bundle built over a concrete field.
template <Field F>
struct Bundle {
  BundleText text;
  QuiverCategory<F> qc;
  std::vector<TriangleRecord<F>> triangles;
  std::vector<std::optional<std::string>> triangle_ideals;  // the "ideal" tag of each record

  const Category<F>& cat() const { return qc.cat(); }

  const IdealSpec& ideal_spec(const std::string& name) const {
    for (const auto& s : text.ideals)
      if (s.name == name) return s;
    std::string known;
    for (const auto& s : text.ideals) known += (known.empty() ? "" : ", ") + s.name;
    throw Error("unknown ideal '" + name + "'" + (known.empty() ? "" : " (known: " + known + ")"));
  }

  Ideal<F> ideal(const std::string& name) const {
    const auto& spec = ideal_spec(name);
    switch (spec.kind) {
      case IdealSpec::Kind::jacobson:
        return jacobson_radical(cat());
      case IdealSpec::Kind::objects: {
        std::vector<std::size_t> objs;
        for (const auto& [o, l] : spec.objects) objs.push_back(cat().require(o));
        return object_ideal(cat(), objs);
      }
      case IdealSpec::Kind::generators:
        break;
    }
    std::vector<Generator<F>> gens;
    for (const auto& g : spec.generators) {
      auto e = parse_resolved(qc.presentation, g);
      gens.push_back({e.endpoints->first, e.endpoints->second, qc.evaluate(e)});
    }
    return generate_ideal(cat(), gens);
  }

  const Functor<F>& functor(const std::string& name) const {
    if (const auto* f = qc.functor(name)) return *f;
    throw Error("the bundle declares no functor '" + name + "'");
  }

  /// Records tagged for `ideal`, plus untagged ones.
  std::vector<TriangleRecord<F>> triangles_for(const std::string& ideal) const {
    std::vector<TriangleRecord<F>> out;
    for (std::size_t k = 0; k < triangles.size(); ++k)
      if (!triangle_ideals[k] || *triangle_ideals[k] == ideal) out.push_back(triangles[k]);
    return out;
  }
};

namespace detail {

inline Object parse_object_names(const Presentation& p, const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw Error(where + ": expected a list of object names");
  Object out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(where + ": object names must be strings");
    auto v = p.vertex(e.get<std::string>());
    if (!v) throw Error(where + ": unknown object '" + e.get<std::string>() + "'");
    out.summands.push_back(*v);
  }
  return out;
}

inline mpq_class parse_scalar_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
  if (j.is_string()) {
    try {
      mpq_class q(j.get<std::string>());
      q.canonicalize();
      return q;
    } catch (const std::exception&) {
    }
  }
  throw Error(where + ": coordinates must be integers or strings like \"2/3\"");
}

template <Field F>
Vec<F> parse_cell(const QuiverCategory<F>& qc, const nlohmann::json& cell, std::size_t x, std::size_t y,
                  const std::string& where) {
  const auto& cat = qc.cat();
  if (cell.is_string()) {
    const auto text = cell.get<std::string>();
    try {
      auto e = resolve_expression(qc.presentation, parse_expression(text), 1, text);
      return qc.evaluate(e, x, y);
    } catch (const ParseError& err) {
      throw Error(where + ": in '" + text + "': " + err.what());
    } catch (const Error& err) {
      throw Error(where + ": " + err.what());
    }
  }
  if (cell.is_array()) {
    if (cell.size() != cat.dim(x, y))
      throw Error(where + ": expected " + std::to_string(cat.dim(x, y)) + " coordinates for " + cat.name(x) + " -> " +
                  cat.name(y));
    Vec<F> v;
    for (const auto& c : cell) v.push_back(cat.field().from_rational(parse_scalar_json(c, where)));
    return v;
  }
  throw Error(where + ": a cell must be an expression string or a coordinate list");
}

template <Field F>
Morphism<F> parse_matrix(const QuiverCategory<F>& qc, const nlohmann::json& j, const Object& a, const Object& b,
                         const std::string& where) {
  if (!j.is_array() || j.size() != b.size())
    throw Error(where + ": expected " + std::to_string(b.size()) + " rows (one per target summand)");
  auto m = zero_morphism(qc.cat(), a, b);
  for (std::size_t r = 0; r < b.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != a.size())
      throw Error(where + ": row " + std::to_string(r + 1) + " needs " + std::to_string(a.size()) + " cells");
    for (std::size_t c = 0; c < a.size(); ++c)
      m.at(r, c) = parse_cell(qc, j[r][c], a[c], b[r],
                              where + " cell (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
  }
  return m;
}

}  // namespace detail

/// Parse a triangle table; `shift` supplies the target of w.
template <Field F>
std::pair<std::vector<TriangleRecord<F>>, std::vector<std::optional<std::string>>> parse_triangles(
    const QuiverCategory<F>& qc, const Functor<F>& shift, const std::string& json_text, const std::string& origin) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(origin + ": " + e.what());
  }
  if (!root.is_array()) throw Error(origin + ": expected a JSON list of triangle records");
  std::vector<TriangleRecord<F>> out;
  std::vector<std::optional<std::string>> tags;
  for (std::size_t k = 0; k < root.size(); ++k) {
    const auto& r = root[k];
    std::string where = origin + ": record " + std::to_string(k + 1);
    if (!r.is_object()) throw Error(where + ": expected an object");
    for (const char* key : {"X", "Y", "Z", "u", "v", "w"})
      if (!r.contains(key)) throw Error(where + ": missing \"" + key + "\"");
    TriangleRecord<F> t;
    t.label = r.value("label", "triangle " + std::to_string(k + 1));
    where = origin + ": " + t.label;
    t.X = detail::parse_object_names(qc.presentation, r["X"], where + " X");
    t.Y = detail::parse_object_names(qc.presentation, r["Y"], where + " Y");
    t.Z = detail::parse_object_names(qc.presentation, r["Z"], where + " Z");
    t.u = detail::parse_matrix(qc, r["u"], t.X, t.Y, where + " u");
    t.v = detail::parse_matrix(qc, r["v"], t.Y, t.Z, where + " v");
    t.w = detail::parse_matrix(qc, r["w"], t.Z, shift(t.X), where + " w");
    out.push_back(std::move(t));
    if (r.contains("ideal")) {
      if (!r["ideal"].is_string()) throw Error(where + ": \"ideal\" must be a string");
      tags.emplace_back(r["ideal"].get<std::string>());
    } else {
      tags.emplace_back(std::nullopt);
    }
  }
  return {std::move(out), std::move(tags)};
}

template <Field F>
Bundle<F> build_bundle(BundleText text, const F& field) {
  auto qc = build_category(text.presentation, field);
  Bundle<F> b{std::move(text), std::move(qc), {}, {}};
  if (b.text.triangle_file) {
    std::ifstream in(*b.text.triangle_file);
    if (!in) throw Error("cannot open triangle file " + b.text.triangle_file->string());
    std::stringstream ss;
    ss << in.rdbuf();
    auto [ts, tags] = parse_triangles(b.qc, b.functor("shift"), ss.str(), b.text.triangle_file->filename().string());
    b.triangles = std::move(ts);
    b.triangle_ideals = std::move(tags);
  }
  return b;
}

// ---------------------------------------------------------------------------
// Serialization of ideals.

/// {"field": ..., "components": {"X->Y": {"coords": [[...]], "exprs": [...]}}}
/// listing only nonzero components, in object order.
template <Field F>
nlohmann::ordered_json ideal_to_json(const Ideal<F>& I, const std::string& name) {
  const auto& cat = I.category();
  nlohmann::ordered_json comps = nlohmann::ordered_json::object();
  for (std::size_t x = 0; x < cat.size(); ++x)
    for (std::size_t y = 0; y < cat.size(); ++y) {
      if (I(x, y).is_zero()) continue;
      nlohmann::ordered_json coords = nlohmann::ordered_json::array(), exprs = nlohmann::ordered_json::array();
      for (const auto& v : I(x, y).basis()) {
        nlohmann::ordered_json c = nlohmann::ordered_json::array();
        for (const auto& s : v) c.push_back(cat.field().to_string(s));
        coords.push_back(std::move(c));
        exprs.push_back(format_element(cat, x, y, v));
      }
      comps[cat.name(x) + "->" + cat.name(y)] = {{"coords", coords}, {"exprs", exprs}};
    }
  return {{"ideal", name}, {"field", cat.field().name()}, {"components", comps}};
}

}  // namespace arideal
