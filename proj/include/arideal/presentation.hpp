#pragma once
// Quivers with relations: the bundle text grammar and the construction of a
// presented category from a truncated path space.
//
// Grammar (one item per line, '#' starts a comment):
//
//   [field]              rational | prime <p>
//   [vertices]           names, separated by whitespace or commas
//   [arrows]             name: from -> to
//   [relations]          one expression per line, e.g. eps*eps + beta*alpha
//   [options]            max_path_length = L
//   [functor <name>]     X -> Y          (vertex map)
//                        a -> expr       (arrow image)
//
// Products in expressions are applicative: "alpha*beta" is beta followed by
// alpha. Any other section is kept verbatim for the bundle layer.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "arideal/category.hpp"
#include "arideal/expression.hpp"
#include "arideal/field.hpp"
#include "arideal/linalg.hpp"

namespace arideal {

/// The presented data builds, but the result is not a valid category or functor.
class ValidationError : public Error {
 public:
  using Error::Error;
};

struct SectionLine {
  std::size_t line = 0;
  std::size_t column = 0;  // 1-based column where the text starts
  std::string text;
};

struct Section {
  std::string name;
  std::string argument;
  std::size_t line = 0;
  std::vector<SectionLine> lines;
};

struct Arrow {
  std::string name;
  std::size_t from = 0;
  std::size_t to = 0;
};

/// A relation or arrow image with names resolved against the quiver.
struct ResolvedTerm {
  mpq_class coefficient;
  std::vector<std::size_t> arrows;  // application order (first applied first)
  std::size_t source = 0;
  std::size_t target = 0;
};

struct ResolvedExpression {
  std::vector<ResolvedTerm> terms;
  std::optional<std::pair<std::size_t, std::size_t>> endpoints;  // absent for the literal 0
  std::size_t line = 0;
  std::string text;
};

struct FunctorSpec {
  std::string name;
  std::size_t line = 0;
  std::vector<std::optional<std::size_t>> vertex_map;
  std::vector<std::optional<ResolvedExpression>> arrow_images;
};

struct Presentation {
  std::string field_kind = "rational";
  std::uint64_t prime = 0;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<ResolvedExpression> relations;
  std::size_t max_path_length = 0;
  std::vector<FunctorSpec> functors;
  std::vector<Section> extra_sections;

  std::optional<std::size_t> vertex(std::string_view name) const {
    for (std::size_t k = 0; k < vertices.size(); ++k)
      if (vertices[k] == name) return k;
    return std::nullopt;
  }
  std::optional<std::size_t> arrow(std::string_view name) const {
    for (std::size_t k = 0; k < arrows.size(); ++k)
      if (arrows[k].name == name) return k;
    return std::nullopt;
  }
};

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

/// Split bundle text into sections; comments and blank lines are dropped.
inline std::vector<Section> split_sections(std::string_view text) {
  std::vector<Section> sections;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    std::string body = trim(raw);
    if (body.empty()) continue;
    if (body.front() == '[' && body.back() == ']') {
      std::string header = trim(std::string_view(body).substr(1, body.size() - 2));
      Section s;
      s.line = line_no;
      auto space = header.find_first_of(" \t");
      s.name = header.substr(0, space);
      if (space != std::string::npos) s.argument = trim(std::string_view(header).substr(space));
      sections.push_back(std::move(s));
      continue;
    }
    if (sections.empty()) throw ParseError(line_no, lead + 1, "content before the first [section]");
    sections.back().lines.push_back({line_no, lead + 1, body});
  }
  return sections;
}

/// Resolve names and check composability and shared endpoints.
inline ResolvedExpression resolve_expression(const Presentation& p, const Expression& expr, std::size_t line,
                                             std::string text) {
  ResolvedExpression out;
  out.line = line;
  out.text = std::move(text);
  for (const auto& term : expr.terms) {
    ResolvedTerm rt;
    rt.coefficient = term.coefficient;
    std::optional<std::size_t> current;  // target of the partial path, walking from the right
    std::optional<std::size_t> source;
    for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
      std::size_t from, to;
      if (it->is_identity) {
        auto v = p.vertex(it->name);
        if (!v) throw ParseError(line, it->column, "unknown vertex '" + it->name + "'");
        from = to = *v;
      } else {
        auto a = p.arrow(it->name);
        if (!a) throw ParseError(line, it->column, "unknown arrow '" + it->name + "'");
        from = p.arrows[*a].from;
        to = p.arrows[*a].to;
        rt.arrows.push_back(*a);
      }
      if (current && *current != from)
        throw ParseError(line, it->column,
                         "non-composable path: '" + it->name + "' starts at " + p.vertices[from] +
                             " but the preceding factor ends at " + p.vertices[*current]);
      if (!source) source = from;
      current = to;
    }
    rt.source = *source;
    rt.target = *current;
    if (out.endpoints && (*out.endpoints != std::pair{rt.source, rt.target}))
      throw ParseError(line, term.factors.front().column,
                       "terms do not share endpoints: expected " + p.vertices[out.endpoints->first] + " -> " +
                           p.vertices[out.endpoints->second]);
    out.endpoints = std::pair{rt.source, rt.target};
    out.terms.push_back(std::move(rt));
  }
  return out;
}

inline ResolvedExpression parse_resolved(const Presentation& p, const SectionLine& l) {
  return resolve_expression(p, parse_expression(l.text, l.line, l.column - 1), l.line, l.text);
}

namespace detail {

inline std::vector<std::pair<std::string, std::size_t>> split_names(const SectionLine& l) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::string cur;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= l.text.size(); ++k) {
    char c = k < l.text.size() ? l.text[k] : ' ';
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.emplace_back(cur, l.column + start);
      cur.clear();
    } else {
      if (cur.empty()) start = k;
      cur += c;
    }
  }
  return out;
}

/// Split "lhs -> rhs", returning the two sides and the column of rhs.
inline std::optional<std::tuple<std::string, std::string, std::size_t>> split_arrow(const SectionLine& l) {
  auto pos = l.text.find("->");
  if (pos == std::string::npos) return std::nullopt;
  std::size_t rhs_start = pos + 2;
  while (rhs_start < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[rhs_start]))) ++rhs_start;
  return std::tuple{trim(std::string_view(l.text).substr(0, pos)), trim(std::string_view(l.text).substr(pos + 2)),
                    l.column + rhs_start};
}

}  // namespace detail

/// Parse the presentation sections of a bundle.
inline Presentation parse_presentation(std::string_view text) {
  Presentation p;
  auto sections = split_sections(text);
  std::vector<const Section*> relation_sections, functor_sections;
  bool have_vertices = false, have_options = false;
  for (const auto& s : sections) {
    if (s.name == "field") {
      if (s.lines.size() != 1) throw ParseError(s.line, 1, "[field] takes exactly one line");
      const auto& l = s.lines.front();
      std::istringstream words(l.text);
      std::string kind;
      words >> kind;
      if (kind == "rational") {
        p.field_kind = kind;
      } else if (kind == "prime") {
        std::string num;
        words >> num;
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError(l.line, l.column, "expected 'prime <p>'");
        p.field_kind = kind;
        p.prime = std::stoull(num);
        if (!is_prime(p.prime)) throw ParseError(l.line, l.column, num + " is not prime");
      } else {
        throw ParseError(l.line, l.column, "unknown field '" + kind + "'");
      }
    } else if (s.name == "vertices") {
      have_vertices = true;
      for (const auto& l : s.lines)
        for (auto& [name, col] : detail::split_names(l)) {
          if (!is_valid_vertex_name(name)) throw ParseError(l.line, col, "invalid vertex name '" + name + "'");
          if (p.vertex(name)) throw ParseError(l.line, col, "duplicate vertex '" + name + "'");
          p.vertices.push_back(name);
        }
    } else if (s.name == "arrows") {
      for (const auto& l : s.lines) {
        auto colon = l.text.find(':');
        auto ends = detail::split_arrow(l);
        if (colon == std::string::npos || !ends || colon > l.text.find("->"))
          throw ParseError(l.line, l.column, "expected 'name: from -> to'");
        std::string name = trim(std::string_view(l.text).substr(0, colon));
        std::string from = trim(std::string_view(l.text).substr(colon + 1, l.text.find("->") - colon - 1));
        const auto& to = std::get<1>(*ends);
        if (!is_valid_arrow_name(name)) throw ParseError(l.line, l.column, "invalid arrow name '" + name + "'");
        if (p.arrow(name)) throw ParseError(l.line, l.column, "duplicate arrow '" + name + "'");
        if (p.vertex(name)) throw ParseError(l.line, l.column, "arrow '" + name + "' shadows a vertex name");
        auto f = p.vertex(from);
        auto t = p.vertex(to);
        if (!f) throw ParseError(l.line, l.column, "unknown vertex '" + from + "'");
        if (!t) throw ParseError(l.line, std::get<2>(*ends), "unknown vertex '" + to + "'");
        p.arrows.push_back({name, *f, *t});
      }
    } else if (s.name == "relations") {
      relation_sections.push_back(&s);
    } else if (s.name == "options") {
      have_options = true;
      for (const auto& l : s.lines) {
        auto eq = l.text.find('=');
        if (eq == std::string::npos) throw ParseError(l.line, l.column, "expected 'key = value'");
        std::string key = trim(std::string_view(l.text).substr(0, eq));
        std::string value = trim(std::string_view(l.text).substr(eq + 1));
        if (key != "max_path_length") throw ParseError(l.line, l.column, "unknown option '" + key + "'");
        if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError(l.line, l.column + eq + 1, "max_path_length must be a positive integer");
        p.max_path_length = std::stoul(value);
        if (p.max_path_length < 1) throw ParseError(l.line, l.column, "max_path_length must be at least 1");
      }
    } else if (s.name == "functor") {
      functor_sections.push_back(&s);
    } else {
      p.extra_sections.push_back(s);
    }
  }
  if (!have_vertices) throw ParseError(1, 1, "missing [vertices] section");
  if (!have_options || p.max_path_length == 0) throw ParseError(1, 1, "missing [options] max_path_length");

  for (const auto* s : relation_sections)
    for (const auto& l : s->lines) {
      auto rel = parse_resolved(p, l);
      if (!rel.endpoints) throw ParseError(l.line, l.column, "a relation must not be the literal 0");
      p.relations.push_back(std::move(rel));
    }

  for (const auto* s : functor_sections) {
    FunctorSpec spec;
    spec.name = s->argument;
    spec.line = s->line;
    if (spec.name.empty()) throw ParseError(s->line, 1, "[functor] needs a name");
    spec.vertex_map.assign(p.vertices.size(), std::nullopt);
    spec.arrow_images.assign(p.arrows.size(), std::nullopt);
    for (const auto& l : s->lines) {
      auto parts = detail::split_arrow(l);
      if (!parts) throw ParseError(l.line, l.column, "expected 'X -> Y' or 'arrow -> expression'");
      auto& [lhs, rhs, rhs_col] = *parts;
      if (auto v = p.vertex(lhs)) {
        auto w = p.vertex(rhs);
        if (!w) throw ParseError(l.line, rhs_col, "unknown vertex '" + rhs + "'");
        spec.vertex_map[*v] = *w;
      } else if (auto a = p.arrow(lhs)) {
        SectionLine sub{l.line, rhs_col, rhs};
        spec.arrow_images[*a] = parse_resolved(p, sub);
      } else {
        throw ParseError(l.line, l.column, "'" + lhs + "' is neither a vertex nor an arrow");
      }
    }
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
      if (!spec.vertex_map[v])
        throw ParseError(s->line, 1, "functor " + spec.name + " does not map vertex " + p.vertices[v]);
    for (std::size_t a = 0; a < p.arrows.size(); ++a)
      if (!spec.arrow_images[a])
        throw ParseError(s->line, 1, "functor " + spec.name + " does not map arrow " + p.arrows[a].name);
    p.functors.push_back(std::move(spec));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Building the category.

/// The category presented by a quiver with relations, together with the
/// values of the arrows and the functors declared in the presentation.
template <Field F>
struct QuiverCategory {
  Presentation presentation;
  std::shared_ptr<const Category<F>> category;
  std::vector<Vec<F>> arrow_values;  // in hom(from, to)
  std::vector<Functor<F>> functors;

  const Category<F>& cat() const { return *category; }

  const Functor<F>* functor(std::string_view name) const {
    for (const auto& f : functors)
      if (f.name == name) return &f;
    return nullptr;
  }

  /// Value of a resolved expression in hom(source, target).
  Vec<F> evaluate(const ResolvedExpression& e, std::size_t source, std::size_t target) const {
    const auto& c = cat();
    const auto& K = c.field();
    if (e.endpoints && *e.endpoints != std::pair{source, target})
      throw Error("expression '" + e.text + "' is a morphism " + c.name(e.endpoints->first) + " -> " +
                  c.name(e.endpoints->second) + ", expected " + c.name(source) + " -> " + c.name(target));
    Vec<F> out = c.zero(source, target);
    for (const auto& t : e.terms) {
      Vec<F> v = c.identity(source);
      std::size_t at = source;
      for (auto a : t.arrows) {
        const auto& arrow = presentation.arrows[a];
        v = c.compose(source, at, arrow.to, arrow_values[a], v);
        at = arrow.to;
      }
      axpy(K, out, K.from_rational(t.coefficient), v);
    }
    return out;
  }

  Vec<F> evaluate(const ResolvedExpression& e) const {
    if (!e.endpoints) throw Error("the literal 0 needs explicit endpoints");
    return evaluate(e, e.endpoints->first, e.endpoints->second);
  }

  /// Parse and evaluate expression text; returns the endpoints and value.
  std::tuple<std::size_t, std::size_t, Vec<F>> evaluate(std::string_view text) const {
    auto e = resolve_expression(presentation, parse_expression(text), 1, std::string(text));
    if (!e.endpoints) throw Error("cannot infer endpoints of the literal 0");
    return {e.endpoints->first, e.endpoints->second, evaluate(e)};
  }
};

namespace detail {

struct PathKey {
  std::size_t source;
  std::vector<std::size_t> arrows;  // application order
  bool operator<(const PathKey& o) const {
    return source != o.source ? source < o.source : arrows < o.arrows;
  }
};

}  // namespace detail

/// Hom(x,y) is the span of paths of length <= L modulo the relation ideal.
/// Fails unless every path of length exactly L lies in the span of
/// p·ρ·q with all terms of length <= L, which certifies that every longer path
/// vanishes too.
template <Field F>
QuiverCategory<F> build_category(const Presentation& p, const F& field) {
  const std::size_t n = p.vertices.size();
  const std::size_t L = p.max_path_length;
  if (L < 1) throw Error("max_path_length must be at least 1");
  const auto& K = field;

  struct Path {
    std::size_t source, target;
    std::vector<std::size_t> arrows;
  };
  std::vector<Path> paths;
  for (std::size_t v = 0; v < n; ++v) paths.push_back({v, v, {}});
  std::size_t frontier_begin = 0;
  for (std::size_t len = 1; len <= L; ++len) {
    std::size_t frontier_end = paths.size();
    for (std::size_t k = frontier_begin; k < frontier_end; ++k)
      for (std::size_t a = 0; a < p.arrows.size(); ++a)
        if (p.arrows[a].from == paths[k].target) {
          Path q = paths[k];
          q.arrows.push_back(a);
          q.target = p.arrows[a].to;
          paths.push_back(std::move(q));
        }
    frontier_begin = frontier_end;
  }

  // Order within each pair: shorter first, then lexicographic on the written
  // word with arrows ranked by declaration order.
  auto written = [](const Path& q) { return std::vector<std::size_t>(q.arrows.rbegin(), q.arrows.rend()); };
  std::vector<std::vector<std::size_t>> by_pair(n * n);
  for (std::size_t k = 0; k < paths.size(); ++k) by_pair[paths[k].source * n + paths[k].target].push_back(k);
  std::map<detail::PathKey, std::pair<std::size_t, std::size_t>> locate;  // key -> (pair, local index)
  for (std::size_t pr = 0; pr < n * n; ++pr) {
    auto& list = by_pair[pr];
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
      if (paths[a].arrows.size() != paths[b].arrows.size()) return paths[a].arrows.size() < paths[b].arrows.size();
      return written(paths[a]) < written(paths[b]);
    });
    for (std::size_t k = 0; k < list.size(); ++k) locate[{paths[list[k]].source, paths[list[k]].arrows}] = {pr, k};
  }

  // Relation spans: `strict` keeps products whose terms all have length <= L,
  // `truncated` additionally keeps truncations of the longer ones.
  std::vector<std::vector<Vec<F>>> strict(n * n), truncated(n * n);
  for (const auto& rel : p.relations) {
    const auto [rs, rt] = *rel.endpoints;
    std::size_t min_len = L + 1, max_len = 0;
    for (const auto& t : rel.terms) {
      min_len = std::min(min_len, t.arrows.size());
      max_len = std::max(max_len, t.arrows.size());
    }
    for (const auto& q : paths) {
      if (q.target != rs) continue;
      for (const auto& pp : paths) {
        if (pp.source != rt) continue;
        const std::size_t outer = q.arrows.size() + pp.arrows.size();
        if (outer + min_len > L) continue;
        const std::size_t pr = q.source * n + pp.target;
        Vec<F> v = zero_vec(K, by_pair[pr].size());
        for (const auto& t : rel.terms) {
          if (outer + t.arrows.size() > L) continue;
          detail::PathKey key{q.source, q.arrows};
          key.arrows.insert(key.arrows.end(), t.arrows.begin(), t.arrows.end());
          key.arrows.insert(key.arrows.end(), pp.arrows.begin(), pp.arrows.end());
          v[locate.at(key).second] = K.add(v[locate.at(key).second], K.from_rational(t.coefficient));
        }
        if (outer + max_len <= L) strict[pr].push_back(v);
        truncated[pr].push_back(std::move(v));
      }
    }
  }

  std::vector<Subspace<F>> relation_span(n * n);
  for (std::size_t pr = 0; pr < n * n; ++pr) {
    const auto dim = by_pair[pr].size();
    auto certified = Subspace<F>::span(K, strict[pr], dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const auto& q = paths[by_pair[pr][k]];
      if (q.arrows.size() == L && !certified.contains(K, unit_vec(K, dim, k))) {
        std::string word;
        for (auto a : written(q)) word += (word.empty() ? "" : "*") + p.arrows[a].name;
        throw Error("truncation-insufficient: the path " + word + " of length " + std::to_string(L) +
                    " is not in the relation span; increase max_path_length");
      }
    }
    relation_span[pr] = Subspace<F>::span(K, truncated[pr], dim);
  }

  // Residue basis and coordinates of every path.
  CategoryData<F> data{field, p.vertices, std::vector<std::vector<std::string>>(n * n), std::vector<std::size_t>(n), {}};
  std::vector<std::vector<std::size_t>> basis_paths(n * n);
  std::vector<Matrix<F>> to_coords(n * n);  // local path index -> basis coordinates
  for (std::size_t pr = 0; pr < n * n; ++pr) {
    const auto dim = by_pair[pr].size();
    auto span = relation_span[pr];
    for (std::size_t k = 0; k < dim; ++k) {
      auto e = unit_vec(K, dim, k);
      if (span.contains(K, e)) continue;
      basis_paths[pr].push_back(k);
      span = subspace_sum(K, span, Subspace<F>::span(K, {e}, dim));
    }
    std::vector<Vec<F>> cols;
    for (auto k : basis_paths[pr]) cols.push_back(unit_vec(K, dim, k));
    for (const auto& r : relation_span[pr].basis()) cols.push_back(r);
    auto inv = inverse(K, Matrix<F>::from_columns(K, cols, dim));
    if (!inv) throw Error("internal: residue basis is not complementary");
    Matrix<F> coords = Matrix<F>::zero(K, basis_paths[pr].size(), dim);
    for (std::size_t r = 0; r < basis_paths[pr].size(); ++r)
      for (std::size_t c = 0; c < dim; ++c) coords(r, c) = (*inv)(r, c);
    to_coords[pr] = std::move(coords);
    for (auto k : basis_paths[pr]) {
      const auto& q = paths[by_pair[pr][k]];
      std::string label;
      if (q.arrows.empty()) {
        label = "id(" + p.vertices[q.source] + ")";
        data.identity_index[q.source] = data.labels[pr].size();
      } else {
        for (auto a : written(q)) label += (label.empty() ? "" : "*") + p.arrows[a].name;
      }
      data.labels[pr].push_back(label);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto& labels = data.labels[v * n + v];
    if (std::find(labels.begin(), labels.end(), "id(" + p.vertices[v] + ")") == labels.end())
      throw Error("the relations kill the identity of " + p.vertices[v]);
  }

  auto path_coords = [&](std::size_t source, const std::vector<std::size_t>& arrows, std::size_t target) {
    const std::size_t pr = source * n + target;
    if (arrows.size() > L) return zero_vec(K, basis_paths[pr].size());
    auto it = locate.find({source, arrows});
    return to_coords[pr].column(it->second.second);
  };

  data.composition.resize(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto& cell = data.composition[(x * n + y) * n + z];
        const auto& bxy = basis_paths[x * n + y];
        const auto& byz = basis_paths[y * n + z];
        cell.resize(bxy.size() * byz.size());
        for (std::size_t j = 0; j < byz.size(); ++j)
          for (std::size_t i = 0; i < bxy.size(); ++i) {
            auto word = paths[by_pair[x * n + y][bxy[i]]].arrows;
            const auto& second = paths[by_pair[y * n + z][byz[j]]].arrows;
            word.insert(word.end(), second.begin(), second.end());
            cell[j * bxy.size() + i] = path_coords(x, word, z);
          }
      }

  QuiverCategory<F> out;
  out.presentation = p;
  out.category = std::make_shared<const Category<F>>(std::move(data));
  for (std::size_t a = 0; a < p.arrows.size(); ++a)
    out.arrow_values.push_back(path_coords(p.arrows[a].from, {a}, p.arrows[a].to));

  const auto& report = out.category->validation();
  if (!report.ok()) {
    std::string msg = "the presented category fails validation:";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw ValidationError(msg);
  }

  const auto& cat = *out.category;
  for (const auto& spec : p.functors) {
    Functor<F> fn;
    fn.name = spec.name;
    for (const auto& v : spec.vertex_map) fn.object_map.push_back(*v);
    std::vector<Vec<F>> images;
    for (std::size_t a = 0; a < p.arrows.size(); ++a) {
      const auto& arrow = p.arrows[a];
      images.push_back(out.evaluate(*spec.arrow_images[a], fn(arrow.from), fn(arrow.to)));
    }
    auto image_of_path = [&](std::size_t source, const std::vector<std::size_t>& arrows) {
      Vec<F> v = cat.identity(fn(source));
      std::size_t at = source;
      for (auto a : arrows) {
        v = cat.compose(fn(source), fn(at), fn(p.arrows[a].to), images[a], v);
        at = p.arrows[a].to;
      }
      return v;
    };
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        std::vector<Vec<F>> cols;
        for (auto k : basis_paths[x * n + y]) cols.push_back(image_of_path(x, paths[by_pair[x * n + y][k]].arrows));
        fn.hom_maps.push_back(Matrix<F>::from_columns(K, cols, cat.dim(fn(x), fn(y))));
      }
    for (const auto& rel : p.relations) {
      const auto [rs, rt] = *rel.endpoints;
      Vec<F> v = cat.zero(fn(rs), fn(rt));
      for (const auto& t : rel.terms) axpy(K, v, K.from_rational(t.coefficient), image_of_path(rs, t.arrows));
      if (!is_zero_vec(K, v))
        throw ValidationError("functor " + fn.name + " does not respect the relation '" + rel.text + "' (line " +
                    std::to_string(rel.line) + ")");
    }
    auto freport = validate_functor(cat, fn);
    if (!freport.ok()) {
      std::string msg = "functor " + fn.name + " is invalid:";
      for (const auto& v : freport.violations) msg += "\n  " + v;
      throw ValidationError(msg);
    }
    out.functors.push_back(std::move(fn));
  }
  return out;
}

}  // namespace arideal
