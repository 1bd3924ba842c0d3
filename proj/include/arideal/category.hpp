#pragma once
// Presented Hom-finite Krull-Schmidt categories: indecomposables, Hom bases,
// bilinear composition tables, the additive closure by formal direct sums,
// and functor data.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arideal/field.hpp"
#include "arideal/linalg.hpp"

namespace arideal {

/// A formal direct sum of indecomposables, one slot per summand. Slot order
/// matters for morphism matrices; `multiset()` forgets it.
struct Object {
  std::vector<std::size_t> summands;

  static Object zero() { return {}; }
  static Object of(std::size_t x) { return Object{{x}}; }

  std::size_t size() const { return summands.size(); }
  bool empty() const { return summands.empty(); }
  std::size_t operator[](std::size_t k) const { return summands[k]; }

  std::vector<std::size_t> multiset() const {
    auto s = summands;
    std::sort(s.begin(), s.end());
    return s;
  }
  std::size_t multiplicity(std::size_t x) const {
    return static_cast<std::size_t>(std::count(summands.begin(), summands.end(), x));
  }
  bool operator==(const Object&) const = default;
};

inline Object direct_sum(const Object& a, const Object& b) {
  Object out = a;
  out.summands.insert(out.summands.end(), b.summands.begin(), b.summands.end());
  return out;
}

/// Raw tables of a presented category. `composition[(x*n + y)*n + z]` holds,
/// for basis b = i of hom(x,y) and c = j of hom(y,z), the coordinates of c∘b
/// at index j * dim(x,y) + i.
template <Field F>
struct CategoryData {
  F field;
  std::vector<std::string> objects;
  std::vector<std::vector<std::string>> labels;  // per pair x*n + y
  std::vector<std::size_t> identity_index;        // per object
  std::vector<std::vector<Vec<F>>> composition;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

template <Field F>
class Category;

template <Field F>
ValidationReport validate_category(const Category<F>& cat);

/// Structure constants are checked for shape on construction; the structural
/// report from validate_category is computed once and cached.
template <Field F>
class Category {
 public:
  using value_type = typename F::value_type;

  explicit Category(CategoryData<F> data) : d_(std::move(data)) {
    const std::size_t n = d_.objects.size();
    if (d_.labels.size() != n * n) throw Error("category needs a Hom basis for every ordered pair");
    if (d_.identity_index.size() != n) throw Error("category needs an identity for every object");
    if (d_.composition.size() != n * n * n) throw Error("composition table has wrong size");
    for (std::size_t x = 0; x < n; ++x) {
      if (d_.identity_index[x] >= dim(x, x))
        throw Error("identity index out of range for object " + d_.objects[x]);
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const auto& cell = d_.composition[(x * n + y) * n + z];
          if (cell.size() != dim(x, y) * dim(y, z))
            throw Error("composition table entry has wrong size");
          for (const auto& v : cell)
            if (v.size() != dim(x, z)) throw Error("composition coordinates have wrong length");
        }
    }
    report_ = validate_category(*this);
  }

  const ValidationReport& validation() const { return report_; }

  const F& field() const { return d_.field; }
  std::size_t size() const { return d_.objects.size(); }
  const std::string& name(std::size_t x) const { return d_.objects[x]; }
  const std::vector<std::string>& object_names() const { return d_.objects; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t x = 0; x < size(); ++x)
      if (d_.objects[x] == name) return x;
    return std::nullopt;
  }
  std::size_t require(std::string_view name) const {
    if (auto x = find(name)) return *x;
    throw Error("unknown object '" + std::string(name) + "'");
  }

  std::size_t dim(std::size_t x, std::size_t y) const { return d_.labels[x * size() + y].size(); }
  const std::vector<std::string>& labels(std::size_t x, std::size_t y) const {
    return d_.labels[x * size() + y];
  }
  std::size_t identity_index(std::size_t x) const { return d_.identity_index[x]; }
  Vec<F> identity(std::size_t x) const { return unit_vec(field(), dim(x, x), identity_index(x)); }
  Vec<F> zero(std::size_t x, std::size_t y) const { return zero_vec(field(), dim(x, y)); }

  /// c∘b for basis b (index i of hom(x,y)) and c (index j of hom(y,z)).
  const Vec<F>& compose_basis(std::size_t x, std::size_t y, std::size_t z, std::size_t i,
                              std::size_t j) const {
    return d_.composition[(x * size() + y) * size() + z][j * dim(x, y) + i];
  }

  /// g∘f for f in hom(x,y), g in hom(y,z).
  Vec<F> compose(std::size_t x, std::size_t y, std::size_t z, const Vec<F>& g, const Vec<F>& f) const {
    const auto& K = field();
    Vec<F> out = zero(x, z);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (K.is_zero(f[i])) continue;
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (K.is_zero(g[j])) continue;
        axpy(K, out, K.mul(g[j], f[i]), compose_basis(x, y, z, i, j));
      }
    }
    return out;
  }

  const CategoryData<F>& data() const { return d_; }

 private:
  CategoryData<F> d_;
  ValidationReport report_;
};

// ---------------------------------------------------------------------------
// Formatting of Hom elements as linear combinations of basis labels.

template <Field F>
std::string format_element(const Category<F>& cat, std::size_t x, std::size_t y, const Vec<F>& v) {
  const auto& K = cat.field();
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (K.is_zero(v[k])) continue;
    std::string c = K.to_string(v[k]);
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (c != "1") out += c + "*";
    out += cat.labels(x, y)[k];
  }
  return out.empty() ? "0" : out;
}

inline std::string format_object(const std::vector<std::string>& names, const Object& obj) {
  if (obj.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < obj.size(); ++k) {
    if (k) out += " + ";
    out += names[obj[k]];
  }
  return out;
}

template <Field F>
std::string format_object(const Category<F>& cat, const Object& obj) {
  return format_object(cat.object_names(), obj);
}

// ---------------------------------------------------------------------------
// Morphisms between formal direct sums.

/// A matrix of Hom elements; cell (j, i) lies in hom(source[i], target[j]).
template <Field F>
struct Morphism {
  Object source;
  Object target;
  std::vector<Vec<F>> cells;  // row-major, target-slot major

  const Vec<F>& at(std::size_t j, std::size_t i) const { return cells[j * source.size() + i]; }
  Vec<F>& at(std::size_t j, std::size_t i) { return cells[j * source.size() + i]; }
  bool operator==(const Morphism&) const = default;
};

template <Field F>
Morphism<F> zero_morphism(const Category<F>& cat, const Object& a, const Object& b) {
  Morphism<F> m{a, b, {}};
  m.cells.reserve(a.size() * b.size());
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i < a.size(); ++i) m.cells.push_back(cat.zero(a[i], b[j]));
  return m;
}

/// The 1x1 morphism x -> y given by a Hom element.
template <Field F>
Morphism<F> morphism(const Category<F>& cat, std::size_t x, std::size_t y, Vec<F> v) {
  if (v.size() != cat.dim(x, y)) throw Error("coordinate vector has wrong length");
  return Morphism<F>{Object::of(x), Object::of(y), {std::move(v)}};
}

template <Field F>
Morphism<F> identity(const Category<F>& cat, const Object& a) {
  auto m = zero_morphism(cat, a, a);
  for (std::size_t k = 0; k < a.size(); ++k) m.at(k, k) = cat.identity(a[k]);
  return m;
}

template <Field F>
bool is_zero(const Category<F>& cat, const Morphism<F>& m) {
  return std::all_of(m.cells.begin(), m.cells.end(),
                     [&](const Vec<F>& v) { return is_zero_vec(cat.field(), v); });
}

template <Field F>
Morphism<F> compose(const Category<F>& cat, const Morphism<F>& g, const Morphism<F>& f) {
  if (!(f.target == g.source))
    throw Error("cannot compose: target " + format_object(cat, f.target) + " differs from source " +
                format_object(cat, g.source));
  auto out = zero_morphism(cat, f.source, g.target);
  const auto& K = cat.field();
  for (std::size_t k = 0; k < g.target.size(); ++k)
    for (std::size_t i = 0; i < f.source.size(); ++i)
      for (std::size_t j = 0; j < f.target.size(); ++j) {
        const auto& fj = f.at(j, i);
        const auto& gk = g.at(k, j);
        if (is_zero_vec(K, fj) || is_zero_vec(K, gk)) continue;
        auto c = cat.compose(f.source[i], f.target[j], g.target[k], gk, fj);
        axpy(K, out.at(k, i), K.one(), c);
      }
  return out;
}

template <Field F>
Morphism<F> add(const Category<F>& cat, Morphism<F> a, const Morphism<F>& b) {
  if (!(a.source == b.source) || !(a.target == b.target)) throw Error("cannot add morphisms with different endpoints");
  for (std::size_t k = 0; k < a.cells.size(); ++k) axpy(cat.field(), a.cells[k], cat.field().one(), b.cells[k]);
  return a;
}

/// Total dimension of Hom(a, b).
template <Field F>
std::size_t hom_dim(const Category<F>& cat, const Object& a, const Object& b) {
  std::size_t d = 0;
  for (auto x : a.summands)
    for (auto y : b.summands) d += cat.dim(x, y);
  return d;
}

template <Field F>
Vec<F> flatten(const Morphism<F>& m) {
  Vec<F> out;
  for (const auto& c : m.cells) out.insert(out.end(), c.begin(), c.end());
  return out;
}

template <Field F>
Morphism<F> unflatten(const Category<F>& cat, const Object& a, const Object& b, const Vec<F>& v) {
  if (v.size() != hom_dim(cat, a, b)) throw Error("flattened morphism has wrong length");
  Morphism<F> m{a, b, {}};
  std::size_t pos = 0;
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto d = cat.dim(a[i], b[j]);
      m.cells.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(pos),
                           v.begin() + static_cast<std::ptrdiff_t>(pos + d));
      pos += d;
    }
  return m;
}

/// Matrix of a linear map Hom(a, b) -> Hom(c, d), built by evaluating `fn` on
/// the standard basis of Hom(a, b).
template <Field F, class Fn>
Matrix<F> linear_map_matrix(const Category<F>& cat, const Object& a, const Object& b, const Object& c,
                            const Object& d, Fn&& fn) {
  const auto n = hom_dim(cat, a, b);
  std::vector<Vec<F>> cols;
  cols.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto image = fn(unflatten(cat, a, b, unit_vec(cat.field(), n, k)));
    if (!(image.source == c) || !(image.target == d)) throw Error("linear map produced wrong endpoints");
    cols.push_back(flatten(image));
  }
  return Matrix<F>::from_columns(cat.field(), cols, hom_dim(cat, c, d));
}

/// Some g with g∘f = id(source f), if one exists.
template <Field F>
std::optional<Morphism<F>> left_inverse(const Category<F>& cat, const Morphism<F>& f) {
  auto m = linear_map_matrix(cat, f.target, f.source, f.source, f.source,
                             [&](const Morphism<F>& g) { return compose(cat, g, f); });
  auto x = solve(cat.field(), m, flatten(identity(cat, f.source)));
  if (!x) return std::nullopt;
  return unflatten(cat, f.target, f.source, *x);
}

/// Some g with f∘g = id(target f), if one exists.
template <Field F>
std::optional<Morphism<F>> right_inverse(const Category<F>& cat, const Morphism<F>& f) {
  auto m = linear_map_matrix(cat, f.target, f.source, f.target, f.target,
                             [&](const Morphism<F>& g) { return compose(cat, f, g); });
  auto x = solve(cat.field(), m, flatten(identity(cat, f.target)));
  if (!x) return std::nullopt;
  return unflatten(cat, f.target, f.source, *x);
}

template <Field F>
bool is_isomorphism(const Category<F>& cat, const Morphism<F>& f) {
  if (f.source.multiset() != f.target.multiset()) return false;
  return left_inverse(cat, f).has_value() && right_inverse(cat, f).has_value();
}

template <Field F>
std::string format_morphism(const Category<F>& cat, const Morphism<F>& m) {
  if (m.source.empty() || m.target.empty()) return "0";
  if (m.source.size() == 1 && m.target.size() == 1) return format_element(cat, m.source[0], m.target[0], m.cells[0]);
  std::string out = "[";
  for (std::size_t j = 0; j < m.target.size(); ++j) {
    if (j) out += "; ";
    for (std::size_t i = 0; i < m.source.size(); ++i) {
      if (i) out += ", ";
      out += format_element(cat, m.source[i], m.target[j], m.at(j, i));
    }
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Functors.

/// An additive K-linear functor given by a permutation of indecomposables and
/// a linear map hom(x,y) -> hom(Fx,Fy) per ordered pair.
template <Field F>
struct Functor {
  std::string name;
  std::vector<std::size_t> object_map;
  std::vector<Matrix<F>> hom_maps;  // per pair x*n + y

  std::size_t operator()(std::size_t x) const { return object_map[x]; }
  Object operator()(const Object& a) const {
    Object out;
    for (auto x : a.summands) out.summands.push_back(object_map[x]);
    return out;
  }
};

template <Field F>
Functor<F> identity_functor(const Category<F>& cat, std::string name) {
  Functor<F> fn{std::move(name), {}, {}};
  for (std::size_t x = 0; x < cat.size(); ++x) fn.object_map.push_back(x);
  for (std::size_t x = 0; x < cat.size(); ++x)
    for (std::size_t y = 0; y < cat.size(); ++y) fn.hom_maps.push_back(Matrix<F>::identity(cat.field(), cat.dim(x, y)));
  return fn;
}

template <Field F>
Vec<F> apply_functor(const Category<F>& cat, const Functor<F>& fn, std::size_t x, std::size_t y, const Vec<F>& v) {
  return apply(cat.field(), fn.hom_maps[x * cat.size() + y], v);
}

template <Field F>
Morphism<F> apply_functor(const Category<F>& cat, const Functor<F>& fn, const Morphism<F>& m) {
  Morphism<F> out{fn(m.source), fn(m.target), {}};
  for (std::size_t j = 0; j < m.target.size(); ++j)
    for (std::size_t i = 0; i < m.source.size(); ++i)
      out.cells.push_back(apply_functor(cat, fn, m.source[i], m.target[j], m.at(j, i)));
  return out;
}

template <Field F>
ValidationReport validate_functor(const Category<F>& cat, const Functor<F>& fn) {
  ValidationReport report;
  const std::size_t n = cat.size();
  const auto& K = cat.field();
  auto fail = [&](std::string msg) { report.violations.push_back("functor " + fn.name + ": " + std::move(msg)); };
  if (fn.object_map.size() != n || fn.hom_maps.size() != n * n) {
    fail("wrong number of object or hom maps");
    return report;
  }
  auto sorted = fn.object_map;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t x = 0; x < n; ++x)
    if (sorted[x] != x) {
      fail("object map is not a permutation");
      return report;
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& m = fn.hom_maps[x * n + y];
      if (m.cols() != cat.dim(x, y) || m.rows() != cat.dim(fn(x), fn(y))) {
        fail("hom map " + cat.name(x) + "->" + cat.name(y) + " has wrong shape");
        return report;
      }
      if (!inverse(K, m)) fail("hom map " + cat.name(x) + "->" + cat.name(y) + " is not invertible");
    }
  for (std::size_t x = 0; x < n; ++x)
    if (apply_functor(cat, fn, x, x, cat.identity(x)) != cat.identity(fn(x)))
      fail("does not preserve the identity of " + cat.name(x));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t i = 0; i < cat.dim(x, y); ++i)
          for (std::size_t j = 0; j < cat.dim(y, z); ++j) {
            auto lhs = apply_functor(cat, fn, x, z, cat.compose_basis(x, y, z, i, j));
            auto rhs = cat.compose(fn(x), fn(y), fn(z), apply_functor(cat, fn, y, z, unit_vec(K, cat.dim(y, z), j)),
                                   apply_functor(cat, fn, x, y, unit_vec(K, cat.dim(x, y), i)));
            if (lhs != rhs)
              fail("not multiplicative on " + cat.labels(y, z)[j] + " after " + cat.labels(x, y)[i]);
          }
  return report;
}

/// The inverse functor; requires a validated functor.
template <Field F>
Functor<F> inverse_functor(const Category<F>& cat, const Functor<F>& fn) {
  const std::size_t n = cat.size();
  Functor<F> inv{fn.name + "^-1", std::vector<std::size_t>(n), std::vector<Matrix<F>>(n * n)};
  for (std::size_t x = 0; x < n; ++x) inv.object_map[fn(x)] = x;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto m = inverse(cat.field(), fn.hom_maps[x * n + y]);
      if (!m) throw Error("functor " + fn.name + " is not invertible");
      inv.hom_maps[fn(x) * n + fn(y)] = std::move(*m);
    }
  return inv;
}

// ---------------------------------------------------------------------------
// Structural validation.

/// Unit laws, associativity on basis triples, and split-local endomorphism
/// rings: the non-identity basis endomorphisms of every indecomposable span a
/// nilpotent two-sided ideal, and no composite x -> y -> x with y != x has an
/// identity component.
template <Field F>
ValidationReport validate_category(const Category<F>& cat) {
  ValidationReport report;
  const std::size_t n = cat.size();
  const auto& K = cat.field();
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t i = 0; i < cat.dim(x, y); ++i) {
        const auto b = unit_vec(K, cat.dim(x, y), i);
        if (cat.compose(x, y, y, cat.identity(y), b) != b)
          fail("unit law: id(" + cat.name(y) + ") * " + cat.labels(x, y)[i] + " != " + cat.labels(x, y)[i]);
        if (cat.compose(x, x, y, b, cat.identity(x)) != b)
          fail("unit law: " + cat.labels(x, y)[i] + " * id(" + cat.name(x) + ") != " + cat.labels(x, y)[i]);
      }

  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t a = 0; a < cat.dim(w, x); ++a)
            for (std::size_t b = 0; b < cat.dim(x, y); ++b)
              for (std::size_t c = 0; c < cat.dim(y, z); ++c) {
                auto ea = unit_vec(K, cat.dim(w, x), a);
                auto eb = unit_vec(K, cat.dim(x, y), b);
                auto ec = unit_vec(K, cat.dim(y, z), c);
                auto lhs = cat.compose(w, x, z, cat.compose(x, y, z, ec, eb), ea);
                auto rhs = cat.compose(w, y, z, ec, cat.compose(w, x, y, eb, ea));
                if (lhs != rhs)
                  fail("associativity fails on " + cat.labels(y, z)[c] + " * " + cat.labels(x, y)[b] + " * " +
                       cat.labels(w, x)[a]);
              }

  for (std::size_t x = 0; x < n; ++x) {
    const auto d = cat.dim(x, x);
    const auto id = cat.identity_index(x);
    std::vector<Vec<F>> radical;
    for (std::size_t k = 0; k < d; ++k)
      if (k != id) radical.push_back(unit_vec(K, d, k));
    // Closure: products with any basis endomorphism keep a zero identity coordinate.
    for (std::size_t k = 0; k < d; ++k) {
      if (k == id) continue;
      for (std::size_t m = 0; m < d; ++m) {
        const auto& left = cat.compose_basis(x, x, x, k, m);
        const auto& right = cat.compose_basis(x, x, x, m, k);
        if (!K.is_zero(left[id]) || !K.is_zero(right[id]))
          fail("split-local: non-identity endomorphisms of " + cat.name(x) +
               " do not span an ideal (witness " + cat.labels(x, x)[k] + ")");
      }
    }
    // Nilpotency: powers of the radical reach zero within dim steps.
    auto power = Subspace<F>::span(K, radical, d);
    const auto base = power;
    std::size_t steps = 0;
    while (!power.is_zero() && steps <= d) {
      std::vector<Vec<F>> next;
      for (const auto& p : power.basis())
        for (const auto& r : base.basis()) next.push_back(cat.compose(x, x, x, p, r));
      auto np = Subspace<F>::span(K, std::move(next), d);
      if (np == power) break;
      power = std::move(np);
      ++steps;
    }
    if (!power.is_zero())
      fail("split-local: the non-identity endomorphisms of " + cat.name(x) + " do not generate a nilpotent ideal");
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      for (std::size_t i = 0; i < cat.dim(x, y); ++i)
        for (std::size_t j = 0; j < cat.dim(y, x); ++j)
          if (!K.is_zero(cat.compose_basis(x, y, x, i, j)[id]))
            fail("split-local: " + cat.labels(y, x)[j] + " * " + cat.labels(x, y)[i] + " has an identity component, so " +
                 cat.name(x) + " is a summand of " + cat.name(y));
    }
  }
  return report;
}

}  // namespace arideal
