#pragma once
// Left and right ideal approximations, their minimization, and the
// irreducibility data derived from an ideal and the radical.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arideal/category.hpp"
#include "arideal/ideal.hpp"
#include "arideal/linalg.hpp"

namespace arideal {

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

/// A right approximation has target == anchor, a left one source == anchor.
template <Field F>
struct Approximation {
  Side side;
  Object anchor;
  Morphism<F> map;
  bool minimal = false;
};

/// Source is the sum over indecomposables m of m^dim I(m, T); the columns of
/// the map run through the basis of each I(m, T_j).
template <Field F>
Approximation<F> right_approximation(const Ideal<F>& I, const Object& T) {
  const auto& cat = I.category();
  std::vector<std::pair<std::size_t, std::vector<Vec<F>>>> columns;  // (m, column cells over T)
  for (std::size_t m = 0; m < cat.size(); ++m)
    for (std::size_t j = 0; j < T.size(); ++j)
      for (const auto& b : I(m, T[j]).basis()) {
        std::vector<Vec<F>> cells;
        for (std::size_t k = 0; k < T.size(); ++k) cells.push_back(k == j ? b : cat.zero(m, T[k]));
        columns.emplace_back(m, std::move(cells));
      }
  Object source;
  for (const auto& c : columns) source.summands.push_back(c.first);
  auto map = zero_morphism(cat, source, T);
  for (std::size_t i = 0; i < columns.size(); ++i)
    for (std::size_t j = 0; j < T.size(); ++j) map.at(j, i) = columns[i].second[j];
  return {Side::right, T, std::move(map), false};
}

/// Dual of right_approximation: target is the sum of m^dim I(T, m).
template <Field F>
Approximation<F> left_approximation(const Ideal<F>& I, const Object& T) {
  const auto& cat = I.category();
  std::vector<std::pair<std::size_t, std::vector<Vec<F>>>> rows;
  for (std::size_t m = 0; m < cat.size(); ++m)
    for (std::size_t i = 0; i < T.size(); ++i)
      for (const auto& b : I(T[i], m).basis()) {
        std::vector<Vec<F>> cells;
        for (std::size_t k = 0; k < T.size(); ++k) cells.push_back(k == i ? b : cat.zero(T[k], m));
        rows.emplace_back(m, std::move(cells));
      }
  Object target;
  for (const auto& r : rows) target.summands.push_back(r.first);
  auto map = zero_morphism(cat, T, target);
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t i = 0; i < T.size(); ++i) map.at(j, i) = rows[j].second[i];
  return {Side::left, T, std::move(map), false};
}

template <Field F>
Approximation<F> approximation(const Ideal<F>& I, const Object& T, Side side) {
  return side == Side::right ? right_approximation(I, T) : left_approximation(I, T);
}

namespace detail {

/// {h in End(source f) : f∘h = 0} as a list of basis morphisms.
template <Field F>
std::vector<Morphism<F>> right_annihilator(const Category<F>& cat, const Morphism<F>& f) {
  auto m = linear_map_matrix(cat, f.source, f.source, f.source, f.target,
                             [&](const Morphism<F>& h) { return compose(cat, f, h); });
  std::vector<Morphism<F>> out;
  const auto ker = kernel(cat.field(), m);
  for (const auto& v : ker.basis()) out.push_back(unflatten(cat, f.source, f.source, v));
  return out;
}

/// {h in End(target f) : h∘f = 0}.
template <Field F>
std::vector<Morphism<F>> left_annihilator(const Category<F>& cat, const Morphism<F>& f) {
  auto m = linear_map_matrix(cat, f.target, f.target, f.source, f.target,
                             [&](const Morphism<F>& h) { return compose(cat, h, f); });
  std::vector<Morphism<F>> out;
  const auto ker = kernel(cat.field(), m);
  for (const auto& v : ker.basis()) out.push_back(unflatten(cat, f.target, f.target, v));
  return out;
}

}  // namespace detail

/// Every component of h lies in J, where J is the radical of the category.
template <Field F>
bool in_radical(const Category<F>& cat, const Morphism<F>& h) {
  for (std::size_t j = 0; j < h.target.size(); ++j)
    for (std::size_t i = 0; i < h.source.size(); ++i)
      if (h.source[i] == h.target[j] && !cat.field().is_zero(h.at(j, i)[cat.identity_index(h.source[i])]))
        return false;
  return true;
}

/// f is right minimal iff every h with f∘h = 0 is radical.
template <Field F>
bool is_right_minimal(const Category<F>& cat, const Morphism<F>& f) {
  for (const auto& h : detail::right_annihilator(cat, f))
    if (!in_radical(cat, h)) return false;
  return true;
}

template <Field F>
bool is_left_minimal(const Category<F>& cat, const Morphism<F>& f) {
  for (const auto& h : detail::left_annihilator(cat, f))
    if (!in_radical(cat, h)) return false;
  return true;
}

namespace detail {

/// Basis of J(x, y): everything when x != y, the non-identity coordinates of End(x).
template <Field F>
std::vector<Vec<F>> radical_basis(const Category<F>& cat, std::size_t x, std::size_t y) {
  std::vector<Vec<F>> out;
  const auto d = cat.dim(x, y);
  for (std::size_t k = 0; k < d; ++k)
    if (x != y || k != cat.identity_index(x)) out.push_back(unit_vec(cat.field(), d, k));
  return out;
}

}  // namespace detail

/// Keeps, for each indecomposable m, the slots of type m whose components are
/// independent modulo f∘J(m, source) (right) or J(target, m)∘f (left). The kept
/// slots form a summand with the same image functor, so the result is still an
/// approximation, and independence is exactly minimality.
template <Field F>
Approximation<F> minimize(const Category<F>& cat, Approximation<F> a) {
  const auto& K = cat.field();
  const auto& f = a.map;
  const bool right = a.side == Side::right;
  const Object& slots = right ? f.source : f.target;
  const Object& other = right ? f.target : f.source;
  std::vector<bool> keep(slots.size(), false);
  std::vector<std::size_t> types = slots.summands;
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  for (const auto m : types) {
    std::size_t ambient = 0;
    for (std::size_t j = 0; j < other.size(); ++j) ambient += right ? cat.dim(m, other[j]) : cat.dim(other[j], m);
    // component of slot k, composed with a map between m and slot k, as a vector in Hom(m, other) or Hom(other, m)
    auto through = [&](std::size_t k, const Vec<F>& phi) {
      Vec<F> out;
      for (std::size_t j = 0; j < other.size(); ++j) {
        auto c = right ? cat.compose(m, slots[k], other[j], f.at(j, k), phi)
                       : cat.compose(other[j], slots[k], m, phi, f.at(k, j));
        out.insert(out.end(), c.begin(), c.end());
      }
      return out;
    };
    std::vector<Vec<F>> gens;
    for (std::size_t k = 0; k < slots.size(); ++k)
      for (const auto& phi : right ? detail::radical_basis(cat, m, slots[k]) : detail::radical_basis(cat, slots[k], m))
        gens.push_back(through(k, phi));
    auto span = Subspace<F>::span(K, std::move(gens), ambient);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (slots[k] != m) continue;
      auto v = through(k, cat.identity(m));
      if (span.contains(K, v)) continue;
      keep[k] = true;
      span = subspace_sum(K, span, Subspace<F>::span(K, {std::move(v)}, ambient));
    }
  }
  Object kept;
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (keep[k]) kept.summands.push_back(slots[k]);
  Morphism<F> g = right ? zero_morphism(cat, kept, f.target) : zero_morphism(cat, f.source, kept);
  for (std::size_t k = 0, out = 0; k < slots.size(); ++k) {
    if (!keep[k]) continue;
    for (std::size_t j = 0; j < other.size(); ++j) {
      if (right) g.at(j, out) = f.at(j, k);
      else g.at(out, j) = f.at(k, j);
    }
    ++out;
  }
  a.map = std::move(g);
  a.minimal = true;
  return a;
}

template <Field F>
Morphism<F> sink_map(const Ideal<F>& I, const Object& T) {
  return minimize(I.category(), right_approximation(I, T)).map;
}

template <Field F>
Morphism<F> source_map(const Ideal<F>& I, const Object& T) {
  return minimize(I.category(), left_approximation(I, T)).map;
}

/// Every i in I(m, target f) factors as f∘g; returns the first that does not.
template <Field F>
std::optional<Morphism<F>> epic_witness(const Ideal<F>& I, const Morphism<F>& f) {
  const auto& cat = I.category();
  for (std::size_t m = 0; m < cat.size(); ++m) {
    const Object M = Object::of(m);
    auto sys = linear_map_matrix(cat, M, f.source, M, f.target, [&](const Morphism<F>& g) { return compose(cat, f, g); });
    for (std::size_t j = 0; j < f.target.size(); ++j)
      for (const auto& b : I(m, f.target[j]).basis()) {
        auto i = zero_morphism(cat, M, f.target);
        i.at(j, 0) = b;
        if (!solve(cat.field(), sys, flatten(i))) return i;
      }
  }
  return std::nullopt;
}

/// Every i in I(source f, m) factors as g∘f; returns the first that does not.
template <Field F>
std::optional<Morphism<F>> monic_witness(const Ideal<F>& I, const Morphism<F>& f) {
  const auto& cat = I.category();
  for (std::size_t m = 0; m < cat.size(); ++m) {
    const Object M = Object::of(m);
    auto sys = linear_map_matrix(cat, f.target, M, f.source, M, [&](const Morphism<F>& g) { return compose(cat, g, f); });
    for (std::size_t i = 0; i < f.source.size(); ++i)
      for (const auto& b : I(f.source[i], m).basis()) {
        auto e = zero_morphism(cat, f.source, M);
        e.at(0, i) = b;
        if (!solve(cat.field(), sys, flatten(e))) return e;
      }
  }
  return std::nullopt;
}

template <Field F>
bool is_I_epic(const Ideal<F>& I, const Morphism<F>& f) {
  return !epic_witness(I, f);
}

template <Field F>
bool is_I_monic(const Ideal<F>& I, const Morphism<F>& f) {
  return !monic_witness(I, f);
}

template <Field F>
bool is_right_approximation(const Ideal<F>& I, const Morphism<F>& f) {
  return contains(I, f) && is_I_epic(I, f);
}

template <Field F>
bool is_left_approximation(const Ideal<F>& I, const Morphism<F>& f) {
  return contains(I, f) && is_I_monic(I, f);
}

template <Field F>
bool is_sink_map(const Ideal<F>& I, const Morphism<F>& f) {
  return is_right_approximation(I, f) && is_right_minimal(I.category(), f);
}

template <Field F>
bool is_source_map(const Ideal<F>& I, const Morphism<F>& f) {
  return is_left_approximation(I, f) && is_left_minimal(I.category(), f);
}

/// Some g with f2 = f1∘g (right) or f2 = g∘f1 (left) that is an isomorphism.
/// For minimal approximations any solution is one, so the first found decides.
template <Field F>
std::optional<Morphism<F>> comparison_isomorphism(const Category<F>& cat, const Morphism<F>& f1, const Morphism<F>& f2,
                                                  Side side) {
  std::optional<Vec<F>> x;
  Object a, b;
  if (side == Side::right) {
    if (!(f1.target == f2.target)) return std::nullopt;
    a = f2.source;
    b = f1.source;
    auto sys = linear_map_matrix(cat, a, b, a, f1.target, [&](const Morphism<F>& g) { return compose(cat, f1, g); });
    x = solve(cat.field(), sys, flatten(f2));
  } else {
    if (!(f1.source == f2.source)) return std::nullopt;
    a = f1.target;
    b = f2.target;
    auto sys = linear_map_matrix(cat, a, b, f1.source, b, [&](const Morphism<F>& g) { return compose(cat, g, f1); });
    x = solve(cat.field(), sys, flatten(f2));
  }
  if (!x) return std::nullopt;
  auto g = unflatten(cat, a, b, *x);
  if (!is_isomorphism(cat, g)) return std::nullopt;
  return g;
}

// ---------------------------------------------------------------------------
// Irreducibility.

enum class IrrClass { left, right, both, none, not_in_ideal };

inline const char* to_string(IrrClass c) {
  switch (c) {
    case IrrClass::left: return "left";
    case IrrClass::right: return "right";
    case IrrClass::both: return "both";
    case IrrClass::none: return "none";
    case IrrClass::not_in_ideal: return "not-in-ideal";
  }
  return "?";
}

/// I together with JI and IJ, computed once.
template <Field F>
struct IrrData {
  Ideal<F> I;
  Ideal<F> ji;
  Ideal<F> ij;

  explicit IrrData(const Ideal<F>& ideal)
      : I(ideal),
        ji(JI(ideal, jacobson_radical(ideal.category()))),
        ij(IJ(ideal, jacobson_radical(ideal.category()))) {}

  std::size_t irr_minus(std::size_t x, std::size_t y) const { return I(x, y).dim() - ji(x, y).dim(); }
  std::size_t irr_plus(std::size_t x, std::size_t y) const { return I(x, y).dim() - ij(x, y).dim(); }

  IrrClass classify(std::size_t x, std::size_t y, const Vec<F>& f) const {
    const auto& K = I.category().field();
    if (!I(x, y).contains(K, f)) return IrrClass::not_in_ideal;
    const bool left = !ji(x, y).contains(K, f);
    const bool right = !ij(x, y).contains(K, f);
    if (left && right) return IrrClass::both;
    if (left) return IrrClass::left;
    if (right) return IrrClass::right;
    return IrrClass::none;
  }
};

template <Field F>
IrrClass classify_irreducible(const Ideal<F>& I, const Morphism<F>& f) {
  if (f.source.size() != 1 || f.target.size() != 1)
    throw Error("irreducibility is classified only between indecomposables");
  return IrrData<F>(I).classify(f.source[0], f.target[0], f.cells[0]);
}

template <Field F>
std::size_t irr_minus_dim(const Ideal<F>& I, std::size_t x, std::size_t y) {
  return IrrData<F>(I).irr_minus(x, y);
}

template <Field F>
std::size_t irr_plus_dim(const Ideal<F>& I, std::size_t x, std::size_t y) {
  return IrrData<F>(I).irr_plus(x, y);
}

}  // namespace arideal
