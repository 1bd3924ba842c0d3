#pragma once
// Ideals of a presented category: one canonical subspace of hom(x,y) per
// ordered pair of indecomposables, closed under composition on both sides.

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arideal/category.hpp"
#include "arideal/linalg.hpp"

namespace arideal {

/// Holds a pointer to its category; the category must outlive the ideal.
template <Field F>
class Ideal {
 public:
  Ideal(const Category<F>& cat, std::vector<Subspace<F>> comp) : cat_(&cat), comp_(std::move(comp)) {
    if (comp_.size() != cat.size() * cat.size()) throw Error("ideal has the wrong number of components");
    for (std::size_t x = 0; x < cat.size(); ++x)
      for (std::size_t y = 0; y < cat.size(); ++y)
        if (comp_[x * cat.size() + y].ambient_dim() != cat.dim(x, y))
          throw Error("ideal component " + cat.name(x) + "->" + cat.name(y) + " has the wrong ambient dimension");
  }

  const Category<F>& category() const { return *cat_; }
  const Subspace<F>& operator()(std::size_t x, std::size_t y) const { return comp_[x * cat_->size() + y]; }
  const std::vector<Subspace<F>>& components() const { return comp_; }

  std::size_t total_dim() const {
    std::size_t d = 0;
    for (const auto& s : comp_) d += s.dim();
    return d;
  }

  bool operator==(const Ideal& o) const { return cat_ == o.cat_ && comp_ == o.comp_; }

 private:
  const Category<F>* cat_;
  std::vector<Subspace<F>> comp_;
};

namespace detail {

template <Field F>
void require_same_category(const Ideal<F>& a, const Ideal<F>& b) {
  if (&a.category() != &b.category()) throw Error("ideals belong to different categories");
}

}  // namespace detail

template <Field F>
Ideal<F> zero_ideal(const Category<F>& cat) {
  std::vector<Subspace<F>> comp;
  for (std::size_t x = 0; x < cat.size(); ++x)
    for (std::size_t y = 0; y < cat.size(); ++y) comp.emplace_back(cat.dim(x, y));
  return Ideal<F>(cat, std::move(comp));
}

template <Field F>
Ideal<F> full_ideal(const Category<F>& cat) {
  std::vector<Subspace<F>> comp;
  for (std::size_t x = 0; x < cat.size(); ++x)
    for (std::size_t y = 0; y < cat.size(); ++y) comp.push_back(Subspace<F>::full(cat.field(), cat.dim(x, y)));
  return Ideal<F>(cat, std::move(comp));
}

/// An element of hom(x, y) used as an ideal generator.
template <Field F>
struct Generator {
  std::size_t source;
  std::size_t target;
  Vec<F> value;
};

/// Components of a morphism between formal sums, as generators.
template <Field F>
std::vector<Generator<F>> components_of(const Morphism<F>& m) {
  std::vector<Generator<F>> out;
  for (std::size_t j = 0; j < m.target.size(); ++j)
    for (std::size_t i = 0; i < m.source.size(); ++i) out.push_back({m.source[i], m.target[j], m.at(j, i)});
  return out;
}

/// Least ideal containing the generators: alternate post- and pre-composition
/// sweeps with all basis morphisms until no component grows.
template <Field F>
Ideal<F> generate_ideal(const Category<F>& cat, const std::vector<Generator<F>>& gens) {
  const std::size_t n = cat.size();
  const auto& K = cat.field();
  std::vector<std::vector<Vec<F>>> seeds(n * n);
  for (const auto& g : gens) {
    if (g.value.size() != cat.dim(g.source, g.target)) throw Error("generator has the wrong length");
    seeds[g.source * n + g.target].push_back(g.value);
  }
  std::vector<Subspace<F>> comp;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) comp.push_back(Subspace<F>::span(K, seeds[x * n + y], cat.dim(x, y)));

  bool grew = true;
  while (grew) {
    grew = false;
    for (int pass = 0; pass < 2; ++pass) {
      std::vector<std::vector<Vec<F>>> extra(n * n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (const auto& s : comp[x * n + y].basis())
            for (std::size_t w = 0; w < n; ++w) {
              if (pass == 0) {  // c∘s for c: y -> w
                for (std::size_t j = 0; j < cat.dim(y, w); ++j)
                  extra[x * n + w].push_back(cat.compose(x, y, w, unit_vec(K, cat.dim(y, w), j), s));
              } else {  // s∘b for b: w -> x
                for (std::size_t i = 0; i < cat.dim(w, x); ++i)
                  extra[w * n + y].push_back(cat.compose(w, x, y, s, unit_vec(K, cat.dim(w, x), i)));
              }
            }
      for (std::size_t k = 0; k < n * n; ++k) {
        if (extra[k].empty()) continue;
        auto gens_k = comp[k].basis();
        gens_k.insert(gens_k.end(), extra[k].begin(), extra[k].end());
        auto next = Subspace<F>::span(K, std::move(gens_k), comp[k].ambient_dim());
        if (next.dim() != comp[k].dim()) grew = true;
        comp[k] = std::move(next);
      }
    }
  }
  return Ideal<F>(cat, std::move(comp));
}

template <Field F>
Ideal<F> generate_ideal(const Category<F>& cat, const std::vector<Morphism<F>>& gens) {
  std::vector<Generator<F>> flat;
  for (const auto& m : gens)
    for (auto& g : components_of(m)) flat.push_back(std::move(g));
  return generate_ideal(cat, flat);
}

/// Checks two-sided closure against every basis morphism; lists violations.
template <Field F>
ValidationReport verify_closure(const Ideal<F>& I) {
  ValidationReport report;
  const auto& cat = I.category();
  const auto& K = cat.field();
  const std::size_t n = cat.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& s : I(x, y).basis())
        for (std::size_t w = 0; w < n; ++w) {
          for (std::size_t j = 0; j < cat.dim(y, w); ++j)
            if (!I(x, w).contains(K, cat.compose(x, y, w, unit_vec(K, cat.dim(y, w), j), s)))
              report.violations.push_back("not closed under post-composition with " + cat.labels(y, w)[j] + " at " +
                                          cat.name(x) + "->" + cat.name(y));
          for (std::size_t i = 0; i < cat.dim(w, x); ++i)
            if (!I(w, y).contains(K, cat.compose(w, x, y, s, unit_vec(K, cat.dim(w, x), i))))
              report.violations.push_back("not closed under pre-composition with " + cat.labels(w, x)[i] + " at " +
                                          cat.name(x) + "->" + cat.name(y));
        }
  return report;
}

/// Full Hom between distinct indecomposables, the non-identity basis
/// endomorphisms on the diagonal.
template <Field F>
Ideal<F> jacobson_radical(const Category<F>& cat) {
  if (!cat.validation().ok()) throw Error("the radical needs a category that passes validation");
  const auto& K = cat.field();
  std::vector<Subspace<F>> comp;
  for (std::size_t x = 0; x < cat.size(); ++x)
    for (std::size_t y = 0; y < cat.size(); ++y) {
      if (x != y) {
        comp.push_back(Subspace<F>::full(K, cat.dim(x, y)));
        continue;
      }
      std::vector<Vec<F>> gens;
      for (std::size_t k = 0; k < cat.dim(x, x); ++k)
        if (k != cat.identity_index(x)) gens.push_back(unit_vec(K, cat.dim(x, x), k));
      comp.push_back(Subspace<F>::span(K, std::move(gens), cat.dim(x, x)));
    }
  return Ideal<F>(cat, std::move(comp));
}

/// span{h∘g : g in first(x,m), h in second(m,y)} over indecomposable m.
template <Field F>
Ideal<F> product(const Ideal<F>& apply_first, const Ideal<F>& apply_second) {
  detail::require_same_category(apply_first, apply_second);
  const auto& cat = apply_first.category();
  const auto& K = cat.field();
  const std::size_t n = cat.size();
  std::vector<Subspace<F>> comp;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<Vec<F>> gens;
      for (std::size_t m = 0; m < n; ++m)
        for (const auto& g : apply_first(x, m).basis())
          for (const auto& h : apply_second(m, y).basis()) gens.push_back(cat.compose(x, m, y, h, g));
      comp.push_back(Subspace<F>::span(K, std::move(gens), cat.dim(x, y)));
    }
  return Ideal<F>(cat, std::move(comp));
}

/// I^n with the same product convention throughout.
template <Field F>
Ideal<F> power(const Ideal<F>& I, std::size_t n) {
  if (n < 1) throw Error("ideal powers start at 1");
  Ideal<F> out = I;
  for (std::size_t k = 1; k < n; ++k) out = product(out, I);
  return out;
}

/// JI: h∘g with g in I applied first and h in J after.
template <Field F>
Ideal<F> JI(const Ideal<F>& I, const Ideal<F>& J) {
  return product(I, J);
}

/// IJ: g∘h with h in J applied first and g in I after.
template <Field F>
Ideal<F> IJ(const Ideal<F>& I, const Ideal<F>& J) {
  return product(J, I);
}

template <Field F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  detail::require_same_category(a, b);
  std::vector<Subspace<F>> comp;
  for (std::size_t k = 0; k < a.components().size(); ++k)
    comp.push_back(subspace_sum(a.category().field(), a.components()[k], b.components()[k]));
  return Ideal<F>(a.category(), std::move(comp));
}

template <Field F>
Ideal<F> ideal_intersect(const Ideal<F>& a, const Ideal<F>& b) {
  detail::require_same_category(a, b);
  std::vector<Subspace<F>> comp;
  for (std::size_t k = 0; k < a.components().size(); ++k)
    comp.push_back(subspace_intersect(a.category().field(), a.components()[k], b.components()[k]));
  return Ideal<F>(a.category(), std::move(comp));
}

/// a ⊆ b componentwise.
template <Field F>
bool is_subideal(const Ideal<F>& a, const Ideal<F>& b) {
  detail::require_same_category(a, b);
  for (std::size_t k = 0; k < a.components().size(); ++k)
    if (!b.components()[k].contains(a.category().field(), a.components()[k])) return false;
  return true;
}

/// {F(f) : f in I}.
template <Field F>
Ideal<F> shift_ideal(const Ideal<F>& I, const Functor<F>& fn) {
  const auto& cat = I.category();
  const std::size_t n = cat.size();
  std::vector<Subspace<F>> comp(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      comp[fn(x) * n + fn(y)] = image(cat.field(), fn.hom_maps[x * n + y], I(x, y));
  return Ideal<F>(cat, std::move(comp));
}

/// Indecomposables whose identity lies in I.
template <Field F>
std::vector<std::size_t> objects_of(const Ideal<F>& I) {
  const auto& cat = I.category();
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < cat.size(); ++x)
    if (I(x, x).contains(cat.field(), cat.identity(x))) out.push_back(x);
  return out;
}

/// [D]: morphisms factoring through sums of objects in D.
template <Field F>
Ideal<F> object_ideal(const Category<F>& cat, const std::vector<std::size_t>& objects) {
  std::vector<Generator<F>> gens;
  for (auto d : objects) gens.push_back({d, d, cat.identity(d)});
  return generate_ideal(cat, gens);
}

template <Field F>
bool is_object_ideal(const Ideal<F>& I) {
  return object_ideal(I.category(), objects_of(I)) == I;
}

template <Field F>
bool contains(const Ideal<F>& I, std::size_t x, std::size_t y, const Vec<F>& v) {
  return I(x, y).contains(I.category().field(), v);
}

template <Field F>
bool contains(const Ideal<F>& I, const Morphism<F>& m) {
  for (std::size_t j = 0; j < m.target.size(); ++j)
    for (std::size_t i = 0; i < m.source.size(); ++i)
      if (!contains(I, m.source[i], m.target[j], m.at(j, i))) return false;
  return true;
}

/// dim Hom(x,y) - dim I(x,y).
template <Field F>
std::size_t quotient_hom_dim(const Ideal<F>& I, std::size_t x, std::size_t y) {
  return I.category().dim(x, y) - I(x, y).dim();
}

}  // namespace arideal
