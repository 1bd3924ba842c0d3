#pragma once
// Ghost and coghost ideals of an ideal, and the checks on ideal torsion pairs
// that need no triangle data.

#include <cstddef>
#include <vector>

#include "arideal/ideal.hpp"
#include "arideal/linalg.hpp"

namespace arideal {

namespace detail {

/// Kernel of f -> (constraint(f, i))_i stacked over all listed i.
template <Field F, class Apply>
Subspace<F> joint_kernel(const Category<F>& cat, std::size_t x, std::size_t y, Apply&& apply_all) {
  const auto& K = cat.field();
  const std::size_t d = cat.dim(x, y);
  std::vector<Vec<F>> rows;
  for (std::size_t k = 0; k < d; ++k) {
    auto images = apply_all(unit_vec(K, d, k));  // concatenated images of the k-th basis element
    if (rows.empty()) rows.assign(images.size(), zero_vec(K, d));
    for (std::size_t r = 0; r < images.size(); ++r) rows[r][k] = images[r];
  }
  if (rows.empty()) return Subspace<F>::full(K, d);
  return kernel(K, Matrix<F>::from_rows(K, rows, d));
}

}  // namespace detail

/// Gh_I(x,y) = {f : f∘i = 0 for every i in I(m,x)}.
template <Field F>
Ideal<F> ghost_ideal(const Ideal<F>& I) {
  const auto& cat = I.category();
  const std::size_t n = cat.size();
  std::vector<Subspace<F>> comp;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      comp.push_back(detail::joint_kernel(cat, x, y, [&](const Vec<F>& f) {
        Vec<F> out;
        for (std::size_t m = 0; m < n; ++m)
          for (const auto& i : I(m, x).basis()) {
            auto c = cat.compose(m, x, y, f, i);
            out.insert(out.end(), c.begin(), c.end());
          }
        return out;
      }));
  return Ideal<F>(cat, std::move(comp));
}

/// CoGh_I(x,y) = {f : i∘f = 0 for every i in I(y,m)}.
template <Field F>
Ideal<F> coghost_ideal(const Ideal<F>& I) {
  const auto& cat = I.category();
  const std::size_t n = cat.size();
  std::vector<Subspace<F>> comp;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      comp.push_back(detail::joint_kernel(cat, x, y, [&](const Vec<F>& f) {
        Vec<F> out;
        for (std::size_t m = 0; m < n; ++m)
          for (const auto& i : I(y, m).basis()) {
            auto c = cat.compose(x, y, m, i, f);
            out.insert(out.end(), c.begin(), c.end());
          }
        return out;
      }));
  return Ideal<F>(cat, std::move(comp));
}

/// Hom(i, r) = 0 for all i in I and r in R, which by closure is R ⊆ Gh_I.
template <Field F>
bool check_torsion_orthogonality(const Ideal<F>& I, const Ideal<F>& R) {
  return is_subideal(R, ghost_ideal(I));
}

struct TorsionIdentities {
  bool coghost_of_ghost = false;  // I = CoGh(Gh(I))
  bool ghost_of_coghost = false;  // I = Gh(CoGh(I))
};

template <Field F>
TorsionIdentities torsion_identities(const Ideal<F>& I) {
  return {coghost_ideal(ghost_ideal(I)) == I, ghost_ideal(coghost_ideal(I)) == I};
}

}  // namespace arideal
