#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace arideal;
using namespace testing_support;

namespace {

const Rationals Q{};

struct Case {
  const Bundle<Rationals>* b;
  Ideal<Rationals> I;
  std::size_t probe;  // an indecomposable to approximate
};

Vec<Rationals> random_vec(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  Vec<Rationals> v(n);
  for (auto& c : v) c = coeff(rng);
  return v;
}

Ideal<Rationals> random_ideal(std::mt19937& rng, const Category<Rationals>& cat) {
  std::uniform_int_distribution<std::size_t> pick(0, cat.size() - 1);
  std::uniform_int_distribution<int> count(1, 2);
  std::vector<Generator<Rationals>> gens;
  for (int k = count(rng); k > 0; --k) {
    std::size_t x, y;
    do {
      x = pick(rng);
      y = pick(rng);
    } while (cat.dim(x, y) == 0);
    gens.push_back({x, y, random_vec(rng, cat.dim(x, y))});
  }
  return generate_ideal(cat, gens);
}

// 50 + 40 + 20 cases with a fixed seed.
const std::vector<Case>& cases() {
  static const std::vector<Case> all = [] {
    std::mt19937 rng(20240917);
    std::vector<Case> out;
    for (const auto& [name, n] : {std::pair{"lhat2", 50}, std::pair{"lhat3", 40}, std::pair{"clusterA4", 20}}) {
      const auto& b = bundle(name);
      std::uniform_int_distribution<std::size_t> pick(0, b.cat().size() - 1);
      for (int k = 0; k < n; ++k) out.push_back({&b, random_ideal(rng, b.cat()), pick(rng)});
    }
    return out;
  }();
  return all;
}

/// [f, f] for a right approximation, [f; f] for a left one: still an
/// approximation, never minimal.
Morphism<Rationals> doubled(const Category<Rationals>& cat, const Approximation<Rationals>& a) {
  const auto& f = a.map;
  if (a.side == Side::right) {
    auto m = zero_morphism(cat, direct_sum(f.source, f.source), f.target);
    for (std::size_t j = 0; j < f.target.size(); ++j)
      for (std::size_t i = 0; i < f.source.size(); ++i) m.at(j, i) = m.at(j, i + f.source.size()) = f.at(j, i);
    return m;
  }
  auto m = zero_morphism(cat, f.source, direct_sum(f.target, f.target));
  for (std::size_t j = 0; j < f.target.size(); ++j)
    for (std::size_t i = 0; i < f.source.size(); ++i) m.at(j, i) = m.at(j + f.target.size(), i) = f.at(j, i);
  return m;
}

}  // namespace

TEST_CASE("there are at least a hundred property cases", "[properties]") { CHECK(cases().size() >= 100); }

TEST_CASE("operations on random ideals produce ideals", "[properties]") {
  for (std::size_t k = 0; k < cases().size(); ++k) {
    const auto& c = cases()[k];
    const auto& cat = c.b->cat();
    INFO("case " << k);
    const auto J = jacobson_radical(cat);
    CHECK(verify_closure(c.I).ok());
    CHECK(verify_closure(ghost_ideal(c.I)).ok());
    CHECK(verify_closure(coghost_ideal(c.I)).ok());
    CHECK(verify_closure(JI(c.I, J)).ok());
    CHECK(verify_closure(IJ(c.I, J)).ok());
    CHECK(verify_closure(ideal_intersect(c.I, J)).ok());
    CHECK(verify_closure(shift_ideal(c.I, c.b->functor("shift"))).ok());
    CHECK(is_subideal(JI(c.I, J), c.I));
    CHECK(is_subideal(IJ(c.I, J), c.I));
  }
}

TEST_CASE("ghosts are antitone and Galois-closed", "[properties]") {
  for (std::size_t k = 0; k + 1 < cases().size(); ++k) {
    const auto& c = cases()[k];
    const auto& next = cases()[k + 1];
    if (c.b != next.b) continue;
    INFO("case " << k);
    const auto bigger = ideal_sum(c.I, next.I);
    CHECK(is_subideal(ghost_ideal(bigger), ghost_ideal(c.I)));
    CHECK(is_subideal(coghost_ideal(bigger), coghost_ideal(c.I)));
    CHECK(is_subideal(c.I, coghost_ideal(ghost_ideal(c.I))));
    CHECK(is_subideal(c.I, ghost_ideal(coghost_ideal(c.I))));
    CHECK(check_torsion_orthogonality(c.I, ghost_ideal(c.I)));
  }
}

TEST_CASE("rank plus nullity of postcomposition maps", "[properties]") {
  std::mt19937 rng(7);
  for (std::size_t k = 0; k < cases().size(); ++k) {
    const auto& cat = cases()[k].b->cat();
    std::uniform_int_distribution<std::size_t> pick(0, cat.size() - 1);
    const std::size_t w = pick(rng), x = pick(rng), y = pick(rng);
    const auto g = random_vec(rng, cat.dim(x, y));
    std::vector<Vec<Rationals>> cols;
    for (std::size_t i = 0; i < cat.dim(w, x); ++i) cols.push_back(cat.compose(w, x, y, g, unit_vec(Q, cat.dim(w, x), i)));
    const auto m = Matrix<Rationals>::from_columns(Q, cols, cat.dim(w, y));
    const auto ker = kernel(Q, m);
    INFO("case " << k);
    CHECK(rank(Q, m) + ker.dim() == cat.dim(w, x));
    for (const auto& v : ker.basis()) CHECK(is_zero_vec(Q, apply(Q, m, v)));
  }
}

TEST_CASE("minimal approximations are minimal, approximations and unique", "[properties]") {
  for (std::size_t k = 0; k < cases().size(); ++k) {
    const auto& c = cases()[k];
    const auto& cat = c.b->cat();
    INFO("case " << k);
    for (const auto side : {Side::right, Side::left}) {
      const auto a = approximation(c.I, Object::of(c.probe), side);
      const auto m = minimize(cat, a);
      CHECK(m.minimal);
      if (side == Side::right) {
        CHECK(is_right_approximation(c.I, m.map));
        CHECK(is_right_minimal(cat, m.map));
      } else {
        CHECK(is_left_approximation(c.I, m.map));
        CHECK(is_left_minimal(cat, m.map));
      }
      Approximation<Rationals> twice{side, a.anchor, doubled(cat, a), false};
      const auto m2 = minimize(cat, twice);
      CHECK(comparison_isomorphism(cat, m.map, m2.map, side).has_value());
    }
  }
}

TEST_CASE("components of sink and source maps are irreducible on the right side", "[properties]") {
  for (std::size_t k = 0; k < cases().size(); ++k) {
    const auto& c = cases()[k];
    const IrrData<Rationals> irr(c.I);
    INFO("case " << k);
    const auto v = sink_map(c.I, Object::of(c.probe));
    for (std::size_t i = 0; i < v.source.size(); ++i) {
      const auto cls = irr.classify(v.source[i], c.probe, v.at(0, i));
      CHECK((cls == IrrClass::right || cls == IrrClass::both));
    }
    const auto u = source_map(c.I, Object::of(c.probe));
    for (std::size_t j = 0; j < u.target.size(); ++j) {
      const auto cls = irr.classify(c.probe, u.target[j], u.at(j, 0));
      CHECK((cls == IrrClass::left || cls == IrrClass::both));
    }
  }
}

TEST_CASE("Irr- equals Irr+ for the radical", "[properties]") {
  for (const auto* f : {"lhat2", "lhat3", "clusterA4"}) {
    const auto& cat = bundle(f).cat();
    const IrrData<Rationals> irr(jacobson_radical(cat));
    for (std::size_t x = 0; x < cat.size(); ++x)
      for (std::size_t y = 0; y < cat.size(); ++y) CHECK(irr.irr_minus(x, y) == irr.irr_plus(x, y));
  }
}

TEST_CASE("multiplicities match Irr dimensions for every recorded triangle", "[properties]") {
  for (const auto* f : {"lhat2", "lhat3", "clusterA4"}) {
    const auto& b = bundle(f);
    for (std::size_t k = 0; k < b.triangles.size(); ++k) {
      const auto& t = b.triangles[k];
      INFO(f << " " << t.label);
      REQUIRE(b.triangle_ideals[k].has_value());
      CHECK(verify_multiplicity(b.ideal(*b.triangle_ideals[k]), b.functor("shift"), t).ok());
    }
  }
}

TEST_CASE("tau stability agrees with condition 1", "[properties]") {
  for (std::size_t k = 0; k < cases().size(); ++k) {
    const auto& c = cases()[k];
    INFO("case " << k);
    CHECK(tau_stable(c.I, c.b->functor("tau")) == check_condition1(c.I, c.b->functor("shift")));
  }
}

TEST_CASE("AR ideals factor through sink maps", "[properties]") {
  std::size_t checked = 0;
  for (std::size_t k = 0; k < cases().size(); ++k) {
    const auto& c = cases()[k];
    if (!detect_ar_ideal(c.I, c.b->functor("shift")).is_ar_ideal()) continue;
    INFO("case " << k);
    ++checked;
    CHECK(verify_factorization(c.I, 2).empty());
    CHECK(verify_factorization(c.I, 3).empty());
  }
  for (const auto& [f, name] : {std::pair{"lhat2", "eps"}, std::pair{"lhat2", "J"}, std::pair{"lhat3", "eps"},
                                std::pair{"lhat3", "J"}, std::pair{"clusterA4", "D"}}) {
    INFO(f << " " << name);
    CHECK(verify_factorization(bundle(f).ideal(name), 2).empty());
    CHECK(verify_factorization(bundle(f).ideal(name), 3).empty());
    ++checked;
  }
  CHECK(checked >= 5);
}
