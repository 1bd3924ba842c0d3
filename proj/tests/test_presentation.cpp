#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace arideal;
using namespace testing_support;

namespace {

const Rationals Q{};

Vec<Rationals> qv(std::initializer_list<long> xs) {
  Vec<Rationals> v;
  for (long x : xs) v.push_back(mpq_class(x));
  return v;
}

/// One object with basis {id, e}; `ee` is e∘e and `id_e` is id∘e.
Category<Rationals> two_dim_endo(Vec<Rationals> ee, Vec<Rationals> id_e) {
  CategoryData<Rationals> d{Q, {"X"}, {{"id(X)", "e"}}, {0}, {}};
  // cell index j*2 + i holds basis_j ∘ basis_i
  d.composition.push_back({qv({1, 0}), qv({0, 1}), std::move(id_e), std::move(ee)});
  return Category<Rationals>(std::move(d));
}

const char* kLhat2Quiver = R"(
[vertices]
X Y
[arrows]
eps: X -> X
alpha: X -> Y
beta: Y -> X
[relations]
alpha*beta
eps*eps + beta*alpha
)";

}  // namespace

// ---------------------------------------------------------------------------
// Category core.

TEST_CASE("lhat2 validates with a nilpotent radical of degree 4 at X", "[catcore]") {
  const auto& b = lhat2();
  const auto& cat = b.cat();
  CHECK(cat.validation().ok());
  const auto X = obj(b, "X");
  auto N = span_of(b, {"eps", "eps*eps", "eps*eps*eps"}, X, X);
  CHECK(N.dim() == 3);
  CHECK(N == jacobson_radical(cat)(X, X));
  auto e = mor(b, "eps");
  auto e4 = compose(cat, e, compose(cat, e, compose(cat, e, e)));
  CHECK(is_zero(cat, e4));
  CHECK_FALSE(is_zero(cat, compose(cat, e, compose(cat, e, e))));
}

TEST_CASE("a broken unit law is reported with a witness", "[catcore]") {
  auto cat = two_dim_endo(qv({0, 0}), qv({0, 0}));
  REQUIRE_FALSE(cat.validation().ok());
  bool found = false;
  for (const auto& v : cat.validation().violations)
    if (v.find("unit law") != std::string::npos && v.find("e") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("an idempotent basis endomorphism fails the split-local check", "[catcore]") {
  auto cat = two_dim_endo(qv({0, 1}), qv({0, 1}));
  REQUIRE_FALSE(cat.validation().ok());
  bool found = false;
  for (const auto& v : cat.validation().violations)
    if (v.find("split-local") != std::string::npos) found = true;
  CHECK(found);
  CHECK_THROWS_AS(jacobson_radical(cat), Error);
}

TEST_CASE("compose in lhat2 follows the relations", "[catcore]") {
  const auto& b = lhat2();
  const auto& cat = b.cat();
  auto f = mor(b, "alpha*eps");
  CHECK(compose(cat, identity(cat, f.target), f) == f);
  CHECK(compose(cat, f, identity(cat, f.source)) == f);
  CHECK(is_zero(cat, compose(cat, mor(b, "alpha"), mor(b, "beta"))));
  CHECK(compose(cat, mor(b, "beta"), mor(b, "alpha")) == mor(b, "-eps*eps"));
}

TEST_CASE("identity of formal sums", "[catcore]") {
  const auto& b = lhat2();
  const auto& cat = b.cat();
  auto z = identity(cat, Object::zero());
  CHECK(z.source.empty());
  CHECK(z.cells.empty());
  const auto X = obj(b, "X");
  auto i2 = identity(cat, Object{{X, X}});
  CHECK(i2.at(0, 0) == cat.identity(X));
  CHECK(i2.at(1, 1) == cat.identity(X));
  CHECK(i2.at(0, 1) == cat.zero(X, X));
  CHECK(i2.at(1, 0) == cat.zero(X, X));
}

TEST_CASE("identity is a unit for random morphisms", "[catcore]") {
  const auto& b = lhat3();
  const auto& cat = b.cat();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Object A, B;
    for (std::size_t k = 0; k < 1 + rng() % 3; ++k) A.summands.push_back(rng() % cat.size());
    for (std::size_t k = 0; k < 1 + rng() % 3; ++k) B.summands.push_back(rng() % cat.size());
    auto f = zero_morphism(cat, A, B);
    for (auto& cell : f.cells)
      for (auto& c : cell) c = static_cast<long>(rng() % 7) - 3;
    CHECK(compose(cat, identity(cat, B), f) == f);
    CHECK(compose(cat, f, identity(cat, A)) == f);
  }
}

TEST_CASE("is_isomorphism", "[catcore]") {
  const auto& b = lhat2();
  const auto& cat = b.cat();
  const auto X = obj(b, "X"), Y = obj(b, "Y");
  CHECK(is_isomorphism(cat, identity(cat, Object::of(X))));
  CHECK_FALSE(is_isomorphism(cat, mor(b, "eps")));
  CHECK_FALSE(is_isomorphism(cat, zero_morphism(cat, Object{{X, Y}}, Object{{X, X}})));
  CHECK(is_isomorphism(cat, mor(b, "id(X) + eps")));
}

TEST_CASE("functors on morphisms", "[catcore]") {
  const auto& b = lhat2();
  const auto& cat = b.cat();
  const auto& shift = b.functor("shift");
  CHECK(validate_functor(cat, shift).ok());
  const auto X = obj(b, "X");
  CHECK(apply_functor(cat, shift, identity(cat, Object::of(X))) == identity(cat, Object::of(shift(X))));
  for (std::size_t x = 0; x < cat.size(); ++x)
    for (std::size_t y = 0; y < cat.size(); ++y)
      for (std::size_t k = 0; k < cat.dim(x, y); ++k) {
        auto f = morphism(cat, x, y, unit_vec(Q, cat.dim(x, y), k));
        CHECK(apply_functor(cat, shift, f) == f);
      }
}

TEST_CASE("functoriality on random composable pairs", "[catcore]") {
  const auto& b = clusterA4();
  const auto& cat = b.cat();
  const auto& tau = b.functor("tau");
  REQUIRE(validate_functor(cat, tau).ok());
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t x = rng() % cat.size(), y = rng() % cat.size(), z = rng() % cat.size();
    auto f = zero_morphism(cat, Object::of(x), Object::of(y));
    auto g = zero_morphism(cat, Object::of(y), Object::of(z));
    for (auto& c : f.cells[0]) c = static_cast<long>(rng() % 5) - 2;
    for (auto& c : g.cells[0]) c = static_cast<long>(rng() % 5) - 2;
    CHECK(apply_functor(cat, tau, compose(cat, g, f)) ==
          compose(cat, apply_functor(cat, tau, g), apply_functor(cat, tau, f)));
  }
}

TEST_CASE("hom dimensions in lhat2", "[catcore]") {
  const auto& b = lhat2();
  const auto& cat = b.cat();
  const auto X = obj(b, "X"), Y = obj(b, "Y");
  CHECK(hom_dim(cat, Object::of(X), Object::of(X)) == 4);
  CHECK(hom_dim(cat, Object::zero(), Object::of(Y)) == 0);
  CHECK(hom_dim(cat, Object{{X, Y}}, Object::of(X)) == 6);
}

// ---------------------------------------------------------------------------
// Presentations.

TEST_CASE("expression parsing", "[quiverpres]") {
  auto e = parse_expression("e*e + b*a");
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms[0].coefficient == 1);
  CHECK(e.terms[1].coefficient == 1);
  CHECK(e.terms[1].factors[0].name == "b");
  auto s = parse_expression("2/3 * e");
  REQUIRE(s.terms.size() == 1);
  CHECK(s.terms[0].coefficient == mpq_class(2, 3));
  CHECK(parse_expression("0").is_zero_literal());
  CHECK_THROWS_AS(parse_expression("e +"), ParseError);
}

TEST_CASE("non-composable products are rejected with a location", "[quiverpres]") {
  // alpha: X->Y then alpha again needs Y = X
  std::string text = std::string(kLhat2Quiver) + "alpha*alpha\n";
  try {
    parse_presentation(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() > 0);
  }
  std::string mixed = std::string(kLhat2Quiver) + "alpha + beta\n";
  CHECK_THROWS_AS(parse_presentation(mixed), ParseError);
}

TEST_CASE("lhat2 at L=5 has the ten-element basis", "[quiverpres]") {
  auto p = parse_presentation(std::string(kLhat2Quiver) + "[options]\nmax_path_length = 5\n");
  auto qc = build_category(p, Q);
  const auto& cat = qc.cat();
  CHECK(cat.dim(0, 0) == 4);
  CHECK(cat.dim(0, 1) == 2);
  CHECK(cat.dim(1, 0) == 2);
  CHECK(cat.dim(1, 1) == 2);
  const std::vector<std::string> xx{"id(X)", "eps", "eps*eps", "eps*eps*eps"};
  CHECK(cat.labels(0, 0) == xx);
}

TEST_CASE("lhat2 at L=2 is rejected as truncation-insufficient", "[quiverpres]") {
  auto p = parse_presentation(std::string(kLhat2Quiver) + "[options]\nmax_path_length = 2\n");
  try {
    build_category(p, Q);
    FAIL("expected truncation-insufficient");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("truncation-insufficient") != std::string::npos);
  }
}

TEST_CASE("one vertex and no arrows gives End = K id", "[quiverpres]") {
  auto qc = build_category(parse_presentation("[vertices]\nP\n[options]\nmax_path_length = 1\n"), Q);
  REQUIRE(qc.cat().size() == 1);
  CHECK(qc.cat().dim(0, 0) == 1);
  CHECK(jacobson_radical(qc.cat()).total_dim() == 0);
}

TEST_CASE("hom dimensions agree with the graded oracle", "[quiverpres][oracle]") {
  for (const auto& [b, oracle] : {std::pair{&lhat2(), lhat2_oracle()}, std::pair{&lhat3(), lhat3_oracle()}}) {
    const auto& cat = b->cat();
    for (std::size_t x = 0; x < cat.size(); ++x)
      for (std::size_t y = 0; y < cat.size(); ++y) {
        const int ox = oracle.quiver().vertex(cat.name(x)), oy = oracle.quiver().vertex(cat.name(y));
        CHECK(cat.dim(x, y) == oracle.hom_dim(ox, oy));
      }
  }
}

TEST_CASE("the same presentation over F_5 has the same dimensions", "[quiverpres]") {
  auto p = parse_presentation(std::string(kLhat2Quiver) + "[options]\nmax_path_length = 5\n");
  auto qc = build_category(p, PrimeField(5));
  CHECK(qc.cat().dim(0, 0) == 4);
  CHECK(qc.cat().dim(1, 1) == 2);
  CHECK(qc.cat().validation().ok());
}

TEST_CASE("a functor that breaks a relation is rejected", "[quiverpres]") {
  std::string text = std::string(kLhat2Quiver) +
                     "[options]\nmax_path_length = 5\n[functor bad]\nX -> X\nY -> Y\neps -> eps\nalpha -> alpha\n"
                     "beta -> 2*beta\n";
  CHECK_THROWS_AS(build_category(parse_presentation(text), Q), ValidationError);
}

TEST_CASE("bundle sections are parsed with referential checks", "[quiverpres][bundle]") {
  CHECK_THROWS_AS(parse_bundle(std::string(kLhat2Quiver) + "[ideal I]\nwhatever\n"), ParseError);
  CHECK_THROWS_AS(parse_bundle(std::string(kLhat2Quiver) + "[mystery]\n"), ParseError);
  CHECK_THROWS_AS(parse_bundle(std::string(kLhat2Quiver) + "[ideal I]\nobjects: Q\n"), ParseError);
  auto bt = parse_bundle(std::string(kLhat2Quiver) + "[options]\nmax_path_length = 5\n[ideal I]\nobjects: X\n");
  auto b = build_bundle(bt, Q);
  CHECK(objects_of(b.ideal("I")) == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(b.ideal("nope"), Error);
}
