#pragma once
// Decision procedures built on approximations and ghosts: Auslander-Reiten
// ideal detection, τ-stability, valued mutation quivers, and verifiers for
// supplied triangles. Triangles are trusted input; only their consequences
// that are visible in Hom data are checked.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arideal/approx.hpp"
#include "arideal/category.hpp"
#include "arideal/ghost.hpp"
#include "arideal/ideal.hpp"

namespace arideal {

/// X -u-> Y -v-> Z -w-> X[1].
template <Field F>
struct TriangleRecord {
  std::string label;
  Object X, Y, Z;
  Morphism<F> u, v, w;
};

/// Endpoint agreement and vanishing of the three consecutive composites.
template <Field F>
std::vector<std::string> triangle_sanity(const Category<F>& cat, const Functor<F>& shift, const TriangleRecord<F>& t) {
  std::vector<std::string> problems;
  if (!(t.u.source == t.X) || !(t.u.target == t.Y)) problems.push_back("u is not a morphism X -> Y");
  if (!(t.v.source == t.Y) || !(t.v.target == t.Z)) problems.push_back("v is not a morphism Y -> Z");
  if (!(t.w.source == t.Z) || !(t.w.target == shift(t.X))) problems.push_back("w is not a morphism Z -> X[1]");
  if (!problems.empty()) return problems;
  if (!is_zero(cat, compose(cat, t.v, t.u))) problems.push_back("v*u is not zero");
  if (!is_zero(cat, compose(cat, t.w, t.v))) problems.push_back("w*v is not zero");
  if (!is_zero(cat, compose(cat, apply_functor(cat, shift, t.u), t.w))) problems.push_back("u[1]*w is not zero");
  return problems;
}

// ---------------------------------------------------------------------------
// Auslander-Reiten ideals.

template <Field F>
bool check_condition1(const Ideal<F>& I, const Functor<F>& shift) {
  return ghost_ideal(I) == coghost_ideal(shift_ideal(I, shift));
}

enum class Clause { source_not_sink, sink_not_source };

inline const char* to_string(Clause c) {
  return c == Clause::source_not_sink ? "source not sink" : "sink not source";
}

/// `map` is the Gh-source map of `object` (or the Gh-sink map) that fails the
/// other role; `obstruction` is a Gh morphism that does not factor through it,
/// or a non-radical annihilating endomorphism when minimality is what fails.
template <Field F>
struct ConditionFailure {
  std::size_t object;
  Clause clause;
  Morphism<F> map;
  std::optional<Morphism<F>> obstruction;
  std::string reason;
};

template <Field F>
std::vector<ConditionFailure<F>> check_condition2(const Ideal<F>& I, const Functor<F>& shift) {
  const auto& cat = I.category();
  const auto G = ghost_ideal(I);
  const auto ob = objects_of(I);
  std::vector<ConditionFailure<F>> failures;
  for (std::size_t x = 0; x < cat.size(); ++x) {
    if (std::find(ob.begin(), ob.end(), x) != ob.end()) continue;
    auto s = source_map(G, Object::of(x));
    if (auto w = epic_witness(G, s)) {
      failures.push_back({x, Clause::source_not_sink, s, *w, "not a right approximation of its target"});
    } else if (!contains(G, s)) {
      failures.push_back({x, Clause::source_not_sink, s, std::nullopt, "not in the ghost ideal"});
    } else if (!is_right_minimal(cat, s)) {
      std::optional<Morphism<F>> h;
      for (auto& k : detail::right_annihilator(cat, s))
        if (!in_radical(cat, k)) h = k;
      failures.push_back({x, Clause::source_not_sink, s, h, "not right minimal"});
    }
    const auto x1 = shift(x);
    auto t = sink_map(G, Object::of(x1));
    if (auto w = monic_witness(G, t)) {
      failures.push_back({x1, Clause::sink_not_source, t, *w, "not a left approximation of its source"});
    } else if (!contains(G, t)) {
      failures.push_back({x1, Clause::sink_not_source, t, std::nullopt, "not in the ghost ideal"});
    } else if (!is_left_minimal(cat, t)) {
      std::optional<Morphism<F>> h;
      for (auto& k : detail::left_annihilator(cat, t))
        if (!in_radical(cat, k)) h = k;
      failures.push_back({x1, Clause::sink_not_source, t, h, "not left minimal"});
    }
  }
  return failures;
}

template <Field F>
struct ArVerdict {
  bool condition1 = false;
  std::vector<ConditionFailure<F>> condition2_failures;
  bool is_ar_ideal() const { return condition1 && condition2_failures.empty(); }
};

/// Functorial finiteness holds automatically in a finite model.
template <Field F>
ArVerdict<F> detect_ar_ideal(const Ideal<F>& I, const Functor<F>& shift) {
  return {check_condition1(I, shift), check_condition2(I, shift)};
}

template <Field F>
bool tau_stable(const Ideal<F>& I, const Functor<F>& tau) {
  return shift_ideal(I, tau) == I;
}

// ---------------------------------------------------------------------------
// Mutation triangles.

enum class TriangleForm { nontrivial, trivial_identity_first, trivial_identity_second, sum_of_forms, invalid };

inline const char* to_string(TriangleForm f) {
  switch (f) {
    case TriangleForm::nontrivial: return "non-trivial (form 1)";
    case TriangleForm::trivial_identity_first: return "trivial X -id-> X -> 0 (form 2)";
    case TriangleForm::trivial_identity_second: return "trivial 0 -> X -id-> X (form 3)";
    case TriangleForm::sum_of_forms: return "sum of forms";
    case TriangleForm::invalid: return "invalid";
  }
  return "?";
}

struct TriangleReport {
  std::vector<std::string> sanity;
  bool u_left_approximation = false;
  bool v_right_approximation = false;
  bool w_in_gh_cogh = false;
  bool u_left_minimal = false;
  bool v_right_minimal = false;
  std::size_t form2_blocks = 0;  // summands of X in Ob(I) split off with identities
  std::size_t form3_blocks = 0;  // summands of Y not needed by u
  TriangleForm form = TriangleForm::invalid;

  bool valid() const { return form != TriangleForm::invalid; }
};

/// u must be a left I-approximation, v a right I-approximation and w must lie
/// in Gh_I ∩ CoGh_{I[1]}.
template <Field F>
TriangleReport verify_mutation_triangle(const Ideal<F>& I, const Functor<F>& shift, const TriangleRecord<F>& t) {
  const auto& cat = I.category();
  TriangleReport r;
  r.sanity = triangle_sanity(cat, shift, t);
  if (!r.sanity.empty()) return r;
  r.u_left_approximation = is_left_approximation(I, t.u);
  r.v_right_approximation = is_right_approximation(I, t.v);
  const auto gh = ghost_ideal(I);
  const auto cogh = coghost_ideal(shift_ideal(I, shift));
  r.w_in_gh_cogh = contains(gh, t.w) && contains(cogh, t.w);
  r.u_left_minimal = is_left_minimal(cat, t.u);
  r.v_right_minimal = is_right_minimal(cat, t.v);
  if (!(r.u_left_approximation && r.v_right_approximation && r.w_in_gh_cogh)) return r;

  r.form3_blocks = t.Y.size() - minimize(cat, Approximation<F>{Side::left, t.X, t.u, false}).map.target.size();
  r.form2_blocks = t.Y.size() - minimize(cat, Approximation<F>{Side::right, t.Z, t.v, false}).map.source.size();
  const auto ob = objects_of(I);
  auto in_ob = [&](std::size_t x) { return std::find(ob.begin(), ob.end(), x) != ob.end(); };
  if (t.X.size() == 1 && t.Z.size() == 1 && !in_ob(t.X[0]) && !in_ob(t.Z[0]) && r.u_left_minimal && r.v_right_minimal)
    r.form = TriangleForm::nontrivial;
  else if (t.X.size() == 1 && t.Z.empty() && in_ob(t.X[0]) && is_isomorphism(cat, t.u))
    r.form = TriangleForm::trivial_identity_first;
  else if (t.X.empty() && t.Z.size() == 1 && in_ob(t.Z[0]) && is_isomorphism(cat, t.v))
    r.form = TriangleForm::trivial_identity_second;
  else
    r.form = TriangleForm::sum_of_forms;
  return r;
}

struct MultiplicityCheck {
  std::size_t object;
  std::size_t multiplicity;
  std::size_t irr_minus;  // Irr⁻(X, W)
  std::size_t irr_plus;   // Irr⁺(W, Z)
  bool ok() const { return multiplicity == irr_minus && multiplicity == irr_plus; }
};

struct MultiplicityReport {
  std::vector<MultiplicityCheck> checks;  // every indecomposable W
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const MultiplicityCheck& c) { return c.ok(); });
  }
};

/// For a non-trivial triangle, the multiplicity of each W in Y equals
/// dim Irr⁻(X,W) and dim Irr⁺(W,Z); W absent from Y must have both zero.
template <Field F>
MultiplicityReport verify_multiplicity(const IrrData<F>& irr, const Functor<F>& shift, const TriangleRecord<F>& t) {
  const auto rep = verify_mutation_triangle(irr.I, shift, t);
  if (rep.form != TriangleForm::nontrivial)
    throw Error("triangle '" + t.label + "' is not a verified non-trivial mutation triangle");
  MultiplicityReport out;
  for (std::size_t w = 0; w < irr.I.category().size(); ++w)
    out.checks.push_back({w, t.Y.multiplicity(w), irr.irr_minus(t.X[0], w), irr.irr_plus(w, t.Z[0])});
  return out;
}

template <Field F>
MultiplicityReport verify_multiplicity(const Ideal<F>& I, const Functor<F>& shift, const TriangleRecord<F>& t) {
  return verify_multiplicity(IrrData<F>(I), shift, t);
}

namespace detail {

template <Field F>
std::vector<const TriangleRecord<F>*> nontrivial_triangles(const Ideal<F>& I, const Functor<F>& shift,
                                                           const std::vector<TriangleRecord<F>>& ts) {
  std::vector<const TriangleRecord<F>*> out;
  for (const auto& t : ts)
    if (verify_mutation_triangle(I, shift, t).form == TriangleForm::nontrivial) out.push_back(&t);
  return out;
}

}  // namespace detail

/// τ_I(Z): first term of a verified non-trivial triangle ending at Z.
template <Field F>
std::optional<std::size_t> tau_of(const Ideal<F>& I, const Functor<F>& shift, std::size_t z,
                                  const std::vector<TriangleRecord<F>>& ts) {
  std::optional<std::size_t> found;
  for (const auto* t : detail::nontrivial_triangles(I, shift, ts)) {
    if (t->Z[0] != z) continue;
    if (found && *found != t->X[0])
      throw Error("conflicting triangles for tau_I(" + I.category().name(z) + ")");
    found = t->X[0];
  }
  return found;
}

/// Σ(M): third term of a verified non-trivial triangle starting at M.
template <Field F>
std::optional<std::size_t> sigma_object(const Ideal<F>& I, const Functor<F>& shift, std::size_t m,
                                        const std::vector<TriangleRecord<F>>& ts) {
  std::optional<std::size_t> found;
  for (const auto* t : detail::nontrivial_triangles(I, shift, ts)) {
    if (t->X[0] != m) continue;
    if (found && *found != t->Z[0]) throw Error("conflicting triangles for Sigma(" + I.category().name(m) + ")");
    found = t->Z[0];
  }
  return found;
}

// ---------------------------------------------------------------------------
// Valued mutation quiver.

struct ValuedArrow {
  std::size_t from;
  std::size_t to;
  std::size_t minus;
  std::size_t plus;
};

struct ValuedQuiver {
  std::vector<std::string> vertices;
  std::vector<ValuedArrow> arrows;
  std::vector<std::pair<std::size_t, std::size_t>> tau_pairs;  // (Z, τ_I Z)
};

/// Values (dim Irr⁻, dim Irr⁺); loops at objects of I lose the (1,1) that the
/// identity contributes through trivial triangles.
template <Field F>
ValuedQuiver mutation_quiver(const IrrData<F>& irr) {
  const auto& cat = irr.I.category();
  const auto ob = objects_of(irr.I);
  ValuedQuiver q;
  q.vertices = cat.object_names();
  for (std::size_t x = 0; x < cat.size(); ++x)
    for (std::size_t y = 0; y < cat.size(); ++y) {
      std::size_t dm = irr.irr_minus(x, y), dp = irr.irr_plus(x, y);
      if (x == y && std::find(ob.begin(), ob.end(), x) != ob.end()) {
        if (dm < 1 || dp < 1) throw Error("internal: identity of an object of I is not irreducible");
        --dm;
        --dp;
      }
      if (dm || dp) q.arrows.push_back({x, y, dm, dp});
    }
  return q;
}

template <Field F>
ValuedQuiver mutation_quiver(const Ideal<F>& I) {
  return mutation_quiver(IrrData<F>(I));
}

template <Field F>
void attach_tau_pairs(ValuedQuiver& q, const Ideal<F>& I, const Functor<F>& shift,
                      const std::vector<TriangleRecord<F>>& ts) {
  for (std::size_t z = 0; z < I.category().size(); ++z)
    if (auto x = tau_of(I, shift, z, ts)) q.tau_pairs.emplace_back(z, *x);
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string to_dot(const ValuedQuiver& q) {
  std::ostringstream out;
  out << "digraph mutation_quiver {\n";
  for (const auto& v : q.vertices) out << "  " << dot_quote(v) << ";\n";
  for (const auto& a : q.arrows)
    out << "  " << dot_quote(q.vertices[a.from]) << " -> " << dot_quote(q.vertices[a.to]) << " [label=\"(" << a.minus
        << "," << a.plus << ")\"];\n";
  for (const auto& [z, x] : q.tau_pairs)
    out << "  " << dot_quote(q.vertices[z]) << " -> " << dot_quote(q.vertices[x])
        << " [style=dashed, label=\"tau_I\", constraint=false];\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Factorization through sink maps.

struct FactorizationViolation {
  std::size_t source;
  std::size_t target;
  std::size_t missing_dim;
};

/// Iⁿ(x,z) ⊆ span{v_c ∘ I^{n-1}(x, E_c)} for v = sink_map(I, z), z ∉ Ob(I).
template <Field F>
std::vector<FactorizationViolation> verify_factorization(const Ideal<F>& I, std::size_t n) {
  if (n < 2) throw Error("factorization is checked for n >= 2");
  const auto& cat = I.category();
  const auto& K = cat.field();
  const auto In = power(I, n);
  const auto Iprev = power(I, n - 1);
  const auto ob = objects_of(I);
  std::vector<FactorizationViolation> out;
  for (std::size_t z = 0; z < cat.size(); ++z) {
    if (std::find(ob.begin(), ob.end(), z) != ob.end()) continue;
    const auto v = sink_map(I, Object::of(z));
    for (std::size_t x = 0; x < cat.size(); ++x) {
      std::vector<Vec<F>> gens;
      for (std::size_t c = 0; c < v.source.size(); ++c)
        for (const auto& g : Iprev(x, v.source[c]).basis()) gens.push_back(cat.compose(x, v.source[c], z, v.at(0, c), g));
      auto span = Subspace<F>::span(K, std::move(gens), cat.dim(x, z));
      if (!span.contains(K, In(x, z)))
        out.push_back({x, z, subspace_sum(K, span, In(x, z)).dim() - span.dim()});
    }
  }
  return out;
}

}  // namespace arideal
