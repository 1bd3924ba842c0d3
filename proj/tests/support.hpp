#pragma once
// Fixture loading and test-side oracles. The oracles here deliberately avoid
// the library's linear algebra: they do their own elimination over mpq_class.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arideal/bundle.hpp"
#include "arideal/ghost.hpp"
#include "arideal/mutation.hpp"

namespace testing_support {

using arideal::Bundle;
using arideal::Morphism;
using arideal::Rationals;

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline const Bundle<Rationals>& bundle(const std::string& name) {
  static std::map<std::string, Bundle<Rationals>> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, arideal::build_bundle(arideal::load_bundle_file(fixture(name + ".bundle")), Rationals{}))
             .first;
  return it->second;
}

inline const Bundle<Rationals>& lhat2() { return bundle("lhat2"); }
inline const Bundle<Rationals>& lhat3() { return bundle("lhat3"); }
inline const Bundle<Rationals>& clusterA4() { return bundle("clusterA4"); }

/// Morphism between indecomposables given by expression text.
inline Morphism<Rationals> mor(const Bundle<Rationals>& b, const std::string& text) {
  auto [s, t, v] = b.qc.evaluate(text);
  return arideal::morphism(b.cat(), s, t, v);
}

inline std::size_t obj(const Bundle<Rationals>& b, const std::string& name) { return b.cat().require(name); }

/// Span of expression texts inside hom(x, y), as a library subspace.
inline arideal::Subspace<Rationals> span_of(const Bundle<Rationals>& b, const std::vector<std::string>& texts,
                                            std::size_t x, std::size_t y) {
  std::vector<arideal::Vec<Rationals>> vs;
  for (const auto& t : texts) {
    auto [s, tt, v] = b.qc.evaluate(t);
    if (s != x || tt != y) throw arideal::Error("expression " + t + " has the wrong endpoints");
    vs.push_back(v);
  }
  return arideal::Subspace<Rationals>::span(Rationals{}, std::move(vs), b.cat().dim(x, y));
}

// ---------------------------------------------------------------------------
// Graded path-algebra oracle for quivers whose relations are homogeneous.

struct GradedQuiver {
  std::vector<std::string> vertices;
  struct Arrow {
    std::string name;
    int from, to;
  };
  std::vector<Arrow> arrows;
  // each relation: list of (coefficient, arrow indices in application order)
  std::vector<std::vector<std::pair<long, std::vector<int>>>> relations;

  int vertex(const std::string& v) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == v) return static_cast<int>(i);
    return -1;
  }
  int arrow(const std::string& a) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].name == a) return static_cast<int>(i);
    return -1;
  }
};

/// Rank of a rational matrix by plain Gaussian elimination.
inline std::size_t oracle_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

class GradedOracle {
 public:
  explicit GradedOracle(GradedQuiver q) : q_(std::move(q)) {}

  /// Paths of length d from x to y, arrows in application order.
  std::vector<std::vector<int>> paths(int x, int y, std::size_t d) const {
    std::vector<std::vector<int>> out, frontier{{}};
    std::vector<int> ends{x};
    for (std::size_t step = 0; step < d; ++step) {
      std::vector<std::vector<int>> nf;
      std::vector<int> ne;
      for (std::size_t k = 0; k < frontier.size(); ++k)
        for (std::size_t a = 0; a < q_.arrows.size(); ++a)
          if (q_.arrows[a].from == ends[k]) {
            auto p = frontier[k];
            p.push_back(static_cast<int>(a));
            nf.push_back(std::move(p));
            ne.push_back(q_.arrows[a].to);
          }
      frontier = std::move(nf);
      ends = std::move(ne);
    }
    for (std::size_t k = 0; k < frontier.size(); ++k)
      if (ends[k] == y) out.push_back(frontier[k]);
    return out;
  }

  /// Rows spanning the relation ideal in degree d between x and y.
  std::vector<std::vector<mpq_class>> relation_rows(int x, int y, std::size_t d,
                                                    const std::vector<std::vector<int>>& basis) const {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& rel : q_.relations) {
      const std::size_t rl = rel.front().second.size();
      if (rl > d) continue;
      const int rs = q_.arrows[rel.front().second.front()].from;
      const int rt = q_.arrows[rel.front().second.back()].to;
      for (std::size_t pre = 0; pre + rl <= d; ++pre) {
        const std::size_t post = d - rl - pre;
        for (const auto& p : paths(x, rs, pre))
          for (const auto& s : paths(rt, y, post)) {
            std::vector<mpq_class> row(basis.size(), 0);
            for (const auto& [c, w] : rel) {
              std::vector<int> full = p;
              full.insert(full.end(), w.begin(), w.end());
              full.insert(full.end(), s.begin(), s.end());
              row[index.at(full)] += c;
            }
            rows.push_back(std::move(row));
          }
      }
    }
    return rows;
  }

  std::size_t degree_dim(int x, int y, std::size_t d) const {
    auto basis = paths(x, y, d);
    if (basis.empty()) return 0;
    return basis.size() - oracle_rank(relation_rows(x, y, d, basis));
  }

  /// Total dimension of hom(x, y) in the graded quotient; stops once a whole
  /// degree vanishes, which forces every higher degree to vanish as well.
  std::size_t hom_dim(int x, int y, std::size_t max_degree = 40) const {
    std::size_t total = (x == y) ? 1 : 0;
    for (std::size_t d = 1; d <= max_degree; ++d) {
      bool any = false;
      for (int a = 0; a < static_cast<int>(q_.vertices.size()); ++a)
        for (int b = 0; b < static_cast<int>(q_.vertices.size()); ++b)
          if (degree_dim(a, b, d) != 0) any = true;
      if (!any) return total;
      total += degree_dim(x, y, d);
    }
    throw arideal::Error("graded oracle did not terminate");
  }

  /// Is the path (arrows named in application order) zero in the quotient?
  bool path_vanishes(const std::vector<std::string>& word) const {
    std::vector<int> w;
    for (const auto& a : word) w.push_back(q_.arrow(a));
    const int x = q_.arrows[w.front()].from, y = q_.arrows[w.back()].to;
    auto basis = paths(x, y, w.size());
    auto rows = relation_rows(x, y, w.size(), basis);
    const auto r = oracle_rank(rows);
    std::vector<mpq_class> e(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == w) e[i] = 1;
    rows.push_back(e);
    return oracle_rank(rows) == r;
  }

  const GradedQuiver& quiver() const { return q_; }

 private:
  GradedQuiver q_;
};

/// L̂₂ written out from its defining relations αβ = 0 and ε² + βα = 0.
inline GradedOracle lhat2_oracle() {
  GradedQuiver q;
  q.vertices = {"X", "Y"};
  q.arrows = {{"eps", 0, 0}, {"alpha", 0, 1}, {"beta", 1, 0}};
  // application order: αβ means β then α
  q.relations = {{{1, {2, 1}}}, {{1, {0, 0}}, {1, {1, 2}}}};
  return GradedOracle(q);
}

/// L̂₃ from ε² + βα = 0, αβ + δγ = 0, γδ = 0.
inline GradedOracle lhat3_oracle() {
  GradedQuiver q;
  q.vertices = {"X", "Y", "Z"};
  q.arrows = {{"eps", 0, 0}, {"alpha", 0, 1}, {"beta", 1, 0}, {"gamma", 1, 2}, {"delta", 2, 1}};
  q.relations = {{{1, {0, 0}}, {1, {1, 2}}}, {{1, {2, 1}}, {1, {3, 4}}}, {{1, {4, 3}}}};
  return GradedOracle(q);
}

// ---------------------------------------------------------------------------
// Mesh-category oracle for ZA_n and its orbit category under F.

/// dim Hom((c,r),(c2,r2)) in the mesh category of ZA_n: one when the target
/// lies in the rectangle spanned from the source, zero otherwise.
inline int za_hom(int n, int c, int r, int c2, int r2) {
  const int dc = c2 - c, dr = r2 - r;
  if ((dc + dr) % 2 != 0) return 0;
  const int a = (dc + dr) / 2, b = (dc - dr) / 2;
  return (a >= 0 && a <= n - r && b >= 0 && b <= r - 1) ? 1 : 0;
}

// Positions in ZA4 read off the displayed AR quiver: (column, row) with row 1
// at the bottom. The orbit category identifies (c, r) with (c + 7, 5 - r).
inline const std::map<std::string, std::pair<int, int>> kPosition{
    {"P4", {0, 1}},    {"S3", {2, 1}},  {"S2", {4, 1}},    {"S1", {6, 1}},    {"P1[1]", {8, 1}},
    {"P3", {1, 2}},    {"M23", {3, 2}}, {"I2", {5, 2}},    {"P2[1]", {7, 2}}, {"P2", {2, 3}},
    {"I3", {4, 3}},    {"P3[1]", {6, 3}}, {"P1", {3, 4}},  {"P4[1]", {5, 4}}};

inline std::pair<int, int> orbit_shift(std::pair<int, int> p, int k) {
  return {p.first + 7 * k, (k % 2 == 0) ? p.second : 5 - p.second};
}

inline int cluster_hom(const std::string& a, const std::string& b) {
  const auto pa = kPosition.at(a);
  int total = 0;
  for (int k = -4; k <= 4; ++k) {
    const auto pb = orbit_shift(kPosition.at(b), k);
    total += za_hom(4, pa.first, pa.second, pb.first, pb.second);
  }
  return total;
}

inline std::string object_at(std::pair<int, int> p) {
  for (int k = -4; k <= 4; ++k) {
    const auto q = orbit_shift(p, k);
    for (const auto& [name, pos] : kPosition)
      if (pos == q) return name;
  }
  throw arideal::Error("no object at that position");
}

}  // namespace testing_support
