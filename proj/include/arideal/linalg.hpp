#pragma once
// Dense exact linear algebra: RREF-canonical subspaces, kernels, solving.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arideal/field.hpp"

namespace arideal {

template <Field F>
using Vec = std::vector<typename F::value_type>;

template <Field F>
Vec<F> zero_vec(const F& field, std::size_t n) {
  return Vec<F>(n, field.zero());
}

template <Field F>
Vec<F> unit_vec(const F& field, std::size_t n, std::size_t k) {
  Vec<F> v = zero_vec(field, n);
  v[k] = field.one();
  return v;
}

template <Field F>
bool is_zero_vec(const F& field, const Vec<F>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return field.is_zero(x); });
}

/// y += c * x
template <Field F>
void axpy(const F& field, Vec<F>& y, const typename F::value_type& c, const Vec<F>& x) {
  if (field.is_zero(c)) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!field.is_zero(x[i])) y[i] = field.add(y[i], field.mul(c, x[i]));
}

template <Field F>
Vec<F> scaled(const F& field, const typename F::value_type& c, Vec<F> v) {
  for (auto& x : v) x = field.mul(c, x);
  return v;
}

/// Dense row-major matrix.
template <Field F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const value_type& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix zero(const F& field, std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, field.zero());
  }
  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(n, n, field.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }
  /// Columns given as vectors of length `rows`.
  static Matrix from_columns(const F& field, const std::vector<Vec<F>>& columns, std::size_t rows) {
    Matrix m(rows, columns.size(), field.zero());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) throw Error("matrix column has wrong length");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }
  static Matrix from_rows(const F& field, const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols, field.zero());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw Error("matrix row has wrong length");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<F> row(std::size_t r) const {
    return Vec<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  Vec<F> column(std::size_t c) const {
    Vec<F> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }
  std::vector<Vec<F>> row_list() const {
    std::vector<Vec<F>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

template <Field F>
Vec<F> apply(const F& field, const Matrix<F>& m, const Vec<F>& v) {
  if (v.size() != m.cols()) throw Error("dimension mismatch in matrix-vector product");
  Vec<F> out = zero_vec(field, m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (field.is_zero(v[c])) continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!field.is_zero(m(r, c))) out[r] = field.add(out[r], field.mul(m(r, c), v[c]));
  }
  return out;
}

template <Field F>
Matrix<F> multiply(const F& field, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw Error("dimension mismatch in matrix product");
  Matrix<F> out = Matrix<F>::zero(field, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (field.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!field.is_zero(b(k, j))) out(i, j) = field.add(out(i, j), field.mul(a(i, k), b(k, j)));
    }
  return out;
}

/// Gauss-Jordan elimination in place. Zero rows are dropped; the survivors are
/// in reduced row-echelon form. Returns the pivot column of each row.
template <Field F>
std::vector<std::size_t> rref(const F& field, std::vector<Vec<F>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && field.is_zero(rows[sel][c])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const auto inv = field.inv(rows[r][c]);
    for (auto& x : rows[r]) x = field.mul(inv, x);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || field.is_zero(rows[i][c])) continue;
      const auto factor = field.neg(rows[i][c]);
      axpy(field, rows[i], factor, rows[r]);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// A subspace of K^n stored by its unique RREF basis, so equality of
/// subspaces is equality of the stored rows.
template <Field F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  /// canonicalize: RREF basis of span(vectors).
  static Subspace span(const F& field, std::vector<Vec<F>> vectors, std::size_t ambient) {
    for (const auto& v : vectors)
      if (v.size() != ambient)
        throw Error("vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                    std::to_string(ambient));
    Subspace s(ambient);
    s.pivots_ = rref(field, vectors, ambient);
    s.basis_ = std::move(vectors);
    return s;
  }
  static Subspace full(const F& field, std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
      s.basis_.push_back(unit_vec(field, ambient, i));
      s.pivots_.push_back(i);
    }
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec<F>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// The residue of v after clearing every pivot coordinate.
  Vec<F> reduce(const F& field, Vec<F> v) const {
    if (v.size() != ambient_) throw Error("vector length does not match ambient dimension");
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const auto c = v[pivots_[k]];
      if (!field.is_zero(c)) axpy(field, v, field.neg(c), basis_[k]);
    }
    return v;
  }

  bool contains(const F& field, const Vec<F>& v) const { return is_zero_vec(field, reduce(field, v)); }

  bool contains(const F& field, const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error("ambient dimension mismatch");
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const Vec<F>& v) { return contains(field, v); });
  }

  /// Coordinates of v in the stored basis; v must lie in the subspace.
  std::optional<Vec<F>> coordinates(const F& field, const Vec<F>& v) const {
    if (!contains(field, v)) return std::nullopt;
    Vec<F> c;
    c.reserve(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) c.push_back(v[pivots_[k]]);
    return c;
  }

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec<F>> basis_;
  std::vector<std::size_t> pivots_;
};

template <Field F>
std::size_t rank(const F& field, const Matrix<F>& m) {
  auto rows = m.row_list();
  return rref(field, rows, m.cols()).size();
}

/// Null space {v : m v = 0}, canonical.
template <Field F>
Subspace<F> kernel(const F& field, const Matrix<F>& m) {
  auto rows = m.row_list();
  const auto pivots = rref(field, rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<F>> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v = unit_vec(field, m.cols(), free);
    for (std::size_t k = 0; k < rows.size(); ++k) v[pivots[k]] = field.neg(rows[k][free]);
    gens.push_back(std::move(v));
  }
  return Subspace<F>::span(field, std::move(gens), m.cols());
}

/// Some x with m x = target, or nullopt when the system is inconsistent.
template <Field F>
std::optional<Vec<F>> solve(const F& field, const Matrix<F>& m, const Vec<F>& target) {
  if (target.size() != m.rows()) throw Error("right-hand side length does not match matrix rows");
  std::vector<Vec<F>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vec<F> row = m.row(r);
    row.push_back(target[r]);
    rows.push_back(std::move(row));
  }
  const auto pivots = rref(field, rows, m.cols() + 1);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec<F> x = zero_vec(field, m.cols());
  for (std::size_t k = 0; k < rows.size(); ++k) x[pivots[k]] = rows[k][m.cols()];
  return x;
}

template <Field F>
std::optional<Matrix<F>> inverse(const F& field, const Matrix<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<Vec<F>> rows;
  for (std::size_t r = 0; r < n; ++r) {
    Vec<F> row = m.row(r);
    for (std::size_t c = 0; c < n; ++c) row.push_back(r == c ? field.one() : field.zero());
    rows.push_back(std::move(row));
  }
  const auto pivots = rref(field, rows, 2 * n);
  if (rows.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix<F> out = Matrix<F>::zero(field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = rows[r][n + c];
  return out;
}

template <Field F>
Subspace<F> subspace_sum(const F& field, const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("ambient dimension mismatch");
  auto gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace<F>::span(field, std::move(gens), a.ambient_dim());
}

/// a ∩ b through the kernel of [A | -B].
template <Field F>
Subspace<F> subspace_intersect(const F& field, const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  std::vector<Vec<F>> cols = a.basis();
  for (const auto& v : b.basis()) cols.push_back(scaled(field, field.neg(field.one()), v));
  const auto ker = kernel(field, Matrix<F>::from_columns(field, cols, n));
  std::vector<Vec<F>> gens;
  for (const auto& k : ker.basis()) {
    Vec<F> v = zero_vec(field, n);
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(field, v, k[i], a.basis()[i]);
    gens.push_back(std::move(v));
  }
  return Subspace<F>::span(field, std::move(gens), n);
}

/// Image of a subspace under a linear map.
template <Field F>
Subspace<F> image(const F& field, const Matrix<F>& m, const Subspace<F>& s) {
  std::vector<Vec<F>> gens;
  for (const auto& v : s.basis()) gens.push_back(apply(field, m, v));
  return Subspace<F>::span(field, std::move(gens), m.rows());
}

}  // namespace arideal
