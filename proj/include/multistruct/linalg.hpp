#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "multistruct/scalars.hpp"

namespace multistruct {

/// Dense row-major matrix over an exact field.
template <Field K>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const K& zero)
      : rows_(rows), cols_(cols), zero_(zero), a_(rows * cols, zero) {}

  static Matrix from_rows(const std::vector<std::vector<K>>& rows, const K& zero,
                          std::size_t cols) {
    Matrix m(rows.size(), cols, zero);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw AmbientMismatch();
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n, const K& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = zero.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const K& zero_element() const { return zero_; }

  K& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  K* row_ptr(std::size_t i) { return a_.data() + i * cols_; }
  const K* row_ptr(std::size_t i) const { return a_.data() + i * cols_; }

  std::vector<K> row(std::size_t i) const {
    return std::vector<K>(row_ptr(i), row_ptr(i) + cols_);
  }

  /// Matrix-vector product: v is a coordinate (column) vector of length cols.
  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw AmbientMismatch();
    std::vector<K> r(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      K acc = zero_;
      const K* rp = row_ptr(i);
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!v[j].is_zero() && !rp[j].is_zero()) acc += rp[j] * v[j];
      }
      r[i] = acc;
    }
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  K zero_;
  std::vector<K> a_;
};

namespace detail {

/// Growth control for exact rationals: clear denominators, strip the content.
/// A no-op for prime fields.  Multiplies the row by a nonzero scalar only, so
/// the row space is unchanged.
template <Field K>
inline void normalize_row(std::vector<K>&) {}

inline void normalize_row(std::vector<Rat>& row) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  Rat::BigInt den_lcm = 1, num_gcd = 0;
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    den_lcm = lcm(den_lcm, x.denominator());
  }
  if (den_lcm == 0) return;
  Rat scale(Rat::BigRat(den_lcm, 1));
  for (auto& x : row)
    if (!x.is_zero()) x *= scale;
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    num_gcd = gcd(num_gcd, x.numerator());
  }
  if (num_gcd > 1) {
    Rat div(Rat::BigRat(1, num_gcd));
    for (auto& x : row)
      if (!x.is_zero()) x *= div;
  }
}

template <Field K>
inline void normalize_row_span(K* p, std::size_t n) {
  std::vector<K> tmp(p, p + n);
  normalize_row(tmp);
  for (std::size_t i = 0; i < n; ++i) p[i] = tmp[i];
}

inline void normalize_row_span(Fp*, std::size_t) {}

}  // namespace detail

template <Field K>
struct RrefResult {
  Matrix<K> mat;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form.  Pivot choice is deterministic: columns scanned
/// left to right, the topmost unused row with a nonzero entry becomes the
/// pivot row.
template <Field K>
RrefResult<K> rref(Matrix<K> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < rows; ++i) detail::normalize_row_span(m.row_ptr(i), cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!m.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(sel, j));
    K inv = m.at(r, c).inverse();
    {
      K* rp = m.row_ptr(r);
      for (std::size_t j = c; j < cols; ++j)
        if (!rp[j].is_zero()) rp[j] *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      K f = m.at(i, c);
      if (f.is_zero()) continue;
      K* ri = m.row_ptr(i);
      const K* rr = m.row_ptr(r);
      for (std::size_t j = c; j < cols; ++j)
        if (!rr[j].is_zero()) ri[j] -= f * rr[j];
      if (i > r) detail::normalize_row_span(m.row_ptr(i), cols);
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult<K>{std::move(m), pivots.size(), std::move(pivots)};
}

/// Incremental reduced row-echelon span.  Rows are kept fully reduced with
/// unit pivots in increasing pivot order, so the basis is canonical at every
/// step.
template <Field K>
class RowReducer {
 public:
  RowReducer(std::size_t ambient, const K& zero) : ambient_(ambient), zero_(zero) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::vector<K>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the current rows in place; returns the residual pivot
  /// column, or ambient() if v reduced to zero.
  std::size_t reduce(std::vector<K>& v) const {
    if (v.size() != ambient_) throw AmbientMismatch();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const K& c = v[pivots_[i]];
      if (c.is_zero()) continue;
      K f = c;
      const std::vector<K>& r = rows_[i];
      for (std::size_t j = pivots_[i]; j < ambient_; ++j)
        if (!r[j].is_zero()) v[j] -= f * r[j];
    }
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!v[j].is_zero()) return j;
    return ambient_;
  }

  /// Inserts v into the span; returns true when the span grew.
  bool insert(std::vector<K> v) {
    detail::normalize_row(v);
    std::size_t p = reduce(v);
    if (p == ambient_) return false;
    K inv = v[p].inverse();
    for (std::size_t j = p; j < ambient_; ++j)
      if (!v[j].is_zero()) v[j] *= inv;
    // Clear column p in existing rows to keep the basis reduced.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      K f = rows_[i][p];
      if (f.is_zero()) continue;
      for (std::size_t j = p; j < ambient_; ++j)
        if (!v[j].is_zero()) rows_[i][j] -= f * v[j];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  bool contains(std::vector<K> v) const { return reduce(v) == ambient_; }

 private:
  std::size_t ambient_;
  K zero_;
  std::vector<std::vector<K>> rows_;
  std::vector<std::size_t> pivots_;
};

/// A linear subspace of k^n held by its canonical reduced row-echelon basis.
/// Equal subspaces compare equal entry by entry.
template <Field K>
class Subspace {
 public:
  static Subspace zero_space(std::size_t ambient, const K& zero) {
    return Subspace(ambient, zero, {}, {});
  }

  static Subspace full_space(std::size_t ambient, const K& zero) {
    std::vector<std::vector<K>> rows;
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < ambient; ++i) {
      std::vector<K> e(ambient, zero);
      e[i] = zero.one();
      rows.push_back(std::move(e));
      pivots.push_back(i);
    }
    return Subspace(ambient, zero, std::move(rows), std::move(pivots));
  }

  static Subspace span(std::size_t ambient, const std::vector<std::vector<K>>& vecs,
                       const K& zero) {
    RowReducer<K> red(ambient, zero);
    for (const auto& v : vecs) red.insert(v);
    return Subspace(ambient, zero, red.rows(), red.pivots());
  }

  static Subspace from_reducer(const RowReducer<K>& red, const K& zero) {
    return Subspace(red.ambient(), zero, red.rows(), red.pivots());
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const K& zero_element() const { return zero_; }
  const std::vector<std::vector<K>>& basis_rows() const { return rows_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  bool is_zero_space() const { return rows_.empty(); }
  bool is_full_space() const { return rows_.size() == ambient_; }

  bool contains(std::vector<K> v) const {
    if (v.size() != ambient_) throw AmbientMismatch();
    reduce_in_place(v);
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

  bool contains(const Subspace& o) const {
    check(o);
    for (const auto& r : o.rows_)
      if (!contains(r)) return false;
    return true;
  }

  bool operator==(const Subspace& o) const {
    check(o);
    if (rows_.size() != o.rows_.size() || pivots_ != o.pivots_) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!(rows_[i][j] == o.rows_[i][j])) return false;
    return true;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Coordinates of v in the RREF basis, or nullopt when v is outside.
  std::optional<std::vector<K>> coordinates(const std::vector<K>& v) const {
    if (v.size() != ambient_) throw AmbientMismatch();
    std::vector<K> coords;
    coords.reserve(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) coords.push_back(v[pivots_[i]]);
    std::vector<K> residual = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (coords[i].is_zero()) continue;
      for (std::size_t j = pivots_[i]; j < ambient_; ++j)
        if (!rows_[i][j].is_zero()) residual[j] -= coords[i] * rows_[i][j];
    }
    for (const auto& x : residual)
      if (!x.is_zero()) return std::nullopt;
    return coords;
  }

  /// Basis rows of this space that are independent modulo `sub`; they complete
  /// a basis of `sub` to one of this space.  Requires sub ⊆ this.
  std::vector<std::vector<K>> complete_basis(const Subspace& sub) const {
    check(sub);
    RowReducer<K> red(ambient_, zero_);
    for (const auto& r : sub.rows_) red.insert(r);
    std::vector<std::vector<K>> reps;
    for (const auto& r : rows_)
      if (red.insert(r)) reps.push_back(r);
    return reps;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    a.check(b);
    RowReducer<K> red(a.ambient_, a.zero_);
    for (const auto& r : a.rows_) red.insert(r);
    for (const auto& r : b.rows_) red.insert(r);
    return from_reducer(red, a.zero_);
  }

  /// Zassenhaus: row reduce [A|A; B|0]; rows whose left half vanished carry
  /// the intersection in the right half.
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check(b);
    const std::size_t n = a.ambient_;
    std::vector<std::vector<K>> stacked;
    stacked.reserve(a.dim() + b.dim());
    for (const auto& r : a.rows_) {
      std::vector<K> v(2 * n, a.zero_);
      for (std::size_t j = 0; j < n; ++j) v[j] = v[n + j] = r[j];
      stacked.push_back(std::move(v));
    }
    for (const auto& r : b.rows_) {
      std::vector<K> v(2 * n, a.zero_);
      for (std::size_t j = 0; j < n; ++j) v[j] = r[j];
      stacked.push_back(std::move(v));
    }
    RowReducer<K> red(2 * n, a.zero_);
    for (auto& v : stacked) red.insert(std::move(v));
    std::vector<std::vector<K>> inter;
    for (const auto& row : red.rows()) {
      bool left_zero = true;
      for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = row[j].is_zero();
      if (left_zero) inter.emplace_back(row.begin() + n, row.end());
    }
    return span(n, inter, a.zero_);
  }

 private:
  Subspace(std::size_t ambient, K zero, std::vector<std::vector<K>> rows,
           std::vector<std::size_t> pivots)
      : ambient_(ambient), zero_(std::move(zero)), rows_(std::move(rows)),
        pivots_(std::move(pivots)) {}

  void check(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw AmbientMismatch();
  }

  void reduce_in_place(std::vector<K>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const K c = v[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = pivots_[i]; j < ambient_; ++j)
        if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
    }
  }

  std::size_t ambient_;
  K zero_;
  std::vector<std::vector<K>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Null space of m, canonical basis.
template <Field K>
Subspace<K> kernel(const Matrix<K>& m) {
  const K zero = m.zero_element();
  RrefResult<K> R = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : R.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(cols, zero);
    v[f] = zero.one();
    for (std::size_t i = 0; i < R.pivot_cols.size(); ++i)
      v[R.pivot_cols[i]] = -R.mat.at(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace<K>::span(cols, basis, zero);
}

struct InducedMapRank {
  std::size_t rank;
  bool injective;
  bool surjective;
  std::size_t dom_dim;  // dim of the quotient domain
  std::size_t cod_dim;  // dim of the quotient codomain
};

/// Rank of the map (dom_sub/dom_mod) -> (cod_sub/cod_mod) induced by the
/// linear map f.  Throws NotWellDefined unless f maps dom_sub into cod_sub
/// and dom_mod into cod_mod.
template <Field K>
InducedMapRank induced_map_rank(const Matrix<K>& f, const Subspace<K>& dom_sub,
                                const Subspace<K>& dom_mod, const Subspace<K>& cod_sub,
                                const Subspace<K>& cod_mod) {
  if (f.cols() != dom_sub.ambient_dim() || f.rows() != cod_sub.ambient_dim())
    throw AmbientMismatch();
  if (!dom_sub.contains(dom_mod)) throw NotWellDefined("dom_mod not inside dom_sub");
  if (!cod_sub.contains(cod_mod)) throw NotWellDefined("cod_mod not inside cod_sub");
  for (const auto& b : dom_mod.basis_rows())
    if (!cod_mod.contains(f.apply(b))) throw NotWellDefined("f(dom_mod) not inside cod_mod");

  auto reps = dom_sub.complete_basis(dom_mod);
  RowReducer<K> red(cod_sub.ambient_dim(), cod_sub.zero_element());
  for (const auto& r : cod_mod.basis_rows()) red.insert(r);
  std::size_t rank = 0;
  for (const auto& r : reps) {
    auto img = f.apply(r);
    if (!cod_sub.contains(img)) throw NotWellDefined("f(dom_sub) not inside cod_sub");
    if (red.insert(std::move(img))) ++rank;
  }
  const std::size_t dom_dim = reps.size();
  const std::size_t cod_dim = cod_sub.dim() - cod_mod.dim();
  return InducedMapRank{rank, rank == dom_dim, rank == cod_dim, dom_dim, cod_dim};
}

}  // namespace multistruct
