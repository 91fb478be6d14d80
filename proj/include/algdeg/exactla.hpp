#pragma once

// Dense exact linear algebra over a field type F (FiniteField or
// RationalField). Vectors are rows throughout.

#include "algdeg/gfield.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace algdeg {

template <class F>
using Row = std::vector<typename F::Elem>;

template <class F>
Row<F> zero_row(const F& field, std::size_t len) {
  return Row<F>(len, field.zero());
}

template <class F>
bool is_zero_row(const F& field, std::span<const typename F::Elem> v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return field.is_zero(x); });
}

template <class F>
Row<F> unit_row(const F& field, std::size_t len, std::size_t pos) {
  Row<F> r = zero_row(field, len);
  r[pos] = field.one();
  return r;
}

template <class F>
Row<F> add_rows(const F& field, const Row<F>& a, const Row<F>& b) {
  Row<F> r = a;
  field.axpy(r.data(), field.one(), b.data(), r.size());
  return r;
}

template <class F>
Row<F> sub_rows(const F& field, const Row<F>& a, const Row<F>& b) {
  Row<F> r = a;
  field.axpy(r.data(), field.neg(field.one()), b.data(), r.size());
  return r;
}

template <class F>
Row<F> scaled_row(const F& field, const typename F::Elem& c, Row<F> a) {
  field.scale(a.data(), c, a.size());
  return a;
}

template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() = default;
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Row<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw Error("row length mismatch");
      std::copy(rows[r].begin(), rows[r].end(), m.row_ptr(r));
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
  const Elem* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
  std::span<const Elem> row_span(std::size_t r) const { return {row_ptr(r), cols_}; }
  Row<F> row(std::size_t r) const { return Row<F>(row_ptr(r), row_ptr(r) + cols_); }
  std::vector<Row<F>> row_list() const {
    std::vector<Row<F>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!field_.eq((*this)(r, c), r == c ? field_.one() : field_.zero())) return false;
    return true;
  }

  bool is_zero() const { return is_zero_row(field_, std::span<const Elem>(data_)); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        a.field_.axpy(c.row_ptr(i), a(i, k), b.row_ptr(k), b.cols_);
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum shape mismatch");
    Matrix c = a;
    a.field_.axpy(c.data_.data(), a.field_.one(), b.data_.data(), c.data_.size());
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix difference shape mismatch");
    Matrix c = a;
    a.field_.axpy(c.data_.data(), a.field_.neg(a.field_.one()), b.data_.data(), c.data_.size());
    return c;
  }

  Matrix scaled(const Elem& s) const {
    Matrix c = *this;
    field_.scale(c.data_.data(), s, c.data_.size());
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.eq(a.data_[i], b.data_[i])) return false;
    return true;
  }

  // Row vector times matrix.
  Row<F> left_apply(std::span<const Elem> v) const {
    if (v.size() != rows_) throw Error("vector-matrix shape mismatch");
    Row<F> out = zero_row(field_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) field_.axpy(out.data(), v[r], row_ptr(r), cols_);
    return out;
  }

  // Matrix times column vector.
  Row<F> right_apply(std::span<const Elem> v) const {
    if (v.size() != cols_) throw Error("matrix-vector shape mismatch");
    Row<F> out = zero_row(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      Elem acc = field_.zero();
      for (std::size_t c = 0; c < cols_; ++c) acc = field_.add(acc, field_.mul((*this)(r, c), v[c]));
      out[r] = acc;
    }
    return out;
  }

 private:
  F field_{};
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

template <class F>
struct RrefResult {
  Matrix<F> reduced;  // nonzero rows only
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan with first-nonzero pivoting.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  const F& field = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && field.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    field.scale(m.row_ptr(r), field.inv(m(r, c)), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || field.is_zero(m(i, c))) continue;
      field.axpy(m.row_ptr(i), field.neg(m(i, c)), m.row_ptr(r), m.cols());
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<F> reduced(field, r, m.cols());
  for (std::size_t i = 0; i < r; ++i) std::copy(m.row_ptr(i), m.row_ptr(i) + m.cols(), reduced.row_ptr(i));
  return {std::move(reduced), r, std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const F& field = m.field();
  Matrix<F> aug(field, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(m.row_ptr(i), m.row_ptr(i) + n, aug.row_ptr(i));
    aug(i, n + i) = field.one();
  }
  auto res = rref(std::move(aug));
  if (res.rank < n || res.pivots[n - 1] != n - 1) throw Error("matrix is singular");
  Matrix<F> inv(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    std::copy(res.reduced.row_ptr(i) + n, res.reduced.row_ptr(i) + 2 * n, inv.row_ptr(i));
  return inv;
}

// Canonical subspace of F^d: basis rows in reduced row-echelon form.
template <class F>
class Subspace {
 public:
  using Elem = typename F::Elem;

  Subspace() = default;

  static Subspace zero(const F& field, std::size_t d) {
    Subspace s;
    s.field_ = field;
    s.ambient_ = d;
    s.basis_ = Matrix<F>(field, 0, d);
    return s;
  }

  static Subspace full(const F& field, std::size_t d) {
    return from_reduced(field, d, rref(Matrix<F>::identity(field, d)));
  }

  static Subspace span(const F& field, std::size_t d, const std::vector<Row<F>>& gens) {
    return from_reduced(field, d, rref(Matrix<F>::from_rows(field, d, gens)));
  }

  static Subspace row_space(const Matrix<F>& m) {
    return from_reduced(m.field(), m.cols(), rref(m));
  }

  const F& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Row<F>> basis_rows() const { return basis_.row_list(); }

  // v minus its projection onto the span along the non-pivot coordinates.
  Row<F> reduce(Row<F> v) const {
    check_len(v.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Elem c = v[pivots_[i]];
      if (!field_.is_zero(c)) field_.axpy(v.data(), field_.neg(c), basis_.row_ptr(i), ambient_);
    }
    return v;
  }

  bool contains(const Row<F>& v) const {
    return is_zero_row(field_, std::span<const Elem>(reduce(v)));
  }

  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  // Coordinates of v (assumed in the span) relative to the rref basis.
  Row<F> coordinates(const Row<F>& v) const {
    Row<F> c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  Row<F> combination(const Row<F>& coords) const { return basis_.left_apply(coords); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  void check_len(std::size_t len) const {
    if (len != ambient_)
      throw Error("vector of length " + std::to_string(len) + " in ambient dimension " +
                  std::to_string(ambient_));
  }

 private:
  static Subspace from_reduced(const F& field, std::size_t d, RrefResult<F> r) {
    Subspace s;
    s.field_ = field;
    s.ambient_ = d;
    s.basis_ = std::move(r.reduced);
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  F field_{};
  std::size_t ambient_ = 0;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

template <class F>
void check_compatible(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient() != b.ambient()) throw Error("ambient dimension mismatch");
  if (!(a.field() == b.field())) throw Error("field mismatch");
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
  check_compatible(a, b);
  auto rows = a.basis_rows();
  auto more = b.basis_rows();
  rows.insert(rows.end(), more.begin(), more.end());
  return Subspace<F>::span(a.field(), a.ambient(), rows);
}

// Zassenhaus: rref of [[A, A], [B, 0]]; rows with zero left half span A ∩ B.
template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b) {
  check_compatible(a, b);
  const F& field = a.field();
  const std::size_t d = a.ambient();
  Matrix<F> z(field, a.dim() + b.dim(), 2 * d);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::copy(a.basis().row_ptr(i), a.basis().row_ptr(i) + d, z.row_ptr(i));
    std::copy(a.basis().row_ptr(i), a.basis().row_ptr(i) + d, z.row_ptr(i) + d);
  }
  for (std::size_t i = 0; i < b.dim(); ++i)
    std::copy(b.basis().row_ptr(i), b.basis().row_ptr(i) + d, z.row_ptr(a.dim() + i));
  auto r = rref(std::move(z));
  std::vector<Row<F>> rows;
  for (std::size_t i = 0; i < r.rank; ++i)
    if (r.pivots[i] >= d) rows.emplace_back(r.reduced.row_ptr(i) + d, r.reduced.row_ptr(i) + 2 * d);
  return Subspace<F>::span(field, d, rows);
}

template <class F>
bool contains(const Subspace<F>& a, const Row<F>& v) {
  return a.contains(v);
}

template <class F>
bool equal(const Subspace<F>& a, const Subspace<F>& b) {
  return a == b;
}

// Right kernel {x : m x = 0}, returned as a subspace of row vectors.
template <class F>
Subspace<F> null_space(const Matrix<F>& m) {
  const F& field = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Row<F>> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Row<F> x = unit_row(field, m.cols(), free);
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = field.neg(r.reduced(i, free));
    gens.push_back(std::move(x));
  }
  return Subspace<F>::span(field, m.cols(), gens);
}

// Left kernel {x : x m = 0}.
template <class F>
Subspace<F> left_null_space(const Matrix<F>& m) {
  return null_space(m.transpose());
}

// Incrementally built semi-echelon basis; each stored row has a 1 at its
// pivot and zeros at the pivots of earlier rows.
template <class F>
class EchelonBuilder {
 public:
  using Elem = typename F::Elem;

  EchelonBuilder(F field, std::size_t d) : field_(std::move(field)), d_(d) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return d_; }

  void reduce_in_place(Row<F>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem c = v[pivots_[i]];
      if (!field_.is_zero(c)) field_.axpy(v.data(), field_.neg(c), rows_[i].data(), d_);
    }
  }

  bool contains(Row<F> v) const {
    reduce_in_place(v);
    return is_zero_row(field_, std::span<const Elem>(v));
  }

  // Returns true if v enlarged the span; the stored row is the normalized
  // remainder, available as last_row().
  bool insert(Row<F> v) {
    if (v.size() != d_) throw Error("echelon insert length mismatch");
    reduce_in_place(v);
    std::size_t p = 0;
    while (p < d_ && field_.is_zero(v[p])) ++p;
    if (p == d_) return false;
    field_.scale(v.data(), field_.inv(v[p]), d_);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  const Row<F>& last_row() const { return rows_.back(); }
  const std::vector<Row<F>>& rows() const { return rows_; }

  Subspace<F> to_subspace() const { return Subspace<F>::span(field_, d_, rows_); }

 private:
  F field_;
  std::size_t d_;
  std::vector<Row<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class F>
std::size_t quotient_dim(const Subspace<F>& a, const Subspace<F>& b) {
  check_compatible(a, b);
  if (!a.contains(b)) throw Error("quotient requires b to be contained in a");
  return a.dim() - b.dim();
}

// Rows of a's canonical basis that complete b's basis to a basis of a.
template <class F>
std::vector<Row<F>> coset_representatives(const Subspace<F>& a, const Subspace<F>& b) {
  check_compatible(a, b);
  if (!a.contains(b)) throw Error("coset representatives require b to be contained in a");
  EchelonBuilder<F> eb(a.field(), a.ambient());
  for (std::size_t i = 0; i < b.dim(); ++i) eb.insert(b.basis().row(i));
  std::vector<Row<F>> reps;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Row<F> v = a.basis().row(i);
    if (eb.insert(v)) reps.push_back(std::move(v));
  }
  return reps;
}

// Coordinates relative to an arbitrary list of independent rows, via the
// inverse of the basis restricted to its pivot columns.
template <class F>
class CoordinateMap {
 public:
  CoordinateMap(const F& field, std::size_t d, const std::vector<Row<F>>& basis)
      : field_(field), basis_(Matrix<F>::from_rows(field, d, basis)) {
    auto r = rref(basis_);
    if (r.rank != basis.size()) throw Error("coordinate basis is not independent");
    pivots_ = r.pivots;
    Matrix<F> sq(field, basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < pivots_.size(); ++j) sq(i, j) = basis_(i, pivots_[j]);
    pivot_inverse_ = inverse(sq);
  }

  std::size_t size() const { return pivots_.size(); }

  Row<F> coords(const Row<F>& v) const {
    Row<F> restricted(pivots_.size());
    for (std::size_t j = 0; j < pivots_.size(); ++j) restricted[j] = v[pivots_[j]];
    return pivot_inverse_.left_apply(restricted);
  }

  // Coordinates, verifying that v actually lies in the span.
  Row<F> coords_checked(const Row<F>& v) const {
    Row<F> c = coords(v);
    if (!(basis_.left_apply(c) == v)) throw Error("vector is not in the coordinate span");
    return c;
  }

  const Matrix<F>& basis() const { return basis_; }

 private:
  F field_;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
  Matrix<F> pivot_inverse_;
};

// Invertible n×n matrix with its cached inverse.
template <class F>
class GroupElement {
 public:
  GroupElement() = default;

  explicit GroupElement(Matrix<F> m) : mat_(std::move(m)), inv_(inverse(mat_)) {}

  GroupElement(Matrix<F> m, Matrix<F> inv) : mat_(std::move(m)), inv_(std::move(inv)) {
    if (!(mat_ * inv_).is_identity()) throw Error("group element inverse check failed");
  }

  static GroupElement identity(const F& field, std::size_t n) {
    auto id = Matrix<F>::identity(field, n);
    return GroupElement(id, id);
  }

  const Matrix<F>& mat() const { return mat_; }
  const Matrix<F>& inv() const { return inv_; }
  std::size_t n() const { return mat_.rows(); }
  const F& field() const { return mat_.field(); }

  GroupElement inverse_element() const { return GroupElement(inv_, mat_); }

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    GroupElement out;
    out.mat_ = g.mat_ * h.mat_;
    out.inv_ = h.inv_ * g.inv_;
    return out;
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.mat_ == b.mat_; }

 private:
  Matrix<F> mat_;
  Matrix<F> inv_;
};

}  // namespace algdeg
