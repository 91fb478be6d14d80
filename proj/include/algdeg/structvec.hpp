#pragma once

// Structure vectors of n-dimensional algebras: Λ = F^{n³} with the right
// GL(n)-action λ'_ijk = Σ g_ai g_bj g⁻¹_kc λ_abc, plus products, traces
// and the opposite map.

#include "algdeg/exactla.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace algdeg {

// 1-based (i,j,k) to 0-based storage offset.
inline std::size_t flat_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  return (i - 1) * n * n + (j - 1) * n + (k - 1);
}

template <class F>
class StructureVector {
 public:
  using Elem = typename F::Elem;

  StructureVector() = default;
  StructureVector(F field, std::size_t n) : field_(std::move(field)), n_(n), c_(n * n * n, field_.zero()) {
    if (n < 1) throw Error("structure vector dimension must be positive");
  }
  StructureVector(F field, std::size_t n, Row<F> coords)
      : field_(std::move(field)), n_(n), c_(std::move(coords)) {
    if (c_.size() != n * n * n) throw Error("structure vector needs n^3 coordinates");
  }

  static StructureVector unit(const F& field, std::size_t n, std::size_t a, std::size_t b, std::size_t c) {
    StructureVector s(field, n);
    s.at(a, b, c) = field.one();
    return s;
  }

  const F& field() const { return field_; }
  std::size_t n() const { return n_; }
  const Row<F>& coords() const { return c_; }
  Row<F>& coords() { return c_; }

  Elem& at(std::size_t i, std::size_t j, std::size_t k) { return c_[checked(i, j, k)]; }
  const Elem& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[checked(i, j, k)]; }

  bool is_zero() const { return is_zero_row(field_, std::span<const Elem>(c_)); }

  StructureVector& operator+=(const StructureVector& o) {
    check_same(o);
    field_.axpy(c_.data(), field_.one(), o.c_.data(), c_.size());
    return *this;
  }
  StructureVector& operator-=(const StructureVector& o) {
    check_same(o);
    field_.axpy(c_.data(), field_.neg(field_.one()), o.c_.data(), c_.size());
    return *this;
  }
  friend StructureVector operator+(StructureVector a, const StructureVector& b) { return a += b; }
  friend StructureVector operator-(StructureVector a, const StructureVector& b) { return a -= b; }
  StructureVector scaled(const Elem& s) const {
    StructureVector r = *this;
    field_.scale(r.c_.data(), s, r.c_.size());
    return r;
  }

  friend bool operator==(const StructureVector& a, const StructureVector& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.field_.eq(a.c_[i], b.c_[i])) return false;
    return true;
  }

  // Human-readable form such as "123 - 213" (coefficient 1 omitted).
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 1; i <= n_; ++i)
      for (std::size_t j = 1; j <= n_; ++j)
        for (std::size_t k = 1; k <= n_; ++k) {
          const Elem& c = at(i, j, k);
          if (field_.is_zero(c)) continue;
          std::string idx = std::to_string(i) + (n_ > 9 ? "," : "") + std::to_string(j) +
                            (n_ > 9 ? "," : "") + std::to_string(k);
          std::string coef = field_.eq(c, field_.one()) ? "" : field_.to_string(c) + "*";
          out += (out.empty() ? "" : " + ") + coef + idx;
        }
    return out.empty() ? "0" : out;
  }

 private:
  std::size_t checked(std::size_t i, std::size_t j, std::size_t k) const {
    if (i < 1 || j < 1 || k < 1 || i > n_ || j > n_ || k > n_)
      throw Error("index triple out of range");
    return flat_index(n_, i, j, k);
  }
  void check_same(const StructureVector& o) const {
    if (o.n_ != n_) throw Error("structure vector size mismatch");
  }

  F field_{};
  std::size_t n_ = 0;
  Row<F> c_;
};

template <class F>
void check_action_shape(const StructureVector<F>& lam, const GroupElement<F>& g) {
  if (g.n() != lam.n()) throw Error("group element size does not match structure vector");
  if (!(g.field() == lam.field())) throw Error("group element field does not match");
}

// Right action by three successive one-index contractions.
template <class F>
StructureVector<F> act(const StructureVector<F>& lam, const GroupElement<F>& g) {
  check_action_shape(lam, g);
  const F& f = lam.field();
  const std::size_t n = lam.n(), n2 = n * n;
  const auto& gm = g.mat();
  const auto& src = lam.coords();

  // A[i][b][c] = Σ_a g_ai λ_abc
  Row<F> a_buf = zero_row(f, n * n2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i) f.axpy(a_buf.data() + i * n2, gm(a, i), src.data() + a * n2, n2);

  // B[i][j][c] = Σ_b g_bj A[i][b][c]
  Row<F> b_buf = zero_row(f, n * n2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t j = 0; j < n; ++j)
        f.axpy(b_buf.data() + i * n2 + j * n, gm(b, j), a_buf.data() + i * n2 + b * n, n);

  // λ'[i][j][k] = Σ_c g⁻¹_kc B[i][j][c]
  const Matrix<F> inv_t = g.inv().transpose();
  Row<F> out = zero_row(f, n * n2);
  for (std::size_t ij = 0; ij < n2; ++ij)
    for (std::size_t c = 0; c < n; ++c) f.axpy(out.data() + ij * n, b_buf[ij * n + c], inv_t.row_ptr(c), n);
  return StructureVector<F>(f, n, std::move(out));
}

// Image of the basis vector abc: Σ g_ai g_bj g⁻¹_kc ijk.
template <class F>
StructureVector<F> act_on_basis(std::size_t a, std::size_t b, std::size_t c, const GroupElement<F>& g) {
  const std::size_t n = g.n();
  if (a < 1 || b < 1 || c < 1 || a > n || b > n || c > n) throw Error("basis index out of range");
  const F& f = g.field();
  StructureVector<F> out(f, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const auto gij = f.mul(g.mat()(a - 1, i - 1), g.mat()(b - 1, j - 1));
      if (f.is_zero(gij)) continue;
      for (std::size_t k = 1; k <= n; ++k) out.at(i, j, k) = f.mul(gij, g.inv()(k - 1, c - 1));
    }
  return out;
}

template <class F>
StructureVector<F> opposite(const StructureVector<F>& lam) {
  StructureVector<F> out(lam.field(), lam.n());
  const std::size_t n = lam.n();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k) out.at(i, j, k) = lam.at(j, i, k);
  return out;
}

// [u,v] with [v_i,v_j] = Σ_k λ_ijk v_k.
template <class F>
Row<F> product(const StructureVector<F>& lam, const Row<F>& u, const Row<F>& v) {
  const std::size_t n = lam.n();
  if (u.size() != n || v.size() != n) throw Error("vector size does not match structure vector");
  const F& f = lam.field();
  Row<F> out = zero_row(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_zero(u[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = f.mul(u[i], v[j]);
      if (!f.is_zero(c)) f.axpy(out.data(), c, lam.coords().data() + (i * n + j) * n, n);
    }
  }
  return out;
}

// Coordinates of g·u for a column vector u.
template <class F>
Row<F> apply_to_vector(const GroupElement<F>& g, const Row<F>& u) {
  return g.mat().right_apply(u);
}

// Right action on V̂: (φg)_j = Σ_i φ_i g_ij.
template <class F>
Row<F> apply_to_dual(const Row<F>& phi, const GroupElement<F>& g) {
  return g.mat().left_apply(phi);
}

template <class F>
typename F::Elem evaluate(const F& f, const Row<F>& phi, const Row<F>& u) {
  if (phi.size() != u.size()) throw Error("functional and vector size mismatch");
  typename F::Elem acc = f.zero();
  for (std::size_t i = 0; i < phi.size(); ++i) acc = f.add(acc, f.mul(phi[i], u[i]));
  return acc;
}

// tr(λ)_i = Σ_j λ_ijj
template <class F>
Row<F> tr(const StructureVector<F>& lam) {
  const F& f = lam.field();
  const std::size_t n = lam.n();
  Row<F> out = zero_row(f, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) out[i - 1] = f.add(out[i - 1], lam.at(i, j, j));
  return out;
}

template <class F>
typename F::Elem trace_form(const StructureVector<F>& lam, const Row<F>& u) {
  return evaluate(lam.field(), tr(lam), u);
}

// tr̃(λ)_i = Σ_j λ_jij
template <class F>
Row<F> trace_form_op(const StructureVector<F>& lam) {
  const F& f = lam.field();
  const std::size_t n = lam.n();
  Row<F> out = zero_row(f, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) out[i - 1] = f.add(out[i - 1], lam.at(j, i, j));
  return out;
}

template <class F>
Row<F> psi(const StructureVector<F>& lam) {
  return add_rows(lam.field(), tr(lam), trace_form_op(lam));
}

template <class F>
StructureVector<F> plus_tilde(const StructureVector<F>& lam) {
  return lam + opposite(lam);
}

// Matrices (n³ rows × n columns) of the linear maps tr, tr̃ and ψ, in the
// row convention λ ↦ λ·M.
template <class F>
Matrix<F> trace_matrix(const F& f, std::size_t n, bool opposite_trace) {
  Matrix<F> m(f, n * n * n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t row = opposite_trace ? flat_index(n, j, i, j) : flat_index(n, i, j, j);
      m(row, i - 1) = f.add(m(row, i - 1), f.one());
    }
  return m;
}

template <class F>
Matrix<F> psi_matrix(const F& f, std::size_t n) {
  return trace_matrix(f, n, false) + trace_matrix(f, n, true);
}

// Materialized action λ ↦ act(λ, g) as an n³×n³ matrix (row convention).
template <class F>
Matrix<F> materialize_action(const GroupElement<F>& g) {
  const std::size_t n = g.n(), d = n * n * n;
  Matrix<F> m(g.field(), d, d);
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b)
      for (std::size_t c = 1; c <= n; ++c) {
        const auto img = act_on_basis(a, b, c, g);
        std::copy(img.coords().begin(), img.coords().end(), m.row_ptr(flat_index(n, a, b, c)));
      }
  return m;
}

// Named vectors.
template <class F>
StructureVector<F> eta(const F& f, std::size_t n) {
  if (n < 3) throw Error("eta needs n >= 3");
  auto e = StructureVector<F>::unit(f, n, 1, 2, 3);
  e.at(2, 1, 3) = f.neg(f.one());
  return e;
}

template <class F>
StructureVector<F> delta(const F& f, std::size_t n) {
  return StructureVector<F>::unit(f, n, 1, 1, 2);
}

// ε_a = Σ_i iai
template <class F>
StructureVector<F> epsilon(const F& f, std::size_t n, std::size_t a) {
  StructureVector<F> s(f, n);
  for (std::size_t i = 1; i <= n; ++i) s.at(i, a, i) = f.add(s.at(i, a, i), f.one());
  return s;
}

// ε̃_a = Σ_j ajj
template <class F>
StructureVector<F> epsilon_tilde(const F& f, std::size_t n, std::size_t a) {
  StructureVector<F> s(f, n);
  for (std::size_t j = 1; j <= n; ++j) s.at(a, j, j) = f.add(s.at(a, j, j), f.one());
  return s;
}

template <class F>
Row<F> dual_unit(const F& f, std::size_t n, std::size_t i) {
  return unit_row(f, n, i - 1);
}

}  // namespace algdeg
