#pragma once

// Canonical G-submodules of Λ: membership predicates from defining
// conditions and explicit subspaces from basis tables and intersections.

#include "algdeg/structvec.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace algdeg {

enum class SubmoduleId { Zero, C, K, Mstar, MstarP, Mstarstar, T, Ttilde, TcapTtilde, N, U, Lambda };

// Closed-form dimension; MstarP has dimension n.
inline long long expected_dim(SubmoduleId id, long long n) {
  const long long n2 = n * n, n3 = n2 * n;
  switch (id) {
    case SubmoduleId::Zero: return 0;
    case SubmoduleId::C: return (n3 + n2) / 2;
    case SubmoduleId::K: return (n3 - n2) / 2;
    case SubmoduleId::Mstar: return 2 * n;
    case SubmoduleId::MstarP: return n;
    case SubmoduleId::Mstarstar: return (n3 - n2) / 2 + n;
    case SubmoduleId::T: return n3 - n;
    case SubmoduleId::Ttilde: return n3 - n;
    case SubmoduleId::TcapTtilde: return n3 - 2 * n;
    case SubmoduleId::N: return (n3 + n2) / 2 - n;
    case SubmoduleId::U: return (n3 - n2) / 2 - n;
    case SubmoduleId::Lambda: return n3;
  }
  return -1;
}

inline std::string submodule_name(SubmoduleId id) {
  switch (id) {
    case SubmoduleId::Zero: return "0";
    case SubmoduleId::C: return "C";
    case SubmoduleId::K: return "K";
    case SubmoduleId::Mstar: return "Mstar";
    case SubmoduleId::MstarP: return "MstarP";
    case SubmoduleId::Mstarstar: return "Mstarstar";
    case SubmoduleId::T: return "T";
    case SubmoduleId::Ttilde: return "Ttilde";
    case SubmoduleId::TcapTtilde: return "TcapTtilde";
    case SubmoduleId::N: return "N";
    case SubmoduleId::U: return "U";
    case SubmoduleId::Lambda: return "Lambda";
  }
  return "?";
}

// Point of the projective line, first nonzero coordinate equal to 1.
template <class F>
struct ProjectivePoint {
  typename F::Elem a, d;

  static ProjectivePoint make(const F& f, typename F::Elem pa, typename F::Elem pd) {
    if (f.is_zero(pa) && f.is_zero(pd)) throw Error("projective point (0,0)");
    if (!f.is_zero(pa)) return {f.one(), f.div(pd, pa)};
    return {f.zero(), f.one()};
  }
  static ProjectivePoint from_ints(const F& f, long long pa, long long pd) {
    return make(f, f.from_int(pa), f.from_int(pd));
  }
  friend bool operator==(const ProjectivePoint& x, const ProjectivePoint& y) { return x.a == y.a && x.d == y.d; }
  std::string to_string(const F& f) const { return "(" + f.to_string(a) + "," + f.to_string(d) + ")"; }
};

// All q+1 points: (1,x) for x in enumeration order, then (0,1).
inline std::vector<ProjectivePoint<FiniteField>> projective_line(const FiniteField& f) {
  std::vector<ProjectivePoint<FiniteField>> pts;
  for (auto x : enumerate(f)) pts.push_back({f.one(), x});
  pts.push_back({f.zero(), f.one()});
  return pts;
}

// A linear condition Σ coeff·λ[index] = 0.
template <class F>
using Condition = std::vector<std::pair<std::size_t, typename F::Elem>>;

namespace detail {

template <class F>
bool conditions_hold(const StructureVector<F>& lam, const std::vector<Condition<F>>& conds) {
  const F& f = lam.field();
  for (const auto& c : conds) {
    auto acc = f.zero();
    for (const auto& [idx, coef] : c) acc = f.add(acc, f.mul(coef, lam.coords()[idx]));
    if (!f.is_zero(acc)) return false;
  }
  return true;
}

template <class F>
Subspace<F> conditions_subspace(const F& f, std::size_t n, const std::vector<Condition<F>>& conds) {
  const std::size_t d = n * n * n;
  Matrix<F> m(f, conds.size(), d);
  for (std::size_t r = 0; r < conds.size(); ++r)
    for (const auto& [idx, coef] : conds[r]) m(r, idx) = f.add(m(r, idx), coef);
  return null_space(m);
}

template <class F>
Subspace<F> span_of(const F& f, std::size_t n, const std::vector<StructureVector<F>>& vs) {
  std::vector<Row<F>> rows;
  rows.reserve(vs.size());
  for (const auto& v : vs) rows.push_back(v.coords());
  return Subspace<F>::span(f, n * n * n, rows);
}

inline void require_n(std::size_t n) {
  if (n < 3) throw Error("canonical submodules need n >= 3");
}

}  // namespace detail

// Defining conditions; letters in one condition are pairwise distinct.
template <class F>
std::vector<Condition<F>> conditions_C(const F& f, std::size_t n) {
  std::vector<Condition<F>> out;
  const auto one = f.one(), m1 = f.neg(f.one());
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      out.push_back({{flat_index(n, i, j, j), one}, {flat_index(n, j, i, j), m1}});
      for (std::size_t k = 1; k <= n; ++k)
        if (k != i && k != j) out.push_back({{flat_index(n, i, j, k), one}, {flat_index(n, j, i, k), m1}});
    }
  return out;
}

template <class F>
std::vector<Condition<F>> conditions_K(const F& f, std::size_t n) {
  std::vector<Condition<F>> out;
  const auto one = f.one();
  for (std::size_t i = 1; i <= n; ++i) {
    out.push_back({{flat_index(n, i, i, i), one}});
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      out.push_back({{flat_index(n, i, i, j), one}});
      out.push_back({{flat_index(n, i, j, i), one}, {flat_index(n, j, i, i), one}});
      for (std::size_t k = 1; k <= n; ++k)
        if (k != i && k != j) out.push_back({{flat_index(n, i, j, k), one}, {flat_index(n, j, i, k), one}});
    }
  }
  return out;
}

template <class F>
std::vector<Condition<F>> conditions_Mstar(const F& f, std::size_t n) {
  std::vector<Condition<F>> out;
  const auto one = f.one(), m1 = f.neg(f.one());
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      out.push_back({{flat_index(n, i, i, j), one}});
      out.push_back({{flat_index(n, i, i, i), one}, {flat_index(n, i, j, j), m1}, {flat_index(n, j, i, j), m1}});
      for (std::size_t k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        out.push_back({{flat_index(n, i, j, k), one}});
        out.push_back({{flat_index(n, i, j, j), one}, {flat_index(n, i, k, k), m1}});
        out.push_back({{flat_index(n, j, i, j), one}, {flat_index(n, k, i, k), m1}});
      }
    }
  return out;
}

template <class F>
std::vector<Condition<F>> conditions_Mstarstar(const F& f, std::size_t n) {
  std::vector<Condition<F>> out;
  const auto one = f.one(), m1 = f.neg(f.one());
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      out.push_back({{flat_index(n, i, i, j), one}});
      out.push_back({{flat_index(n, i, j, i), one}, {flat_index(n, j, i, i), one}, {flat_index(n, j, j, j), m1}});
      for (std::size_t k = 1; k <= n; ++k)
        if (k != i && k != j) out.push_back({{flat_index(n, i, j, k), one}, {flat_index(n, j, i, k), one}});
    }
  return out;
}

template <class F>
bool predicate_C(const StructureVector<F>& lam) {
  return detail::conditions_hold(lam, conditions_C(lam.field(), lam.n()));
}
template <class F>
bool predicate_K(const StructureVector<F>& lam) {
  return detail::conditions_hold(lam, conditions_K(lam.field(), lam.n()));
}
template <class F>
bool predicate_Mstar(const StructureVector<F>& lam) {
  return detail::conditions_hold(lam, conditions_Mstar(lam.field(), lam.n()));
}
template <class F>
bool predicate_Mstarstar(const StructureVector<F>& lam) {
  return detail::conditions_hold(lam, conditions_Mstarstar(lam.field(), lam.n()));
}
template <class F>
bool predicate_T(const StructureVector<F>& lam) {
  return is_zero_row(lam.field(), std::span<const typename F::Elem>(tr(lam)));
}
template <class F>
bool predicate_Ttilde(const StructureVector<F>& lam) {
  return is_zero_row(lam.field(), std::span<const typename F::Elem>(trace_form_op(lam)));
}
template <class F>
bool predicate_N(const StructureVector<F>& lam) {
  return predicate_C(lam) && predicate_T(lam);
}
template <class F>
bool predicate_U(const StructureVector<F>& lam) {
  return predicate_K(lam) && predicate_T(lam);
}

// Basis tables.
template <class F>
Subspace<F> basis_C(std::size_t n, const F& f) {
  detail::require_n(n);
  std::vector<StructureVector<F>> vs;
  using SV = StructureVector<F>;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back(SV::unit(f, n, i, i, i));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      vs.push_back(SV::unit(f, n, i, i, j));
      vs.push_back(SV::unit(f, n, i, j, i) + SV::unit(f, n, j, i, i));
    }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        if (k != i && k != j) vs.push_back(SV::unit(f, n, i, j, k) + SV::unit(f, n, j, i, k));
  return detail::span_of(f, n, vs);
}

template <class F>
Subspace<F> basis_K(std::size_t n, const F& f) {
  detail::require_n(n);
  std::vector<StructureVector<F>> vs;
  using SV = StructureVector<F>;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i != j) vs.push_back(SV::unit(f, n, i, j, i) - SV::unit(f, n, j, i, i));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        if (k != i && k != j) vs.push_back(SV::unit(f, n, i, j, k) - SV::unit(f, n, j, i, k));
  return detail::span_of(f, n, vs);
}

// μ_{α,δ}: [u,v] = α(v)u + δ(u)v.
template <class F>
StructureVector<F> mu_alpha_delta(const F& f, const Row<F>& alpha, const Row<F>& delta_fn) {
  const std::size_t n = alpha.size();
  if (delta_fn.size() != n) throw Error("covector pair size mismatch");
  StructureVector<F> s(f, n);
  for (std::size_t a = 1; a <= n; ++a) {
    if (!f.is_zero(alpha[a - 1])) s += epsilon(f, n, a).scaled(alpha[a - 1]);
    if (!f.is_zero(delta_fn[a - 1])) s += epsilon_tilde(f, n, a).scaled(delta_fn[a - 1]);
  }
  return s;
}

template <class F>
Subspace<F> basis_Mstar(std::size_t n, const F& f) {
  detail::require_n(n);
  std::vector<StructureVector<F>> vs;
  for (std::size_t a = 1; a <= n; ++a) {
    vs.push_back(epsilon(f, n, a));
    vs.push_back(epsilon_tilde(f, n, a));
  }
  return detail::span_of(f, n, vs);
}

template <class F>
Subspace<F> basis_MstarP(const ProjectivePoint<F>& p, std::size_t n, const F& f) {
  detail::require_n(n);
  std::vector<StructureVector<F>> vs;
  for (std::size_t a = 1; a <= n; ++a)
    vs.push_back(epsilon(f, n, a).scaled(p.a) + epsilon_tilde(f, n, a).scaled(p.d));
  return detail::span_of(f, n, vs);
}

// λ_iii = μ_i and λ_iji = μ_j for i ≠ j.
template <class F>
StructureVector<F> omega_preimage(const F& f, const Row<F>& mu) {
  const std::size_t n = mu.size();
  StructureVector<F> s(f, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) s.at(i, j, i) = mu[j - 1];
  return s;
}

template <class F>
Row<F> omega(const StructureVector<F>& lam) {
  if (!predicate_Mstarstar(lam)) throw Error("omega is defined on Mstarstar only");
  Row<F> out(lam.n());
  for (std::size_t i = 1; i <= lam.n(); ++i) out[i - 1] = lam.at(i, i, i);
  return out;
}

// M** from K plus the ω-preimages of the dual basis.
template <class F>
Subspace<F> basis_Mstarstar(std::size_t n, const F& f) {
  detail::require_n(n);
  auto rows = basis_K(n, f).basis_rows();
  for (std::size_t i = 1; i <= n; ++i) rows.push_back(omega_preimage(f, dual_unit(f, n, i)).coords());
  return Subspace<F>::span(f, n * n * n, rows);
}

template <class F>
Subspace<F> basis_T(std::size_t n, const F& f) {
  detail::require_n(n);
  return null_space(trace_matrix(f, n, false).transpose());
}

template <class F>
Subspace<F> basis_Ttilde(std::size_t n, const F& f) {
  detail::require_n(n);
  return null_space(trace_matrix(f, n, true).transpose());
}

template <class F>
Subspace<F> basis_TcapTtilde(std::size_t n, const F& f) {
  return subspace_intersect(basis_T(n, f), basis_Ttilde(n, f));
}

// N from its basis table: ijk+jik (i<j), iij, ijj+jij−iii.
template <class F>
Subspace<F> basis_N_table(std::size_t n, const F& f) {
  detail::require_n(n);
  using SV = StructureVector<F>;
  std::vector<SV> vs;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        if (k != i && k != j) vs.push_back(SV::unit(f, n, i, j, k) + SV::unit(f, n, j, i, k));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      vs.push_back(SV::unit(f, n, i, i, j));
      vs.push_back(SV::unit(f, n, i, j, j) + SV::unit(f, n, j, i, j) - SV::unit(f, n, i, i, i));
    }
  return detail::span_of(f, n, vs);
}

template <class F>
Subspace<F> basis_N(std::size_t n, const F& f) {
  return subspace_intersect(basis_C(n, f), basis_T(n, f));
}

template <class F>
Subspace<F> basis_U(std::size_t n, const F& f) {
  return subspace_intersect(basis_K(n, f), basis_T(n, f));
}

template <class F>
Subspace<F> canonical_subspace(SubmoduleId id, std::size_t n, const F& f,
                               std::optional<ProjectivePoint<F>> p = std::nullopt) {
  switch (id) {
    case SubmoduleId::Zero: return Subspace<F>::zero(f, n * n * n);
    case SubmoduleId::C: return basis_C(n, f);
    case SubmoduleId::K: return basis_K(n, f);
    case SubmoduleId::Mstar: return basis_Mstar(n, f);
    case SubmoduleId::MstarP:
      if (!p) throw Error("MstarP needs a projective point");
      return basis_MstarP(*p, n, f);
    case SubmoduleId::Mstarstar: return basis_Mstarstar(n, f);
    case SubmoduleId::T: return basis_T(n, f);
    case SubmoduleId::Ttilde: return basis_Ttilde(n, f);
    case SubmoduleId::TcapTtilde: return basis_TcapTtilde(n, f);
    case SubmoduleId::N: return basis_N(n, f);
    case SubmoduleId::U: return basis_U(n, f);
    case SubmoduleId::Lambda: return Subspace<F>::full(f, n * n * n);
  }
  throw Error("unknown submodule");
}

// Witness vector: λ_111 = 1, λ_212 = −1, λ_122 = 2, λ_1jj = 1 for j > 2.
template <class F>
StructureVector<F> trace_witness(const F& f, std::size_t n) {
  detail::require_n(n);
  StructureVector<F> s(f, n);
  s.at(1, 1, 1) = f.one();
  s.at(2, 1, 2) = f.neg(f.one());
  s.at(1, 2, 2) = f.from_int(2);
  for (std::size_t j = 3; j <= n; ++j) s.at(1, j, j) = f.one();
  return s;
}

}  // namespace algdeg
