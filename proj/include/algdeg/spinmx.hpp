#pragma once

// FG-module machinery: generator sets for GL(n,q), spinning, quotient
// modules, Norton irreducibility, composition series, submodule surveys
// and Hom spaces.

#include "algdeg/structvec.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace algdeg {

enum class Provenance { StandardFinite, RationalSubgroup };

template <class F>
struct GeneratorSet {
  std::vector<GroupElement<F>> elements;
  Provenance provenance = Provenance::StandardFinite;

  std::size_t size() const { return elements.size(); }
  const GroupElement<F>& operator[](std::size_t k) const { return elements[k]; }
  // Rational generators only generate a subgroup; spins are lower bounds.
  bool subgroup_spin() const { return provenance == Provenance::RationalSubgroup; }
};

// I + c·e_ij (1-based).
template <class F>
Matrix<F> elementary(const F& f, std::size_t n, std::size_t i, std::size_t j, const typename F::Elem& c) {
  auto m = Matrix<F>::identity(f, n);
  m(i - 1, j - 1) = f.add(m(i - 1, j - 1), c);
  return m;
}

template <class F>
Matrix<F> diagonal_first(const F& f, std::size_t n, const typename F::Elem& c) {
  auto m = Matrix<F>::identity(f, n);
  m(0, 0) = c;
  return m;
}

// x_ij(1) for all i ≠ j, plus diag(ζ,1,…,1) with ζ primitive (omitted over
// GF(2), where the transvections already generate).
GeneratorSet<FiniteField> standard_generators(const FiniteField& f, std::size_t n);

// x_ij(±1), diag(2,1,…,1), diag(1/2,1,…,1).
GeneratorSet<RationalField> rational_generators(const RationalField& q, std::size_t n);

// Deterministic per-operation seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag);

// Worklist closure of span(seeds) under apply(v, k) for k < ngens.
template <class F, class Apply>
Subspace<F> spin_rows(const F& f, std::size_t d, const std::vector<Row<F>>& seeds, std::size_t ngens,
                      Apply&& apply) {
  EchelonBuilder<F> eb(f, d);
  std::vector<Row<F>> work;
  for (const auto& s : seeds)
    if (eb.insert(s)) work.push_back(eb.last_row());
  for (std::size_t next = 0; next < work.size() && eb.dim() < d; ++next) {
    for (std::size_t k = 0; k < ngens; ++k) {
      Row<F> w = apply(work[next], k);
      if (eb.insert(std::move(w))) work.push_back(eb.last_row());
    }
  }
  return eb.to_subspace();
}

namespace detail {
template <class F>
void check_generators(const GeneratorSet<F>& gens, std::size_t n) {
  if constexpr (std::is_same_v<F, RationalField>) {
    if (gens.provenance == Provenance::StandardFinite)
      throw Error("rational spins need the rational-subgroup generator set");
  }
  for (const auto& g : gens.elements)
    if (g.n() != n) throw Error("generator size does not match n");
}
}  // namespace detail

// Smallest generator-stable subspace of Λ containing λ.
template <class F>
Subspace<F> spin(const StructureVector<F>& lam, const GeneratorSet<F>& gens) {
  detail::check_generators(gens, lam.n());
  const auto& f = lam.field();
  const std::size_t n = lam.n();
  return spin_rows(f, n * n * n, {lam.coords()}, gens.size(),
                   [&](const Row<F>& v, std::size_t k) { return act(StructureVector<F>(f, n, v), gens[k]).coords(); });
}

template <class F>
Subspace<F> close_subspace(const Subspace<F>& s, std::size_t n, const GeneratorSet<F>& gens) {
  detail::check_generators(gens, n);
  if (s.ambient() != n * n * n) throw Error("subspace is not in Λ");
  const auto& f = s.field();
  return spin_rows(f, s.ambient(), s.basis_rows(), gens.size(),
                   [&](const Row<F>& v, std::size_t k) { return act(StructureVector<F>(f, n, v), gens[k]).coords(); });
}

template <class F>
bool is_stable(const Subspace<F>& s, std::size_t n, const GeneratorSet<F>& gens) {
  const auto& f = s.field();
  for (const auto& b : s.basis_rows())
    for (const auto& g : gens.elements)
      if (!s.contains(act(StructureVector<F>(f, n, b), g).coords())) return false;
  return true;
}

// Abstract module: F^m with v ↦ v·A_k.
template <class F>
struct LinearModule {
  F field;
  std::size_t dim = 0;
  std::vector<Matrix<F>> actions;

  Row<F> apply(const Row<F>& v, std::size_t k) const { return actions[k].left_apply(v); }

  Subspace<F> spin(const std::vector<Row<F>>& seeds) const {
    return spin_rows(field, dim, seeds, actions.size(), [&](const Row<F>& v, std::size_t k) { return apply(v, k); });
  }

  // Dual module: functionals w ↦ A_k w.
  LinearModule dual() const {
    LinearModule d{field, dim, {}};
    for (const auto& a : actions) d.actions.push_back(a.transpose());
    return d;
  }

  bool is_submodule(const Subspace<F>& s) const {
    for (const auto& b : s.basis_rows())
      for (std::size_t k = 0; k < actions.size(); ++k)
        if (!s.contains(apply(b, k))) return false;
    return true;
  }
};

// Quotient carrier/sub of a G-stable pair inside an ambient F^d, with the
// induced action on coordinates of the coset representatives.
template <class F>
class ModuleHandle {
 public:
  template <class Act>
  ModuleHandle(const Subspace<F>& carrier, const Subspace<F>& sub, std::size_t ngens, Act&& act)
      : carrier_(carrier), sub_(sub), reps_(coset_representatives(carrier, sub)),
        coord_(carrier.field(), carrier.ambient(), basis_rows_of(sub, reps_)) {
    const auto& f = carrier.field();
    const std::size_t m = reps_.size(), s = sub.dim();
    module_ = LinearModule<F>{f, m, {}};
    for (std::size_t k = 0; k < ngens; ++k) {
      for (const auto& b : sub.basis_rows())
        if (!sub.contains(act(b, k))) throw Error("submodule is not stable under the generators");
      Matrix<F> a(f, m, m);
      for (std::size_t i = 0; i < m; ++i) {
        const Row<F> c = coord_.coords_checked(act(reps_[i], k));
        for (std::size_t j = 0; j < m; ++j) a(i, j) = c[s + j];
      }
      module_.actions.push_back(std::move(a));
    }
  }

  const LinearModule<F>& module() const { return module_; }
  std::size_t dim() const { return module_.dim; }
  const Subspace<F>& carrier() const { return carrier_; }
  const Subspace<F>& sub() const { return sub_; }

  Row<F> quotient_coords(const Row<F>& v) const {
    const Row<F> c = coord_.coords_checked(v);
    return Row<F>(c.begin() + static_cast<std::ptrdiff_t>(sub_.dim()), c.end());
  }

  Row<F> lift(const Row<F>& coords) const {
    Row<F> out = zero_row(carrier_.field(), carrier_.ambient());
    for (std::size_t i = 0; i < coords.size(); ++i)
      carrier_.field().axpy(out.data(), coords[i], reps_[i].data(), out.size());
    return out;
  }

  // Full preimage in the ambient space of a subspace of the quotient.
  Subspace<F> pullback(const Subspace<F>& q) const {
    std::vector<Row<F>> rows = sub_.basis_rows();
    for (const auto& r : q.basis_rows()) rows.push_back(lift(r));
    return Subspace<F>::span(carrier_.field(), carrier_.ambient(), rows);
  }

  // Image in the quotient of an ambient subspace of the carrier.
  Subspace<F> pushforward(const Subspace<F>& s) const {
    std::vector<Row<F>> rows;
    for (const auto& r : s.basis_rows()) rows.push_back(quotient_coords(r));
    return Subspace<F>::span(carrier_.field(), dim(), rows);
  }

 private:
  static std::vector<Row<F>> basis_rows_of(const Subspace<F>& sub, const std::vector<Row<F>>& reps) {
    auto rows = sub.basis_rows();
    rows.insert(rows.end(), reps.begin(), reps.end());
    return rows;
  }

  Subspace<F> carrier_, sub_;
  std::vector<Row<F>> reps_;
  CoordinateMap<F> coord_;
  LinearModule<F> module_;
};

// carrier/sub inside Λ under the structure-vector action.
template <class F>
ModuleHandle<F> lambda_module(std::size_t n, const GeneratorSet<F>& gens, const Subspace<F>& carrier,
                              const Subspace<F>& sub) {
  detail::check_generators(gens, n);
  const auto& f = carrier.field();
  return ModuleHandle<F>(carrier, sub, gens.size(), [&](const Row<F>& v, std::size_t k) {
    return act(StructureVector<F>(f, n, v), gens[k]).coords();
  });
}

// V̂ with φ ↦ φg.
template <class F>
LinearModule<F> dual_space_module(const F& f, const GeneratorSet<F>& gens) {
  const std::size_t n = gens.elements.at(0).n();
  return LinearModule<F>{f, n, [&] {
                           std::vector<Matrix<F>> a;
                           for (const auto& g : gens.elements) a.push_back(g.mat());
                           return a;
                         }()};
}

// V with u ↦ gu, written in row form u ↦ u·gᵀ.
template <class F>
LinearModule<F> natural_module(const F& f, const GeneratorSet<F>& gens) {
  const std::size_t n = gens.elements.at(0).n();
  LinearModule<F> m{f, n, {}};
  for (const auto& g : gens.elements) m.actions.push_back(g.mat().transpose());
  return m;
}

// Hom_G(A, B) as a space of flattened m_A×m_B matrices X with A_k X = X B_k.
template <class F>
Subspace<F> hom_space(const LinearModule<F>& a, const LinearModule<F>& b) {
  if (a.actions.size() != b.actions.size()) throw Error("modules use different generator counts");
  const auto& f = a.field;
  const std::size_t r = a.dim, c = b.dim, d = r * c;
  std::vector<Row<F>> sol;
  for (std::size_t i = 0; i < d; ++i) sol.push_back(unit_row(f, d, i));
  for (std::size_t k = 0; k < a.actions.size() && !sol.empty(); ++k) {
    Matrix<F> images(f, sol.size(), d);
    for (std::size_t t = 0; t < sol.size(); ++t) {
      const auto x = Matrix<F>::from_rows(f, c, [&] {
        std::vector<Row<F>> rows;
        for (std::size_t i = 0; i < r; ++i)
          rows.emplace_back(sol[t].begin() + static_cast<std::ptrdiff_t>(i * c),
                            sol[t].begin() + static_cast<std::ptrdiff_t>((i + 1) * c));
        return rows;
      }());
      const auto y = a.actions[k] * x - x * b.actions[k];
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) images(t, j + i * c) = y(i, j);
    }
    // combinations Σ c_t images_t = 0
    const auto rel = null_space(images.transpose());
    std::vector<Row<F>> next;
    for (const auto& coeffs : rel.basis_rows()) {
      Row<F> x = zero_row(f, d);
      for (std::size_t t = 0; t < sol.size(); ++t) f.axpy(x.data(), coeffs[t], sol[t].data(), d);
      next.push_back(std::move(x));
    }
    sol = std::move(next);
  }
  return Subspace<F>::span(f, d, sol);
}

// ---- finite-field only ----

enum class Verdict { Irreducible, Reducible, Inconclusive };
std::string verdict_name(Verdict v);

struct NortonResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Subspace<FiniteField>> witness;  // proper nonzero submodule when reducible
  std::size_t attempts = 0;
  std::string method;  // "trivial", "norton", "exhaustive", "bounds"
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

NortonResult norton_irreducible(const LinearModule<FiniteField>& m, std::uint64_t seed,
                                std::uint64_t budget = kDefaultBudget);

// Number of scalar lines (q^m − 1)/(q − 1), saturating; and q^m, saturating.
std::uint64_t line_count(int q, std::size_t m);
std::uint64_t vector_count(int q, std::size_t m);
// Representative of line idx with first nonzero coordinate 1.
Row<FiniteField> line_vector(const FiniteField& f, std::size_t m, std::uint64_t idx);

struct SurveyResult {
  std::vector<Subspace<FiniteField>> lattice;  // sorted by dimension, then basis
  std::uint64_t lines = 0;
  std::size_t cyclic = 0;  // distinct cyclic submodules found before closure
};

// All submodules of m: spins of every line, closed under sums and
// intersections. workers = 0 runs the serial reference loop.
SurveyResult survey_submodules(const LinearModule<FiniteField>& m, std::uint64_t budget = kDefaultBudget,
                               int workers = 0);

struct FactorReport {
  std::string lower, upper;
  std::size_t dim = 0;
  NortonResult verdict;
};

struct SeriesReport {
  std::vector<FactorReport> factors;
  bool certified = false;   // every factor irreducible
  bool conclusive = false;  // no inconclusive factor
};

// Factor-by-factor irreducibility of a chain of G-stable subspaces of Λ.
SeriesReport composition_series(const std::vector<std::pair<std::string, Subspace<FiniteField>>>& chain,
                                std::size_t n, const GeneratorSet<FiniteField>& gens, std::uint64_t seed);

}  // namespace algdeg
