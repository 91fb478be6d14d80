#pragma once

// Characteristic 2: Frobenius-semilinear endomorphisms of V, the squaring
// map on commutative structure vectors, and the twisted conjugation action.

#include "algdeg/report.hpp"
#include "algdeg/spinmx.hpp"

#include <utility>
#include <vector>

namespace algdeg {

// φ(v_j) = Σ_i φ_ij v_i; φ(Σ x_j v_j) = Σ x_j² φ(v_j).
using SemilinearMap = Matrix<FiniteField>;

void require_char2(const FiniteField& f);

// e_ij, 1-based.
SemilinearMap matrix_unit(const FiniteField& f, std::size_t n, std::size_t i, std::size_t j);

// Entrywise square.
Matrix<FiniteField> frobenius_twist(const Matrix<FiniteField>& g);

// v ↦ [v,v] for λ ∈ C.
SemilinearMap sigma(const StructureVector<FiniteField>& lam);

// g⁻¹ φ g^(2).
SemilinearMap star(const SemilinearMap& phi, const GroupElement<FiniteField>& g);

// eφf + fφe for off-diagonal units e = e_ab, f = e_cd with ef = fe = 0;
// the four-term sum over I, I+e, I+f, I+e+f is also computed and compared.
using UnitIndex = std::pair<std::size_t, std::size_t>;
SemilinearMap e_and_f(const SemilinearMap& phi, UnitIndex e, UnitIndex f);
SemilinearMap e_and_f_four_term(const SemilinearMap& phi, UnitIndex e, UnitIndex f);

// ΓV as an abstract module of dimension n² (row-major flattening).
LinearModule<FiniteField> gamma_module(const FiniteField& f, const GeneratorSet<FiniteField>& gens);
Row<FiniteField> flatten(const SemilinearMap& phi);
SemilinearMap unflatten(const FiniteField& f, std::size_t n, const Row<FiniteField>& v);

struct ReplayResult {
  bool ok = false;
  std::string path;  // "off-diagonal", "diagonal", "scalar"
  json steps = json::array();
};

// From a nonzero φ, extract e11 by the explicit moves, checking each
// intermediate matrix against its predicted value. |F| ≥ 4.
ReplayResult replay_extraction(const SemilinearMap& phi);

struct GammaReport {
  bool replay_ok = false;       // every replay case reached e11 and e11 spins to ΓV
  NortonResult norton;
  std::vector<ReplayResult> cases;
};

GammaReport verify_gamma_irreducible(std::size_t n, const FiniteField& f, std::uint64_t seed);

// Full claim set: G-map property, kernel and image of Σ, the α-identity,
// and irreducibility.
std::vector<Claim> semilinear_claims(std::size_t n, const FiniteField& f, std::uint64_t seed);

}  // namespace algdeg
