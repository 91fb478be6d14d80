#pragma once

// Linear degenerations: coordinate truncation by integer weights and the
// transvection pipeline reaching η and δ.

#include "algdeg/report.hpp"
#include "algdeg/spinmx.hpp"

#include <optional>
#include <string>
#include <vector>

namespace algdeg {

using FF = FiniteField;
using SVF = StructureVector<FiniteField>;
using QSequence = std::vector<long long>;

// Keep λ_ijk where q_i + q_j − q_k = 0.
SVF q_truncate(const SVF& lam, const QSequence& q);

struct LindegCheck {
  bool applicable = false;
  bool vanishing = false;  // λ_ijk = 0 wherever the weight is negative
  long long max_weight = 0;
};

LindegCheck lindeg_hypothesis_check(const SVF& lam, const QSequence& q, const FiniteField& f);

// q_truncate(λ, q) ∈ spin(λ).
bool verify_lindeg(const SVF& lam, const QSequence& q, const GeneratorSet<FF>& gens);

struct TransvectionSpec {
  Row<FF> z;
  Row<FF> zeta;
  FF::Elem alpha = 0;
};

void validate(const FiniteField& f, const TransvectionSpec& s);

// v ↦ v + t·ζ(v)z as a group element.
GroupElement<FF> transvection(const FiniteField& f, const Row<FF>& z, const Row<FF>& zeta, FF::Elem t);

// Difference-and-scale chain from λ through λg_1, λg_α.
SVF transvection_pipeline(const SVF& lam, const TransvectionSpec& s);
// Coordinatewise bracket formula for the same vector.
SVF transvection_closed_form(const SVF& lam, const TransvectionSpec& s);
// Pipeline, cross-checked against the closed form.
SVF transvection_g5(const SVF& lam, const TransvectionSpec& s);
// (g5(α′) − g5(α)) / (α′ − α), and its closed form ζ(u)ζ(v)ζ([z,z])z.
SVF transvection_g6(const SVF& lam, const Row<FF>& z, const Row<FF>& zeta, FF::Elem alpha, FF::Elem alpha2);
SVF transvection_g6_closed_form(const SVF& lam, const Row<FF>& z, const Row<FF>& zeta);

// α: primitive element for |F| > 3, 2 over GF(3). α′: least element
// outside {0, 1, α} in enumeration order (|F| > 3 only).
FF::Elem default_alpha(const FiniteField& f);
FF::Elem second_alpha(const FiniteField& f, FF::Elem alpha);

// Some x with rows·x = rhs (free variables zero).
std::optional<Row<FF>> solve_particular(const FiniteField& f, const std::vector<Row<FF>>& rows, const Row<FF>& rhs);

// Matrix whose i-th column is cols[i].
Matrix<FF> columns_matrix(const FiniteField& f, const std::vector<Row<FF>>& cols);

struct ReachResult {
  bool success = false;     // constructive route landed on the target
  bool spin_member = false; // target ∈ spin(λ), independent oracle
  std::string branch;
  json certificate;
};

// λ ∈ M** − M*, |F| > 2.
ReachResult reach_eta(const SVF& lam, const GeneratorSet<FF>& gens);
// λ ∈ C − M**, |F| > 2.
ReachResult reach_delta(const SVF& lam, const GeneratorSet<FF>& gens);

}  // namespace algdeg
