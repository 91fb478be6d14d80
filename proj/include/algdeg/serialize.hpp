#pragma once

// JSON forms of fields, elements, structure vectors, matrices and subspaces.

#include "algdeg/report.hpp"
#include "algdeg/structvec.hpp"

#include <string>
#include <vector>

namespace algdeg {

json field_to_json(const FiniteField& f);
json field_to_json(const RationalField& f);
FieldCtx field_from_json(const json& j);

inline json elem_to_json(const FiniteField&, FiniteField::Elem a) { return static_cast<int>(a); }
inline json elem_to_json(const RationalField& f, const RationalField::Elem& a) { return f.to_string(a); }

FiniteField::Elem elem_from_json(const FiniteField& f, const json& j);
RationalField::Elem elem_from_json(const RationalField& f, const json& j);

template <class F>
json row_to_json(const F& f, const Row<F>& r) {
  json a = json::array();
  for (const auto& x : r) a.push_back(elem_to_json(f, x));
  return a;
}

template <class F>
Row<F> row_from_json(const F& f, const json& j) {
  Row<F> r;
  for (const auto& x : j) r.push_back(elem_from_json(f, x));
  return r;
}

template <class F>
json matrix_to_json(const Matrix<F>& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(row_to_json(m.field(), m.row(r)));
  return a;
}

template <class F>
Matrix<F> matrix_from_json(const F& f, std::size_t cols, const json& j) {
  std::vector<Row<F>> rows;
  for (const auto& r : j) rows.push_back(row_from_json(f, r));
  return Matrix<F>::from_rows(f, cols, rows);
}

template <class F>
json structure_vector_to_json(const StructureVector<F>& s) {
  json j;
  j["n"] = s.n();
  j["field"] = field_to_json(s.field());
  j["coords"] = row_to_json(s.field(), s.coords());
  return j;
}

template <class F>
StructureVector<F> structure_vector_from_json(const F& f, const json& j) {
  const auto n = j.at("n").get<std::size_t>();
  auto coords = row_from_json(f, j.at("coords"));
  if (coords.size() != n * n * n) throw Error("structure vector JSON needs n^3 coordinates");
  return StructureVector<F>(f, n, std::move(coords));
}

template <class F>
json subspace_to_json(const Subspace<F>& s) {
  json j;
  j["field"] = field_to_json(s.field());
  j["ambient"] = s.ambient();
  j["basis"] = matrix_to_json(s.basis());
  return j;
}

template <class F>
Subspace<F> subspace_from_json(const F& f, const json& j) {
  const auto d = j.at("ambient").get<std::size_t>();
  std::vector<Row<F>> rows;
  for (const auto& r : j.at("basis")) rows.push_back(row_from_json(f, r));
  for (const auto& r : rows)
    if (r.size() != d) throw Error("subspace JSON row length mismatch");
  return Subspace<F>::span(f, d, rows);
}

}  // namespace algdeg
