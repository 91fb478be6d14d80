#include "algdeg/serialize.hpp"

namespace algdeg {

json field_to_json(const FiniteField& f) {
  json j;
  j["char"] = f.characteristic();
  j["degree"] = f.degree();
  if (f.degree() > 1) j["modulus"] = f.modulus();
  return j;
}

json field_to_json(const RationalField&) {
  json j;
  j["char"] = 0;
  j["degree"] = 1;
  return j;
}

FieldCtx field_from_json(const json& j) {
  const int p = j.at("char").get<int>();
  const int k = j.value("degree", 1);
  FieldCtx ctx = make_field(p, k);
  if (auto* ff = std::get_if<FiniteField>(&ctx); ff && j.contains("modulus")) {
    if (j.at("modulus").get<std::vector<int>>() != ff->modulus())
      throw Error("field modulus differs from the fixed table");
  }
  return ctx;
}

FiniteField::Elem elem_from_json(const FiniteField& f, const json& j) {
  const int v = j.get<int>();
  if (v < 0 || v >= f.order()) throw Error("field element repr out of range");
  return static_cast<FiniteField::Elem>(v);
}

RationalField::Elem elem_from_json(const RationalField& f, const json& j) {
  if (j.is_number_integer()) return RationalField::Elem(j.get<long long>());
  return f.parse(j.get<std::string>());
}

}  // namespace algdeg
