#pragma once

// Exact scalar arithmetic: table-driven GF(p^k) and arbitrary-precision
// rationals. Both field types model the same small interface so that the
// linear algebra above them can be written once.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace algdeg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

bool is_prime(long long p);

// Finite field GF(p^k) with |F| <= 256. Elements are integers in [0, p^k)
// whose base-p digits are the coefficients of the polynomial-basis
// representative (least significant digit = constant term).
class FiniteField {
 public:
  using Elem = std::uint8_t;

  FiniteField() = default;

  int characteristic() const { return t_->p; }
  int degree() const { return t_->k; }
  int order() const { return t_->q; }
  // Coefficients c0..ck of the defining monic polynomial; empty for k = 1.
  const std::vector<int>& modulus() const { return t_->modulus; }
  static constexpr bool is_finite() { return true; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return t_->add[a * t_->q + b]; }
  Elem sub(Elem a, Elem b) const { return t_->add[a * t_->q + t_->neg[b]]; }
  Elem mul(Elem a, Elem b) const { return t_->mul[a * t_->q + b]; }
  Elem neg(Elem a) const { return t_->neg[a]; }
  Elem inv(Elem a) const {
    if (a == 0) throw Error("division by zero in " + name());
    return t_->inv[a];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem from_int(long long v) const;
  Elem pow(Elem a, unsigned long long e) const;

  // dst[i] += c * src[i]
  void axpy(Elem* dst, Elem c, const Elem* src, std::size_t len) const {
    if (c == 0) return;
    const Elem* mrow = &t_->mul[c * t_->q];
    const Elem* add = t_->add.data();
    const int q = t_->q;
    for (std::size_t i = 0; i < len; ++i) {
      if (src[i]) dst[i] = add[dst[i] * q + mrow[src[i]]];
    }
  }
  void scale(Elem* dst, Elem c, std::size_t len) const {
    const Elem* mrow = &t_->mul[c * t_->q];
    for (std::size_t i = 0; i < len; ++i) dst[i] = mrow[dst[i]];
  }

  std::string to_string(Elem a) const;
  std::string name() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->k == b.t_->k &&
                            a.t_->modulus == b.t_->modulus);
  }

  friend FiniteField make_finite_field(int p, int k);

 private:
  struct Tables {
    int p = 0, k = 0, q = 0;
    std::vector<int> modulus;
    std::vector<Elem> add, mul, neg, inv;
  };
  std::shared_ptr<const Tables> t_;
};

// Fixed modulus table: GF(4) x^2+x+1, GF(8) x^3+x+1, GF(9) x^2+1,
// GF(25) x^2+x+1. Prime fields need p < 256.
FiniteField make_finite_field(int p, int k);

// Whether the monic polynomial with coefficients c0..ck is irreducible over
// GF(p), by trial division with every monic polynomial of degree <= k/2.
bool is_irreducible_mod_p(const std::vector<int>& coeffs, int p);

// Least element of multiplicative order q-1. Throws for GF(2).
FiniteField::Elem primitive_element(const FiniteField& f);
std::vector<FiniteField::Elem> enumerate(const FiniteField& f);
FiniteField::Elem frobenius(const FiniteField& f, FiniteField::Elem a);
int multiplicative_order(const FiniteField& f, FiniteField::Elem a);

// The rational numbers with arbitrary-precision numerator and denominator.
class RationalField {
 public:
  using Elem = boost::multiprecision::cpp_rational;

  static constexpr int characteristic() { return 0; }
  static constexpr int degree() { return 1; }
  static constexpr bool is_finite() { return false; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error("division by zero in Q");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem from_int(long long v) const { return Elem(v); }

  void axpy(Elem* dst, const Elem& c, const Elem* src, std::size_t len) const {
    if (c == 0) return;
    for (std::size_t i = 0; i < len; ++i)
      if (src[i] != 0) dst[i] += c * src[i];
  }
  void scale(Elem* dst, const Elem& c, std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) dst[i] *= c;
  }

  std::string to_string(const Elem& a) const;
  std::string name() const { return "Q"; }
  Elem parse(std::string_view s) const;

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

using FieldCtx = std::variant<FiniteField, RationalField>;

// char = 0 with degree 1 gives the rationals; otherwise a finite field.
FieldCtx make_field(int characteristic, int degree);

// Field spec syntax: "q" as the order (e.g. "4"), "p^k", "F<q>", or "Q"/"0".
FieldCtx parse_field_spec(std::string_view spec);

// a | b in the sense "b == 0 in a field of characteristic a" (a = 0: b == 0).
inline bool char_divides(int characteristic, long long m) {
  if (characteristic == 0) return m == 0;
  return m % characteristic == 0;
}

}  // namespace algdeg
