#include "algdeg/gfield.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <utility>

namespace algdeg {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw Error("no inverse mod p");
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  Poly mm = m;
  trim(mm);
  const int dm = static_cast<int>(mm.size()) - 1;
  const int lead_inv = inv_mod(mm.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = a.back() * lead_inv % p;
    for (int i = 0; i <= dm; ++i)
      a[shift + i] = ((a[shift + i] - c * mm[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly digits(int v, int p, int k) {
  Poly d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

int undigits(const Poly& d, int p) {
  int v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

const std::map<std::pair<int, int>, Poly>& modulus_table() {
  static const std::map<std::pair<int, int>, Poly> table = {
      {{2, 2}, {1, 1, 1}},     // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},  // x^3 + x + 1
      {{3, 2}, {1, 0, 1}},     // x^2 + 1
      {{5, 2}, {1, 1, 1}},     // x^2 + x + 1
  };
  return table;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<int>& coeffs, int p) {
  Poly f = coeffs;
  trim(f);
  const int k = static_cast<int>(f.size()) - 1;
  if (k < 1) return false;
  for (int d = 1; d <= k / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int v = 0; v < count; ++v) {
      Poly g = digits(v, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField make_finite_field(int p, int k) {
  if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw Error("field degree must be positive");
  Poly modulus;
  if (k > 1) {
    auto it = modulus_table().find({p, k});
    if (it == modulus_table().end())
      throw Error("unsupported extension field GF(" + std::to_string(p) + "^" +
                  std::to_string(k) + ")");
    modulus = it->second;
    if (!is_irreducible_mod_p(modulus, p)) throw Error("modulus is reducible");
  }
  int q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > 256) throw Error("field order above 256 is not supported");

  auto t = std::make_shared<FiniteField::Tables>();
  t->p = p;
  t->k = k;
  t->q = q;
  t->modulus = modulus;
  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.resize(q, 0);
  for (int a = 0; a < q; ++a) {
    const Poly da = digits(a, p, k);
    Poly dn(k);
    for (int i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
    t->neg[a] = static_cast<FiniteField::Elem>(undigits(dn, p));
    for (int b = 0; b < q; ++b) {
      const Poly db = digits(b, p, k);
      Poly ds(k);
      for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
      t->add[a * q + b] = static_cast<FiniteField::Elem>(undigits(ds, p));
      Poly prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      Poly r = k > 1 ? poly_mod(prod, modulus, p) : Poly{prod[0] % p};
      r.resize(k, 0);
      t->mul[a * q + b] = static_cast<FiniteField::Elem>(undigits(r, p));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (t->mul[a * q + b] == 1) t->inv[a] = static_cast<FiniteField::Elem>(b);

  FiniteField f;
  f.t_ = std::move(t);
  return f;
}

FiniteField::Elem FiniteField::from_int(long long v) const {
  long long r = v % t_->p;
  if (r < 0) r += t_->p;
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::pow(Elem a, unsigned long long e) const {
  Elem r = 1;
  Elem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::string FiniteField::to_string(Elem a) const {
  if (t_->k == 1) return std::to_string(a);
  std::string out;
  int v = a;
  for (int i = 0; i < t_->k; ++i) {
    const int c = v % t_->p;
    v /= t_->p;
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = std::to_string(c);
    } else {
      term = (c == 1 ? "" : std::to_string(c)) + "x" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    out = out.empty() ? term : term + "+" + out;
  }
  return out.empty() ? "0" : out;
}

std::string FiniteField::name() const {
  if (t_->k == 1) return "GF(" + std::to_string(t_->p) + ")";
  return "GF(" + std::to_string(t_->p) + "^" + std::to_string(t_->k) + ")";
}

int multiplicative_order(const FiniteField& f, FiniteField::Elem a) {
  if (a == 0) throw Error("zero has no multiplicative order");
  int ord = 1;
  FiniteField::Elem x = a;
  while (x != 1) {
    x = f.mul(x, a);
    ++ord;
  }
  return ord;
}

FiniteField::Elem primitive_element(const FiniteField& f) {
  if (f.order() < 3) throw Error("GF(2) has no primitive element other than 1");
  for (int a = 1; a < f.order(); ++a) {
    const auto e = static_cast<FiniteField::Elem>(a);
    if (multiplicative_order(f, e) == f.order() - 1) return e;
  }
  throw Error("no primitive element found");
}

std::vector<FiniteField::Elem> enumerate(const FiniteField& f) {
  std::vector<FiniteField::Elem> out(f.order());
  for (int a = 0; a < f.order(); ++a) out[a] = static_cast<FiniteField::Elem>(a);
  return out;
}

FiniteField::Elem frobenius(const FiniteField& f, FiniteField::Elem a) {
  return f.pow(a, static_cast<unsigned long long>(f.characteristic()));
}

std::string RationalField::to_string(const Elem& a) const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(a) == 1) return numerator(a).str();
  return numerator(a).str() + "/" + denominator(a).str();
}

RationalField::Elem RationalField::parse(std::string_view s) const {
  using boost::multiprecision::cpp_int;
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Elem(cpp_int(std::string(s)));
    cpp_int num(std::string(s.substr(0, slash)));
    cpp_int den(std::string(s.substr(slash + 1)));
    if (den == 0) throw Error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Elem(num, den);
  } catch (const std::runtime_error&) {
    throw Error("malformed rational '" + std::string(s) + "'");
  }
}

FieldCtx make_field(int characteristic, int degree) {
  if (characteristic == 0) {
    if (degree != 1) throw Error("the rationals have degree 1");
    return RationalField{};
  }
  return make_finite_field(characteristic, degree);
}

FieldCtx parse_field_spec(std::string_view spec) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw UsageError("bad field spec '" + std::string(spec) + "'");
    return v;
  };
  if (spec == "Q" || spec == "0") return RationalField{};
  try {
    const bool prefixed = !spec.empty() && (spec[0] == 'F' || spec[0] == 'f');
    if (prefixed || spec.find('^') == std::string_view::npos) {
      // a bare integer is the order q
      const int q = parse_int(prefixed ? spec.substr(1) : spec);
      for (int p = 2; p <= q; ++p) {
        if (q % p) continue;
        int k = 0;
        int r = q;
        while (r % p == 0) {
          r /= p;
          ++k;
        }
        if (r != 1) break;
        return make_finite_field(p, k);
      }
      throw UsageError(std::to_string(q) + " is not a prime power");
    }
    const auto caret = spec.find('^');
    return make_finite_field(parse_int(spec.substr(0, caret)), parse_int(spec.substr(caret + 1)));
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

}  // namespace algdeg
