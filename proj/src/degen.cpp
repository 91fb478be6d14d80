#include "algdeg/degen.hpp"

#include "algdeg/canon.hpp"
#include "algdeg/serialize.hpp"

#include <algorithm>

namespace algdeg {

SVF q_truncate(const SVF& lam, const QSequence& q) {
  const std::size_t n = lam.n();
  if (q.size() != n) throw Error("weight sequence length does not match n");
  SVF out(lam.field(), n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        if (q[i - 1] + q[j - 1] - q[k - 1] == 0) out.at(i, j, k) = lam.at(i, j, k);
  return out;
}

LindegCheck lindeg_hypothesis_check(const SVF& lam, const QSequence& q, const FiniteField& f) {
  const std::size_t n = lam.n();
  if (q.size() != n) throw Error("weight sequence length does not match n");
  LindegCheck c;
  c.vanishing = true;
  bool first = true;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k) {
        const long long w = q[i - 1] + q[j - 1] - q[k - 1];
        if (first || w > c.max_weight) c.max_weight = w;
        first = false;
        if (w < 0 && !f.is_zero(lam.at(i, j, k))) c.vanishing = false;
      }
  c.applicable = c.vanishing && c.max_weight < f.order() - 1;
  return c;
}

bool verify_lindeg(const SVF& lam, const QSequence& q, const GeneratorSet<FF>& gens) {
  return spin(lam, gens).contains(q_truncate(lam, q).coords());
}

void validate(const FiniteField& f, const TransvectionSpec& s) {
  if (f.order() <= 2) throw Error("transvection degenerations need |F| > 2");
  if (s.z.size() != s.zeta.size()) throw Error("z and zeta have different lengths");
  if (is_zero_row(f, std::span<const FF::Elem>(s.z))) throw Error("z must be nonzero");
  if (is_zero_row(f, std::span<const FF::Elem>(s.zeta))) throw Error("zeta must be nonzero");
  if (!f.is_zero(evaluate(f, s.zeta, s.z))) throw Error("zeta(z) must vanish");
  if (f.is_zero(s.alpha) || s.alpha == f.one()) throw Error("alpha must differ from 0 and 1");
}

GroupElement<FF> transvection(const FiniteField& f, const Row<FF>& z, const Row<FF>& zeta, FF::Elem t) {
  const std::size_t n = z.size();
  Matrix<FF> g = Matrix<FF>::identity(f, n), gi = Matrix<FF>::identity(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = f.mul(t, f.mul(z[i], zeta[j]));
      g(i, j) = f.add(g(i, j), c);
      gi(i, j) = f.sub(gi(i, j), c);
    }
  return GroupElement<FF>(std::move(g), std::move(gi));
}

SVF transvection_pipeline(const SVF& lam, const TransvectionSpec& s) {
  const auto& f = lam.field();
  validate(f, s);
  const auto l2 = act(lam, transvection(f, s.z, s.zeta, f.one())) - lam;
  const auto l3 = act(lam, transvection(f, s.z, s.zeta, s.alpha)) - lam;
  const auto l4 = l3 - l2.scaled(s.alpha);
  const auto denom = f.neg(f.sub(f.mul(s.alpha, s.alpha), s.alpha));
  return l4.scaled(f.inv(denom));
}

SVF transvection_closed_form(const SVF& lam, const TransvectionSpec& s) {
  const auto& f = lam.field();
  validate(f, s);
  const std::size_t n = lam.n();
  const auto zz = product(lam, s.z, s.z);
  const auto zeta_zz = evaluate(f, s.zeta, zz);
  const auto a1 = f.add(s.alpha, f.one());
  SVF out(f, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const auto u = unit_row(f, n, i - 1), v = unit_row(f, n, j - 1);
      const auto zu = s.zeta[i - 1], zv = s.zeta[j - 1];
      // ζ(u)ζ([z,v]) + ζ(v)ζ([u,z]) + (α+1)ζ(u)ζ(v)ζ([z,z]) on z
      auto cz = f.mul(zu, evaluate(f, s.zeta, product(lam, s.z, v)));
      cz = f.add(cz, f.mul(zv, evaluate(f, s.zeta, product(lam, u, s.z))));
      cz = f.add(cz, f.mul(a1, f.mul(f.mul(zu, zv), zeta_zz)));
      Row<FF> br = scaled_row(f, cz, s.z);
      // −ζ(u)ζ(v)[z,z]
      f.axpy(br.data(), f.neg(f.mul(zu, zv)), zz.data(), n);
      for (std::size_t k = 1; k <= n; ++k) out.at(i, j, k) = br[k - 1];
    }
  return out;
}

SVF transvection_g5(const SVF& lam, const TransvectionSpec& s) {
  auto p = transvection_pipeline(lam, s);
  if (!(p == transvection_closed_form(lam, s)))
    throw Error("transvection pipeline disagrees with the closed form");
  return p;
}

SVF transvection_g6(const SVF& lam, const Row<FF>& z, const Row<FF>& zeta, FF::Elem alpha, FF::Elem alpha2) {
  const auto& f = lam.field();
  if (alpha == alpha2) throw Error("the two alpha values must differ");
  const auto a = transvection_g5(lam, {z, zeta, alpha});
  const auto b = transvection_g5(lam, {z, zeta, alpha2});
  return (b - a).scaled(f.inv(f.sub(alpha2, alpha)));
}

SVF transvection_g6_closed_form(const SVF& lam, const Row<FF>& z, const Row<FF>& zeta) {
  const auto& f = lam.field();
  const std::size_t n = lam.n();
  const auto c = evaluate(f, zeta, product(lam, z, z));
  SVF out(f, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k) out.at(i, j, k) = f.mul(f.mul(zeta[i - 1], zeta[j - 1]), f.mul(c, z[k - 1]));
  return out;
}

FF::Elem default_alpha(const FiniteField& f) {
  if (f.order() <= 2) throw Error("no admissible alpha over GF(2)");
  if (f.order() == 3) return f.from_int(2);
  return primitive_element(f);
}

FF::Elem second_alpha(const FiniteField& f, FF::Elem alpha) {
  for (auto x : enumerate(f))
    if (!f.is_zero(x) && x != f.one() && x != alpha) return x;
  throw Error("no second alpha for |F| <= 3");
}

std::optional<Row<FF>> solve_particular(const FiniteField& f, const std::vector<Row<FF>>& rows, const Row<FF>& rhs) {
  if (rows.empty()) throw Error("empty linear system");
  const std::size_t n = rows[0].size();
  std::vector<Row<FF>> aug;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Row<FF> a = rows[r];
    a.push_back(rhs[r]);
    aug.push_back(std::move(a));
  }
  auto red = rref(Matrix<FF>::from_rows(f, n + 1, aug));
  Row<FF> x = zero_row(f, n);
  for (std::size_t r = 0; r < red.rank; ++r) {
    if (red.pivots[r] == n) return std::nullopt;
    x[red.pivots[r]] = red.reduced(r, n);
  }
  return x;
}

Matrix<FF> columns_matrix(const FiniteField& f, const std::vector<Row<FF>>& cols) {
  const std::size_t n = cols.size();
  Matrix<FF> m(f, n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c][r];
  return m;
}

namespace {

// Normalized candidate vectors ordered by support size, then enumeration.
std::vector<Row<FF>> candidates(const FiniteField& f, std::size_t n) {
  std::vector<std::pair<std::size_t, Row<FF>>> c;
  const auto lines = line_count(f.order(), n);
  for (std::uint64_t i = 0; i < lines; ++i) {
    auto v = line_vector(f, n, i);
    const auto support = static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](auto x) { return x != 0; }));
    c.emplace_back(support, std::move(v));
  }
  std::stable_sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Row<FF>> out;
  for (auto& [s, v] : c) out.push_back(std::move(v));
  return out;
}

bool independent(const FiniteField& f, std::size_t n, const std::vector<Row<FF>>& rows) {
  return rank(Matrix<FF>::from_rows(f, n, rows)) == rows.size();
}

// first entries of `start`, then extended by rows of s to a basis of s
std::vector<Row<FF>> extend_within(const FiniteField& f, std::size_t n, const std::vector<Row<FF>>& start,
                                   const Subspace<FF>& s) {
  EchelonBuilder<FF> eb(f, n);
  std::vector<Row<FF>> out;
  for (const auto& v : start) {
    if (!eb.insert(v)) throw Error("basis extension start is dependent");
    out.push_back(v);
  }
  for (const auto& b : s.basis_rows())
    if (eb.insert(b)) out.push_back(b);
  return out;
}

Subspace<FF> common_kernel(const FiniteField& f, std::size_t n, const std::vector<Row<FF>>& functionals) {
  return null_space(Matrix<FF>::from_rows(f, n, functionals));
}

// v ↦ ζ([z, v]) as a row
Row<FF> zeta_prime(const SVF& lam, const Row<FF>& z, const Row<FF>& zeta) {
  const auto& f = lam.field();
  const std::size_t n = lam.n();
  Row<FF> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = evaluate(f, zeta, product(lam, z, unit_row(f, n, i)));
  return out;
}

json elem_json(const FiniteField& f, FF::Elem a) { return elem_to_json(f, a); }

void require_big_field(const FiniteField& f) {
  if (f.order() <= 2) throw Error("transvection degenerations need |F| > 2");
}

}  // namespace

ReachResult reach_eta(const SVF& lam, const GeneratorSet<FF>& gens) {
  const auto& f = lam.field();
  const std::size_t n = lam.n();
  require_big_field(f);
  if (!predicate_Mstarstar(lam)) throw Error("reach_eta needs λ in Mstarstar");
  if (predicate_Mstar(lam)) throw Error("λ lies in Mstar: no independent triple exists");
  const auto target = eta(f, n);
  ReachResult res;
  res.spin_member = spin(lam, gens).contains(target.coords());
  if (lam == target) {
    res.success = true;
    res.branch = "trivial";
    res.certificate = {{"trivial", true}};
    return res;
  }

  // a, b, [a,b] independent
  const auto cand = candidates(f, n);
  std::optional<std::pair<Row<FF>, Row<FF>>> ab;
  for (std::size_t j = 0; j < cand.size() && !ab; ++j)
    for (std::size_t i = 0; i <= j && !ab; ++i)
      for (int swap = 0; swap < 2 && !ab; ++swap) {
        const auto& a = swap ? cand[j] : cand[i];
        const auto& b = swap ? cand[i] : cand[j];
        if (independent(f, n, {a, b, product(lam, a, b)})) ab.emplace(a, b);
      }
  if (!ab) throw Error("no independent triple found for a vector outside Mstar");
  const auto& [a, b] = *ab;

  const auto om = omega(lam);
  const auto wa = evaluate(f, om, a), wb = evaluate(f, om, b);
  Row<FF> z, w;
  if (f.is_zero(wa)) {
    z = a;
    w = b;
  } else {
    z = sub_rows(f, scaled_row(f, wb, a), scaled_row(f, wa, b));
    w = a;
  }
  const auto zw = product(lam, z, w);
  auto zeta = solve_particular(f, {z, w, zw}, {f.zero(), f.zero(), f.one()});
  if (!zeta) throw Error("z, w, [z,w] are dependent");
  const auto alpha = default_alpha(f);
  const auto l5 = transvection_g5(lam, {z, *zeta, alpha});
  const auto zp = zeta_prime(lam, z, *zeta);

  auto u1 = solve_particular(f, {*zeta, zp}, {f.one(), f.zero()});
  if (!u1) throw Error("zeta and zeta' are dependent");
  auto basis = extend_within(f, n, {z}, common_kernel(f, n, {*zeta, zp}));
  std::vector<Row<FF>> cols = {*u1, w};
  cols.insert(cols.end(), basis.begin(), basis.end());
  const auto h = columns_matrix(f, cols);
  const GroupElement<FF> hg(h);
  const auto result = act(l5, hg);
  res.success = result == target;
  res.branch = "transvection";
  res.certificate = {{"search", "support-size then enumeration order"},
                     {"a", row_to_json(f, a)},
                     {"b", row_to_json(f, b)},
                     {"z", row_to_json(f, z)},
                     {"w", row_to_json(f, w)},
                     {"zeta", row_to_json(f, *zeta)},
                     {"zeta_prime", row_to_json(f, zp)},
                     {"alpha", elem_json(f, alpha)},
                     {"g5", structure_vector_to_json(l5)},
                     {"basis_change", matrix_to_json(h)},
                     {"result", structure_vector_to_json(result)}};
  return res;
}

ReachResult reach_delta(const SVF& lam, const GeneratorSet<FF>& gens) {
  const auto& f = lam.field();
  const std::size_t n = lam.n();
  require_big_field(f);
  if (!predicate_C(lam)) throw Error("reach_delta needs λ in C");
  if (predicate_Mstarstar(lam)) throw Error("reach_delta needs λ outside Mstarstar");
  const auto target = delta(f, n);
  ReachResult res;
  res.spin_member = spin(lam, gens).contains(target.coords());
  if (lam == target) {
    res.success = true;
    res.branch = "trivial";
    res.certificate = {{"trivial", true}};
    return res;
  }

  std::optional<Row<FF>> zopt;
  for (const auto& c : candidates(f, n))
    if (independent(f, n, {c, product(lam, c, c)})) {
      zopt = c;
      break;
    }
  if (!zopt) throw Error("no z with [z,z] independent of z for a vector outside Mstarstar");
  const Row<FF> z = *zopt;
  const Row<FF> w = product(lam, z, z);
  auto zeta = solve_particular(f, {z, w}, {f.zero(), f.one()});
  if (!zeta) throw Error("z and [z,z] are dependent");
  const auto alpha = default_alpha(f);
  const auto zp = zeta_prime(lam, z, *zeta);
  json cert = {{"search", "support-size then enumeration order"},
               {"z", row_to_json(f, z)},
               {"w", row_to_json(f, w)},
               {"zeta", row_to_json(f, *zeta)},
               {"zeta_prime", row_to_json(f, zp)},
               {"alpha", elem_json(f, alpha)}};

  SVF result(f, n);
  if (f.order() > 3) {
    const auto alpha2 = second_alpha(f, alpha);
    const auto g6 = transvection_g6(lam, z, *zeta, alpha, alpha2);
    if (!(g6 == transvection_g6_closed_form(lam, z, *zeta))) throw Error("g6 disagrees with its closed form");
    auto rest = extend_within(f, n, {z}, common_kernel(f, n, {*zeta}));
    std::vector<Row<FF>> cols = {w};
    cols.insert(cols.end(), rest.begin(), rest.end());
    const auto h = columns_matrix(f, cols);
    result = act(g6, GroupElement<FF>(h));
    res.branch = "g6";
    cert["alpha2"] = elem_json(f, alpha2);
    cert["g6"] = structure_vector_to_json(g6);
    cert["basis_change"] = matrix_to_json(h);
  } else {
    const auto g5 = transvection_g5(lam, {z, *zeta, alpha});
    auto rest = common_kernel(f, n, {*zeta, zp});
    std::vector<Row<FF>> cols = {z, w};
    for (const auto& r : rest.basis_rows()) cols.push_back(r);
    const auto h = columns_matrix(f, cols);
    const auto mu5 = act(g5, GroupElement<FF>(h));
    const auto c = evaluate(f, zp, w);
    auto expect = SVF::unit(f, n, 1, 2, 1) + SVF::unit(f, n, 2, 1, 1) - SVF::unit(f, n, 2, 2, 1).scaled(c) -
                  SVF::unit(f, n, 2, 2, 2);
    if (!(mu5 == expect)) throw Error("GF(3) normal form of g5 differs from the expected shape");
    cert["g5"] = structure_vector_to_json(g5);
    cert["basis_change"] = matrix_to_json(h);
    cert["mu5"] = structure_vector_to_json(mu5);
    std::vector<Row<FF>> perm;
    SVF step(f, n);
    if (!f.is_zero(c)) {
      // difference with the diag(−1,1,…) image isolates 2c·221
      const auto d = act(mu5, GroupElement<FF>(diagonal_first(f, n, f.neg(f.one()))));
      step = (d - mu5).scaled(f.inv(f.mul(f.from_int(2), c)));
      perm = {unit_row(f, n, 1), unit_row(f, n, 0)};
      res.branch = "gf3-nonzero";
    } else {
      const auto g = GroupElement<FF>(elementary(f, n, 3, 2, f.one()));
      step = act(mu5, g) - mu5;
      if (!(step == SVF::unit(f, n, 2, 2, 3))) throw Error("GF(3) zero branch did not isolate 223");
      perm = {unit_row(f, n, 1), unit_row(f, n, 2), unit_row(f, n, 0)};
      res.branch = "gf3-zero";
    }
    cert["isolated"] = structure_vector_to_json(step);
    for (std::size_t i = perm.size(); i < n; ++i) perm.push_back(unit_row(f, n, i));
    const auto p = columns_matrix(f, perm);
    result = act(step, GroupElement<FF>(p));
    cert["permutation"] = matrix_to_json(p);
  }
  cert["branch"] = res.branch;
  cert["result"] = structure_vector_to_json(result);
  res.success = result == target;
  res.certificate = std::move(cert);
  return res;
}

}  // namespace algdeg
