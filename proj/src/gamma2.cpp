#include "algdeg/gamma2.hpp"

#include "algdeg/canon.hpp"
#include "algdeg/serialize.hpp"

#include <random>

namespace algdeg {

namespace {

using FF = FiniteField;
using SVF = StructureVector<FF>;

// g with g v_j = v_{σ(j)}; star by it permutes entries: (φ∗g)_ij = φ_σ(i)σ(j).
GroupElement<FF> permutation(const FF& f, const std::vector<std::size_t>& sigma_1based) {
  const std::size_t n = sigma_1based.size();
  Matrix<FF> m(f, n, n);
  for (std::size_t j = 0; j < n; ++j) m(sigma_1based[j] - 1, j) = f.one();
  return GroupElement<FF>(std::move(m));
}

// Complete σ(1)=a, σ(2)=b (and σ(3)=c when given) to a permutation.
std::vector<std::size_t> complete_perm(std::size_t n, std::vector<std::size_t> head) {
  std::vector<bool> used(n + 1, false);
  for (auto h : head) used[h] = true;
  for (std::size_t x = 1; x <= n; ++x)
    if (!used[x]) head.push_back(x);
  return head;
}

void check_unit(std::size_t n, UnitIndex e) {
  if (e.first < 1 || e.second < 1 || e.first > n || e.second > n) throw Error("matrix unit index out of range");
  if (e.first == e.second) throw Error("matrix unit must be off-diagonal");
}

}  // namespace

void require_char2(const FiniteField& f) {
  if (f.characteristic() != 2) throw Error("semilinear maps need characteristic 2");
}

SemilinearMap matrix_unit(const FiniteField& f, std::size_t n, std::size_t i, std::size_t j) {
  SemilinearMap m(f, n, n);
  m(i - 1, j - 1) = f.one();
  return m;
}

Matrix<FiniteField> frobenius_twist(const Matrix<FiniteField>& g) {
  Matrix<FiniteField> out = g;
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) out(r, c) = g.field().mul(g(r, c), g(r, c));
  return out;
}

SemilinearMap sigma(const StructureVector<FiniteField>& lam) {
  const auto& f = lam.field();
  require_char2(f);
  if (!predicate_C(lam)) throw Error("the squaring map is defined on C");
  const std::size_t n = lam.n();
  SemilinearMap m(f, n, n);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = 1; k <= n; ++k) m(k - 1, j - 1) = lam.at(j, j, k);
  return m;
}

SemilinearMap star(const SemilinearMap& phi, const GroupElement<FiniteField>& g) {
  require_char2(phi.field());
  if (g.n() != phi.rows()) throw Error("group element size does not match");
  return g.inv() * phi * frobenius_twist(g.mat());
}

SemilinearMap e_and_f(const SemilinearMap& phi, UnitIndex e, UnitIndex f) {
  const auto& fld = phi.field();
  require_char2(fld);
  const std::size_t n = phi.rows();
  check_unit(n, e);
  check_unit(n, f);
  if (e.second == f.first || f.second == e.first) throw Error("units must satisfy ef = fe = 0");
  const auto em = matrix_unit(fld, n, e.first, e.second), fm = matrix_unit(fld, n, f.first, f.second);
  return em * phi * fm + fm * phi * em;
}

SemilinearMap e_and_f_four_term(const SemilinearMap& phi, UnitIndex e, UnitIndex f) {
  const auto& fld = phi.field();
  require_char2(fld);
  const std::size_t n = phi.rows();
  check_unit(n, e);
  check_unit(n, f);
  if (e.second == f.first || f.second == e.first) throw Error("units must satisfy ef = fe = 0");
  const auto id = Matrix<FF>::identity(fld, n);
  const auto em = matrix_unit(fld, n, e.first, e.second), fm = matrix_unit(fld, n, f.first, f.second);
  SemilinearMap acc(fld, n, n);
  for (const auto& g : {id, id + em, id + fm, id + em + fm}) acc = acc + star(phi, GroupElement<FF>(g));
  return acc;
}

Row<FiniteField> flatten(const SemilinearMap& phi) {
  Row<FF> v;
  for (std::size_t r = 0; r < phi.rows(); ++r) {
    auto s = phi.row_span(r);
    v.insert(v.end(), s.begin(), s.end());
  }
  return v;
}

SemilinearMap unflatten(const FiniteField& f, std::size_t n, const Row<FiniteField>& v) {
  SemilinearMap m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
  return m;
}

LinearModule<FiniteField> gamma_module(const FiniteField& f, const GeneratorSet<FiniteField>& gens) {
  require_char2(f);
  const std::size_t n = gens.elements.at(0).n();
  LinearModule<FF> m{f, n * n, {}};
  for (const auto& g : gens.elements) {
    Matrix<FF> a(f, n * n, n * n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        const auto img = flatten(star(matrix_unit(f, n, i, j), g));
        std::copy(img.begin(), img.end(), a.row_ptr((i - 1) * n + (j - 1)));
      }
    m.actions.push_back(std::move(a));
  }
  return m;
}

ReplayResult replay_extraction(const SemilinearMap& phi0) {
  const auto& f = phi0.field();
  require_char2(f);
  if (f.order() < 4) throw Error("the extraction needs |F| >= 4");
  const std::size_t n = phi0.rows();
  if (n < 3) throw Error("the extraction needs n >= 3");
  if (phi0.is_zero()) throw Error("the extraction needs a nonzero map");
  ReplayResult res;
  bool ok = true;
  auto record = [&](const std::string& what, const SemilinearMap& got, const SemilinearMap& expect) {
    const bool match = got == expect;
    ok = ok && match;
    res.steps.push_back({{"step", what}, {"matrix", matrix_to_json(got)}, {"matches", match}});
    return got;
  };

  const auto e = [&](std::size_t i, std::size_t j) { return matrix_unit(f, n, i, j); };
  std::optional<SemilinearMap> e12;

  std::size_t a = 0, b = 0;
  for (std::size_t i = 1; i <= n && !a; ++i)
    for (std::size_t j = 1; j <= n && !a; ++j)
      if (i != j && !f.is_zero(phi0(i - 1, j - 1))) a = i, b = j;

  if (a) {
    res.path = "off-diagonal";
    const auto p = permutation(f, complete_perm(n, {a, b}));
    const auto phi = star(phi0, p);
    SemilinearMap expect_phi(f, n, n);
    const auto sig = complete_perm(n, {a, b});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) expect_phi(i, j) = phi0(sig[i] - 1, sig[j] - 1);
    record("permute so that entry (1,2) is nonzero", phi, expect_phi);
    const auto c12 = phi(0, 1), c13 = phi(0, 2);
    const auto s1 = e_and_f(phi, {2, 1}, {3, 1});
    record("four-term check e21&e31", e_and_f_four_term(phi, {2, 1}, {3, 1}), s1);
    record("e21&e31", s1, e(3, 1).scaled(c12) + e(2, 1).scaled(c13));
    const auto s2 = e_and_f(s1, {1, 3}, {2, 3});
    record("e13&e23", s2, e(2, 3).scaled(c12));
    const auto s3 = s2.scaled(f.inv(c12));
    const auto s4 = star(s3, permutation(f, complete_perm(n, {2, 3, 1})));
    e12 = record("permute e23 to e12", s4, e(1, 2));
  } else {
    std::size_t p = 0, q = 0;
    for (std::size_t i = 1; i <= n && !p; ++i)
      for (std::size_t j = i + 1; j <= n && !p; ++j)
        if (phi0(i - 1, i - 1) != phi0(j - 1, j - 1)) p = i, q = j;
    if (p) {
      res.path = "diagonal";
      const auto perm = complete_perm(n, {p, q});
      const auto phi = star(phi0, permutation(f, perm));
      const auto s = phi0(p - 1, p - 1), t = phi0(q - 1, q - 1);
      const auto id = Matrix<FF>::identity(f, n);
      const auto out = star(phi, GroupElement<FF>(id + e(1, 2))) + phi;
      record("phi*(I+e12) + phi", out, e(1, 2).scaled(f.add(s, t)));
      e12 = record("scale to e12", out.scaled(f.inv(f.add(s, t))), e(1, 2));
    } else {
      res.path = "scalar";
      const auto c = phi0(0, 0);
      const auto alpha = primitive_element(f);
      const auto d = star(phi0, GroupElement<FF>(diagonal_first(f, n, alpha))) - phi0;
      record("phi*diag(alpha,1,...) - phi", d, e(1, 1).scaled(f.mul(c, f.sub(alpha, f.one()))));
      const auto e11 = d.scaled(f.inv(f.mul(c, f.sub(alpha, f.one()))));
      const auto id = Matrix<FF>::identity(f, n);
      e12 = record("e11*(I+e12) + e11", star(e11, GroupElement<FF>(id + e(1, 2))) + e11, e(1, 2));
    }
  }

  // e12 → e11 through the α-identity at two values of α; e21 is a permutation image of e12.
  const auto id = Matrix<FF>::identity(f, n);
  const auto e21 = record("permute e12 to e21", star(*e12, permutation(f, complete_perm(n, {2, 1}))), e(2, 1));
  const auto alpha = primitive_element(f);
  const auto alpha2 = f.mul(alpha, alpha);
  std::vector<SemilinearMap> y;
  for (auto al : {alpha, alpha2}) {
    const auto a2 = f.mul(al, al), a3 = f.mul(a2, al);
    const auto x = star(*e12, GroupElement<FF>(id + e(2, 1).scaled(al))) + *e12;
    record("e12*(I+a*e21) + e12", x, e(1, 1).scaled(a2) + e(2, 2).scaled(al) + e(2, 1).scaled(a3));
    // (x − α³e21)/α = α e11 + e22
    y.push_back((x - e21.scaled(a3)).scaled(f.inv(al)));
  }
  const auto e11 = (y[0] - y[1]).scaled(f.inv(f.sub(alpha, alpha2)));
  record("difference isolates e11", e11, e(1, 1));
  res.ok = ok;
  return res;
}

GammaReport verify_gamma_irreducible(std::size_t n, const FiniteField& f, std::uint64_t seed) {
  require_char2(f);
  if (f.order() < 4) throw Error("irreducibility of the semilinear module needs |F| >= 4");
  const auto gens = standard_generators(f, n);
  const auto mod = gamma_module(f, gens);
  GammaReport rep;
  std::mt19937_64 rng(derive_seed(seed, "gamma-replay"));
  auto rnd = [&] { return static_cast<FF::Elem>(rng() % static_cast<std::uint64_t>(f.order())); };
  std::vector<SemilinearMap> samples;
  // one representative per proof case plus random maps
  {
    SemilinearMap off(f, n, n);
    off(n - 1, 0) = f.one();
    off(1, 1) = rnd();
    samples.push_back(off);
    SemilinearMap diag(f, n, n);
    for (std::size_t i = 0; i < n; ++i) diag(i, i) = f.from_int(static_cast<long long>(i % 2));
    samples.push_back(diag);
    samples.push_back(Matrix<FF>::identity(f, n).scaled(primitive_element(f)));
    for (int t = 0; t < 5; ++t) {
      SemilinearMap m(f, n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rnd();
      if (!m.is_zero()) samples.push_back(m);
    }
  }
  bool ok = true;
  for (const auto& s : samples) {
    auto r = replay_extraction(s);
    ok = ok && r.ok;
    rep.cases.push_back(std::move(r));
  }
  // e11 generates everything
  ok = ok && mod.spin({flatten(matrix_unit(f, n, 1, 1))}).dim() == n * n;
  rep.replay_ok = ok;
  rep.norton = norton_irreducible(mod, derive_seed(seed, "gamma-norton"));
  return rep;
}

std::vector<Claim> semilinear_claims(std::size_t n, const FiniteField& f, std::uint64_t seed) {
  const std::string tag = "n" + std::to_string(n) + "." + f.name();
  std::vector<Claim> out;
  const auto gens = standard_generators(f, n);
  const auto c = basis_C(n, f), k = basis_K(n, f);

  // Σ(λg) = Σ(λ)∗g over a basis of C and every generator
  bool gmap = true;
  for (const auto& b : c.basis_rows()) {
    const SVF lam(f, n, b);
    for (const auto& g : gens.elements) gmap = gmap && sigma(act(lam, g)) == star(sigma(lam), g);
  }
  out.push_back(make_claim("semilinear.sigma-equivariant." + tag, anchors::kSemilinearModule, gmap, true, gmap));

  // kernel and image of Σ on C
  Matrix<FF> sig(f, c.dim(), n * n);
  for (std::size_t r = 0; r < c.dim(); ++r) {
    const auto v = flatten(sigma(SVF(f, n, c.basis().row(r))));
    std::copy(v.begin(), v.end(), sig.row_ptr(r));
  }
  const auto rel = null_space(sig.transpose());  // coefficient vectors killed by Σ
  std::vector<Row<FF>> kernel_rows;
  for (const auto& co : rel.basis_rows()) kernel_rows.push_back(c.combination(co));
  const auto ker = Subspace<FF>::span(f, n * n * n, kernel_rows);
  out.push_back(make_claim("semilinear.sigma-kernel-is-K." + tag, anchors::kSemilinearModule, ker == k,
                           static_cast<long long>(k.dim()), static_cast<long long>(ker.dim())));
  const auto rk = rank(sig);
  out.push_back(make_claim("semilinear.sigma-onto." + tag, anchors::kSemilinearModule, rk == n * n,
                           static_cast<long long>(n * n), static_cast<long long>(rk)));

  // α-identity for every α ∈ F
  bool ident = true;
  const auto id = Matrix<FF>::identity(f, n);
  const auto e12 = matrix_unit(f, n, 1, 2);
  for (auto al : enumerate(f)) {
    const auto a2 = f.mul(al, al), a3 = f.mul(a2, al);
    const auto lhs = star(e12, GroupElement<FF>(id + matrix_unit(f, n, 2, 1).scaled(al))) + e12;
    const auto rhs = matrix_unit(f, n, 1, 1).scaled(a2) + matrix_unit(f, n, 2, 2).scaled(al) +
                     matrix_unit(f, n, 2, 1).scaled(a3);
    ident = ident && lhs == rhs;
  }
  out.push_back(make_claim("semilinear.alpha-identity." + tag, anchors::kSemilinearModule, ident, true, ident));

  const auto rep = verify_gamma_irreducible(n, f, seed);
  json steps = json::array();
  for (const auto& cs : rep.cases) steps.push_back({{"path", cs.path}, {"ok", cs.ok}, {"steps", cs.steps}});
  out.push_back(make_claim("semilinear.irreducible-replay." + tag, anchors::kSemilinearModule, rep.replay_ok,
                           "irreducible", rep.replay_ok ? "irreducible" : "replay failed", {{"cases", steps}}));
  Claim nc = make_claim("semilinear.irreducible-meataxe." + tag, anchors::kSemilinearModule,
                        rep.norton.verdict == Verdict::Irreducible, "irreducible", verdict_name(rep.norton.verdict),
                        {{"method", rep.norton.method}, {"attempts", rep.norton.attempts}});
  if (rep.norton.verdict == Verdict::Inconclusive) nc.status = Status::Inconclusive;
  out.push_back(std::move(nc));
  return out;
}

}  // namespace algdeg
