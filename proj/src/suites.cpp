#include "algdeg/suites.hpp"

#include "algdeg/degen.hpp"
#include "algdeg/gamma2.hpp"
#include "algdeg/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <random>

namespace algdeg {

namespace {

using Sub = Subspace<FF>;

std::string tag(std::size_t n, const FF& f) { return "n" + std::to_string(n) + "." + f.name(); }

long long ll(std::size_t x) { return static_cast<long long>(x); }

Claim eq_claim(std::string id, const char* anchor, const Sub& computed, const Sub& expected) {
  if (computed == expected)
    return make_claim(std::move(id), anchor, true, json{{"dim", expected.dim()}}, json{{"dim", computed.dim()}});
  return make_claim(std::move(id), anchor, false, subspace_to_json(expected), subspace_to_json(computed));
}

Claim dim_claim(std::string id, const char* anchor, long long expected, long long computed) {
  return make_claim(std::move(id), anchor, expected == computed, expected, computed);
}

Claim bool_claim(std::string id, const char* anchor, bool ok, json data = nullptr) {
  return make_claim(std::move(id), anchor, ok, true, ok, std::move(data));
}

Claim verdict_claim(std::string id, const char* anchor, const NortonResult& r, Verdict expect) {
  Claim c = make_claim(std::move(id), anchor, r.verdict == expect, verdict_name(expect), verdict_name(r.verdict),
                       {{"method", r.method}, {"attempts", r.attempts}});
  if (r.verdict == Verdict::Inconclusive) c.status = Status::Inconclusive;
  return c;
}

Sub point(std::size_t n, const FF& f, long long a, long long d) {
  return basis_MstarP(ProjectivePoint<FF>::from_ints(f, a, d), n, f);
}

Sub zero_sub(std::size_t n, const FF& f) { return Sub::zero(f, n * n * n); }

SVF random_member(const Sub& s, std::size_t n, std::mt19937_64& rng) {
  const auto& f = s.field();
  Row<FF> c(s.dim());
  for (auto& x : c) x = static_cast<FF::Elem>(rng() % static_cast<std::uint64_t>(f.order()));
  return SVF(f, n, s.combination(c));
}

Matrix<FF> omega_matrix(const FF& f, std::size_t n) {
  Matrix<FF> m(f, n * n * n, n);
  for (std::size_t i = 1; i <= n; ++i) m(flat_index(n, i, i, i), i - 1) = f.one();
  return m;
}

// Kernel of v ↦ v·m restricted to s, as a subspace of the ambient space.
Sub restricted_kernel(const Sub& s, const Matrix<FF>& m) {
  const auto img = s.basis() * m;
  std::vector<Row<FF>> rows;
  for (const auto& co : left_null_space(img).basis_rows()) rows.push_back(s.combination(co));
  return Sub::span(s.field(), s.ambient(), rows);
}

// s → V̂ by v ↦ v·m: onto, kernel as predicted, and G-equivariant.
void surjection_claims(std::vector<Claim>& out, const std::string& id, const char* anchor, const Sub& s,
                       const Matrix<FF>& m, const Sub& kernel, std::size_t n, const GeneratorSet<FF>& gens) {
  const auto& f = s.field();
  const auto img = s.basis() * m;
  out.push_back(dim_claim(id + ".onto", anchor, ll(n), ll(rank(img))));
  out.push_back(eq_claim(id + ".kernel", anchor, restricted_kernel(s, m), kernel));
  bool eq = true;
  for (const auto& b : s.basis_rows())
    for (const auto& g : gens.elements) {
      const auto lhs = m.left_apply(act(SVF(f, n, b), g).coords());
      const auto rhs = apply_to_dual(m.left_apply(b), g);
      eq = eq && lhs == rhs;
    }
  out.push_back(bool_claim(id + ".equivariant", anchor, eq));
}

// Some basis element or random combination of Hom(a, b) is invertible.
bool has_isomorphism(const LinearModule<FF>& a, const LinearModule<FF>& b, std::uint64_t seed) {
  if (a.dim != b.dim) return false;
  const auto h = hom_space(a, b);
  if (h.dim() == 0) return false;
  const auto& f = a.field;
  auto as_matrix = [&](const Row<FF>& x) {
    std::vector<Row<FF>> rows;
    for (std::size_t i = 0; i < a.dim; ++i)
      rows.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(i * b.dim),
                        x.begin() + static_cast<std::ptrdiff_t>((i + 1) * b.dim));
    return Matrix<FF>::from_rows(f, b.dim, rows);
  };
  for (const auto& x : h.basis_rows())
    if (rank(as_matrix(x)) == a.dim) return true;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 32; ++t) {
    Row<FF> c(h.dim());
    for (auto& e : c) e = static_cast<FF::Elem>(rng() % static_cast<std::uint64_t>(f.order()));
    if (rank(as_matrix(h.combination(c))) == a.dim) return true;
  }
  return false;
}

LinearModule<FF> quotient(std::size_t n, const GeneratorSet<FF>& gens, const Sub& carrier, const Sub& sub) {
  return lambda_module(n, gens, carrier, sub).module();
}

bool big_field(const FF& f) { return f.order() > 2; }

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

long long parse_int(std::string_view s) {
  const auto t = trim(s);
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + t + "'");
  }
  if (pos != t.size()) throw UsageError("expected an integer, got '" + t + "'");
  return v;
}

std::size_t parse_index(std::string_view s, std::size_t n) {
  const auto v = parse_int(s);
  if (v < 1 || static_cast<std::size_t>(v) > n) throw UsageError("index out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(v);
}

}  // namespace

Claim skipped_claim(std::string id, std::string anchor, std::string reason) {
  Claim c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.status = Status::Skipped;
  c.data = {{"reason", std::move(reason)}};
  return c;
}

std::vector<std::string> split_chain(std::string_view chain) {
  std::vector<std::string> raw;
  std::string cur;
  int depth = 0;
  for (char ch : chain) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      raw.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  raw.push_back(trim(cur));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].rfind("MstarP:", 0) == 0 && raw[i].find(',') == std::string::npos && i + 1 < raw.size()) {
      out.push_back(raw[i] + "," + raw[i + 1]);
      ++i;
    } else {
      out.push_back(raw[i]);
    }
  }
  for (const auto& s : out)
    if (s.empty()) throw UsageError("empty entry in chain '" + std::string(chain) + "'");
  return out;
}

Sub named_submodule(std::string_view name_in, std::size_t n, const FF& f) {
  const auto name = trim(name_in);
  if (name.empty()) throw UsageError("empty submodule name");
  // sums, split at '+' outside parentheses
  int depth = 0;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == '(') ++depth;
    if (name[i] == ')') --depth;
    if (name[i] == '+' && depth == 0)
      return subspace_sum(named_submodule(name.substr(0, i), n, f), named_submodule(name.substr(i + 1), n, f));
  }
  auto pair_point = [&](std::string_view body) {
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw UsageError("projective point needs two coordinates");
    return ProjectivePoint<FF>::from_ints(f, parse_int(body.substr(0, comma)), parse_int(body.substr(comma + 1)));
  };
  if (name.rfind("MstarP:", 0) == 0) return basis_MstarP(pair_point(std::string_view(name).substr(7)), n, f);
  for (const char* prefix : {"Mstar(", "MstarP("})
    if (name.rfind(prefix, 0) == 0 && name.back() == ')') {
      const std::size_t len = std::string_view(prefix).size();
      return basis_MstarP(pair_point(std::string_view(name).substr(len, name.size() - len - 1)), n, f);
    }
  static const std::vector<std::pair<std::string, SubmoduleId>> table = {
      {"0", SubmoduleId::Zero},      {"C", SubmoduleId::C},
      {"K", SubmoduleId::K},         {"Mstar", SubmoduleId::Mstar},
      {"Mstarstar", SubmoduleId::Mstarstar}, {"T", SubmoduleId::T},
      {"Ttilde", SubmoduleId::Ttilde}, {"TcapTtilde", SubmoduleId::TcapTtilde},
      {"N", SubmoduleId::N},         {"U", SubmoduleId::U},
      {"Lambda", SubmoduleId::Lambda}};
  for (const auto& [key, id] : table)
    if (name == key) return canonical_subspace(id, n, f);
  throw UsageError("unknown submodule '" + name + "'");
}

SVF named_vector(std::string_view name_in, std::size_t n, const FF& f) {
  const auto name = trim(name_in);
  if (name == "eta") return eta(f, n);
  if (name == "delta") return delta(f, n);
  if (name == "trace-witness") return trace_witness(f, n);
  if (name.rfind("epstilde", 0) == 0) return epsilon_tilde(f, n, parse_index(std::string_view(name).substr(8), n));
  if (name.rfind("eps", 0) == 0) return epsilon(f, n, parse_index(std::string_view(name).substr(3), n));
  if (name.size() == 3 && std::all_of(name.begin(), name.end(), [](char c) { return c >= '1' && c <= '9'; })) {
    const auto i = parse_index(name.substr(0, 1), n), j = parse_index(name.substr(1, 1), n),
               k = parse_index(name.substr(2, 1), n);
    return SVF::unit(f, n, i, j, k);
  }
  throw UsageError("unknown vector '" + name + "'");
}

std::vector<Claim> dimension_claims(std::size_t n, const FF& f) {
  const auto t = tag(n, f);
  const char* a = anchors::kDimensionTable;
  std::vector<Claim> out;
  if (!big_field(f)) {
    out.push_back(skipped_claim("dim." + t, a));
    return out;
  }
  for (auto id : {SubmoduleId::C, SubmoduleId::K, SubmoduleId::Mstar, SubmoduleId::Mstarstar, SubmoduleId::T,
                  SubmoduleId::Ttilde, SubmoduleId::TcapTtilde, SubmoduleId::N, SubmoduleId::U})
    out.push_back(dim_claim("dim." + submodule_name(id) + "." + t, a, expected_dim(id, ll(n)),
                            ll(canonical_subspace(id, n, f).dim())));
  out.push_back(eq_claim("dim.N-table-equals-C-cap-T." + t, a, basis_N_table(n, f), basis_N(n, f)));
  return out;
}

std::vector<Claim> spin_identity_claims(std::size_t n, const FF& f) {
  const auto t = tag(n, f);
  const char* a = anchors::kSpinIdentities;
  if (!big_field(f)) return {skipped_claim("spin." + t, a)};
  const auto gens = standard_generators(f, n);
  return {eq_claim("spin.eta-is-U." + t, a, spin(eta(f, n), gens), basis_U(n, f)),
          eq_claim("spin.delta-is-N." + t, a, spin(delta(f, n), gens), basis_N(n, f))};
}

std::vector<Claim> intersection_claims(std::size_t n, const FF& f) {
  const auto t = tag(n, f);
  const char* a = anchors::kIntersectionTable;
  if (!big_field(f)) return {skipped_claim("intersect." + t, a)};
  const int p = f.characteristic();
  const long long nn = ll(n);
  const auto C = basis_C(n, f), K = basis_K(n, f), Ms = basis_Mstar(n, f), Mss = basis_Mstarstar(n, f);
  const auto T = basis_T(n, f), Tt = basis_Ttilde(n, f), TT = basis_TcapTtilde(n, f);
  const auto N = basis_N(n, f), U = basis_U(n, f), Z = zero_sub(n, f);
  const auto cap = [](const Sub& x, const Sub& y) { return subspace_intersect(x, y); };
  const auto sum = [](const Sub& x, const Sub& y) { return subspace_sum(x, y); };
  std::vector<Claim> out;
  out.push_back(eq_claim("intersect.C-Mstar." + t, a, cap(C, Ms), point(n, f, 1, 1)));
  out.push_back(eq_claim("intersect.K-Mstar." + t, a, cap(K, Ms), point(n, f, 1, -1)));
  out.push_back(eq_claim("intersect.T-Mstar." + t, a, cap(T, Ms), point(n, f, -nn, 1)));
  out.push_back(eq_claim("intersect.Ttilde-Mstar." + t, a, cap(Tt, Ms), point(n, f, 1, -nn)));
  out.push_back(eq_claim("intersect.U-Mstar." + t, a, cap(U, Ms),
                         char_divides(p, nn - 1) ? point(n, f, 1, -1) : Z));
  out.push_back(eq_claim("intersect.N-Mstar." + t, a, cap(N, Ms), char_divides(p, nn + 1) ? point(n, f, 1, 1) : Z));
  out.push_back(bool_claim("intersect.Mstar-in-Mstarstar." + t, a, Mss.contains(Ms)));
  out.push_back(bool_claim("intersect.K-in-Mstarstar." + t, a, Mss.contains(K)));
  if (p == 2) {
    out.push_back(eq_claim("intersect.C-Mstarstar-is-K." + t, a, cap(C, Mss), K));
    out.push_back(eq_claim("intersect.N-Mstarstar-is-U." + t, a, cap(N, Mss), U));
    out.push_back(dim_claim("intersect.dim-N-plus-Mstarstar." + t, a, (nn * nn * nn + nn * nn) / 2 + nn,
                            ll(sum(N, Mss).dim())));
    out.push_back(bool_claim("intersect.K-in-C." + t, a, C.contains(K)));
    // λ ↦ λ + λ̃ on T∩T̃
    std::vector<Row<FF>> imgs;
    Matrix<FF> m(f, TT.dim(), n * n * n);
    for (std::size_t r = 0; r < TT.dim(); ++r) {
      const auto v = plus_tilde(SVF(f, n, TT.basis().row(r))).coords();
      std::copy(v.begin(), v.end(), m.row_ptr(r));
      imgs.push_back(v);
    }
    std::vector<Row<FF>> ker;
    for (const auto& co : left_null_space(m).basis_rows()) ker.push_back(TT.combination(co));
    out.push_back(eq_claim("intersect.plus-tilde-kernel-is-N." + t, a, Sub::span(f, n * n * n, ker), N));
    out.push_back(eq_claim("intersect.plus-tilde-image-is-U." + t, a, Sub::span(f, n * n * n, imgs), U));
  } else {
    out.push_back(eq_claim("intersect.C-Mstarstar." + t, a, cap(C, Mss), point(n, f, 1, 1)));
    out.push_back(eq_claim("intersect.C-Mstarstar-equals-C-Mstar." + t, a, cap(C, Mss), cap(C, Ms)));
    out.push_back(eq_claim("intersect.N-Mstarstar." + t, a, cap(N, Mss),
                           char_divides(p, nn + 1) ? point(n, f, 1, 1) : Z));
    out.push_back(bool_claim("intersect.Lambda-is-C-direct-K." + t, a,
                             cap(C, K).dim() == 0 && sum(C, K).dim() == n * n * n));
    out.push_back(bool_claim("intersect.TcapTtilde-is-U-direct-N." + t, a, cap(U, N).dim() == 0 && sum(U, N) == TT));
  }
  if (char_divides(p, nn + 1)) {
    out.push_back(eq_claim("intersect.T-Mstarstar-equals-Ttilde-Mstarstar." + t, a, cap(T, Mss), cap(Tt, Mss)));
    out.push_back(dim_claim("intersect.dim-TcapTtilde-Mstarstar." + t, a, (nn * nn * nn - nn * nn) / 2,
                            ll(cap(TT, Mss).dim())));
  }
  return out;
}

std::vector<Claim> trace_biconditional_claims(std::size_t n, const FF& f) {
  const auto t = tag(n, f);
  const char* a = anchors::kTraceBiconditional;
  if (!big_field(f)) return {skipped_claim("trace." + t, a)};
  const bool divides = char_divides(f.characteristic(), ll(n) + 1);
  const auto Mss = basis_Mstarstar(n, f);
  const auto tm = subspace_intersect(basis_T(n, f), Mss), ttm = subspace_intersect(basis_Ttilde(n, f), Mss);
  const auto w = trace_witness(f, n);
  std::vector<Claim> out;
  out.push_back(make_claim("trace.T-Mstarstar-equals-Ttilde-Mstarstar-iff-divides." + t, a, (tm == ttm) == divides,
                           divides, tm == ttm,
                           {{"char_divides_n_plus_1", divides}, {"dim_T_cap", tm.dim()}, {"dim_Ttilde_cap", ttm.dim()}}));
  out.push_back(bool_claim("trace.witness-in-Mstarstar." + t, a, predicate_Mstarstar(w)));
  out.push_back(bool_claim("trace.witness-in-Ttilde." + t, a, predicate_Ttilde(w)));
  out.push_back(make_claim("trace.witness-in-T-iff-divides." + t, a, predicate_T(w) == divides, divides,
                           predicate_T(w), {{"witness", structure_vector_to_json(w)}}));
  return out;
}

std::vector<Claim> lindeg_claims(std::size_t n, const FF& f, std::size_t pairs, std::uint64_t seed) {
  const auto t = tag(n, f);
  const char* a = anchors::kLinearDegeneration;
  if (!big_field(f)) return {skipped_claim("lindeg." + t, a)};
  std::mt19937_64 rng(derive_seed(seed, "lindeg." + t));
  const auto gens = standard_generators(f, n);
  const auto q = static_cast<std::uint64_t>(f.order());
  std::size_t done = 0, passed = 0, nontrivial = 0, draws = 0;
  json failures = json::array();
  while (done < pairs) {
    if (++draws > 1000 * pairs) throw Error("could not draw applicable weight sequences");
    QSequence qs(n);
    for (auto& x : qs) x = static_cast<long long>(rng() % 4);
    SVF lam(f, n);
    for (auto& x : lam.coords()) x = static_cast<FF::Elem>(rng() % q);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = 1; k <= n; ++k)
          if (qs[i - 1] + qs[j - 1] - qs[k - 1] < 0) lam.at(i, j, k) = 0;
    if (!lindeg_hypothesis_check(lam, qs, f).applicable) continue;
    ++done;
    const auto trunc = q_truncate(lam, qs);
    if (!(trunc == lam) && !trunc.is_zero()) ++nontrivial;
    if (verify_lindeg(lam, qs, gens))
      ++passed;
    else if (failures.size() < 3)
      failures.push_back({{"q", qs}, {"lambda", structure_vector_to_json(lam)}});
  }
  json data = {{"nontrivial", nontrivial}, {"draws", draws}};
  if (!failures.empty()) data["failures"] = failures;
  return {make_claim("lindeg.truncation-in-spin." + t, a, passed == pairs, ll(pairs), ll(passed), data)};
}

std::vector<Claim> lindeg_example_claims(std::size_t n, const FF& f, std::size_t samples, std::uint64_t seed) {
  const auto t = tag(n, f);
  const char* a = anchors::kLinearDegeneration;
  if (f.order() < 5) return {skipped_claim("lindeg.example." + t, a, "|F| >= 5 required")};
  // every q̂ ∈ {1,2}^n has maximal weight 3 < |F| − 1
  long long worst = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    QSequence qs(n);
    for (std::size_t i = 0; i < n; ++i) qs[i] = (mask >> i & 1) ? 2 : 1;
    worst = std::max(worst, lindeg_hypothesis_check(SVF(f, n), qs, f).max_weight);
  }
  std::vector<Claim> out;
  out.push_back(make_claim("lindeg.example-weight-bound." + t, a, worst < f.order() - 1, "< |F|-1", worst));
  std::mt19937_64 rng(derive_seed(seed, "lindeg-example." + t));
  const auto gens = standard_generators(f, n);
  const auto Ms = basis_Mstar(n, f), Mss = basis_Mstarstar(n, f);
  const auto full = Sub::full(f, n * n * n);
  std::size_t eta_ok = 0, delta_ok = 0;
  for (std::size_t s = 0; s < samples;) {
    const auto lam = random_member(Mss, n, rng);
    if (Ms.contains(lam.coords())) continue;
    ++s;
    if (spin(lam, gens).contains(eta(f, n).coords())) ++eta_ok;
  }
  for (std::size_t s = 0; s < samples;) {
    const auto lam = random_member(full, n, rng);
    if (Mss.contains(lam.coords())) continue;
    ++s;
    if (spin(lam, gens).contains(delta(f, n).coords())) ++delta_ok;
  }
  out.push_back(make_claim("lindeg.example-Mstarstar-reaches-eta." + t, a, eta_ok == samples, ll(samples), ll(eta_ok)));
  out.push_back(make_claim("lindeg.example-outside-Mstarstar-reaches-delta." + t, a, delta_ok == samples, ll(samples),
                           ll(delta_ok)));
  return out;
}

namespace {

struct ReachOutcome {
  bool certificate = false, oracle = false;
  std::string branch, error;
};

ReachOutcome run_reach(const SVF& lam, const GeneratorSet<FF>& gens, bool to_eta) {
  ReachOutcome o;
  try {
    const auto r = to_eta ? reach_eta(lam, gens) : reach_delta(lam, gens);
    o.certificate = r.success;
    o.oracle = r.spin_member;
    o.branch = r.branch;
  } catch (const Error& e) {
    o.error = e.what();
    o.oracle = spin(lam, gens).contains((to_eta ? eta(lam.field(), lam.n()) : delta(lam.field(), lam.n())).coords());
  }
  return o;
}

std::vector<ReachOutcome> run_batch(const std::vector<SVF>& xs, const GeneratorSet<FF>& gens, bool to_eta,
                                    int workers) {
  std::vector<ReachOutcome> res(xs.size());
  if (workers <= 0) {
    for (std::size_t i = 0; i < xs.size(); ++i) res[i] = run_reach(xs[i], gens, to_eta);
  } else {
    const auto count = static_cast<long long>(xs.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic)
    for (long long i = 0; i < count; ++i) res[static_cast<std::size_t>(i)] = run_reach(xs[static_cast<std::size_t>(i)], gens, to_eta);
  }
  return res;
}

void reach_summary(std::vector<Claim>& out, const std::string& base, const std::vector<ReachOutcome>& res,
                   std::map<std::string, std::size_t>* branches) {
  const char* a = anchors::kTransvectionReach;
  std::size_t cert = 0, oracle = 0, agree = 0;
  json errors = json::array();
  std::map<std::string, std::size_t> local;
  for (const auto& r : res) {
    cert += r.certificate;
    oracle += r.oracle;
    agree += r.certificate == r.oracle;
    if (!r.branch.empty()) ++local[r.branch];
    if (!r.error.empty() && errors.size() < 3) errors.push_back(r.error);
  }
  const auto total = ll(res.size());
  json data = {{"branches", local}};
  if (!errors.empty()) data["errors"] = errors;
  out.push_back(make_claim(base + ".certificate", a, ll(cert) == total, total, ll(cert), data));
  out.push_back(make_claim(base + ".spin-oracle", a, ll(oracle) == total, total, ll(oracle)));
  out.push_back(make_claim(base + ".oracles-agree", a, ll(agree) == total, total, ll(agree)));
  if (branches)
    for (const auto& [k, v] : local) (*branches)[k] += v;
}

}  // namespace

ReachSuite reach_claims(std::size_t n, const FF& f, std::size_t samples, std::uint64_t seed, int workers) {
  const auto t = tag(n, f);
  ReachSuite suite;
  if (!big_field(f)) {
    suite.claims.push_back(skipped_claim("reach." + t, anchors::kTransvectionReach));
    return suite;
  }
  const auto gens = standard_generators(f, n);
  std::mt19937_64 rng(derive_seed(seed, "reach." + t));
  const auto Ms = basis_Mstar(n, f), Mss = basis_Mstarstar(n, f), C = basis_C(n, f);
  std::vector<SVF> to_eta, to_delta;
  while (to_eta.size() < samples) {
    auto x = random_member(Mss, n, rng);
    if (!Ms.contains(x.coords())) to_eta.push_back(std::move(x));
  }
  while (to_delta.size() < samples) {
    auto x = random_member(C, n, rng);
    if (!Mss.contains(x.coords())) to_delta.push_back(std::move(x));
  }
  reach_summary(suite.claims, "reach.eta." + t, run_batch(to_eta, gens, true, workers), nullptr);
  reach_summary(suite.claims, "reach.delta." + t, run_batch(to_delta, gens, false, workers), &suite.branches);
  return suite;
}

std::vector<Claim> gf3_branch_claims(const std::map<std::string, std::size_t>& observed) {
  const char* a = anchors::kTransvectionReach;
  const auto f3 = make_finite_field(3, 1);
  const auto gens = standard_generators(f3, 3);
  const auto u = [&](std::size_t i, std::size_t j, std::size_t k) { return SVF::unit(f3, 3, i, j, k); };
  const std::vector<std::pair<std::string, SVF>> fixtures = {
      {"gf3-zero", u(1, 1, 2) + u(3, 3, 3)},
      {"gf3-nonzero", u(1, 1, 2) + u(1, 2, 2) + u(2, 1, 2)},
  };
  std::vector<Claim> out;
  for (const auto& [branch, lam] : fixtures) {
    const auto r = run_reach(lam, gens, false);
    const bool ok = r.branch == branch && r.certificate && r.oracle;
    out.push_back(make_claim("reach.gf3-fixture." + branch, a, ok, branch, r.branch.empty() ? r.error : r.branch,
                             {{"certificate", r.certificate}, {"spin_oracle", r.oracle}}));
  }
  bool both = true;
  for (const char* b : {"gf3-zero", "gf3-nonzero"}) {
    const auto it = observed.find(b);
    both = both && it != observed.end() && it->second > 0;
  }
  json counts = json::object();
  std::size_t total = 0;
  for (const auto& [k, v] : observed) {
    counts[k] = v;
    total += v;
  }
  if (total < 20) {
    Claim c = skipped_claim("reach.gf3-branches-sampled", a, "fewer than 20 GF(3) samples");
    c.data["counts"] = counts;
    out.push_back(std::move(c));
  } else {
    out.push_back(make_claim("reach.gf3-branches-sampled", a, both, true, both, {{"counts", counts}}));
  }
  return out;
}

namespace {

// Submodule lattice of carrier, pulled back to Λ.
std::vector<Sub> lattice_in_lambda(std::size_t n, const GeneratorSet<FF>& gens, const Sub& carrier,
                                   std::uint64_t budget, int workers, SurveyResult* raw = nullptr) {
  const auto h = lambda_module(n, gens, carrier, zero_sub(n, carrier.field()));
  auto res = survey_submodules(h.module(), budget, workers);
  std::vector<Sub> out;
  for (const auto& s : res.lattice) out.push_back(h.pullback(s));
  if (raw) *raw = std::move(res);
  return out;
}

bool same_members(const std::vector<Sub>& got, const std::vector<Sub>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want)
    if (std::find(got.begin(), got.end(), w) == got.end()) return false;
  return true;
}

json dims_json(const std::vector<Sub>& v) {
  json j = json::array();
  for (const auto& s : v) j.push_back(s.dim());
  return j;
}

void survey_fixture(std::vector<Claim>& out, const std::string& id, std::size_t n, const FF& f, const Sub& carrier,
                    const std::vector<Sub>& expected, std::uint64_t seed, std::uint64_t budget, int workers) {
  const char* a = anchors::kSubmoduleSurvey;
  const auto gens = standard_generators(f, n);
  SurveyResult raw;
  const auto got = lattice_in_lambda(n, gens, carrier, budget, workers, &raw);
  out.push_back(make_claim(id + ".lattice", a, same_members(got, expected), dims_json(expected), dims_json(got),
                           {{"lines", raw.lines}, {"cyclic", raw.cyclic}}));
  const auto h = lambda_module(n, gens, carrier, zero_sub(n, f));
  const auto nr = norton_irreducible(h.module(), derive_seed(seed, id));
  const auto expect = got.size() == 2 ? Verdict::Irreducible : Verdict::Reducible;
  out.push_back(verdict_claim(id + ".meataxe-agrees", a, nr, expect));
}

}  // namespace

std::vector<Claim> survey_claims(std::uint64_t seed, std::uint64_t budget, int workers, bool exhaustive_gf5) {
  std::vector<Claim> out;
  const auto f3 = make_finite_field(3, 1);
  const std::size_t n = 3;
  survey_fixture(out, "survey.K.n3.GF(3)", n, f3, basis_K(n, f3),
                 {zero_sub(n, f3), point(n, f3, 1, -1), basis_U(n, f3), basis_K(n, f3)}, seed, budget, workers);
  std::vector<Sub> mstar = {zero_sub(n, f3), basis_Mstar(n, f3)};
  for (const auto& p : projective_line(f3)) mstar.push_back(basis_MstarP(p, n, f3));
  survey_fixture(out, "survey.Mstar.n3.GF(3)", n, f3, basis_Mstar(n, f3), mstar, seed, budget, workers);
  survey_fixture(out, "survey.MstarP(1,0).n3.GF(3)", n, f3, point(n, f3, 1, 0),
                 {zero_sub(n, f3), point(n, f3, 1, 0)}, seed, budget, workers);
  // serial reference and parallel kernel agree
  const auto gens = standard_generators(f3, n);
  const auto serial = lattice_in_lambda(n, gens, basis_K(n, f3), budget, 0);
  const auto parallel = lattice_in_lambda(n, gens, basis_K(n, f3), budget, std::max(workers, 2));
  out.push_back(bool_claim("survey.K.n3.GF(3).serial-equals-parallel", anchors::kSubmoduleSurvey, serial == parallel));
  if (exhaustive_gf5) {
    const auto f5 = make_finite_field(5, 1);
    survey_fixture(out, "survey.K.n3.GF(5)", n, f5, basis_K(n, f5),
                   {zero_sub(n, f5), point(n, f5, 1, -1), basis_U(n, f5), basis_K(n, f5)}, seed, budget, workers);
  }
  return out;
}

std::vector<Claim> chain_claims(const std::vector<std::string>& names, std::size_t n, const FF& f,
                                std::uint64_t seed) {
  const char* a = anchors::kCompositionSeries;
  std::string label;
  for (const auto& s : names) label += (label.empty() ? "" : ",") + s;
  const auto id = "series." + tag(n, f) + "." + label;
  if (!big_field(f)) return {skipped_claim(id, a)};
  std::vector<std::pair<std::string, Sub>> chain;
  for (const auto& s : names) chain.emplace_back(s, named_submodule(s, n, f));
  const auto rep = composition_series(chain, n, standard_generators(f, n), derive_seed(seed, id));
  json factors = json::array();
  for (const auto& fr : rep.factors) {
    json j = {{"lower", fr.lower}, {"upper", fr.upper}, {"dim", fr.dim}, {"verdict", verdict_name(fr.verdict.verdict)},
              {"method", fr.verdict.method}};
    if (fr.verdict.witness) j["witness_dim"] = fr.verdict.witness->dim();
    factors.push_back(std::move(j));
  }
  Claim c = make_claim(id, a, rep.certified, "composition series", rep.certified ? "composition series" : "not certified",
                       {{"factors", factors}});
  if (!rep.conclusive && !rep.certified) c.status = Status::Inconclusive;
  // a reducible factor is a definite answer even if another factor is inconclusive
  for (const auto& fr : rep.factors)
    if (fr.verdict.verdict == Verdict::Reducible) c.status = Status::Falsified;
  return {c};
}

std::vector<Claim> composition_claims(std::uint64_t seed, std::uint64_t budget, int workers, bool exhaustive_gf5) {
  std::vector<Claim> out;
  const auto f5 = make_finite_field(5, 1), f3 = make_finite_field(3, 1), f4 = make_finite_field(2, 2);
  const std::vector<std::tuple<std::size_t, FF, std::vector<std::string>>> fixtures = {
      {3, f5, {"0", "Mstar(1,-1)", "K"}},
      {3, f5, {"0", "U", "K"}},
      {4, f3, {"0", "Mstar(1,-1)", "U", "K"}},
      {3, f4, {"0", "Mstar(1,1)", "U", "K", "C"}},
      {3, f4, {"0", "Mstar(1,1)", "U", "N", "C"}},
      {4, f4, {"0", "U", "K", "C"}},
      {4, f4, {"0", "Mstar(1,1)", "K", "C"}},
      {4, f4, {"0", "U", "N", "C"}},
  };
  for (const auto& [n, f, names] : fixtures) {
    auto cs = chain_claims(names, n, f, seed);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  const char* a = anchors::kCompositionSeries;
  // K = U ⊕ M*(1,−1) at n = 3, GF(5): exactly two composition series
  out.push_back(bool_claim("series.n3.GF(5).K-is-U-direct-Mstar(1,-1)", a,
                           subspace_intersect(basis_U(3, f5), point(3, f5, 1, -1)).dim() == 0 &&
                               subspace_sum(basis_U(3, f5), point(3, f5, 1, -1)) == basis_K(3, f5)));
  if (exhaustive_gf5) {
    const auto got = lattice_in_lambda(3, standard_generators(f5, 3), basis_K(3, f5), budget, workers);
    out.push_back(make_claim("series.n3.GF(5).K-has-exactly-two-series", a, got.size() == 4, 4, ll(got.size()),
                             {{"lattice_dims", dims_json(got)}}));
  }
  // n = 4, GF(3): U ∩ M* = M*(1,−1), so the chain through U is forced
  out.push_back(eq_claim("series.n4.GF(3).U-cap-Mstar", a, subspace_intersect(basis_U(4, f3), basis_Mstar(4, f3)),
                         point(4, f3, 1, -1)));
  return out;
}

std::vector<Claim> lattice_claims(std::size_t n, const FF& f, std::uint64_t seed) {
  const auto t = tag(n, f);
  const char* a = anchors::kLatticeDiagrams;
  if (!big_field(f)) return {skipped_claim("lattice." + t, a)};
  const int p = f.characteristic();
  const long long nn = ll(n), n2 = nn * nn, n3 = n2 * nn;
  const auto gens = standard_generators(f, n);
  const auto Lam = Sub::full(f, n * n * n), Z = zero_sub(n, f);
  const auto C = basis_C(n, f), K = basis_K(n, f), Ms = basis_Mstar(n, f), Mss = basis_Mstarstar(n, f);
  const auto T = basis_T(n, f), TT = basis_TcapTtilde(n, f), N = basis_N(n, f), U = basis_U(n, f);
  const auto trm = trace_matrix(f, n, false), om = omega_matrix(f, n);
  const auto vhat = dual_space_module(f, gens);
  const auto nr = [&](const std::string& id, const LinearModule<FF>& m) {
    return verdict_claim(id, a, norton_irreducible(m, derive_seed(seed, id)), Verdict::Irreducible);
  };
  std::vector<Claim> out;

  // filtration factors isomorphic to V̂
  surjection_claims(out, "lattice.Lambda-mod-T-via-tr." + t, a, Lam, trm, T, n, gens);
  surjection_claims(out, "lattice.K-mod-U-via-tr." + t, a, K, trm, U, n, gens);
  surjection_claims(out, "lattice.C-mod-N-via-tr." + t, a, C, trm, N, n, gens);
  surjection_claims(out, "lattice.Mstarstar-mod-K-via-omega." + t, a, Mss, om, K, n, gens);

  // submodules of M**
  const auto UM = subspace_sum(U, Ms);
  if (!char_divides(p, nn - 1)) {
    out.push_back(eq_claim("lattice.Mstarstar.U-cap-Mstar-zero." + t, a, subspace_intersect(U, Ms), Z));
    out.push_back(eq_claim("lattice.Mstarstar.U-plus-Mstar-is-Mstarstar." + t, a, UM, Mss));
    const auto h = lambda_module(n, gens, Mss, Ms);
    out.push_back(bool_claim("lattice.Mstarstar.Mstarstar-mod-Mstar-iso-U." + t, a,
                             h.pushforward(U).dim() == U.dim() && U.dim() == h.dim()));
  } else {
    out.push_back(eq_claim("lattice.Mstarstar.U-cap-Mstar." + t, a, subspace_intersect(U, Ms), point(n, f, 1, -1)));
    out.push_back(dim_claim("lattice.Mstarstar.dim-U-plus-Mstar." + t, a, (n3 - n2) / 2, ll(UM.dim())));
    out.push_back(eq_claim("lattice.Mstarstar.U-plus-Mstar-is-ker-omega-minus-tr." + t, a,
                           restricted_kernel(Mss, om - trm), UM));
    out.push_back(eq_claim("lattice.Mstarstar.K-cap-U-plus-Mstar-is-U." + t, a, subspace_intersect(K, UM), U));
    const auto h = lambda_module(n, gens, UM, Ms);
    out.push_back(bool_claim("lattice.Mstarstar.U-plus-Mstar-mod-Mstar-iso-U-mod-P." + t, a,
                             h.pushforward(U).dim() == h.dim() && h.dim() == U.dim() - n));
    const auto top = hom_space(quotient(n, gens, Mss, Ms), vhat).dim();
    const auto bottom = hom_space(quotient(n, gens, U, Z), vhat).dim();
    out.push_back(make_claim("lattice.Mstarstar.Vhat-top-of-Mstarstar-mod-Mstar." + t, a, top > 0, "> 0", ll(top)));
    out.push_back(dim_claim("lattice.Mstarstar.Vhat-not-top-of-U." + t, a, 0, ll(bottom)));
  }

  // Λ over M**
  const auto NM = subspace_sum(N, Mss);
  if (p == 2) {
    out.push_back(eq_claim("lattice.Lambda.N-cap-Mstarstar-is-U." + t, a, subspace_intersect(N, Mss), U));
    out.push_back(dim_claim("lattice.Lambda.dim-N-plus-Mstarstar." + t, a, (n3 + n2) / 2 + nn, ll(NM.dim())));
    out.push_back(nr("lattice.Lambda.N-plus-Mstarstar-mod-Mstarstar-irreducible." + t, quotient(n, gens, NM, Mss)));
    const auto TM = subspace_sum(TT, Mss);
    if (nn % 2 == 0) {
      const auto top = quotient(n, gens, Lam, NM);
      out.push_back(bool_claim("lattice.Lambda.top-iso-U." + t, a,
                               has_isomorphism(top, quotient(n, gens, U, Z), derive_seed(seed, "iso" + t)),
                               {{"dim", top.dim}, {"dim_TcapTtilde_plus_Mstarstar", TM.dim()}}));
      out.push_back(nr("lattice.Lambda.top-irreducible." + t, top));
    } else {
      out.push_back(dim_claim("lattice.Lambda.dim-TcapTtilde-plus-Mstarstar." + t, a, n3 - nn, ll(TM.dim())));
      out.push_back(bool_claim("lattice.Lambda.TcapTtilde-plus-Mstarstar-properly-contains-N-plus-Mstarstar." + t, a,
                               TM.contains(NM) && TM.dim() > NM.dim()));
      out.push_back(nr("lattice.Lambda.Lambda-mod-TcapTtilde-plus-Mstarstar-irreducible." + t,
                       quotient(n, gens, Lam, TM)));
      out.push_back(nr("lattice.Lambda.TcapTtilde-plus-Mstarstar-mod-N-plus-Mstarstar-irreducible." + t,
                       quotient(n, gens, TM, NM)));
    }
  } else if (!char_divides(p, nn + 1)) {
    out.push_back(eq_claim("lattice.Lambda.N-cap-Mstarstar-zero." + t, a, subspace_intersect(N, Mss), Z));
    out.push_back(eq_claim("lattice.Lambda.N-plus-Mstarstar-is-Lambda." + t, a, NM, Lam));
    const auto h = lambda_module(n, gens, Lam, Mss);
    out.push_back(bool_claim("lattice.Lambda.Lambda-mod-Mstarstar-iso-N." + t, a,
                             h.pushforward(N).dim() == N.dim() && N.dim() == h.dim()));
  } else {
    out.push_back(eq_claim("lattice.Lambda.N-cap-Mstarstar." + t, a, subspace_intersect(N, Mss), point(n, f, 1, 1)));
    out.push_back(dim_claim("lattice.Lambda.dim-N-plus-Mstarstar." + t, a, n3 - nn, ll(NM.dim())));
    surjection_claims(out, "lattice.Lambda.Lambda-mod-N-plus-Mstarstar-via-psi." + t, a, Lam, psi_matrix(f, n), NM, n,
                      gens);
    const auto top = hom_space(quotient(n, gens, Lam, Mss), vhat).dim();
    const auto bottom = hom_space(quotient(n, gens, N, Z), vhat).dim();
    out.push_back(make_claim("lattice.Lambda.Vhat-top-of-Lambda-mod-Mstarstar." + t, a, top > 0, "> 0", ll(top)));
    out.push_back(dim_claim("lattice.Lambda.Vhat-not-top-of-N." + t, a, 0, ll(bottom)));
  }
  return out;
}

json config_to_json(const SuiteConfig& c) {
  json fields = json::array();
  for (const auto& f : c.fields) fields.push_back(f.name());
  return {{"n", c.ns},           {"fields", fields},   {"seed", c.seed},       {"budget", c.budget},
          {"samples", c.samples}, {"pairs", c.pairs},  {"fixtures", c.fixtures}};
}

Report verify_all(const SuiteConfig& c) {
  Report rep;
  rep.command = "verify-all";
  rep.config = config_to_json(c);
  auto run = [&](const std::function<std::vector<Claim>()>& suite) {
    const auto t0 = std::chrono::steady_clock::now();
    auto cs = suite();
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (auto& cl : cs) {
      if (c.timings) cl.seconds = dt / static_cast<double>(cs.size());
      rep.add(std::move(cl));
    }
  };
  std::map<std::string, std::size_t> branches;
  bool saw_gf3 = false;
  for (const auto n : c.ns) {
    if (n < 3) throw UsageError("n must be at least 3");
    for (const auto& f : c.fields) {
      run([&] { return dimension_claims(n, f); });
      run([&] { return spin_identity_claims(n, f); });
      run([&] { return intersection_claims(n, f); });
      run([&] { return trace_biconditional_claims(n, f); });
      run([&] { return lindeg_claims(n, f, c.pairs, c.seed); });
      run([&] { return lindeg_example_claims(n, f, std::min<std::size_t>(c.samples, 20), c.seed); });
      run([&] {
        auto s = reach_claims(n, f, c.samples, c.seed, c.workers);
        for (const auto& [k, v] : s.branches) branches[k] += v;
        return s.claims;
      });
      if (f.order() == 3) saw_gf3 = true;
      run([&] { return lattice_claims(n, f, c.seed); });
      if (f.characteristic() == 2 && f.order() >= 4) run([&] { return semilinear_claims(n, f, c.seed); });
    }
  }
  if (saw_gf3) run([&] { return gf3_branch_claims(branches); });
  if (c.fixtures) {
    run([&] { return survey_claims(c.seed, c.budget, c.workers, false); });
    run([&] { return composition_claims(c.seed, c.budget, c.workers, false); });
  }
  return rep;
}

}  // namespace algdeg
