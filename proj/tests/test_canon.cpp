#include <doctest.h>

#include "algdeg/canon.hpp"

#include <functional>
#include <random>

using namespace algdeg;

namespace {

using FF = FiniteField;
using SV = StructureVector<FF>;
using Id = SubmoduleId;

const std::vector<std::pair<int, int>> kFields = {{2, 1}, {3, 1}, {5, 1}, {2, 2}};

Matrix<FF> random_invertible(const FF& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix<FF> m(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<FF::Elem>(rng() % f.order());
    if (rank(m) == n) return m;
  }
}

SV random_member(const Subspace<FF>& s, std::size_t n, std::mt19937_64& rng) {
  const auto& f = s.field();
  Row<FF> c(s.dim());
  for (auto& x : c) x = static_cast<FF::Elem>(rng() % f.order());
  return SV(f, n, s.combination(c));
}

SV random_sv(const FF& f, std::size_t n, std::mt19937_64& rng) {
  SV s(f, n);
  for (auto& x : s.coords()) x = static_cast<FF::Elem>(rng() % f.order());
  return s;
}

}  // namespace

TEST_CASE("dimensions of the canonical submodules") {
  for (auto [p, k] : kFields) {
    auto f = make_finite_field(p, k);
    for (std::size_t n : {3u, 4u}) {
      CAPTURE(f.name());
      CAPTURE(n);
      for (Id id : {Id::Zero, Id::C, Id::K, Id::Mstar, Id::Mstarstar, Id::T, Id::Ttilde, Id::TcapTtilde, Id::N,
                    Id::U, Id::Lambda}) {
        CAPTURE(submodule_name(id));
        CHECK(static_cast<long long>(canonical_subspace(id, n, f).dim()) == expected_dim(id, n));
      }
    }
  }
  CHECK(expected_dim(Id::C, 3) == 18);
  CHECK(expected_dim(Id::N, 3) == 15);
  CHECK(expected_dim(Id::U, 3) == 6);
  CHECK(expected_dim(Id::Mstarstar, 4) == 28);
  CHECK_THROWS_AS(basis_C(2, make_finite_field(3, 1)), Error);
}

TEST_CASE("condition subspaces agree with the bases") {
  for (auto [p, k] : kFields) {
    auto f = make_finite_field(p, k);
    for (std::size_t n : {3u, 4u}) {
      CHECK(detail::conditions_subspace(f, n, conditions_C(f, n)) == basis_C(n, f));
      CHECK(detail::conditions_subspace(f, n, conditions_K(f, n)) == basis_K(n, f));
      CHECK(detail::conditions_subspace(f, n, conditions_Mstar(f, n)) == basis_Mstar(n, f));
      CHECK(detail::conditions_subspace(f, n, conditions_Mstarstar(f, n)) == basis_Mstarstar(n, f));
      CHECK(basis_N_table(n, f) == subspace_intersect(basis_C(n, f), basis_T(n, f)));
      CHECK(basis_N(n, f) == basis_N_table(n, f));
    }
  }
}

TEST_CASE("predicates agree with membership") {
  std::mt19937_64 rng(31);
  using Pred = std::function<bool(const SV&)>;
  for (auto [p, k] : kFields) {
    auto f = make_finite_field(p, k);
    for (std::size_t n : {3u, 4u}) {
      std::vector<std::pair<Id, Pred>> cases = {
          {Id::C, predicate_C<FF>},   {Id::K, predicate_K<FF>},           {Id::Mstar, predicate_Mstar<FF>},
          {Id::Mstarstar, predicate_Mstarstar<FF>}, {Id::T, predicate_T<FF>}, {Id::Ttilde, predicate_Ttilde<FF>},
          {Id::N, predicate_N<FF>},   {Id::U, predicate_U<FF>}};
      for (auto& [id, pred] : cases) {
        CAPTURE(submodule_name(id));
        auto s = canonical_subspace(id, n, f);
        for (int trial = 0; trial < 6; ++trial) {
          auto m = random_member(s, n, rng);
          CHECK(pred(m));
          auto r = random_sv(f, n, rng);
          CHECK(pred(r) == s.contains(r.coords()));
          auto nudged = m + SV::unit(f, n, 1 + rng() % n, 1 + rng() % n, 1 + rng() % n);
          CHECK(pred(nudged) == s.contains(nudged.coords()));
        }
      }
    }
  }
}

TEST_CASE("canonical submodules are stable under the group") {
  std::mt19937_64 rng(13);
  for (auto [p, k] : kFields) {
    auto f = make_finite_field(p, k);
    const std::size_t n = 3;
    std::vector<Subspace<FF>> subs;
    for (Id id : {Id::C, Id::K, Id::Mstar, Id::Mstarstar, Id::T, Id::Ttilde, Id::N, Id::U})
      subs.push_back(canonical_subspace(id, n, f));
    for (const auto& pt : projective_line(f)) subs.push_back(basis_MstarP(pt, n, f));
    for (int trial = 0; trial < 3; ++trial) {
      GroupElement<FF> g(random_invertible(f, n, rng));
      for (const auto& s : subs)
        for (const auto& b : s.basis_rows()) CHECK(s.contains(act(SV(f, n, b), g).coords()));
    }
  }
}

TEST_CASE("intersections with Mstar follow the projective-point table") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}}) {
    auto f = make_finite_field(p, k);
    for (std::size_t n : {3u, 4u, 5u}) {
      CAPTURE(f.name());
      CAPTURE(n);
      const long long ni = static_cast<long long>(n);
      auto ms = basis_Mstar(n, f);
      auto point = [&](long long a, long long d) { return basis_MstarP(ProjectivePoint<FF>::from_ints(f, a, d), n, f); };
      auto zero = Subspace<FF>::zero(f, n * n * n);
      CHECK(subspace_intersect(basis_C(n, f), ms) == point(1, 1));
      CHECK(subspace_intersect(basis_K(n, f), ms) == point(1, -1));
      CHECK(subspace_intersect(basis_T(n, f), ms) == point(-ni, 1));
      CHECK(subspace_intersect(basis_Ttilde(n, f), ms) == point(1, -ni));
      CHECK(subspace_intersect(basis_U(n, f), ms) == (char_divides(p, ni - 1) ? point(1, -1) : zero));
      CHECK(subspace_intersect(basis_N(n, f), ms) == (char_divides(p, ni + 1) ? point(1, 1) : zero));
      for (const auto& pt : projective_line(f)) {
        auto sp = basis_MstarP(pt, n, f);
        CHECK(sp.dim() == n);
        CHECK(ms.contains(sp));
      }
    }
  }
}

TEST_CASE("projective points") {
  auto f5 = make_finite_field(5, 1);
  CHECK(projective_line(f5).size() == 6);
  CHECK(ProjectivePoint<FF>::from_ints(f5, 2, 4) == ProjectivePoint<FF>::from_ints(f5, 1, 2));
  CHECK(ProjectivePoint<FF>::from_ints(f5, 0, 3) == ProjectivePoint<FF>::from_ints(f5, 0, 1));
  CHECK(ProjectivePoint<FF>::from_ints(f5, -3, 1).to_string(f5) == "(1,3)");
  CHECK_THROWS_AS(ProjectivePoint<FF>::from_ints(f5, 5, 0), Error);
  auto f2 = make_finite_field(2, 1);
  CHECK(ProjectivePoint<FF>::from_ints(f2, 1, 1) == ProjectivePoint<FF>::from_ints(f2, 1, -1));
}

TEST_CASE("omega on Mstarstar") {
  auto f3 = make_finite_field(3, 1);
  const std::size_t n = 3;
  Row<FF> mu = {1, 2, 0};
  auto pre = omega_preimage(f3, mu);
  CHECK(predicate_Mstarstar(pre));
  CHECK(omega(pre) == mu);
  CHECK(is_zero_row(f3, std::span<const FF::Elem>(omega(eta(f3, n)))));
  CHECK_THROWS_AS(omega(delta(f3, n)), Error);
  auto k = basis_K(n, f3);
  for (const auto& b : k.basis_rows()) CHECK(is_zero_row(f3, std::span<const FF::Elem>(omega(SV(f3, n, b)))));
}

TEST_CASE("trace witness lies in T exactly when the characteristic divides n+1") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {7, 1}}) {
    auto f = make_finite_field(p, k);
    for (std::size_t n : {3u, 4u, 5u, 6u}) {
      auto w = trace_witness(f, n);
      CHECK(tr(w) == scaled_row(f, f.from_int(static_cast<long long>(n) + 1), unit_row(f, n, 0)));
      CHECK(is_zero_row(f, std::span<const FF::Elem>(trace_form_op(w))));
      CHECK(basis_T(n, f).contains(w.coords()) == char_divides(p, static_cast<long long>(n) + 1));
    }
  }
}

TEST_CASE("rational field canonical submodules") {
  RationalField q;
  for (Id id : {Id::C, Id::K, Id::Mstar, Id::Mstarstar, Id::N, Id::U})
    CHECK(static_cast<long long>(canonical_subspace(id, 3, q).dim()) == expected_dim(id, 3));
  auto ms = basis_Mstar(3, q);
  CHECK(subspace_intersect(basis_U(3, q), ms).dim() == 0);
  CHECK(subspace_intersect(basis_N(3, q), ms).dim() == 0);
}
