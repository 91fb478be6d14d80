#include <doctest.h>

#include "algdeg/canon.hpp"
#include "algdeg/degen.hpp"

#include <random>

using namespace algdeg;

namespace {

SVF u(const FF& f, std::size_t n, std::size_t a, std::size_t b, std::size_t c) { return SVF::unit(f, n, a, b, c); }

SVF random_member(const Subspace<FF>& s, std::size_t n, std::mt19937_64& rng) {
  const auto& f = s.field();
  Row<FF> c(s.dim());
  for (auto& x : c) x = static_cast<FF::Elem>(rng() % f.order());
  return SVF(f, n, s.combination(c));
}

Row<FF> random_row(const FF& f, std::size_t n, std::mt19937_64& rng) {
  Row<FF> r(n);
  for (auto& x : r) x = static_cast<FF::Elem>(rng() % f.order());
  return r;
}

// random z ≠ 0 and ζ ≠ 0 with ζ(z) = 0
TransvectionSpec random_spec(const FF& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto z = random_row(f, n, rng);
    auto zeta = random_row(f, n, rng);
    if (is_zero_row(f, std::span<const FF::Elem>(z)) || is_zero_row(f, std::span<const FF::Elem>(zeta))) continue;
    std::size_t p = 0;
    while (z[p] == 0) ++p;
    // adjust ζ_p so that ζ(z) = 0
    zeta[p] = 0;
    zeta[p] = f.neg(f.div(evaluate(f, zeta, z), z[p]));
    if (is_zero_row(f, std::span<const FF::Elem>(zeta))) continue;
    FF::Elem alpha;
    do alpha = static_cast<FF::Elem>(rng() % f.order());
    while (alpha == 0 || alpha == 1);
    return {z, zeta, alpha};
  }
}

}  // namespace

TEST_CASE("weight truncation") {
  auto f5 = make_finite_field(5, 1);
  auto lam = u(f5, 3, 3, 3, 1) + u(f5, 3, 1, 1, 2);
  CHECK(q_truncate(lam, {0, 0, 0}) == lam);
  CHECK(q_truncate(lam, {0, 0, 1}) == u(f5, 3, 1, 1, 2));
  CHECK(q_truncate(eta(f5, 3), {1, 1, 2}) == eta(f5, 3));
  CHECK_THROWS_AS(q_truncate(lam, {0, 0}), Error);
}

TEST_CASE("hypothesis check") {
  auto f4 = make_finite_field(2, 2);
  auto f5 = make_finite_field(5, 1);
  auto f3 = make_finite_field(3, 1);
  auto lam4 = u(f4, 3, 3, 3, 1) + u(f4, 3, 1, 1, 2);
  auto c = lindeg_hypothesis_check(lam4, {0, 0, 1}, f4);
  CHECK(c.max_weight == 2);
  CHECK(c.vanishing);
  CHECK(c.applicable);
  auto z = lindeg_hypothesis_check(SVF(f3, 3), {0, 0, 0}, f3);
  CHECK(z.max_weight == 0);
  CHECK(z.applicable);
  auto lam = eta(f5, 3) + u(f5, 3, 1, 1, 1);
  auto c5 = lindeg_hypothesis_check(lam, {1, 1, 2}, f5);
  CHECK(c5.max_weight == 3);
  CHECK(c5.applicable);
  CHECK_FALSE(lindeg_hypothesis_check(lam, {1, 1, 2}, make_finite_field(2, 2)).applicable);
  // 113 has weight 0+0−1 < 0 under (0,0,1)
  CHECK_FALSE(lindeg_hypothesis_check(u(f5, 3, 1, 1, 3), {0, 0, 1}, f5).vanishing);
}

TEST_CASE("applicable truncations are linear degenerations") {
  std::mt19937_64 rng(77);
  for (auto [p, k] : std::vector<std::pair<int, int>>{{5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    auto f = make_finite_field(p, k);
    auto gs = standard_generators(f, 3);
    int done = 0;
    while (done < 15) {
      QSequence q(3);
      for (auto& x : q) x = static_cast<long long>(rng() % 4);
      SVF lam(f, 3);
      for (auto& x : lam.coords()) x = static_cast<FF::Elem>(rng() % f.order());
      for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 3; ++j)
          for (std::size_t kk = 1; kk <= 3; ++kk)
            if (q[i - 1] + q[j - 1] - q[kk - 1] < 0) lam.at(i, j, kk) = 0;
      if (!lindeg_hypothesis_check(lam, q, f).applicable) continue;
      CHECK(verify_lindeg(lam, q, gs));
      ++done;
    }
  }
  auto f5 = make_finite_field(5, 1);
  CHECK(verify_lindeg(u(f5, 3, 1, 2, 3), {0, 0, 0}, standard_generators(f5, 3)));
}

TEST_CASE("transvection pipeline matches the closed form") {
  std::mt19937_64 rng(3);
  auto f5 = make_finite_field(5, 1);
  auto gs = standard_generators(f5, 3);
  for (int t = 0; t < 50; ++t) {
    SVF lam(f5, 3);
    for (auto& x : lam.coords()) x = static_cast<FF::Elem>(rng() % 5);
    auto s = random_spec(f5, 3, rng);
    auto p = transvection_pipeline(lam, s);
    CHECK(p == transvection_closed_form(lam, s));
    if (t < 10) CHECK(spin(lam, gs).contains(p.coords()));
  }
  for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {2, 3}, {7, 1}}) {
    auto f = make_finite_field(p, k);
    for (int t = 0; t < 10; ++t) {
      SVF lam(f, 4);
      for (auto& x : lam.coords()) x = static_cast<FF::Elem>(rng() % f.order());
      auto s = random_spec(f, 4, rng);
      CHECK(transvection_pipeline(lam, s) == transvection_closed_form(lam, s));
    }
  }
}

TEST_CASE("transvection special cases") {
  std::mt19937_64 rng(8);
  auto f5 = make_finite_field(5, 1);
  auto s = random_spec(f5, 3, rng);
  CHECK(transvection_g5(SVF(f5, 3), s).is_zero());
  // In K, [z,z] = 0 and only the two ζ([z,·]) terms survive.
  auto k = basis_K(3, f5);
  for (int t = 0; t < 10; ++t) {
    auto lam = random_member(k, 3, rng);
    auto g5 = transvection_g5(lam, s);
    for (std::size_t i = 1; i <= 3; ++i)
      for (std::size_t j = 1; j <= 3; ++j) {
        auto ui = unit_row(f5, 3, i - 1), vj = unit_row(f5, 3, j - 1);
        auto c = f5.add(f5.mul(s.zeta[i - 1], evaluate(f5, s.zeta, product(lam, s.z, vj))),
                        f5.mul(s.zeta[j - 1], evaluate(f5, s.zeta, product(lam, ui, s.z))));
        for (std::size_t kk = 1; kk <= 3; ++kk) CHECK(g5.at(i, j, kk) == f5.mul(c, s.z[kk - 1]));
      }
  }
  CHECK_THROWS_AS(transvection_g5(SVF(f5, 3), {s.z, s.zeta, 1}), Error);
  CHECK_THROWS_AS(transvection_g5(SVF(f5, 3), {s.z, s.z, 2}), Error);
  auto f2 = make_finite_field(2, 1);
  CHECK_THROWS_AS(transvection_g5(SVF(f2, 3), {{1, 0, 0}, {0, 1, 0}, 1}), Error);

  auto f7 = make_finite_field(7, 1);
  for (int t = 0; t < 10; ++t) {
    SVF lam(f7, 3);
    for (auto& x : lam.coords()) x = static_cast<FF::Elem>(rng() % 7);
    auto sp = random_spec(f7, 3, rng);
    auto a = default_alpha(f7);
    CHECK(transvection_g6(lam, sp.z, sp.zeta, a, second_alpha(f7, a)) == transvection_g6_closed_form(lam, sp.z, sp.zeta));
  }
  CHECK(default_alpha(make_finite_field(3, 1)) == 2);
  CHECK(second_alpha(f7, default_alpha(f7)) == 2);
}

TEST_CASE("reaching eta") {
  auto f5 = make_finite_field(5, 1);
  auto g5 = standard_generators(f5, 3);
  auto triv = reach_eta(eta(f5, 3), g5);
  CHECK(triv.success);
  CHECK(triv.branch == "trivial");
  auto lam = eta(f5, 3) + epsilon(f5, 3, 1);
  REQUIRE(predicate_Mstarstar(lam));
  REQUIRE_FALSE(predicate_Mstar(lam));
  auto r = reach_eta(lam, g5);
  CHECK(r.success);
  CHECK(r.spin_member);
  CHECK(r.certificate.contains("basis_change"));

  auto f3 = make_finite_field(3, 1);
  auto g43 = standard_generators(f3, 4);
  auto k = basis_K(4, f3);
  std::mt19937_64 rng(12);
  int done = 0;
  while (done < 5) {
    auto x = random_member(k, 4, rng);
    if (predicate_Mstar(x)) continue;
    auto rr = reach_eta(x, g43);
    CHECK(rr.success);
    CHECK(rr.spin_member);
    ++done;
  }
  CHECK_THROWS_AS(reach_eta(epsilon(f5, 3, 2), g5), Error);
  CHECK_THROWS_AS(reach_eta(delta(f5, 3), g5), Error);
}

TEST_CASE("reaching delta") {
  auto f5 = make_finite_field(5, 1);
  auto g5 = standard_generators(f5, 3);
  CHECK(reach_delta(delta(f5, 3), g5).branch == "trivial");
  auto lam = u(f5, 3, 1, 1, 2) + u(f5, 3, 1, 2, 1) + u(f5, 3, 2, 1, 1);
  REQUIRE(predicate_C(lam));
  REQUIRE_FALSE(predicate_Mstarstar(lam));
  auto r = reach_delta(lam, g5);
  CHECK(r.success);
  CHECK(r.spin_member);
  CHECK(r.branch == "g6");

  auto f3 = make_finite_field(3, 1);
  auto g3 = standard_generators(f3, 3);
  auto zero_branch = reach_delta(u(f3, 3, 1, 1, 2) + u(f3, 3, 3, 3, 3), g3);
  CHECK(zero_branch.branch == "gf3-zero");
  CHECK(zero_branch.success);
  CHECK(zero_branch.spin_member);
  auto nonzero_branch = reach_delta(u(f3, 3, 1, 1, 2) + u(f3, 3, 1, 2, 2) + u(f3, 3, 2, 1, 2), g3);
  CHECK(nonzero_branch.branch == "gf3-nonzero");
  CHECK(nonzero_branch.success);
  CHECK(nonzero_branch.spin_member);

  auto f4 = make_finite_field(2, 2);
  auto g4 = standard_generators(f4, 4);
  auto c = basis_C(4, f4);
  std::mt19937_64 rng(1);
  int done = 0;
  while (done < 5) {
    auto x = random_member(c, 4, rng);
    if (predicate_Mstarstar(x)) continue;
    auto rr = reach_delta(x, g4);
    CHECK(rr.success);
    CHECK(rr.spin_member);
    ++done;
  }
  CHECK_THROWS_AS(reach_delta(eta(f5, 3), g5), Error);
  CHECK_THROWS_AS(reach_delta(u(f5, 3, 1, 2, 3), g5), Error);
}
