#include <doctest.h>

#include "algdeg/exactla.hpp"

#include <random>

using namespace algdeg;

namespace {

using FF = FiniteField;

Row<FF> random_row(const FF& f, std::size_t d, std::mt19937_64& rng) {
  Row<FF> r(d);
  for (auto& x : r) x = static_cast<FF::Elem>(rng() % f.order());
  return r;
}

Subspace<FF> random_subspace(const FF& f, std::size_t d, std::size_t gens, std::mt19937_64& rng) {
  std::vector<Row<FF>> rows;
  for (std::size_t i = 0; i < gens; ++i) rows.push_back(random_row(f, d, rng));
  return Subspace<FF>::span(f, d, rows);
}

Row<FF> e(const FF& f, std::size_t d, std::size_t i) { return unit_row(f, d, i); }

}  // namespace

TEST_CASE("rref basics") {
  auto f3 = make_finite_field(3, 1);
  auto id = Matrix<FF>::identity(f3, 3);
  auto r = rref(id);
  CHECK(r.rank == 3);
  CHECK(r.reduced == id);
  auto z = rref(Matrix<FF>(f3, 3, 3));
  CHECK(z.rank == 0);
  CHECK(z.reduced.rows() == 0);
  auto m = Matrix<FF>::from_rows(f3, 2, {{1, 2}, {2, 1}});  // 4 = 1 mod 3
  auto rm = rref(m);
  CHECK(rm.rank == 1);
  CHECK(rm.reduced == Matrix<FF>::from_rows(f3, 2, {{1, 2}}));
  CHECK(rm.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("null spaces") {
  auto f3 = make_finite_field(3, 1);
  CHECK(null_space(Matrix<FF>::identity(f3, 4)).dim() == 0);
  CHECK(null_space(Matrix<FF>(f3, 4, 4)).dim() == 4);
  auto k = null_space(Matrix<FF>::from_rows(f3, 3, {{1, 1, 1}}));
  CHECK(k.dim() == 2);
  for (auto& row : k.basis_rows()) CHECK(f3.add(f3.add(row[0], row[1]), row[2]) == 0);
}

TEST_CASE("sum and intersection") {
  auto f3 = make_finite_field(3, 1);
  auto a = Subspace<FF>::span(f3, 4, {e(f3, 4, 0)});
  auto b = Subspace<FF>::span(f3, 4, {e(f3, 4, 1)});
  CHECK(subspace_sum(a, b).dim() == 2);
  CHECK(subspace_intersect(a, b).dim() == 0);
  CHECK(subspace_intersect(a, a) == a);
  CHECK(subspace_sum(a, a) == a);

  auto s1 = Subspace<FF>::span(f3, 4, {{1, 1, 0, 0}, {0, 0, 1, 0}});
  auto s2 = Subspace<FF>::span(f3, 4, {{0, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK(subspace_intersect(s1, s2).dim() == 0);
  CHECK(subspace_sum(s1, s2).dim() == 4);
  // Independent oracle: rank of the stacked 4x4 system.
  CHECK(rank(Matrix<FF>::from_rows(f3, 4, {{1, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}})) == 4);

  CHECK_THROWS_AS(subspace_sum(a, Subspace<FF>::zero(f3, 3)), Error);
}

TEST_CASE("canonical form is independent of the generating set") {
  auto f5 = make_finite_field(5, 1);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto s = random_subspace(f5, 6, 3, rng);
    std::vector<Row<FF>> gens;
    for (int i = 0; i < 5; ++i) {
      Row<FF> comb = zero_row(f5, 6);
      for (auto& b : s.basis_rows()) f5.axpy(comb.data(), static_cast<FF::Elem>(rng() % 5), b.data(), 6);
      gens.push_back(comb);
    }
    for (auto& b : s.basis_rows()) gens.push_back(scaled_row(f5, FF::Elem(3), b));
    CHECK(Subspace<FF>::span(f5, 6, gens) == s);
  }
}

TEST_CASE("dimension formula is exhaustive over pairs of small subspaces") {
  auto f3 = make_finite_field(3, 1);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_subspace(f3, 4, rng() % 4, rng);
    auto b = random_subspace(f3, 4, rng() % 4, rng);
    auto s = subspace_sum(a, b), i = subspace_intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    // brute-force intersection: all vectors of a tested for membership in b
    std::size_t count = 0, total = 1;
    for (std::size_t k = 0; k < a.dim(); ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      Row<FF> coords(a.dim());
      std::size_t c = code;
      for (auto& x : coords) {
        x = static_cast<FF::Elem>(c % 3);
        c /= 3;
      }
      if (b.contains(a.combination(coords))) ++count;
    }
    std::size_t expect = 1;
    for (std::size_t k = 0; k < i.dim(); ++k) expect *= 3;
    CHECK(count == expect);
  }
}

TEST_CASE("modular law") {
  auto f4 = make_finite_field(2, 2);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto b = random_subspace(f4, 6, 2, rng);
    auto a = subspace_sum(b, random_subspace(f4, 6, 2, rng));
    auto c = random_subspace(f4, 6, 3, rng);
    CHECK(subspace_intersect(a, subspace_sum(b, c)) == subspace_sum(b, subspace_intersect(a, c)));
  }
}

TEST_CASE("quotient data") {
  auto f3 = make_finite_field(3, 1);
  auto full = Subspace<FF>::full(f3, 3);
  CHECK(quotient_dim(full, full) == 0);
  CHECK(coset_representatives(full, full).empty());
  auto e1 = Subspace<FF>::span(f3, 3, {e(f3, 3, 0)});
  auto reps = coset_representatives(full, e1);
  CHECK(reps.size() == 2);
  CHECK(subspace_sum(e1, Subspace<FF>::span(f3, 3, reps)) == full);
  CHECK_THROWS_AS(quotient_dim(e1, full), Error);
}

TEST_CASE("inverse, coordinate maps and group elements") {
  auto f7 = make_finite_field(7, 1);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix<FF> m(f7, 4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = static_cast<FF::Elem>(rng() % 7);
    if (rank(m) < 4) {
      CHECK_THROWS_AS(inverse(m), Error);
      continue;
    }
    GroupElement<FF> g(m);
    CHECK((g.mat() * g.inv()).is_identity());
    CHECK((g.inv() * g.mat()).is_identity());
    auto gg = g * g.inverse_element();
    CHECK(gg.mat().is_identity());
  }
  CHECK_THROWS_AS(GroupElement<FF>(Matrix<FF>::identity(f7, 2), Matrix<FF>::identity(f7, 2).scaled(2)), Error);

  std::vector<Row<FF>> basis = {{1, 2, 0, 3}, {0, 1, 1, 1}};
  CoordinateMap<FF> cm(f7, 4, basis);
  Row<FF> v = add_rows(f7, scaled_row(f7, FF::Elem(5), basis[0]), scaled_row(f7, FF::Elem(2), basis[1]));
  CHECK(cm.coords_checked(v) == Row<FF>{5, 2});
  CHECK_THROWS_AS(cm.coords_checked({1, 0, 0, 0}), Error);
}

TEST_CASE("echelon builder agrees with rref") {
  auto f9 = make_finite_field(3, 2);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    EchelonBuilder<FF> eb(f9, 5);
    std::vector<Row<FF>> rows;
    for (int i = 0; i < 4; ++i) {
      Row<FF> r = random_row(f9, 5, rng);
      if (i == 3) r = add_rows(f9, rows[0], rows[1]);
      rows.push_back(r);
      eb.insert(r);
    }
    auto s = Subspace<FF>::span(f9, 5, rows);
    CHECK(eb.dim() == s.dim());
    CHECK(eb.to_subspace() == s);
  }
}

TEST_CASE("rational linear algebra") {
  RationalField q;
  using Q = RationalField;
  auto m = Matrix<Q>::from_rows(q, 2, {{Q::Elem(2), Q::Elem(1)}, {Q::Elem(1), Q::Elem(1)}});
  auto inv = inverse(m);
  CHECK((m * inv).is_identity());
  CHECK(q.to_string(inv(0, 0)) == "1");
  CHECK(q.to_string(inv(0, 1)) == "-1");
}
