#include <doctest.h>

#include "algdeg/suites.hpp"

using namespace algdeg;

namespace {

void require_verified(const std::vector<Claim>& cs) {
  REQUIRE_FALSE(cs.empty());
  for (const auto& c : cs) {
    CAPTURE(c.id);
    CAPTURE(c.computed.dump());
    CHECK(c.status == Status::Verified);
  }
}

FiniteField gf(int p, int k = 1) { return make_finite_field(p, k); }

}  // namespace

TEST_CASE("named fixtures") {
  auto f5 = gf(5);
  CHECK(named_submodule("K", 3, f5) == basis_K(3, f5));
  CHECK(named_submodule("Mstar(1,-1)", 3, f5) == basis_MstarP(ProjectivePoint<FiniteField>::from_ints(f5, 1, -1), 3, f5));
  CHECK(named_submodule("MstarP:1,-1", 3, f5) == named_submodule("Mstar(1,4)", 3, f5));
  CHECK(named_submodule("N+Mstarstar", 3, f5).dim() == 27);
  CHECK(named_submodule("0", 3, f5).dim() == 0);
  CHECK_THROWS_AS(named_submodule("Q", 3, f5), UsageError);
  CHECK_THROWS_AS(named_submodule("Mstar(1)", 3, f5), UsageError);
  CHECK(named_vector("eta", 3, f5) == eta(f5, 3));
  CHECK(named_vector("112", 3, f5) == delta(f5, 3));
  CHECK(named_vector("eps2", 3, f5) == epsilon(f5, 3, 2));
  CHECK(named_vector("epstilde3", 3, f5) == epsilon_tilde(f5, 3, 3));
  CHECK_THROWS_AS(named_vector("114", 3, f5), UsageError);
  CHECK_THROWS_AS(named_vector("eps", 3, f5), UsageError);
  CHECK(split_chain("0,Mstar(1,-1),U,K") == std::vector<std::string>{"0", "Mstar(1,-1)", "U", "K"});
  CHECK(split_chain("0, MstarP:1,-1 ,K") == std::vector<std::string>{"0", "MstarP:1,-1", "K"});
  CHECK_THROWS_AS(split_chain("0,,K"), UsageError);
}

TEST_CASE("small fields are skipped") {
  auto f2 = gf(2);
  for (const auto& cs : {dimension_claims(3, f2), intersection_claims(3, f2), lattice_claims(3, f2, 1),
                         reach_claims(3, f2, 5, 1).claims}) {
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].status == Status::Skipped);
    CHECK(cs[0].data["reason"] == kSmallFieldReason);
  }
  CHECK(lindeg_example_claims(3, gf(3), 2, 1)[0].status == Status::Skipped);
}

TEST_CASE("dimension, spin and intersection suites") {
  for (auto f : {gf(3), gf(2, 2), gf(5)})
    for (std::size_t n : {3, 4}) {
      require_verified(dimension_claims(n, f));
      require_verified(spin_identity_claims(n, f));
      require_verified(intersection_claims(n, f));
      require_verified(trace_biconditional_claims(n, f));
    }
  // the divisibility branches are actually taken
  auto branch = [](const std::vector<Claim>& cs, const std::string& prefix) {
    for (const auto& c : cs)
      if (c.id.rfind(prefix, 0) == 0) return true;
    return false;
  };
  CHECK(branch(intersection_claims(4, gf(5)), "intersect.T-Mstarstar-equals-Ttilde-Mstarstar"));
  CHECK_FALSE(branch(intersection_claims(3, gf(5)), "intersect.T-Mstarstar-equals-Ttilde-Mstarstar"));
  CHECK(branch(intersection_claims(3, gf(2, 2)), "intersect.plus-tilde-kernel-is-N"));
}

TEST_CASE("trace biconditional both ways") {
  for (auto [n, f] : std::vector<std::pair<std::size_t, FiniteField>>{{4, gf(5)}, {3, gf(5)}, {3, gf(7)}}) {
    auto cs = trace_biconditional_claims(n, f);
    require_verified(cs);
    CHECK(cs[0].expected == (n == 4));
  }
}

TEST_CASE("degeneration suites") {
  require_verified(lindeg_claims(3, gf(5), 20, 3));
  require_verified(lindeg_claims(3, gf(2, 3), 20, 3));
  require_verified(lindeg_example_claims(3, gf(5), 3, 3));
  auto r3 = reach_claims(3, gf(3), 30, 5);
  require_verified(r3.claims);
  require_verified(reach_claims(3, gf(2, 2), 10, 5).claims);
  require_verified(gf3_branch_claims(r3.branches));
  // worker count does not change the outcome
  auto a = reach_claims(3, gf(5), 6, 9, 0), b = reach_claims(3, gf(5), 6, 9, 2);
  REQUIRE(a.claims.size() == b.claims.size());
  for (std::size_t i = 0; i < a.claims.size(); ++i) CHECK(claim_to_json(a.claims[i]) == claim_to_json(b.claims[i]));
}

TEST_CASE("lattice diagrams over the witness grid") {
  for (auto [n, f] : std::vector<std::pair<std::size_t, FiniteField>>{
           {3, gf(5)}, {4, gf(3)}, {4, gf(5)}, {3, gf(2, 2)}, {4, gf(2, 2)}})
    require_verified(lattice_claims(n, f, 11));
}

TEST_CASE("surveys and series") {
  require_verified(survey_claims(4, kDefaultBudget, 2, false));
  require_verified(composition_claims(4, kDefaultBudget, 0, false));
  // the first factor of 0 ⊂ U ⊂ N ⊂ C is reducible over GF(4) at n = 3
  auto bad = chain_claims({"0", "U", "N", "C"}, 3, gf(2, 2), 1);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].status == Status::Falsified);
  CHECK(bad[0].data["factors"][0]["verdict"] == "reducible");
  CHECK_THROWS_AS(chain_claims({"0", "K", "U"}, 3, gf(5), 1), Error);
}

TEST_CASE("verify-all report") {
  SuiteConfig c;
  c.ns = {3};
  c.fields = {gf(3), gf(2, 2)};
  c.samples = 5;
  c.pairs = 5;
  c.fixtures = false;
  auto rep = verify_all(c);
  CHECK(rep.exit_code() == 0);
  CHECK(rep.count(Status::Falsified) == 0);
  c.workers = 2;
  CHECK(verify_all(c).to_json().dump() == rep.to_json().dump());
  auto back = Report::from_json(rep.to_json());
  CHECK(back.to_json() == rep.to_json());
  c.ns = {2};
  CHECK_THROWS_AS(verify_all(c), UsageError);
}
