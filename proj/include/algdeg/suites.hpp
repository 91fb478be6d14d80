#pragma once

// Verification suites: each returns claim records for one acceptance area.

#include "algdeg/canon.hpp"
#include "algdeg/report.hpp"
#include "algdeg/spinmx.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace algdeg {

inline constexpr const char* kSmallFieldReason = "|F| > 2 required";

Claim skipped_claim(std::string id, std::string anchor, std::string reason = kSmallFieldReason);

// Named fixtures: "0", "C", "K", "Mstar", "Mstar(a,d)", "MstarP:a,d",
// "Mstarstar", "T", "Ttilde", "TcapTtilde", "N", "U", "Lambda", and sums
// written "X+Y".
Subspace<FiniteField> named_submodule(std::string_view name, std::size_t n, const FiniteField& f);
// "eta", "delta", "eps<a>", "epstilde<a>", "trace-witness", or a unit "ijk".
StructureVector<FiniteField> named_vector(std::string_view name, std::size_t n, const FiniteField& f);
// Comma-separated chain; commas inside parentheses and after "MstarP:" bind.
std::vector<std::string> split_chain(std::string_view chain);

std::vector<Claim> dimension_claims(std::size_t n, const FiniteField& f);
std::vector<Claim> spin_identity_claims(std::size_t n, const FiniteField& f);
std::vector<Claim> intersection_claims(std::size_t n, const FiniteField& f);
std::vector<Claim> trace_biconditional_claims(std::size_t n, const FiniteField& f);

// Random applicable (λ, q̂) pairs; truncation must lie in spin(λ).
std::vector<Claim> lindeg_claims(std::size_t n, const FiniteField& f, std::size_t pairs, std::uint64_t seed);
// λ ∈ M**−M* reaches η and λ ∉ M** reaches δ, for |F| ≥ 5, with q̂ ∈ {1,2}^n.
std::vector<Claim> lindeg_example_claims(std::size_t n, const FiniteField& f, std::size_t samples,
                                         std::uint64_t seed);

struct ReachSuite {
  std::vector<Claim> claims;
  std::map<std::string, std::size_t> branches;  // reach_delta branch counts
};

// Samples of M**−M* (→ η) and C−M** (→ δ); both oracles must agree.
ReachSuite reach_claims(std::size_t n, const FiniteField& f, std::size_t samples, std::uint64_t seed,
                        int workers = 0);
// Every GF(3) branch of the δ construction, from fixtures plus observed counts
// (skipped below 20 samples).
std::vector<Claim> gf3_branch_claims(const std::map<std::string, std::size_t>& observed);

std::vector<Claim> survey_claims(std::uint64_t seed, std::uint64_t budget, int workers, bool exhaustive_gf5 = true);
std::vector<Claim> composition_claims(std::uint64_t seed, std::uint64_t budget, int workers,
                                      bool exhaustive_gf5 = true);
// Chain given by fixture names.
std::vector<Claim> chain_claims(const std::vector<std::string>& names, std::size_t n, const FiniteField& f,
                                std::uint64_t seed);

std::vector<Claim> lattice_claims(std::size_t n, const FiniteField& f, std::uint64_t seed);

struct SuiteConfig {
  std::vector<std::size_t> ns{3};
  std::vector<FiniteField> fields;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  int workers = 0;
  std::size_t samples = 50;
  std::size_t pairs = 100;
  bool fixtures = true;
  bool timings = false;
};

json config_to_json(const SuiteConfig& c);

// Every suite over the (n, field) grid, then the fixed fixtures.
Report verify_all(const SuiteConfig& c);

}  // namespace algdeg
