#pragma once

// Claim records and the versioned JSON report.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace algdeg {

using json = nlohmann::ordered_json;

enum class Status { Verified, Falsified, Inconclusive, Skipped };

std::string status_name(Status s);
Status parse_status(const std::string& s);

struct Claim {
  std::string id;
  std::string anchor;
  Status status = Status::Verified;
  json expected;
  json computed;
  json data;
  double seconds = -1;  // negative: not recorded
};

// Build a claim from a boolean outcome.
Claim make_claim(std::string id, std::string anchor, bool ok, json expected = nullptr,
                 json computed = nullptr, json data = nullptr);

inline constexpr const char* kReportSchema = "algdeg-report/1";
inline constexpr const char* kToolVersion = "1.0.0";

struct Report {
  std::string command;
  json config = json::object();
  std::vector<Claim> claims;

  void add(Claim c) { claims.push_back(std::move(c)); }
  void add_all(std::vector<Claim> cs) {
    for (auto& c : cs) claims.push_back(std::move(c));
  }

  std::size_t count(Status s) const;
  // 0 all verified/skipped, 1 any falsified, 3 any inconclusive (no falsified).
  int exit_code() const;

  json to_json() const;
  static Report from_json(const json& j);
};

json claim_to_json(const Claim& c);
Claim claim_from_json(const json& j);

// Claim anchors: descriptive family names, one per acceptance area.
namespace anchors {
inline constexpr const char* kDimensionTable = "dimension-table";
inline constexpr const char* kSpinIdentities = "spin-identities";
inline constexpr const char* kIntersectionTable = "intersection-table";
inline constexpr const char* kLinearDegeneration = "linear-degeneration";
inline constexpr const char* kTransvectionReach = "transvection-reachability";
inline constexpr const char* kSubmoduleSurvey = "submodule-survey";
inline constexpr const char* kCompositionSeries = "composition-series";
inline constexpr const char* kSemilinearModule = "semilinear-module";
inline constexpr const char* kLatticeDiagrams = "lattice-diagrams";
inline constexpr const char* kTraceBiconditional = "trace-biconditional";
}  // namespace anchors

const std::vector<std::string>& anchor_inventory();

}  // namespace algdeg
