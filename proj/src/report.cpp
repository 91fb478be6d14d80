#include "algdeg/report.hpp"

#include "algdeg/gfield.hpp"

namespace algdeg {

std::string status_name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Falsified: return "falsified";
    case Status::Inconclusive: return "inconclusive";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

Status parse_status(const std::string& s) {
  if (s == "verified") return Status::Verified;
  if (s == "falsified") return Status::Falsified;
  if (s == "inconclusive") return Status::Inconclusive;
  if (s == "skipped") return Status::Skipped;
  throw Error("unknown claim status '" + s + "'");
}

Claim make_claim(std::string id, std::string anchor, bool ok, json expected, json computed, json data) {
  Claim c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.status = ok ? Status::Verified : Status::Falsified;
  c.expected = std::move(expected);
  c.computed = std::move(computed);
  c.data = std::move(data);
  return c;
}

std::size_t Report::count(Status s) const {
  std::size_t k = 0;
  for (const auto& c : claims)
    if (c.status == s) ++k;
  return k;
}

int Report::exit_code() const {
  if (count(Status::Falsified)) return 1;
  if (count(Status::Inconclusive)) return 3;
  return 0;
}

json claim_to_json(const Claim& c) {
  json j;
  j["name"] = c.id;
  j["anchor"] = c.anchor;
  j["status"] = status_name(c.status);
  j["expected"] = c.expected;
  j["computed"] = c.computed;
  if (!c.data.is_null()) j["data"] = c.data;
  if (c.seconds >= 0) j["seconds"] = c.seconds;
  return j;
}

Claim claim_from_json(const json& j) {
  Claim c;
  c.id = j.at("name").get<std::string>();
  c.anchor = j.at("anchor").get<std::string>();
  c.status = parse_status(j.at("status").get<std::string>());
  c.expected = j.value("expected", json());
  c.computed = j.value("computed", json());
  c.data = j.value("data", json());
  c.seconds = j.value("seconds", -1.0);
  return c;
}

json Report::to_json() const {
  json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["config"] = config;
  json arr = json::array();
  for (const auto& c : claims) arr.push_back(claim_to_json(c));
  j["claims"] = std::move(arr);
  j["summary"] = {{"verified", count(Status::Verified)},
                  {"falsified", count(Status::Falsified)},
                  {"inconclusive", count(Status::Inconclusive)},
                  {"skipped", count(Status::Skipped)}};
  return j;
}

Report Report::from_json(const json& j) {
  if (j.value("schema", std::string()) != kReportSchema) throw Error("unsupported report schema");
  Report r;
  r.command = j.value("command", std::string());
  r.config = j.value("config", json::object());
  for (const auto& c : j.at("claims")) r.claims.push_back(claim_from_json(c));
  return r;
}

const std::vector<std::string>& anchor_inventory() {
  static const std::vector<std::string> inv = {
      anchors::kDimensionTable,     anchors::kSpinIdentities,   anchors::kIntersectionTable,
      anchors::kLinearDegeneration, anchors::kTransvectionReach, anchors::kSubmoduleSurvey,
      anchors::kCompositionSeries,  anchors::kSemilinearModule,  anchors::kLatticeDiagrams,
      anchors::kTraceBiconditional};
  return inv;
}

}  // namespace algdeg
