// algdeg: command-line front end for the structure-vector module toolkit.

#include "algdeg/degen.hpp"
#include "algdeg/gamma2.hpp"
#include "algdeg/serialize.hpp"
#include "algdeg/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace algdeg;

namespace {

struct Globals {
  std::string json_path;
  std::uint64_t seed = 1;
  int workers = 0;
  std::uint64_t budget = kDefaultBudget;
  bool timings = false;
  bool quiet = false;
};

struct Target {
  std::size_t n = 3;
  std::string field = "3";
};

FiniteField finite_field(const std::string& spec) {
  auto ctx = parse_field_spec(spec);
  if (!std::holds_alternative<FiniteField>(ctx)) throw UsageError("this command needs a finite field, got '" + spec + "'");
  return std::get<FiniteField>(ctx);
}

void check_n(std::size_t n) {
  if (n < 3) throw UsageError("n must be at least 3 (got " + std::to_string(n) + ")");
  if (n > 9) throw UsageError("n above 9 is not supported");
}

std::string cell(const json& j) {
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object() && j.contains("dim") && j.size() == 1) return "dim " + j["dim"].dump();
  auto s = j.dump();
  if (s.size() > 40) s = s.substr(0, 37) + "...";
  return s;
}

void print_report(const Report& r, std::ostream& os) {
  std::size_t w = 4, we = 8;
  for (const auto& c : r.claims) {
    w = std::max(w, c.id.size());
    we = std::max(we, cell(c.expected).size());
  }
  for (const auto& c : r.claims) {
    os << std::left << std::setw(13) << status_name(c.status) << std::setw(static_cast<int>(w) + 2) << c.id
       << std::setw(static_cast<int>(we) + 2) << cell(c.expected) << cell(c.computed);
    if (c.status == Status::Skipped && c.data.contains("reason")) os << "  (" << c.data["reason"].get<std::string>() << ")";
    if (c.seconds >= 0) os << "  " << std::fixed << std::setprecision(3) << c.seconds << "s";
    os << "\n";
  }
  os << r.claims.size() << " claims: " << r.count(Status::Verified) << " verified, " << r.count(Status::Falsified)
     << " falsified, " << r.count(Status::Inconclusive) << " inconclusive, " << r.count(Status::Skipped)
     << " skipped\n";
}

int finish(Report& r, const Globals& g) {
  r.config["seed"] = g.seed;
  if (!g.quiet) print_report(r, std::cout);
  if (!g.json_path.empty()) {
    std::ofstream out(g.json_path);
    if (!out) throw UsageError("cannot write " + g.json_path);
    out << r.to_json().dump(2) << "\n";
  }
  return r.exit_code();
}

json target_json(const Target& t, const FiniteField& f) { return {{"n", t.n}, {"field", f.name()}}; }

template <class Fn>
void timed(Report& r, const Globals& g, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Claim> cs = fn();
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (auto& c : cs) {
    if (g.timings) c.seconds = dt / static_cast<double>(cs.size());
    r.add(std::move(c));
  }
}

// Vector syntax: a name, a JSON structure vector or coordinate array, or a
// sum of terms "c*name" joined by '+'.
SVF parse_vector(const std::string& text, std::size_t n, const FiniteField& f) {
  if (!text.empty() && (text[0] == '{' || text[0] == '[')) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad vector JSON: ") + e.what());
    }
    if (j.is_array()) {
      if (j.size() != n * n * n) throw UsageError("coordinate array needs n^3 entries");
      return SVF(f, n, row_from_json(f, j));
    }
    if (j.contains("n") && j["n"].get<std::size_t>() != n) throw UsageError("vector JSON has a different n");
    return structure_vector_from_json(f, j.contains("n") ? j : json{{"n", n}, {"coords", j.at("coords")}});
  }
  SVF out(f, n);
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, '+')) {
    if (term.empty()) throw UsageError("empty term in '" + text + "'");
    long long c = 1;
    auto star = term.find('*');
    std::string name = term;
    if (star != std::string::npos) {
      try {
        c = std::stoll(term.substr(0, star));
      } catch (const std::exception&) {
        throw UsageError("bad coefficient in '" + term + "'");
      }
      name = term.substr(star + 1);
    }
    out += named_vector(name, n, f).scaled(f.from_int(c));
  }
  return out;
}

QSequence parse_q(const std::string& text, std::size_t n) {
  QSequence q;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      q.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw UsageError("bad weight '" + tok + "'");
    }
  }
  if (q.size() != n) throw UsageError("weight sequence needs " + std::to_string(n) + " entries");
  return q;
}

// Fixture names for labelling survey output.
std::string identify(const Subspace<FiniteField>& s, std::size_t n, const FiniteField& f) {
  std::vector<std::string> names = {"0", "C", "K", "Mstar", "Mstarstar", "T", "Ttilde", "TcapTtilde", "N", "U", "Lambda"};
  for (const auto& p : projective_line(f)) names.push_back("Mstar(" + f.to_string(p.a) + "," + f.to_string(p.d) + ")");
  for (const auto& nm : names)
    if (named_submodule(nm, n, f) == s) return nm;
  return "?";
}

void add_target(CLI::App* sc, Target& t) {
  sc->add_option("--n", t.n, "dimension of V")->capture_default_str();
  sc->add_option("--field", t.field, "field: order q (e.g. 4) or p^k")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure-vector modules over finite fields: spins, submodule lattices and degenerations"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--json", g.json_path, "write the JSON report to this path");
  app.add_option("--seed", g.seed, "64-bit seed")->capture_default_str();
  app.add_option("--workers", g.workers, "OpenMP workers for data-parallel loops (0 = serial)")->capture_default_str();
  app.add_option("--budget", g.budget, "maximum number of lines enumerated by surveys")->capture_default_str();
  app.add_flag("--timings", g.timings, "record wall-clock seconds per claim");
  app.add_flag("--quiet", g.quiet, "suppress the table");

  Target t;
  auto* dims = app.add_subcommand("dims", "dimension table of the canonical submodules");
  add_target(dims, t);

  bool list = false, check = false;
  auto* canon = app.add_subcommand("canon", "canonical submodules");
  add_target(canon, t);
  canon->add_flag("--list", list, "print the dimension table");
  canon->add_flag("--check-intersections", check, "verify the intersection table");

  std::string vector_text, expect;
  auto* spin_cmd = app.add_subcommand("spin", "cyclic submodule generated by a structure vector");
  add_target(spin_cmd, t);
  spin_cmd->add_option("--vector", vector_text, "name, JSON, or sum like 112+2*eps1")->required();
  spin_cmd->add_option("--expect", expect, "submodule the spin must equal");

  std::string module_name = "K";
  auto* survey = app.add_subcommand("survey", "exhaustive submodule lattice of a fixture");
  add_target(survey, t);
  survey->add_option("--module", module_name, "fixture name")->capture_default_str();

  std::string chain_text;
  auto* series = app.add_subcommand("series", "check a chain of submodules for irreducible factors");
  add_target(series, t);
  series->add_option("--chain", chain_text, "comma-separated fixture names, e.g. 0,Mstar(1,-1),U,K")->required();

  auto* lattice = app.add_subcommand("lattice", "submodule diagrams of M** and of Lambda");
  add_target(lattice, t);

  auto* degen = app.add_subcommand("degen", "linear degenerations");
  degen->require_subcommand(1);
  degen->fallthrough();
  std::string lambda_text, q_text;
  auto* dq = degen->add_subcommand("q", "weight truncation");
  add_target(dq, t);
  dq->add_option("--lambda", lambda_text, "structure vector")->required();
  dq->add_option("--q", q_text, "weights, e.g. 1,1,2")->required();
  auto* de = degen->add_subcommand("reach-eta", "transvection route from M**-M* to eta");
  add_target(de, t);
  de->add_option("--lambda", lambda_text, "structure vector")->required();
  auto* dd = degen->add_subcommand("reach-delta", "transvection route from C-M** to 112");
  add_target(dd, t);
  dd->add_option("--lambda", lambda_text, "structure vector")->required();

  bool verify = false;
  auto* gamma = app.add_subcommand("gamma", "semilinear maps in characteristic 2");
  add_target(gamma, t);
  gamma->add_flag("--verify", verify, "run the full claim set");

  SuiteConfig cfg;
  std::vector<std::size_t> ns{3};
  std::vector<std::string> fields{"3", "4", "5"};
  bool no_fixtures = false, exhaustive = false;
  auto* all = app.add_subcommand("verify-all", "every suite over a grid of n and fields");
  all->add_option("--n", ns, "list of n")->delimiter(',')->capture_default_str();
  all->add_option("--fields", fields, "list of field specs")->delimiter(',')->capture_default_str();
  all->add_option("--samples", cfg.samples, "samples per reachability suite")->capture_default_str();
  all->add_option("--pairs", cfg.pairs, "random pairs per truncation suite")->capture_default_str();
  all->add_flag("--no-fixtures", no_fixtures, "skip the fixed survey and series fixtures");
  all->add_flag("--exhaustive", exhaustive, "include the GF(5) survey of K");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Report r;
    r.config = json::object();
    if (dims->parsed() || (canon->parsed() && !check)) {
      check_n(t.n);
      const auto f = finite_field(t.field);
      r.command = dims->parsed() ? "dims" : "canon";
      r.config = target_json(t, f);
      timed(r, g, [&] { return dimension_claims(t.n, f); });
    } else if (canon->parsed()) {
      check_n(t.n);
      const auto f = finite_field(t.field);
      r.command = "canon";
      r.config = target_json(t, f);
      if (list) timed(r, g, [&] { return dimension_claims(t.n, f); });
      timed(r, g, [&] { return intersection_claims(t.n, f); });
      timed(r, g, [&] { return trace_biconditional_claims(t.n, f); });
    } else if (spin_cmd->parsed()) {
      check_n(t.n);
      const auto f = finite_field(t.field);
      r.command = "spin";
      r.config = target_json(t, f);
      r.config["vector"] = vector_text;
      const auto lam = parse_vector(vector_text, t.n, f);
      const auto s = spin(lam, standard_generators(f, t.n));
      const std::string id = "spin." + vector_text + ".n" + std::to_string(t.n) + "." + f.name();
      if (!expect.empty()) {
        const auto want = named_submodule(expect, t.n, f);
        Claim c = make_claim(id + ".equals-" + expect, anchors::kSpinIdentities, s == want,
                             json{{"dim", want.dim()}}, json{{"dim", s.dim()}});
        if (!(s == want)) c.data = {{"spin", subspace_to_json(s)}};
        r.add(std::move(c));
      } else {
        const auto name = identify(s, t.n, f);
        if (!g.quiet) std::cout << "  spin: dim " << s.dim() << "  " << name << "\n";
        r.add(make_claim(id, anchors::kSpinIdentities, true, nullptr, json{{"dim", s.dim()}},
                         {{"spin", subspace_to_json(s)}, {"identified", name}}));
      }
    } else if (survey->parsed()) {
      check_n(t.n);
      const auto f = finite_field(t.field);
      r.command = "survey";
      r.config = target_json(t, f);
      r.config["module"] = module_name;
      r.config["budget"] = g.budget;
      const auto carrier = named_submodule(module_name, t.n, f);
      const auto gens = standard_generators(f, t.n);
      const auto h = lambda_module(t.n, gens, carrier, Subspace<FiniteField>::zero(f, t.n * t.n * t.n));
      const std::string id = "survey." + module_name + ".n" + std::to_string(t.n) + "." + f.name();
      if (line_count(f.order(), h.dim()) > g.budget) {
        Claim c = make_claim(id, anchors::kSubmoduleSurvey, false, "lattice", "budget exceeded",
                             {{"lines", line_count(f.order(), h.dim())}, {"budget", g.budget}});
        c.status = Status::Inconclusive;
        r.add(std::move(c));
      } else {
        const auto res = survey_submodules(h.module(), g.budget, g.workers);
        json members = json::array();
        for (const auto& s : res.lattice) {
          const auto full = h.pullback(s);
          members.push_back({{"dim", full.dim()}, {"name", identify(full, t.n, f)}});
          if (!g.quiet) std::cout << "  dim " << std::setw(4) << full.dim() << "  " << identify(full, t.n, f) << "\n";
        }
        const auto nr = norton_irreducible(h.module(), derive_seed(g.seed, id));
        const auto want = res.lattice.size() == 2 ? Verdict::Irreducible : Verdict::Reducible;
        Claim c = make_claim(id + ".meataxe-agrees", anchors::kSubmoduleSurvey, nr.verdict == want,
                             verdict_name(want), verdict_name(nr.verdict),
                             {{"members", members}, {"lines", res.lines}, {"cyclic", res.cyclic}});
        if (nr.verdict == Verdict::Inconclusive) c.status = Status::Inconclusive;
        r.add(std::move(c));
      }
    } else if (series->parsed()) {
      check_n(t.n);
      const auto f = finite_field(t.field);
      r.command = "series";
      r.config = target_json(t, f);
      r.config["chain"] = chain_text;
      const auto names = split_chain(chain_text);
      timed(r, g, [&] { return chain_claims(names, t.n, f, g.seed); });
      if (!g.quiet)
        for (const auto& fr : r.claims.back().data.value("factors", json::array()))
          std::cout << "  " << fr["upper"].get<std::string>() << " / " << fr["lower"].get<std::string>() << "  dim "
                    << fr["dim"] << "  " << fr["verdict"].get<std::string>() << "\n";
    } else if (lattice->parsed()) {
      check_n(t.n);
      const auto f = finite_field(t.field);
      r.command = "lattice";
      r.config = target_json(t, f);
      timed(r, g, [&] { return lattice_claims(t.n, f, g.seed); });
    } else if (degen->parsed()) {
      check_n(t.n);
      const auto f = finite_field(t.field);
      r.config = target_json(t, f);
      r.config["lambda"] = lambda_text;
      const auto lam = parse_vector(lambda_text, t.n, f);
      const auto gens = standard_generators(f, t.n);
      if (dq->parsed()) {
        r.command = "degen q";
        r.config["q"] = q_text;
        const auto q = parse_q(q_text, t.n);
        const auto chk = lindeg_hypothesis_check(lam, q, f);
        const auto trunc = q_truncate(lam, q);
        const bool member = verify_lindeg(lam, q, gens);
        json data = {{"applicable", chk.applicable},
                     {"vanishing", chk.vanishing},
                     {"max_weight", chk.max_weight},
                     {"truncation", structure_vector_to_json(trunc)}};
        Claim c = make_claim("degen.q.truncation-in-spin", anchors::kLinearDegeneration, member, true, member, data);
        if (!chk.applicable && member) {
          c.status = Status::Skipped;
          c.data["reason"] = "hypotheses not met; truncation lies in the spin anyway";
        } else if (!chk.applicable) {
          c.status = Status::Skipped;
          c.data["reason"] = "hypotheses not met";
        }
        r.add(std::move(c));
      } else {
        const bool to_eta = de->parsed();
        r.command = to_eta ? "degen reach-eta" : "degen reach-delta";
        if (f.order() <= 2) {
          r.add(skipped_claim(r.command, anchors::kTransvectionReach));
        } else {
          const auto res = to_eta ? reach_eta(lam, gens) : reach_delta(lam, gens);
          json data = {{"branch", res.branch}, {"spin_member", res.spin_member}, {"certificate", res.certificate}};
          r.add(make_claim(to_eta ? "degen.reach-eta" : "degen.reach-delta", anchors::kTransvectionReach,
                           res.success && res.spin_member, "certificate and spin agree",
                           json{{"certificate", res.success}, {"spin", res.spin_member}}, data));
          if (!g.quiet) std::cout << "  branch: " << res.branch << "\n";
        }
      }
    } else if (gamma->parsed()) {
      check_n(t.n);
      const auto f = finite_field(t.field);
      if (f.characteristic() != 2 || f.order() < 4) throw UsageError("gamma needs a field of characteristic 2 with |F| >= 4");
      r.command = "gamma";
      r.config = target_json(t, f);
      if (verify) {
        timed(r, g, [&] { return semilinear_claims(t.n, f, g.seed); });
      } else {
        const auto rep = verify_gamma_irreducible(t.n, f, g.seed);
        r.add(make_claim("gamma.replay." + f.name(), anchors::kSemilinearModule, rep.replay_ok, "irreducible",
                         rep.replay_ok ? "irreducible" : "replay failed"));
      }
    } else if (all->parsed()) {
      cfg.ns = ns;
      for (auto n : ns) check_n(n);
      for (const auto& s : fields) cfg.fields.push_back(finite_field(s));
      cfg.seed = g.seed;
      cfg.budget = g.budget;
      cfg.workers = g.workers;
      cfg.fixtures = !no_fixtures;
      cfg.timings = g.timings;
      r = verify_all(cfg);
      if (exhaustive) timed(r, g, [&] {
          auto cs = survey_claims(g.seed, g.budget, g.workers, true);
          return std::vector<Claim>(cs.end() - 2, cs.end());
        });
    }
    return finish(r, g);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
