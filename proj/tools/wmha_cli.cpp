// Command-line front end: groupoid/algebra validation, full weak
// multiplier Hopf verification runs, duality pairing tables, and report
// merging. Exit codes: 0 success, 1 verified-negative, 2 usage or input
// error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wmha/families.hpp"
#include "wmha/io.hpp"
#include "wmha/wmha.hpp"

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wmha::SpecError("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw wmha::SpecError(std::string("bad JSON in ") + path + ": " + e.what());
  }
  return j;
}

void emit(const json& j, const std::string& text, const std::string& format,
          const std::string& out_path) {
  std::string payload = format == "json" ? j.dump(2) + "\n" : text;
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path);
    if (!out) throw wmha::SpecError("cannot write " + out_path);
    out << payload;
  }
}

struct CommonOpts {
  int window = 5;
  std::uint64_t seed = 0;
  int trials = 100;
  bool oracle = false;
  std::string format = "text";
  std::string out;
};

wmha::VerifyOptions verify_options(const CommonOpts& c) {
  wmha::VerifyOptions opt;
  opt.window = c.window;
  opt.seed = c.seed;
  opt.trials = c.trials;
  opt.oracle = c.oracle;
  if (const char* cap = std::getenv("WMHA_MAX_DIM")) {
    opt.max_dim = std::atoi(cap);
    if (opt.max_dim <= 0) opt.max_dim = 729;
  }
  return opt;
}

int run_validate(const std::string& path, const CommonOpts& c) {
  json j = load_json(path);
  wmha::VerificationReport rep;
  if (j.contains("kind")) {
    wmha::Groupoid g = wmha::build_groupoid(j);
    rep = wmha::validate_groupoid(g, g.elements(c.window));
  } else if (j.contains("basis")) {
    wmha::BasedAlgebra a = wmha::parse_algebra(j);
    rep = wmha::check_algebra(a, a.basis(c.window));
  } else {
    throw wmha::SpecError(path + ": neither a groupoid spec nor an algebra");
  }
  emit(rep.to_json(), rep.to_text(), c.format, c.out);
  return rep.all_passed() ? 0 : 1;
}

int run_verify(const std::string& path, const std::string& family,
               const CommonOpts& c) {
  json j = load_json(path);
  wmha::VerifyOptions opt = verify_options(c);
  wmha::VerificationReport rep;
  if (family == "kg" || family == "cg") {
    wmha::Groupoid g = wmha::build_groupoid(j);
    wmha::Structure s = family == "kg" ? wmha::build_KG(g) : wmha::build_CG(g);
    rep = wmha::verify_wmha(s, opt);
  } else if (family == "weak-hopf") {
    wmha::Structure s;
    if (j.contains("kind")) {
      s = wmha::cg_as_weak_hopf(wmha::build_groupoid(j));
    } else {
      s = wmha::parse_table_structure(j, /*as_weak_hopf=*/true);
    }
    rep = wmha::weak_hopf_adapter(s, opt);
  } else if (family == "table-coproduct") {
    wmha::Structure s = wmha::parse_table_structure(j, /*as_weak_hopf=*/false);
    rep = wmha::verify_wmha(s, opt);
  } else {
    throw wmha::SpecError("unknown family " + family);
  }
  emit(rep.to_json(), rep.to_text(), c.format, c.out);
  return rep.verdict() != "not-wmha" && rep.failures() == 0 ? 0 : 1;
}

int run_pairing(const std::string& path, const CommonOpts& c) {
  json j = load_json(path);
  wmha::Groupoid g = wmha::build_groupoid(j);
  wmha::Structure kg = wmha::build_KG(g);
  wmha::Structure cg = wmha::build_CG(g);
  wmha::DualPairing pr = wmha::canonical_pairing(kg, cg);

  std::vector<wmha::Key> wa = kg.alg.basis(c.window);
  std::vector<wmha::Key> wb = cg.alg.basis(c.window);
  wmha::VerificationReport rep("pairing(" + g.name() + ")");
  if (g.finite()) {
    rep.merge(wmha::check_pairing(pr, kg.cp, cg.cp, wa, wb));
  } else {
    rep.merge(wmha::check_pairing(pr, kg.cp, cg.cp, wa, wb));
    wmha::SeededRng rng(c.seed);
    rep.merge(
        wmha::check_pairing_random(pr, kg.cp, cg.cp, wa, wb, rng, c.trials));
  }
  rep.set_verdict(rep.all_passed() ? "pairing-ok" : "pairing-fail");

  json out = rep.to_json();
  out["matrix"] = json::array();
  std::string text = rep.to_text();
  text += "pairing matrix (rows K(G), columns CG):\n";
  for (const auto& a : wa) {
    json row = json::array();
    std::string line = "  ";
    for (const auto& b : wb) {
      wmha::Scalar v = pr.on_basis(a, b);
      row.push_back(v.str());
      line += v.str() + " ";
    }
    out["matrix"].push_back(row);
    text += line + "\n";
  }
  emit(out, text, c.format, c.out);
  return rep.all_passed() ? 0 : 1;
}

int run_report(const std::vector<std::string>& paths, const CommonOpts& c) {
  if (paths.empty()) throw wmha::SpecError("report: no input files");
  std::vector<wmha::VerificationReport> reports;
  for (const auto& p : paths) {
    reports.push_back(wmha::VerificationReport::from_json(load_json(p)));
  }
  // Group rows by their axiom anchor (the id prefix before the first ':').
  std::map<std::string, std::vector<std::pair<std::string, const wmha::CheckResult*>>>
      groups;
  bool all_ok = true;
  std::vector<std::string> failing;
  for (const auto& r : reports) {
    if (!r.all_passed()) all_ok = false;
    for (const auto& chk : r.checks()) {
      std::string anchor = chk.id.substr(0, chk.id.find(':'));
      groups[anchor].emplace_back(r.structure(), &chk);
      if (chk.status == wmha::CheckResult::Status::Fail) {
        failing.push_back(r.structure() + ": " + chk.id);
      }
    }
  }
  json out;
  out["verdict"] = all_ok ? "pass" : "fail";
  out["structures"] = json::array();
  for (const auto& r : reports) out["structures"].push_back(r.structure());
  out["groups"] = json::object();
  std::string text;
  for (const auto& [anchor, rows] : groups) {
    json ja = json::array();
    text += anchor + ":\n";
    for (const auto& [structure, chk] : rows) {
      json row;
      row["structure"] = structure;
      row["id"] = chk->id;
      row["status"] = chk->status == wmha::CheckResult::Status::Pass ? "pass"
                      : chk->status == wmha::CheckResult::Status::Fail
                          ? "fail"
                          : "skipped";
      if (!chk->witness.empty()) row["witness"] = chk->witness;
      ja.push_back(row);
      text += "  [" + row["status"].get<std::string>() + "] " + structure +
              "  " + chk->id + "\n";
    }
    out["groups"][anchor] = ja;
  }
  if (!failing.empty()) {
    out["failing"] = failing;
    text += "failing:\n";
    for (const auto& f : failing) text += "  " + f + "\n";
  }
  text += std::string("combined verdict: ") + (all_ok ? "pass" : "fail") + "\n";
  emit(out, text, c.format, c.out);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for weak multiplier Hopf algebra axioms"};
  app.require_subcommand(1);

  CommonOpts c;
  std::string spec_path, family = "kg";
  std::vector<std::string> report_paths;

  auto add_common = [&c](CLI::App* cmd) {
    cmd->add_option("--window", c.window, "window size for lazy structures");
    cmd->add_option("--seed", c.seed, "seed for randomized checks");
    cmd->add_option("--trials", c.trials, "number of randomized trials");
    cmd->add_option("--format", c.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", c.out, "write the report to a file");
  };

  CLI::App* validate = app.add_subcommand("validate", "check groupoid/algebra axioms");
  validate->add_option("spec", spec_path, "spec JSON file")->required();
  add_common(validate);

  CLI::App* verify = app.add_subcommand("verify", "run the full axiom suite");
  verify->add_option("spec", spec_path, "spec JSON file")->required();
  verify->add_option("--family", family, "kg|cg|weak-hopf|table-coproduct")
      ->check(CLI::IsMember({"kg", "cg", "weak-hopf", "table-coproduct"}));
  verify->add_flag("--oracle", c.oracle,
                   "cross-check closed forms against the generic solvers");
  add_common(verify);

  CLI::App* pairing = app.add_subcommand("pairing", "canonical duality pairing checks");
  pairing->add_option("spec", spec_path, "groupoid spec JSON file")->required();
  add_common(pairing);

  CLI::App* report = app.add_subcommand("report", "merge verification reports");
  report->add_option("reports", report_paths, "report JSON files");
  add_common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(spec_path, c);
    if (app.got_subcommand(verify)) return run_verify(spec_path, family, c);
    if (app.got_subcommand(pairing)) return run_pairing(spec_path, c);
    if (app.got_subcommand(report)) return run_report(report_paths, c);
  } catch (const wmha::SpecError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const wmha::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
