#include "wmha/report.hpp"

#include "wmha/scalar.hpp"

namespace wmha {

namespace {
std::string status_str(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::Pass:
      return "pass";
    case CheckResult::Status::Fail:
      return "fail";
    case CheckResult::Status::Skipped:
      return "skipped";
  }
  return "?";
}
}  // namespace

void VerificationReport::pass(const std::string& id, const std::string& note) {
  checks_.push_back({id, CheckResult::Status::Pass, "", note});
}

void VerificationReport::fail(const std::string& id, const std::string& witness,
                              const std::string& note) {
  checks_.push_back({id, CheckResult::Status::Fail, witness, note});
}

void VerificationReport::skip(const std::string& id, const std::string& note) {
  checks_.push_back({id, CheckResult::Status::Skipped, "", note});
}

void VerificationReport::check(const std::string& id, bool ok,
                               const std::string& witness,
                               const std::string& note) {
  if (ok) {
    pass(id, note);
  } else {
    fail(id, witness, note);
  }
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks_) {
    if (c.status == CheckResult::Status::Fail) return false;
  }
  return true;
}

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks_) {
    if (c.status == CheckResult::Status::Fail) ++n;
  }
  return n;
}

const CheckResult* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["structure"] = structure_;
  j["verdict"] = verdict_;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json jc;
    jc["id"] = c.id;
    jc["status"] = status_str(c.status);
    if (!c.witness.empty()) jc["witness"] = c.witness;
    if (!c.note.empty()) jc["note"] = c.note;
    j["checks"].push_back(jc);
  }
  return j;
}

std::string VerificationReport::to_text() const {
  std::string out = "structure: " + structure_ + "\n";
  for (const auto& c : checks_) {
    out += "  [" + status_str(c.status) + "] " + c.id;
    if (!c.note.empty()) out += "  (" + c.note + ")";
    if (!c.witness.empty()) out += "  witness: " + c.witness;
    out += "\n";
  }
  out += "verdict: " + verdict_ + "\n";
  return out;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("structure") || !j.contains("checks") ||
      !j.contains("verdict")) {
    throw SpecError("malformed report: expected structure/checks/verdict");
  }
  VerificationReport r(j.at("structure").get<std::string>());
  r.set_verdict(j.at("verdict").get<std::string>());
  for (const auto& jc : j.at("checks")) {
    CheckResult c;
    c.id = jc.at("id").get<std::string>();
    std::string s = jc.at("status").get<std::string>();
    if (s == "pass") {
      c.status = CheckResult::Status::Pass;
    } else if (s == "fail") {
      c.status = CheckResult::Status::Fail;
    } else if (s == "skipped") {
      c.status = CheckResult::Status::Skipped;
    } else {
      throw SpecError("malformed report: bad status " + s);
    }
    if (jc.contains("witness")) c.witness = jc.at("witness").get<std::string>();
    if (jc.contains("note")) c.note = jc.at("note").get<std::string>();
    r.checks_.push_back(std::move(c));
  }
  return r;
}

}  // namespace wmha
