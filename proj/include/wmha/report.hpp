#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace wmha {

/// One verified statement. Ids are stable axiom tags, e.g.
/// "def4.1:(4.3):F1" or "groupoid:assoc", so report rows are
/// self-documenting.
struct CheckResult {
  enum class Status { Pass, Fail, Skipped };
  std::string id;
  Status status = Status::Pass;
  std::string witness;  // concrete counterexample for failures
  std::string note;     // extra detail (dimensions, solved values, ...)
};

/// Structured pass/fail record per axiom with failure witnesses.
class VerificationReport {
 public:
  explicit VerificationReport(std::string structure = "")
      : structure_(std::move(structure)) {}

  void pass(const std::string& id, const std::string& note = "");
  void fail(const std::string& id, const std::string& witness,
            const std::string& note = "");
  void skip(const std::string& id, const std::string& note = "");
  void check(const std::string& id, bool ok, const std::string& witness = "",
             const std::string& note = "");
  void merge(const VerificationReport& other);

  bool all_passed() const;
  std::size_t failures() const;
  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(const std::string& id) const;

  const std::string& structure() const { return structure_; }
  const std::string& verdict() const { return verdict_; }
  void set_verdict(std::string v) { verdict_ = std::move(v); }

  nlohmann::json to_json() const;
  std::string to_text() const;
  static VerificationReport from_json(const nlohmann::json& j);

 private:
  std::string structure_;
  std::string verdict_;
  std::vector<CheckResult> checks_;
};

}  // namespace wmha
