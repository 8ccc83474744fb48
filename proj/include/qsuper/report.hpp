#pragma once

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qsuper {

struct Counterexample {
  std::string basis;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CheckResult {
  std::string identity;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<Counterexample> counterexample;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Ordered pass/fail record of a verification run.
///
/// JSON form:
///   {"subject": str, "passed": bool,
///    "checks": [{"identity": str, "status": "pass"|"fail", "cases": int,
///                "counterexample": {"basis", "lhs", "rhs"} | null}],
///    "notes": [str]}
class VerificationReport {
 public:
  explicit VerificationReport(std::string subject = "") : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }

  void add(CheckResult check) { checks_.push_back(std::move(check)); }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }
  /// Appends another report's checks and notes, keeping their order.
  void append(const VerificationReport& other);

  bool passed() const;
  std::size_t failures() const;
  const CheckResult* first_failure() const;

  nlohmann::json to_json() const;
  /// Throws std::invalid_argument on schema violations.
  static VerificationReport from_json(const nlohmann::json& json);
  std::string to_text() const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
  std::vector<std::string> notes_;
};

}  // namespace qsuper
