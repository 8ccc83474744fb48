#include "qsuper/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsuper {

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

bool VerificationReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.passed; }));
}

const CheckResult* VerificationReport::first_failure() const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.passed; });
  return it == checks_.end() ? nullptr : &*it;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json counter = nullptr;
    if (c.counterexample) {
      counter = {{"basis", c.counterexample->basis}, {"lhs", c.counterexample->lhs}, {"rhs", c.counterexample->rhs}};
    }
    checks.push_back({{"identity", c.identity},
                      {"status", c.passed ? "pass" : "fail"},
                      {"cases", c.cases},
                      {"counterexample", counter}});
  }
  return {{"subject", subject_}, {"passed", passed()}, {"checks", checks}, {"notes", notes_}};
}

VerificationReport VerificationReport::from_json(const nlohmann::json& json) {
  try {
    VerificationReport report(json.at("subject").get<std::string>());
    for (const auto& c : json.at("checks")) {
      CheckResult check;
      check.identity = c.at("identity").get<std::string>();
      const auto status = c.at("status").get<std::string>();
      if (status != "pass" && status != "fail") throw std::invalid_argument("bad status '" + status + "'");
      check.passed = status == "pass";
      check.cases = c.value("cases", std::size_t{0});
      const auto& counter = c.at("counterexample");
      if (!counter.is_null()) {
        check.counterexample = Counterexample{counter.at("basis").get<std::string>(),
                                              counter.at("lhs").get<std::string>(),
                                              counter.at("rhs").get<std::string>()};
      }
      report.add(std::move(check));
    }
    for (const auto& note : json.value("notes", nlohmann::json::array())) report.add_note(note.get<std::string>());
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed verification report: ") + e.what());
  }
}

std::string VerificationReport::to_text() const {
  std::string out;
  if (!subject_.empty()) out += "== " + subject_ + "\n";
  for (const auto& c : checks_) {
    out += (c.passed ? "PASS  " : "FAIL  ") + c.identity + "  (" + std::to_string(c.cases) + " cases)\n";
    if (c.counterexample) {
      out += "      on  " + c.counterexample->basis + "\n";
      out += "      lhs " + c.counterexample->lhs + "\n";
      out += "      rhs " + c.counterexample->rhs + "\n";
    }
  }
  for (const auto& note : notes_) out += "note: " + note + "\n";
  out += passed() ? "all checks passed\n" : std::to_string(failures()) + " check(s) failed\n";
  return out;
}

}  // namespace qsuper
