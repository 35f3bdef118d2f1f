#pragma once

#include <string>
#include <vector>

namespace iads {

struct CheckResult {
  std::string name;
  std::string status;  // "pass", "fail" or "unknown"
  std::string detail;

  [[nodiscard]] bool failed() const { return status == "fail"; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass ? "pass" : "fail", std::move(detail)});
  }
  void add_status(std::string name, std::string status, std::string detail = "") {
    checks.push_back({std::move(name), std::move(status), std::move(detail)});
  }
  [[nodiscard]] bool pass() const {
    for (const auto& c : checks)
      if (c.failed()) return false;
    return true;
  }
};

}  // namespace iads
