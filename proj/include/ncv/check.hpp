#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ncv {

/// Outcome of one verification. `notable` marks observed patterns whose
/// failure is worth reporting but is not an error.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  bool notable = false;
};

struct CheckReport {
  std::string name;
  std::vector<CheckResult> results;

  void add(std::string check, bool ok, std::string detail = {}, bool notable = false) {
    results.push_back({std::move(check), ok, std::move(detail), notable});
  }

  bool passed() const {
    for (const auto& r : results)
      if (!r.passed && !r.notable) return false;
    return true;
  }

  void merge(const CheckReport& other) {
    for (const auto& r : other.results) results.push_back(r);
  }
};

}  // namespace ncv
