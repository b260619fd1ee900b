#ifndef DG2_REPORT_HPP
#define DG2_REPORT_HPP

#include <string>
#include <vector>

namespace dg2 {

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;  // canonical rendering of what went wrong, empty on success
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string witness = {}) {
    checks.push_back({std::move(name), passed, std::move(witness)});
  }
  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

}  // namespace dg2

#endif  // DG2_REPORT_HPP
