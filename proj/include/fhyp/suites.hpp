#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fhyp {

// One property check: pass iff the worst observed residual stays within
// the pinned tolerance.
struct CheckResult {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Registered suite names, in execution order for "all".
const std::vector<std::string>& suite_names();

// Run one suite; count <= 0 selects each suite's pinned sample count.
// Unknown names throw std::invalid_argument.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int count = 0);

// "all" expands to every suite, anything else to the named one.
std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed, int count = 0);

}  // namespace fhyp
