#pragma once

#include <functional>
#include <string>
#include <vector>

namespace charbasis {

/// An invariant check scaled by a degree bound. Returns an empty string on
/// success and a description of the first counterexample otherwise.
struct SelftestSuite {
  std::string name;
  std::function<std::string(int max_degree)> run;
};

struct SuiteResult {
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

std::vector<SelftestSuite> default_suites();
/// Exceptions thrown by a suite count as failures.
std::vector<SuiteResult> run_selftest(const std::vector<SelftestSuite>& suites, int max_degree);

}  // namespace charbasis
