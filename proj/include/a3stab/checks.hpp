#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace a3stab {

struct CheckResult {
  std::string name;
  bool ok;
  std::string detail;
};

struct SuiteOptions {
  int samples = 100;
  std::uint64_t seed = 1;
  double tol = 1e-9;
};

/// Suites: repcore, exccol, charts, engine, atlas, or all.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace a3stab
