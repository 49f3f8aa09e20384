#pragma once

#include <string>
#include <vector>

namespace mayer {

struct CheckResult {
  std::string suite;
  std::string name;
  double value = 0.0;
  double target = 0.0;
  double deviation = 0.0;  // compared against `limit`
  double limit = 0.0;
  bool passed = false;
};

/// Suites: decomposition, gauss-bonnet, parseval, boundary, cross-route.
const std::vector<std::string>& verify_suites();

/// Runs one suite, or every suite for "all". Thresholds are fixed (see
/// mayer::tolerance) and cannot be overridden. Throws InvalidArgument for an
/// unknown suite name.
std::vector<CheckResult> run_verify(const std::string& suite);

}  // namespace mayer
