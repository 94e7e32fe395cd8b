#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace dunkl::verify {

struct CheckResult {
  std::string module;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

struct Outcome {
  bool passed;
  std::string detail;
};

struct Check {
  std::string module;
  std::string name;
  std::function<Outcome()> run;
};

/// Invariant suites of special_fn, dunkl_core, spectrum and thermo.
std::vector<Check> invariant_checks();

/// Runs the checks, catching exceptions as failures.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks);

void print_table(const std::vector<CheckResult>& results, std::ostream& out);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace dunkl::verify
