#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cospanlim {

struct CheckConfig {
  std::uint64_t seed = 1;
  int sizes = 3;    // object size bound
  int count = 50;   // random cases per property
  int max_len = 8;  // word-length bound for the kleene suite
};

struct CheckResult {
  std::string suite;
  int cases = 0;
  int failures = 0;
  std::string first_counterexample;  // reproducible JSON, empty when clean
};

const std::vector<std::string>& check_suite_names();

// Runs one named suite deterministically from cfg.seed; unknown names raise
// type_error.
CheckResult run_check(const std::string& suite, const CheckConfig& cfg);

std::vector<CheckResult> run_all_checks(const CheckConfig& cfg);

// "suite=<name> cases=<n> failures=<k> status=pass|fail" plus the
// counterexample on its own line when failing.
std::string check_report(const CheckResult& r);

}  // namespace cospanlim
