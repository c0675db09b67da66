#pragma once

#include <functional>
#include <string>
#include <vector>

namespace gammakit {

struct VerifyOptions {
  int max_n = 6;
  int threads = 1;
};

struct CheckResult {
  std::string name;
  std::string suite;
  std::string status;   // "pass", "fail" or "skipped"
  std::string n_range;  // e.g. "n <= 6"
  std::string detail;   // first counterexample on failure, reason when skipped
};

struct CheckDef {
  std::string name;
  std::string suite;  // egf, gamma, grammar, bijection, identities
  // Returns an empty string on success, the first counterexample otherwise;
  // may throw BoundExceeded, which records the check as skipped.
  std::function<std::string(int max_n)> body;
  // Effective bound for a requested max_n, reported as the n-range.
  std::function<int(int max_n)> effective_n;
};

const std::vector<CheckDef>& all_checks();
std::vector<std::string> suite_names();  // the five suites, no "all"

// Runs the named suite ("all" for every check) with options.threads workers;
// results come back in registration order regardless of scheduling.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options);

// Runs checks from the identities suite whose name contains `filter`
// (empty = all of them).
std::vector<CheckResult> identity_suite(const std::string& filter, int max_n);

bool all_passed(const std::vector<CheckResult>& results);

// Deterministic renderings; wall times never appear in either.
std::string report_to_json(const std::string& suite, int max_n,
                           const std::vector<CheckResult>& results);
std::string report_to_text(const std::vector<CheckResult>& results);

}  // namespace gammakit
