#pragma once

#include <string>
#include <vector>

namespace alt1 {

enum class CheckStatus { pass, fail, paper_discrepancy };

/// One verification result. paper_discrepancy entries always carry both the
/// printed and the derived value.
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::string details;
  std::string printed;
  std::string derived;
  long ms = 0;
};

const char* status_name(CheckStatus s);

/// All registered check ids, sorted.
std::vector<std::string> check_ids();

/// Simple glob with '*' and '?'.
bool glob_match(const std::string& pattern, const std::string& text);

/// Runs the checks matching the glob; results are sorted by id and identical
/// whether run serially or in parallel (the ms field reports wall time and is
/// the only nondeterministic part). Throws when nothing matches.
std::vector<CheckResult> run_suite(const std::string& filter, bool parallel);

/// {"checks": [{"id", "status", "details", "printed", "derived", "ms"}]}
std::string report_json(const std::vector<CheckResult>& results);

/// 0 if nothing failed (discrepancies do not fail), 1 otherwise.
int suite_exit_code(const std::vector<CheckResult>& results);

}  // namespace alt1
