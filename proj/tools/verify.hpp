#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace heroix::verify {

enum class Status { Pass, Fail, Undecided };

std::string_view status_name(Status s);

struct CheckResult {
  std::string id;
  Status status = Status::Pass;
  std::string witness;
};

struct Check {
  std::string id;
  std::string suite;
  /// Acceptance criterion covered by this check, or 0.
  int criterion = 0;
  /// Only run when long checks are requested.
  bool long_only = false;
  std::function<CheckResult()> run;
};

struct VerifyOptions {
  bool long_checks = false;
  std::chrono::seconds budget{600};
};

/// Overall pass iff every check passed; undecided counts as not passing.
struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  bool any_failed() const;
  /// 0 pass, 1 some check failed, 3 nothing failed but something undecided.
  int exit_code() const;
};

/// Every check, ordered by id within suite, suites in catalogue order.
const std::vector<Check>& catalogue();

const std::vector<std::string>& suite_names();

/// Runs one check, converting library exceptions into statuses.
CheckResult run_check(const Check& check);

/// Runs the named suite ("all" runs every suite). Checks that would start
/// after the budget is spent are reported undecided. Throws
/// std::invalid_argument for an unknown suite name.
VerifyReport run_suite(std::string_view suite, const VerifyOptions& options);

}  // namespace heroix::verify
