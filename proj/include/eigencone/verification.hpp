#pragma once

// The reproduction suite behind `eigencone verify`: worked examples, the
// small-rank ray catalogs, structural properties of facets and induction,
// and cross-checks between independent backends.

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace eigencone::verification {

/// Collects expectation failures and informational lines for one check.
class CheckContext {
 public:
  /// Records a failure line when ok is false; returns ok.
  bool expect(bool ok, const std::string& what);
  void note(std::string line) { lines_.push_back(std::move(line)); }

  bool failed() const { return failures_ > 0; }
  int failures() const { return failures_; }
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  int failures_ = 0;
  std::vector<std::string> lines_;
};

struct Check {
  std::string id;
  std::string title;
  long long limit_ms = 0;  // 0: no time limit
  std::function<void(CheckContext&)> body;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  bool over_time = false;
  long long elapsed_ms = 0;
  long long limit_ms = 0;
  std::vector<std::string> details;
};

/// The full suite in its fixed order.
const std::vector<Check>& checks();

/// Runs one check. An escaping exception is a failure with its message as
/// detail; exceeding limit_ms is a failure as well.
CheckResult run_check(const Check& check);

/// Runs every check, or only the one with the given id. Throws DomainError
/// for an unknown id.
std::vector<CheckResult> run_checks(const std::optional<std::string>& only = std::nullopt);

}  // namespace eigencone::verification
