#pragma once

// Cross-checks of the numeric pipeline against the closed forms and the
// structural properties of the formalism, grouped by acceptance criterion.

#include <functional>
#include <string>
#include <vector>

namespace gaussia {

enum class ValidationGrid {
  /// s in {0.3, s*, 1.5}, r in {0, 0.5, 1, 2}, w in {0, r, 2r}.
  coarse,
  /// s in {0.1, 0.3, 0.6, s*, 1.2, 1.5, 2}, r in {0, 0.25, ..., 2.5},
  /// w in {0, r/2, r, 2r}.
  fine,
};

/// Parses "coarse" or "fine".
ValidationGrid parse_grid(const std::string& text);

struct CheckResult {
  int criterion = 0;
  std::string name;
  /// Worst deviation over the check's points; for counting checks the number
  /// of failing points.
  double delta = 0.0;
  double tolerance = 0.0;
  /// Where the worst deviation occurred.
  std::string where;
  bool passed = false;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  bool criterion_passed(int criterion) const;
  std::vector<const CheckResult*> failures() const;
};

struct ValidationHooks {
  /// Closed-form mutual information used as the I2 oracle; defaults to
  /// closed::i2. Replaceable so a perturbed oracle can be shown to fail.
  std::function<double(double s, double w, double r)> i2_reference;
  /// Called after each check completes.
  std::function<void(const CheckResult&)> on_check;
};

/// Number of the criteria covered: 1 through 9.
inline constexpr int kCriterionCount = 9;

ValidationReport run_validation(ValidationGrid grid = ValidationGrid::coarse,
                                const ValidationHooks& hooks = {});

/// Runs a single criterion.
std::vector<CheckResult> run_criterion(int criterion, ValidationGrid grid = ValidationGrid::coarse,
                                       const ValidationHooks& hooks = {});

/// One summary line per check: "[PASS] 2 I2 cross-check delta=... tol=... at ...".
std::string format_check(const CheckResult& check);

}  // namespace gaussia
