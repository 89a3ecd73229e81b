// Runs acceptance criteria 1-9 and prints one line per criterion.

#include <cstdio>

#include "gaussia/validation.hpp"

int main() {
  const auto report = gaussia::run_validation(gaussia::ValidationGrid::coarse);
  for (int n = 1; n <= gaussia::kCriterionCount; ++n)
    std::printf("criterion %d: %s\n", n, report.criterion_passed(n) ? "PASS" : "FAIL");
  for (const auto* failure : report.failures())
    std::printf("%s\n", gaussia::format_check(*failure).c_str());
  return report.passed() ? 0 : 1;
}
