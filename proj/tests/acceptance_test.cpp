// Runs the acceptance grid and prints one PASS/FAIL line per criterion.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>

#include "zetasums/zetasums.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const auto results = zetasums::run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s\n", zetasums::summary_line(r).c_str());
    if (!r.passed()) ++failed;
  }
  const double seconds = std::chrono::duration<double>(clock::now() - start).count();
  std::printf("acceptance: %zu/%zu criteria passed in %.2f s\n", results.size() - failed, results.size(), seconds);
  return failed == 0 ? 0 : 1;
}
