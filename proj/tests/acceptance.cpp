// Acceptance gate: runs every named experiment and prints one PASS/FAIL
// line per criterion. Exit status is the number of failing criteria.
#include <cstdio>
#include <cstdlib>
#include <exception>

#include "conical/experiments.hpp"

int main() {
  uint64_t seed = 1;
  if (const char* s = std::getenv("CONICAL_SEED")) seed = std::strtoull(s, nullptr, 10);
  int failures = 0;
  for (const auto& id : conical::expt::experiment_ids()) {
    try {
      auto r = conical::expt::run_experiment(id, seed);
      std::printf("[%s] %s\n", r.passed ? "PASS" : "FAIL", r.summary.c_str());
      std::fflush(stdout);
      if (!r.passed) ++failures;
    } catch (const std::exception& e) {
      std::printf("[FAIL] %s: exception: %s\n", id.c_str(), e.what());
      std::fflush(stdout);
      ++failures;
    }
  }
  return failures;
}
