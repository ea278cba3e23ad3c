#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace conical::expt {

struct ExperimentResult {
  std::string id;
  bool passed = false;
  std::string summary;  // one line: id, PASS/FAIL, tolerance, key numbers
  std::string csv;      // fixed header, 17 significant digits
};

// "E1" .. "E11"
std::vector<std::string> experiment_ids();

ExperimentResult run_experiment(const std::string& id, uint64_t seed);

}  // namespace conical::expt
