#pragma once

#include <string>

namespace conical::run {

struct RunOutput {
  int status = 0;  // 0 ok / predicate holds, 1 predicate fails, 2 usage error
  std::string csv;
  std::string summary;
};

// Subcommands: gen-samples, ratios, dims, conical-dims, runlength,
// packing-demo, sharpness, grid-measure, cone-search, verify.
// `config` is key=value lines with '#' comments. Usage errors throw
// std::invalid_argument naming the offending field.
RunOutput run(const std::string& subcommand, const std::string& config);

}  // namespace conical::run
