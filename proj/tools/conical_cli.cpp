// Experiment driver for the conical measure-geometry library. Every
// subcommand is a thin shim: flags become key=value configuration handed to
// the shared library, CSV goes to --output (stdout by default), the summary
// goes to stderr. Exit codes: 0 ok, 1 failed acceptance predicate, 2 usage.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conical.h"

namespace {

struct SubSpec {
  std::string name;
  std::string description;
  std::vector<std::pair<std::string, std::string>> options;  // key, help
};

const std::vector<SubSpec> kSubcommands = {
    {"gen-samples",
     "Sample codings and coordinates from a self-similar system",
     {{"system", "preset name or description file"},
      {"count", "number of codings"},
      {"length", "coding length"},
      {"seed", "global seed"}}},
    {"ratios",
     "Gauge-normalized region/ball measure ratios across scales",
     {{"system", "preset name or description file"},
      {"point", "coordinates 'x[,y]' or 'word:<digits>'"},
      {"gauge", "logpow:<s>, invlog, or constant:<c>"},
      {"scales", "range like 3^-1..3^-40 or comma list"},
      {"region", "ball, right, or left"},
      {"depth", "refinement depth cap"}}},
    {"dims",
     "Local dimension slope profile at a point",
     {{"system", "preset name or description file"},
      {"point", "coordinates or 'word:<digits>'"},
      {"scales", "range like 3^-1..3^-40 or comma list"},
      {"depth", "refinement depth cap"}}},
    {"conical-dims",
     "Conical dimension slopes (sup over a direction/plane net)",
     {{"system", "preset name or description file"},
      {"point", "coordinates or 'word:<digits>'"},
      {"scales", "range like 3^-1..3^-40 or comma list"},
      {"alpha", "cone aperture in (0,1]"},
      {"m", "cone codimension (0 or 1)"},
      {"net-delta", "net resolution (defaults to alpha)"},
      {"depth", "refinement depth cap"}}},
    {"runlength",
     "Longest-run law simulation",
     {{"p", "escape probability"}, {"n", "stream length"}, {"seed", "global seed"}}},
    {"packing-demo",
     "Half-space / cone packing on a weighted point file",
     {{"points", "CSV file with x[,y],weight rows"},
      {"theta", "direction, e.g. 1,0"},
      {"R", "packing scale"},
      {"radii-factor", "ball radius as a multiple of R, in [1,2]"},
      {"alpha", "cone aperture (switches to the cone variant)"}}},
    {"sharpness",
     "Gauge-driven interval removal construction",
     {{"gauge", "logpow:<s>, invlog, or constant:<c>"},
      {"N", "starting level"},
      {"kmax", "last level"},
      {"depth", "triadic descent cap per removal"}}},
    {"grid-measure",
     "Alternating grid measure sample profiles",
     {{"s", "lower exponent"},
      {"t", "upper exponent"},
      {"points", "number of sampled points"},
      {"min-side", "stop once squares are smaller"},
      {"seed", "global seed"}}},
    {"cone-search",
     "Delegate-word search with certified cone inclusions",
     {{"system", "preset name or description file"},
      {"m", "cone codimension (0 or 1)"},
      {"alpha", "aperture or 'auto'"},
      {"lmax", "maximum word length"}}},
    {"verify",
     "Run acceptance experiments E1..E11",
     {{"experiment", "E1..E11 or all"}, {"seed", "global seed"}}},
};

int run_sub(const std::string& name, const std::map<std::string, std::string>& opts,
            const std::string& config_file, const std::string& output) {
  std::string config;
  if (!config_file.empty()) {
    std::ifstream in(config_file);
    if (!in) {
      std::cerr << "cannot open config file: " << config_file << "\n";
      return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    config = ss.str();
    if (!config.empty() && config.back() != '\n') config += '\n';
  }
  for (const auto& [k, v] : opts) config += k + "=" + v + "\n";

  char* csv = nullptr;
  char* summary = nullptr;
  int rc = cd_run(name.c_str(), config.c_str(), &csv, &summary);
  if (rc == CD_OK || rc == CD_PREDICATE_FAILED) {
    if (output.empty() || output == "-") {
      if (csv) std::cout << csv;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) {
        std::cerr << "cannot open output file: " << output << "\n";
        cd_free_string(csv);
        cd_free_string(summary);
        return 2;
      }
      if (csv) out << csv;
    }
    if (summary && *summary) std::cerr << summary << "\n";
  } else {
    std::cerr << "error: " << cd_last_error() << "\n";
  }
  cd_free_string(csv);
  cd_free_string(summary);
  if (rc == CD_OK) return 0;
  if (rc == CD_PREDICATE_FAILED) return 1;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conical: certified measure enclosures, dimensions, and packings"};
  app.require_subcommand(1);

  struct SubState {
    std::map<std::string, std::string> opts;
    std::string config_file;
    std::string output;
    std::string positional;
  };
  std::map<std::string, std::shared_ptr<SubState>> states;

  for (const auto& spec : kSubcommands) {
    auto* sub = app.add_subcommand(spec.name, spec.description);
    auto st = std::make_shared<SubState>();
    states[spec.name] = st;
    for (const auto& [key, help] : spec.options) {
      if (spec.name == "verify" && key == "experiment") continue;
      sub->add_option_function<std::string>(
          "--" + key, [st, key = key](const std::string& v) { st->opts[key] = v; }, help);
    }
    if (spec.name == "verify")
      sub->add_option_function<std::string>(
             "experiment",
             [st](const std::string& v) { st->opts["experiment"] = v; },
             "E1..E11 or all")
          ->required();
    sub->add_option("--config", st->config_file, "key=value config file (# comments)");
    sub->add_option("--output", st->output, "CSV output path (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (const auto& spec : kSubcommands)
    if (app.got_subcommand(spec.name)) {
      const auto& st = *states[spec.name];
      return run_sub(spec.name, st.opts, st.config_file, st.output);
    }
  return 2;
}
