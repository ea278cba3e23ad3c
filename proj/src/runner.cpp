#include "conical/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "conical/constructions.hpp"
#include "conical/dimension.hpp"
#include "conical/experiments.hpp"
#include "conical/geometry.hpp"
#include "conical/packing.hpp"
#include "conical/refinable.hpp"
#include "conical/rng.hpp"
#include "conical/symbolic.hpp"

namespace conical::run {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// shorter form for human-facing diagnostic columns
std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

using Config = std::map<std::string, std::string>;

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line without '=': " + line);
    cfg[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return cfg;
}

std::string get(const Config& cfg, const std::string& key, const std::string& dflt) {
  auto it = cfg.find(key);
  return it == cfg.end() ? dflt : it->second;
}

std::string require(const Config& cfg, const std::string& key) {
  auto it = cfg.find(key);
  if (it == cfg.end()) throw std::invalid_argument("missing config field: " + key);
  return it->second;
}

double get_double(const Config& cfg, const std::string& key, double dflt) {
  auto it = cfg.find(key);
  if (it == cfg.end()) return dflt;
  try {
    size_t pos = 0;
    double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (...) {
    throw std::invalid_argument("config field is not a number: " + key);
  }
}

long get_long(const Config& cfg, const std::string& key, long dflt) {
  auto it = cfg.find(key);
  if (it == cfg.end()) return dflt;
  try {
    size_t pos = 0;
    long v = std::stol(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (...) {
    throw std::invalid_argument("config field is not an integer: " + key);
  }
}

uint64_t get_seed(const Config& cfg) {
  auto it = cfg.find("seed");
  if (it == cfg.end()) return 1;
  try {
    return std::stoull(it->second);
  } catch (...) {
    throw std::invalid_argument("config field is not an integer: seed");
  }
}

// "3^-1..3^-40", "2^-5..2^-20", or a comma list of plain doubles
std::vector<double> parse_scales(const std::string& spec) {
  std::vector<double> out;
  size_t caret = spec.find('^');
  size_t dots = spec.find("..");
  if (caret != std::string::npos && dots != std::string::npos) {
    double base = std::stod(spec.substr(0, caret));
    long e1 = std::stol(spec.substr(caret + 1, dots - caret - 1));
    size_t caret2 = spec.find('^', dots);
    if (caret2 == std::string::npos) throw std::invalid_argument("bad scales range: " + spec);
    long e2 = std::stol(spec.substr(caret2 + 1));
    if (e1 > e2) std::swap(e1, e2);
    for (long e = e1; e <= e2; ++e) out.push_back(std::pow(base, static_cast<double>(e)));
    std::sort(out.rbegin(), out.rend());
    return out;
  }
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty scales list");
  return out;
}

geom::Vec parse_point(const sym::SelfSimilarSystem& sys, const std::string& spec) {
  if (spec.rfind("word:", 0) == 0) {
    sym::SymbolWord w = sym::SymbolWord::from_string(spec.substr(5));
    return sym::point_enclosure(sys, w).center;
  }
  std::vector<double> coords;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) coords.push_back(std::stod(trim(tok)));
  if (static_cast<int>(coords.size()) != sys.n)
    throw std::invalid_argument("point has wrong dimension: point");
  if (sys.n == 1) return geom::Vec::of(coords[0]);
  if (sys.n == 2) return geom::Vec::of(coords[0], coords[1]);
  return geom::Vec::of(coords[0], coords[1], coords[2]);
}

dim::RegionFamily region_family(const std::string& name, int n) {
  if (name == "ball") return dim::ball_family();
  if (n != 1) throw std::invalid_argument("one-sided regions need a 1-D system: region");
  if (name == "right") return dim::one_sided_family(+1);
  if (name == "left") return dim::one_sided_family(-1);
  throw std::invalid_argument("unknown region (ball|right|left): region");
}

RunOutput gen_samples(const Config& cfg) {
  auto sys = sym::resolve_system(get(cfg, "system", "cantor13"));
  long count = get_long(cfg, "count", 10);
  long length = get_long(cfg, "length", 40);
  uint64_t seed = get_seed(cfg);
  RunOutput out;
  out.csv = "point_id,word,x,y\n";
  for (long i = 0; i < count; ++i) {
    sym::SymbolWord w =
        sym::sample_word(sys, static_cast<size_t>(length), split_seed(seed, 100 + i));
    auto e = sym::point_enclosure(sys, w);
    out.csv += std::to_string(i) + "," + w.to_string() + "," + g17(e.center[0]) + "," +
               (sys.n > 1 ? g17(e.center[1]) : std::string()) + "\n";
  }
  out.summary = "gen-samples: " + std::to_string(count) + " codings of length " +
                std::to_string(length);
  return out;
}

void profile_rows(RunOutput& out, const std::vector<dim::ProfileEntry>& profile) {
  out.csv = "point_id,scale,lower,upper,ratio_lo,ratio_hi,slope_lo,slope_hi,flags\n";
  for (const auto& e : profile) {
    double slo = e.region.upper > 0.0 ? std::log(e.region.upper) / std::log(e.scale) : 0.0;
    double shi = e.region.lower > 0.0 ? std::log(e.region.lower) / std::log(e.scale) : 0.0;
    out.csv += "0," + g17(e.scale) + "," + g17(e.region.lower) + "," + g17(e.region.upper) + "," +
               g17(e.ratio.lo) + "," + g17(e.ratio.hi) + "," + g17(slo) + "," + g17(shi) + "," +
               std::string(e.flagged ? "empty-ball" : (e.ratio.unbounded ? "unbounded" : "ok")) +
               "\n";
  }
}

RunOutput ratios(const Config& cfg) {
  auto sys = sym::resolve_system(get(cfg, "system", "cantor13"));
  ref::SelfSimilarMeasure meas(sys);
  geom::Vec x = parse_point(sys, require(cfg, "point"));
  dim::Gauge g = dim::Gauge::parse(get(cfg, "gauge", "logpow:2"));
  auto scales = parse_scales(require(cfg, "scales"));
  auto fam = region_family(get(cfg, "region", sys.n == 1 ? "right" : "ball"), sys.n);
  int depth = static_cast<int>(get_long(cfg, "depth", 40));
  auto profile = dim::ratio_profile(meas, x, fam, g, scales, depth);
  RunOutput out;
  profile_rows(out, profile);
  out.summary = "ratios: " + std::to_string(profile.size()) + " scales";
  return out;
}

void estimate_rows(RunOutput& out, const dim::DimEstimate& est) {
  out.csv = "point_id,scale,lower,upper,ratio_lo,ratio_hi,slope_lo,slope_hi,flags\n";
  for (const auto& e : est.entries) {
    out.csv += "0," + g17(e.scale) + "," + g17(e.bound.lower) + "," + g17(e.bound.upper) +
               ",0,0," + g17(e.slope_lo) + "," + g17(e.slope_hi) + "," +
               std::string(e.flagged ? "zero-lower" : "ok") + "\n";
  }
}

RunOutput dims(const Config& cfg) {
  auto sys = sym::resolve_system(get(cfg, "system", "cantor13"));
  ref::SelfSimilarMeasure meas(sys);
  geom::Vec x = parse_point(sys, require(cfg, "point"));
  auto scales = parse_scales(require(cfg, "scales"));
  int depth = static_cast<int>(get_long(cfg, "depth", 40));
  auto est = dim::local_dims(meas, x, scales, depth);
  RunOutput out;
  estimate_rows(out, est);
  out.summary = "dims: tail slope in [" + g17(est.min_tail_slope) + ", " +
                g17(est.max_tail_slope) + "]";
  return out;
}

RunOutput conical_dims_cmd(const Config& cfg) {
  auto sys = sym::resolve_system(get(cfg, "system", "cantor13"));
  ref::SelfSimilarMeasure meas(sys);
  geom::Vec x = parse_point(sys, require(cfg, "point"));
  auto scales = parse_scales(require(cfg, "scales"));
  int depth = static_cast<int>(get_long(cfg, "depth", 40));
  double alpha = get_double(cfg, "alpha", 0.5);
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in (0,1]");
  long m = get_long(cfg, "m", sys.n == 1 ? 0 : 1);
  double delta = get_double(cfg, "net-delta", alpha);
  std::vector<dim::RegionFamily> fams;
  if (m == 0) {
    for (const auto& d : geom::direction_net(sys.n, delta)) {
      fams.push_back([d, alpha](const geom::Vec& c, double r) {
        geom::ConeRegion region{geom::Ball{c, r}};
        region.with_exclude(geom::HalfCone(c, d, alpha));
        return region;
      });
    }
  } else {
    for (const auto& v : geom::subspace_net(sys.n, static_cast<int>(m), delta)) {
      fams.push_back([v, alpha](const geom::Vec& c, double r) {
        geom::ConeRegion region{geom::Ball{c, r}};
        region.with_include(geom::PlaneCone(c, v, alpha));
        return region;
      });
    }
  }
  auto est = dim::conical_dims(meas, x, fams, scales, depth);
  RunOutput out;
  estimate_rows(out, est);
  out.summary = "conical-dims: " + std::to_string(fams.size()) + " net elements, tail slope in [" +
                g17(est.min_tail_slope) + ", " + g17(est.max_tail_slope) + "]";
  return out;
}

RunOutput runlength(const Config& cfg) {
  double p = get_double(cfg, "p", 0.5);
  long n = get_long(cfg, "n", 1000000);
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  auto r = dim::erdos_revesz_check(p, static_cast<size_t>(n), get_seed(cfg));
  RunOutput out;
  out.csv = "p,n,empirical,theoretical,degenerate\n";
  out.csv += g17(p) + "," + std::to_string(n) + "," + g17(r.empirical) + "," +
             g17(r.theoretical) + "," + (r.degenerate ? "1" : "0") + "\n";
  out.summary = "runlength: Z_n/log n = " + g17(r.empirical) + ", limit " + g17(r.theoretical);
  return out;
}

RunOutput packing_demo(const Config& cfg) {
  std::string path = require(cfg, "points");
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open points file: points");
  pack::WeightedPoints pts;
  std::vector<double> vals;
  std::string line;
  int cols = -1;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    vals.clear();
    while (std::getline(ls, tok, ',')) vals.push_back(std::stod(trim(tok)));
    if (cols == -1) {
      cols = static_cast<int>(vals.size());
      if (cols != 2 && cols != 3) throw std::invalid_argument("points file needs x[,y],weight");
      pts.n = cols - 1;
    } else if (static_cast<int>(vals.size()) != cols) {
      throw std::invalid_argument("ragged points file: points");
    }
    pts.points.push_back(pts.n == 1 ? geom::Vec::of(vals[0]) : geom::Vec::of(vals[0], vals[1]));
    pts.weights.push_back(vals.back());
  }
  if (pts.points.empty()) throw std::invalid_argument("empty points file: points");
  std::vector<double> theta_c;
  {
    std::istringstream ts(get(cfg, "theta", pts.n == 1 ? "1" : "1,0"));
    std::string tok;
    while (std::getline(ts, tok, ',')) theta_c.push_back(std::stod(trim(tok)));
  }
  if (static_cast<int>(theta_c.size()) != pts.n)
    throw std::invalid_argument("theta has wrong dimension: theta");
  geom::Direction theta(pts.n == 1 ? geom::Vec::of(theta_c[0])
                                   : geom::Vec::of(theta_c[0], theta_c[1]));
  double R = get_double(cfg, "R", 0.05);
  double factor = get_double(cfg, "radii-factor", 1.5);
  if (factor < 1.0 || factor > 2.0)
    throw std::invalid_argument("radii-factor must be in [1,2]: radii-factor");
  std::vector<double> radii(pts.points.size(), factor * R);
  pack::PackingResult r;
  if (cfg.count("alpha")) {
    double alpha = get_double(cfg, "alpha", 0.5);
    std::vector<geom::Direction> thetas(pts.points.size(), theta);
    r = pack::cone_packing(pts, radii, R, thetas, alpha);
  } else {
    r = pack::halfspace_packing(pts, radii, R, theta);
  }
  RunOutput out;
  out.csv = "x,y,radius,captured,class,bin\n";
  for (const auto& s : r.selected)
    out.csv += g17(s.center[0]) + "," + (pts.n > 1 ? g17(s.center[1]) : std::string()) + "," +
               g17(s.radius) + "," + g17(s.captured) + "," + std::to_string(s.color_class) + "," +
               std::to_string(s.direction_bin) + "\n";
  out.summary = "packing-demo: achieved " + g17(r.achieved) + " vs certified " + g17(r.certified);
  out.status = r.achieved >= r.certified ? 0 : 1;
  return out;
}

RunOutput sharpness(const Config& cfg) {
  dim::Gauge g = dim::Gauge::parse(get(cfg, "gauge", "invlog"));
  long N = get_long(cfg, "N", 1);
  long kmax = get_long(cfg, "kmax", 8);
  int depth = static_cast<int>(get_long(cfg, "depth", 12));
  auto c = cons::build_sharpness(g, N, kmax, depth);
  RunOutput out;
  out.csv = "k,intervals,removed,removed_mass,target_mass\n";
  for (const auto& lvl : c.levels)
    out.csv += std::to_string(lvl.k) + "," + std::to_string(lvl.intervals.size()) + "," +
               std::to_string(lvl.removed.size()) + "," + g17(to_double(lvl.removed_mass)) + "," +
               g17(to_double(lvl.target_mass)) + "\n";
  out.summary = "sharpness: surviving mass " + g17(to_double(c.surviving_mass)) + " across " +
                std::to_string(c.surviving.size()) + " intervals";
  return out;
}

RunOutput grid_measure_cmd(const Config& cfg) {
  double s = get_double(cfg, "s", 1.2);
  double t = get_double(cfg, "t", 1.5);
  cons::GridMeasure gm(s, t);
  long count = get_long(cfg, "points", 10);
  double min_side = get_double(cfg, "min-side", std::pow(2.0, -30));
  uint64_t seed = get_seed(cfg);
  RunOutput out;
  out.csv = "point_id,side,mass,slope\n";
  for (long i = 0; i < count; ++i) {
    auto [pt, profile] = cons::grid_sample_path(gm, min_side, split_seed(seed, 700 + i));
    (void)pt;
    for (const auto& [side, mass] : profile) {
      double slope = side < 1.0 ? std::log(mass) / std::log(side) : 0.0;
      out.csv += std::to_string(i) + "," + g17(side) + "," + g17(mass) + "," + g17(slope) + "\n";
    }
  }
  out.summary = "grid-measure: conical target " + g17(gm.conical_target());
  return out;
}

RunOutput cone_search(const Config& cfg) {
  std::string spec = get(cfg, "system", "prop43:0.28,0.1");
  auto sys = sym::resolve_system(spec);
  long m = get_long(cfg, "m", sys.n == 1 ? 0 : 1);
  std::string alpha_s = get(cfg, "alpha", "auto");
  double alpha;
  if (alpha_s == "auto") {
    if (spec.rfind("prop43:", 0) != 0)
      throw std::invalid_argument("alpha=auto needs a prop43 system: alpha");
    size_t comma = spec.find(',');
    Rat lambda = parse_rational(spec.substr(7, comma - 7));
    alpha = to_double((1 - 3 * lambda) / 10);
  } else {
    alpha = std::stod(alpha_s);
  }
  long lmax = get_long(cfg, "lmax", 8);
  auto r = cons::cone_inclusion_search(sys, static_cast<int>(m), alpha, static_cast<int>(lmax));
  RunOutput out;
  out.csv = "found,level,h,alpha,margin,net_lines,net_dirs\n";
  out.csv += std::string(r.found ? "1" : "0") + "," + std::to_string(r.level) + "," +
             (r.found ? r.h.to_string() : std::string()) + "," + g12(alpha) + "," +
             g17(r.margin) + "," + std::to_string(r.net_lines) + "," +
             std::to_string(r.net_dirs) + "\n";
  out.summary = r.found ? "cone-search: found h=" + r.h.to_string() + " at level " +
                              std::to_string(r.level) + ", margin " + g17(r.margin)
                        : "cone-search: no delegate up to level " + std::to_string(lmax);
  out.status = r.found ? 0 : 1;
  return out;
}

RunOutput verify(const Config& cfg) {
  std::string id = get(cfg, "experiment", "all");
  uint64_t seed = get_seed(cfg);
  std::vector<std::string> ids;
  if (id == "all")
    ids = expt::experiment_ids();
  else
    ids.push_back(id);
  RunOutput out;
  bool all_ok = true;
  for (const auto& e : ids) {
    auto r = expt::run_experiment(e, seed);
    all_ok = all_ok && r.passed;
    out.csv += "# " + r.id + "\n" + r.csv;
    if (!out.summary.empty()) out.summary += "\n";
    out.summary += r.summary;
  }
  out.status = all_ok ? 0 : 1;
  return out;
}

}  // namespace

RunOutput run(const std::string& subcommand, const std::string& config) {
  Config cfg = parse_config(config);
  if (subcommand == "gen-samples") return gen_samples(cfg);
  if (subcommand == "ratios") return ratios(cfg);
  if (subcommand == "dims") return dims(cfg);
  if (subcommand == "conical-dims") return conical_dims_cmd(cfg);
  if (subcommand == "runlength") return runlength(cfg);
  if (subcommand == "packing-demo") return packing_demo(cfg);
  if (subcommand == "sharpness") return sharpness(cfg);
  if (subcommand == "grid-measure") return grid_measure_cmd(cfg);
  if (subcommand == "cone-search") return cone_search(cfg);
  if (subcommand == "verify") return verify(cfg);
  throw std::invalid_argument("unknown subcommand: " + subcommand);
}

}  // namespace conical::run
