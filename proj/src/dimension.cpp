#include "conical/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "conical/rng.hpp"

namespace conical::dim {

double Gauge::operator()(double t) const {
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("gauge evaluated outside (0,1)");
  switch (kind) {
    case Kind::LogPow:
      return std::pow(std::abs(std::log(t)), -param);
    case Kind::Constant:
      return param;
  }
  throw std::logic_error("unreachable");
}

Gauge Gauge::parse(const std::string& spec) {
  if (spec == "invlog") return logpow(1.0);
  auto colon = spec.find(':');
  std::string name = colon == std::string::npos ? spec : spec.substr(0, colon);
  if (colon == std::string::npos) throw std::invalid_argument("gauge needs a parameter: " + spec);
  double v = std::stod(spec.substr(colon + 1));
  if (name == "logpow") return logpow(v);
  if (name == "constant") return constant(v);
  throw std::invalid_argument("unknown gauge: " + spec);
}

std::pair<SeriesClass, double> gauge_integrability(const Gauge& g, long i_max) {
  if (i_max < 1) throw std::invalid_argument("i_max must be >= 1");
  double sum = 0;
  const double log2 = std::log(2.0);
  for (long i = 1; i <= i_max; ++i) {
    // f(2^-i) without underflowing the argument
    if (g.kind == Gauge::Kind::LogPow)
      sum += std::pow(static_cast<double>(i) * log2, -g.param);
    else
      sum += g.param;
  }
  SeriesClass cls = SeriesClass::Unknown;
  if (g.kind == Gauge::Kind::LogPow)
    cls = g.param > 1.0 ? SeriesClass::Convergent : SeriesClass::Divergent;
  else
    cls = g.param == 0.0 ? SeriesClass::Convergent : SeriesClass::Divergent;
  return {cls, sum};
}

RegionFamily ball_family() {
  return [](const geom::Vec& x, double r) { return geom::ConeRegion(geom::Ball{x, r}); };
}

RegionFamily one_sided_family(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  return [sign](const geom::Vec& x, double r) {
    if (x.n != 1) throw std::invalid_argument("one-sided family is one-dimensional");
    geom::ConeRegion region(geom::Ball{x, r});
    // remove the open half-line on the opposite side of x
    region.with_exclude(geom::HalfCone(x, geom::Direction(geom::Vec::of(-sign)), 0.0));
    return region;
  };
}

std::vector<ProfileEntry> ratio_profile(const ref::RefinableMeasure& m, const geom::Vec& x,
                                        const RegionFamily& family, const Gauge& g,
                                        const std::vector<double>& scales, int depth_cap) {
  std::vector<ProfileEntry> out;
  for (double r : scales) {
    ProfileEntry e;
    e.scale = r;
    e.region = measure_region(m, family(x, r), depth_cap);
    e.ball = measure_region(m, ball_family()(x, r), depth_cap);
    e.ratio = ref::ratio_of(e.region, e.ball);
    double f = g(r);
    if (e.ball.upper <= 0.0) {
      e.flagged = true;
    } else {
      e.ratio.lo /= f;
      if (std::isfinite(e.ratio.hi)) e.ratio.hi /= f;
    }
    out.push_back(e);
  }
  return out;
}

namespace {

SlopeEntry slope_from_bound(double r, const ref::MeasureBound& b) {
  SlopeEntry e;
  e.scale = r;
  e.bound = b;
  double lr = std::log(r);  // negative
  e.slope_lo = b.upper > 0.0 ? std::log(b.upper) / lr : std::numeric_limits<double>::infinity();
  if (b.lower > 0.0) {
    e.slope_hi = std::log(b.lower) / lr;
  } else {
    e.slope_hi = std::numeric_limits<double>::infinity();
    e.flagged = true;
  }
  return e;
}

void summarize(DimEstimate& d) {
  d.min_tail_slope = std::numeric_limits<double>::infinity();
  d.max_tail_slope = -std::numeric_limits<double>::infinity();
  size_t start = d.entries.size() / 2;
  for (size_t i = start; i < d.entries.size(); ++i) {
    const SlopeEntry& e = d.entries[i];
    if (e.flagged) {
      ++d.flagged_count;
      continue;
    }
    d.min_tail_slope = std::min(d.min_tail_slope, e.slope_lo);
    d.max_tail_slope = std::max(d.max_tail_slope, e.slope_lo);
  }
}

}  // namespace

namespace {

ref::MeasureBound query(const ref::RefinableMeasure& m, const geom::ConeRegion& region,
                        int depth_cap, size_t refine_budget) {
  if (refine_budget > 0) return ref::measure_region_budget(m, region, depth_cap, refine_budget);
  return ref::measure_region(m, region, depth_cap);
}

}  // namespace

DimEstimate local_dims(const ref::RefinableMeasure& m, const geom::Vec& x,
                       const std::vector<double>& scales, int depth_cap, size_t refine_budget) {
  DimEstimate d;
  auto family = ball_family();
  for (double r : scales)
    d.entries.push_back(slope_from_bound(r, query(m, family(x, r), depth_cap, refine_budget)));
  summarize(d);
  return d;
}

DimEstimate conical_dims(const ref::RefinableMeasure& m, const geom::Vec& x,
                         const std::vector<RegionFamily>& net_families,
                         const std::vector<double>& scales, int depth_cap, size_t refine_budget) {
  if (net_families.empty()) throw std::invalid_argument("conical_dims needs a nonempty net");
  DimEstimate d;
  for (double r : scales) {
    // sup over the net of the slope = the net element of least measure
    ref::MeasureBound best;
    bool first = true;
    for (const auto& fam : net_families) {
      ref::MeasureBound b = query(m, fam(x, r), depth_cap, refine_budget);
      if (first || b.upper < best.upper) {
        best = b;
        first = false;
      }
    }
    d.entries.push_back(slope_from_bound(r, best));
  }
  summarize(d);
  return d;
}

RunStats run_stats(const sym::SymbolWord& word, size_t n) {
  if (word.length() < n) throw std::invalid_argument("run_stats: word shorter than n");
  RunStats s;
  s.gamma = cantor::run_after(word, n);
  size_t run = 0;
  for (size_t i = 0; i < n; ++i) {
    if (word.symbols[i] == 1 || word.symbols[i] == 2) {
      ++run;
      s.z = std::max(s.z, run);
    } else {
      run = 0;
    }
  }
  return s;
}

RunLawResult erdos_revesz_check(double p, size_t n, uint64_t seed) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must be in (0,1)");
  if (n < 1000) throw std::invalid_argument("n must be >= 1000");
  auto rng = make_rng(seed);
  size_t z = 0, run = 0;
  for (size_t i = 0; i < n; ++i) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < 1.0 - p) {
      ++run;
      z = std::max(z, run);
    } else {
      run = 0;
    }
  }
  RunLawResult r;
  r.empirical = static_cast<double>(z) / std::log(static_cast<double>(n));
  r.theoretical = 1.0 / std::abs(std::log(1.0 - p));
  r.degenerate = z == n;
  return r;
}

double io_partial_sum(const std::vector<long>& a) {
  double s = 0;
  for (long v : a) {
    if (v < 0) throw std::invalid_argument("a_n must be nonnegative");
    s += std::pow(2.0, -static_cast<double>(v));
  }
  return s;
}

std::pair<SeriesClass, std::vector<long>> io_sequence(const Gauge& g, long n_max) {
  std::vector<long> a;
  const double log3 = std::log(3.0);
  for (long n = 1; n <= n_max; ++n) {
    double fv;
    if (g.kind == Gauge::Kind::LogPow)
      fv = std::pow(static_cast<double>(n) * log3, -g.param);
    else
      fv = g.param;
    if (!(fv > 0.0)) throw std::invalid_argument("gauge must be positive for io_sequence");
    a.push_back(static_cast<long>(std::ceil(-std::log2(fv))));
  }
  // 2^{-a_n} is comparable with f(3^-n); for logpow the series behaves like
  // sum (n ln 3)^{-s}: divergent iff s <= 1
  SeriesClass cls = SeriesClass::Unknown;
  if (g.kind == Gauge::Kind::LogPow)
    cls = g.param <= 1.0 ? SeriesClass::Divergent : SeriesClass::Convergent;
  else
    cls = g.param > 0.0 ? SeriesClass::Divergent : SeriesClass::Convergent;
  return {cls, a};
}

OneSidedCheck one_sided_dim_check(const sym::SymbolWord& coding, int n_lo, int n_hi) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad scale range");
  OneSidedCheck out;
  // endpoint detection: coding tail constant within the available prefix
  size_t len = coding.length();
  if (len == 0) {
    out.flagged = true;
    return out;
  }
  bool tail_const = true;
  for (size_t i = static_cast<size_t>(n_hi); i + 1 < len; ++i)
    if (coding.symbols[i] != coding.symbols[i + 1]) tail_const = false;
  if (tail_const) {
    out.flagged = true;
    return out;
  }
  out.two_sided_min = std::numeric_limits<double>::infinity();
  out.one_sided_min = std::numeric_limits<double>::infinity();
  int tail_start = n_lo + (n_hi - n_lo) / 2;
  for (int n = tail_start; n <= n_hi; ++n) {
    auto [one, two] = ref::cantor_one_sided(coding, n);
    double lr = -static_cast<double>(n) * std::log(3.0);
    if (two > 0) out.two_sided_min = std::min(out.two_sided_min, std::log(to_double(two)) / lr);
    if (one > 0) out.one_sided_min = std::min(out.one_sided_min, std::log(to_double(one)) / lr);
  }
  return out;
}

TwistedCheck twisted_dim_check(const ref::RefinableMeasure& product, double beta, double alpha,
                               const geom::Vec& x, const std::vector<double>& scales,
                               int depth_cap, size_t refine_budget) {
  if (product.dim() != 2) throw std::invalid_argument("twisted check expects a planar measure");
  if (beta < 1.0) throw std::invalid_argument("beta must be >= 1");
  TwistedCheck out;
  geom::Subspace axis = geom::line_subspace(geom::Direction(geom::Vec::of(1.0, 0.0)), 2);
  RegionFamily fam = [axis, alpha, beta](const geom::Vec& c, double r) {
    geom::ConeRegion region(geom::Ball{c, r});
    region.with_include(geom::PlaneCone(c, axis, alpha, beta));
    return region;
  };
  out.conical = conical_dims(product, x, {fam}, scales, depth_cap, refine_budget);
  out.local = local_dims(product, x, scales, depth_cap, refine_budget);
  out.bound = 1.0 * (beta - 1.0) + out.local.min_tail_slope;
  out.conical_tail_min = std::numeric_limits<double>::infinity();
  for (size_t i = out.conical.entries.size() / 2; i < out.conical.entries.size(); ++i) {
    if (out.local.entries[i].flagged) continue;  // scale beyond the resolved depth
    out.conical_tail_min = std::min(out.conical_tail_min, out.conical.entries[i].slope_lo);
  }
  return out;
}

}  // namespace conical::dim
