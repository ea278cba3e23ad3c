#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "conical/geometry.hpp"
#include "conical/refinable.hpp"
#include "conical/symbolic.hpp"

namespace conical::dim {

// Gauge function on (0,1): logpow(s) is f(t) = |ln t|^{-s} (natural log;
// s = 1 is the borderline 1/|ln t| case), constant(c) is f == c.
struct Gauge {
  enum class Kind { LogPow, Constant };
  Kind kind = Kind::Constant;
  double param = 1.0;

  double operator()(double t) const;
  static Gauge logpow(double s) { return Gauge{Kind::LogPow, s}; }
  static Gauge constant(double c) { return Gauge{Kind::Constant, c}; }
  // "logpow:2", "constant:0.5", "invlog" (= logpow:1)
  static Gauge parse(const std::string& spec);
};

enum class SeriesClass { Convergent, Divergent, Unknown };

// Partial sum of sum_i f(2^-i) plus, for the built-in gauges, the analytic
// classification (logpow(s) converges iff s > 1).
std::pair<SeriesClass, double> gauge_integrability(const Gauge& g, long i_max);

// Builds a cone region family at the query point: callers fix the shape,
// the profile loop supplies the scale.
using RegionFamily = std::function<geom::ConeRegion(const geom::Vec& x, double r)>;

RegionFamily ball_family();
// One-sided interval family in 1-D: [x, x+r] (sign=+1) or [x-r, x] (-1),
// realized as the ball minus the open half-line cone on the opposite side.
RegionFamily one_sided_family(int sign);

struct ProfileEntry {
  double scale = 0.0;
  ref::MeasureBound region;
  ref::MeasureBound ball;
  ref::RatioInterval ratio;  // mu(region) / (f(r) mu(ball))
  bool flagged = false;      // ball upper bound 0: empty-ball entry
};

std::vector<ProfileEntry> ratio_profile(const ref::RefinableMeasure& m, const geom::Vec& x,
                                        const RegionFamily& family, const Gauge& g,
                                        const std::vector<double>& scales, int depth_cap);

struct SlopeEntry {
  double scale = 0.0;
  ref::MeasureBound bound;
  double slope_lo = 0.0;  // log upper / log r  (certified lower bound)
  double slope_hi = 0.0;  // log lower / log r  (infinite when lower = 0)
  bool flagged = false;   // lower bound 0: slope_hi not numeric
};

struct DimEstimate {
  std::vector<SlopeEntry> entries;
  // limsup/liminf proxies: extrema of slope_lo over the last half of scales
  double min_tail_slope = 0.0;
  double max_tail_slope = 0.0;
  long flagged_count = 0;
};

// refine_budget = 0 refines exhaustively to depth_cap; a positive budget
// switches every query to the heaviest-first capped refinement, which keeps
// slow boundaries (twisted cones across a product attractor) tractable.
DimEstimate local_dims(const ref::RefinableMeasure& m, const geom::Vec& x,
                       const std::vector<double>& scales, int depth_cap,
                       size_t refine_budget = 0);

// Extremal (sup over the net) conical slopes: per scale the net element of
// smallest measure upper bound drives the certified slope lower bound.
DimEstimate conical_dims(const ref::RefinableMeasure& m, const geom::Vec& x,
                         const std::vector<RegionFamily>& net_families,
                         const std::vector<double>& scales, int depth_cap,
                         size_t refine_budget = 0);

struct RunStats {
  size_t gamma = 0;  // run of symbol 2 right after position n
  size_t z = 0;      // longest all-{1,2} block within the first n symbols
};
RunStats run_stats(const sym::SymbolWord& word, size_t n);

struct RunLawResult {
  double empirical = 0.0;    // Z_n / log n
  double theoretical = 0.0;  // 1 / |log(1-p)|
  bool degenerate = false;   // all-{1,2} stream: ratio diverges
};
// Simulates n symbols where {1,2} carry total probability 1-p.
RunLawResult erdos_revesz_check(double p, size_t n, uint64_t seed);

// Partial sum of sum 2^{-a_n}; the divergence criterion for runs > a_n
// happening infinitely often.
double io_partial_sum(const std::vector<long>& a);
// a_n = ceil(-log2 f(3^-n)) for the gauge, plus its analytic classification.
std::pair<SeriesClass, std::vector<long>> io_sequence(const Gauge& g, long n_max);

struct OneSidedCheck {
  bool flagged = false;        // eventually-constant coding (endpoint)
  double two_sided_min = 0.0;  // liminf proxy over the tail scales
  double one_sided_min = 0.0;
};
// Exact triadic arithmetic on the natural Cantor measure; slopes at scales
// 3^-n for n in [n_lo, n_hi], tail = last half.
OneSidedCheck one_sided_dim_check(const sym::SymbolWord& coding, int n_lo, int n_hi);

struct TwistedCheck {
  DimEstimate conical;  // mu(B(x,r) cap X^beta(x, V, alpha)) slopes
  DimEstimate local;
  double bound = 0.0;  // m(beta-1) + measured lower local dimension
  // min certified conical slope over the tail scales the refinement actually
  // resolved. The thin cone rarely certifies interior cells (its entries stay
  // flagged), so resolution is witnessed by the ball query instead: a scale
  // counts when the ball entry at the same radius is unflagged.
  double conical_tail_min = 0.0;
};
// Product-measure check against the twisted-cone dimension bound; V is the
// first coordinate axis, m = 1.
TwistedCheck twisted_dim_check(const ref::RefinableMeasure& product, double beta, double alpha,
                               const geom::Vec& x, const std::vector<double>& scales,
                               int depth_cap, size_t refine_budget = 0);

}  // namespace conical::dim
