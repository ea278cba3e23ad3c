#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "conical/dimension.hpp"
#include "conical/refinable.hpp"
#include "conical/symbolic.hpp"

namespace conical::cons {

// Gauge-driven interval removal on the triadic Cantor set: at each level k
// every surviving construction interval I = [a,c] loses a right piece
// I+ = [b,c] with mu(I+) >= f(3^-k) mu(I), b chosen greedily (largest
// depth-capped triadic value satisfying the target).
struct SharpnessLevel {
  long k = 0;
  std::vector<ref::TriadicInterval> intervals;  // the I's processed at this level
  std::vector<ref::TriadicInterval> removed;    // the corresponding I+'s
  Rat removed_mass;                             // exact total mass removed
  Rat target_mass;                              // sum of f(3^-k) mu(I)
};

struct SharpnessConstruction {
  long N = 0, k_max = 0;
  std::vector<SharpnessLevel> levels;
  std::vector<ref::TriadicInterval> surviving;  // F_{k_max} as disjoint intervals
  Rat surviving_mass;                           // exact mu(F_{k_max})
};

SharpnessConstruction build_sharpness(const dim::Gauge& f, long N, long k_max, int depth_cap);

// The constructive decay product prod_{k=1..n} (1 - eps 2^-L f(3^{-N-kL})).
double sharpness_product_bound(const dim::Gauge& f, double eps, long L, long N, long n);

// Planar measure built from two alternating grid subdivisions, tuned so the
// local dimension oscillates between s and t while the conical dimension
// (cones around the vertical axis) is s(t-1)/(s-1).
class GridMeasure : public ref::RefinableMeasure {
 public:
  GridMeasure(double s, double t);
  int dim() const override { return 2; }
  ref::Cell root() const override;
  std::vector<ref::Cell> refine(const ref::Cell& cell) const override;
  // index arithmetic instead of enumeration: the branching factor grows fast
  std::vector<ref::Cell> refine_window(const ref::Cell& cell, const ref::BBox& box) const override;
  std::string tag() const override { return "grid"; }

  double s() const { return s_; }
  double t() const { return t_; }
  double conical_target() const { return s_ * (t_ - 1.0) / (s_ - 1.0); }

  struct Node {
    Rat x0, y0, side, mass;
    int depth = 0;  // even depth: subdivision (1) next; odd: subdivision (2)
  };
  static const Node& node_of(const ref::Cell& cell);

 private:
  double s_, t_;
};

// Mass-weighted random descent: returns the final cell's center and the
// (side, mass) profile along the way, stopping once side < min_side.
std::pair<geom::Vec, std::vector<std::pair<double, double>>> grid_sample_path(
    const GridMeasure& gm, double min_side, uint64_t seed);

// Delegate word h, assembled one stage per net slot, such that (certified
// through bounding-ball enclosures with the halved aperture) every net pair
// (V, theta) admits a witness j with E_j inside X(y, V, alpha) minus
// H(y, theta, alpha) for ALL y in E_h.  Stage s contributes a level-`level`
// block a_s to h; the slot's witness is a_1...a_{s-1} b_s, which inherits the
// stage certificate because similitudes preserve angles.
struct ConeSearchResult {
  bool found = false;
  sym::SymbolWord h;                       // concatenation of the stage apex words
  int level = 0;                           // per-stage word length (|h| = slots * level)
  double alpha = 0.0;
  double margin = 0.0;                     // worst slack over the net
  std::vector<sym::SymbolWord> witnesses;  // one per net slot, in slot order
  size_t net_lines = 1;                    // M1 (1 when m = 0)
  size_t net_dirs = 0;                     // M2
  // diagnostics when not found
  double best_margin = 0.0;
  sym::SymbolWord best_h;
  int best_level = 0;
};

// Supported setups: (n=1, m=0) and (n=2, m=1).
ConeSearchResult cone_inclusion_search(const sym::SelfSimilarSystem& sys, int m, double alpha,
                                       int l_max);

struct SeparationResult {
  bool found = false;
  sym::SymbolWord k;
  double delta = 0.0;
  bool audited = false;  // dist(E_ik, E \ E_i) > delta diam(E_i) for |i| <= 3
};

SeparationResult separation_word_search(const sym::SelfSimilarSystem& sys, int k_max);

struct ExponentResult {
  double s1 = 0.0, s2 = 0.0, s = 0.0;
};

ExponentResult theorem41_exponents(const sym::SelfSimilarSystem& sys,
                                   const ConeSearchResult& search, const SeparationResult& sep);

}  // namespace conical::cons
