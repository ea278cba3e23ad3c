#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "conical/cantor.hpp"
#include "conical/geometry.hpp"
#include "conical/rat.hpp"
#include "conical/symbolic.hpp"

namespace conical::ref {

// Closed subinterval of [0,1] whose endpoints have power-of-3 denominators.
struct TriadicInterval {
  Rat left, right;
  TriadicInterval(Rat l, Rat r);
  Rat length() const { return right - left; }
};

// A node of a refinable measure tree: an enclosure of its support piece and
// its mass. `payload` carries backend-specific refinement state.
struct Cell {
  sym::SymbolWord path;
  sym::PointEnclosure bound;
  double weight = 0.0;
  std::shared_ptr<const void> payload;
};

// Axis-aligned box, used to prune refinement to the neighborhood of a query.
struct BBox {
  geom::Vec lo, hi;
  bool meets(const sym::PointEnclosure& e) const;
};

class RefinableMeasure {
 public:
  virtual ~RefinableMeasure() = default;
  virtual int dim() const = 0;
  virtual Cell root() const = 0;
  // Children partition the parent's mass; zero-mass children are omitted.
  virtual std::vector<Cell> refine(const Cell& cell) const = 0;
  // Children whose enclosure meets the box; others are certifiably outside
  // any region contained in the box. Backends with large branching factors
  // (the grid construction) override this with index arithmetic.
  virtual std::vector<Cell> refine_window(const Cell& cell, const BBox& box) const;
  virtual std::string tag() const = 0;
};

struct MeasureBound {
  double lower = 0.0;
  double upper = 0.0;
  long unresolved_cells = 0;
  double unresolved_mass = 0.0;
  double width() const { return upper - lower; }
};

// Recursive enclosure of mu(region): cells certifiably Inside count toward
// both bounds, Outside toward neither; Unknown cells are refined, and at
// depth_cap they count toward the upper bound only. Unknown cells whose mass
// is already <= weight_floor are treated like capped cells instead of being
// refined; the loss is tracked in unresolved_mass either way.
MeasureBound measure_region(const RefinableMeasure& m, const geom::ConeRegion& region,
                            int depth_cap, double weight_floor = 0.0);

// Same enclosure with a refinement budget instead of a weight floor: Unknown
// cells are split heaviest-first until `refine_budget` splits have been
// spent, then the rest are capped (upper bound only). Useful when the region
// boundary crosses the attractor densely and exhaustive refinement blows up.
MeasureBound measure_region_budget(const RefinableMeasure& m, const geom::ConeRegion& region,
                                   int depth_cap, size_t refine_budget);

// Interval quotient mu(A)/mu(B) = [lower(A)/upper(B), upper(A)/lower(B)].
struct RatioInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool unbounded = false;  // division by a zero lower (or upper) bound
};
RatioInterval ratio_of(const MeasureBound& a, const MeasureBound& b);

// Deepest ancestor cell of the coded point whose enclosure diameter is
// still >= r (the diameter convention makes cantor13 depth-k cells match
// scale 3^-k exactly). Throws if the coding runs out first.
Cell refine_to_scale(const RefinableMeasure& m, const sym::SymbolWord& coding, double r);

class SelfSimilarMeasure : public RefinableMeasure {
 public:
  explicit SelfSimilarMeasure(sym::SelfSimilarSystem sys);
  int dim() const override { return sys_.n; }
  Cell root() const override;
  std::vector<Cell> refine(const Cell& cell) const override;
  std::string tag() const override { return "selfsimilar"; }
  const sym::SelfSimilarSystem& system() const { return sys_; }

 private:
  sym::SelfSimilarSystem sys_;
};

// Product of two one-dimensional refinable measures on R^2. Cells are
// rectangles (circumscribed-ball enclosures); both factors refine together.
class ProductMeasure : public RefinableMeasure {
 public:
  ProductMeasure(std::shared_ptr<const RefinableMeasure> mx,
                 std::shared_ptr<const RefinableMeasure> my);
  int dim() const override { return 2; }
  Cell root() const override;
  std::vector<Cell> refine(const Cell& cell) const override;
  std::string tag() const override { return "product"; }

 private:
  std::shared_ptr<const RefinableMeasure> mx_, my_;
  Cell combine(const Cell& cx, const Cell& cy, const sym::SymbolWord& path) const;
};

// Exact one-sided/two-sided ball measures of the natural triadic Cantor
// measure at x = pi(prefix 111...): (mu[x, x+3^-n], mu[x-3^-n, x+3^-n]).
std::pair<Rat, Rat> cantor_one_sided(const sym::SymbolWord& prefix, int n);

}  // namespace conical::ref
