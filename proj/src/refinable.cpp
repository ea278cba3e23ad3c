#include "conical/refinable.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace conical::ref {

TriadicInterval::TriadicInterval(Rat l, Rat r) : left(std::move(l)), right(std::move(r)) {
  if (left > right) throw std::invalid_argument("triadic interval: left > right");
  if (left < 0 || right > 1) throw std::invalid_argument("triadic interval must lie in [0,1]");
  if (!denominator_is_power_of(left, 3) || !denominator_is_power_of(right, 3))
    throw std::invalid_argument("triadic interval endpoints need power-of-3 denominators");
}

bool BBox::meets(const sym::PointEnclosure& e) const {
  for (int i = 0; i < e.center.n; ++i) {
    if (e.center[i] + e.radius < lo[i]) return false;
    if (e.center[i] - e.radius > hi[i]) return false;
  }
  return true;
}

std::vector<Cell> RefinableMeasure::refine_window(const Cell& cell, const BBox& box) const {
  std::vector<Cell> out;
  for (Cell& c : refine(cell))
    if (box.meets(c.bound)) out.push_back(std::move(c));
  return out;
}

namespace {

void descend(const RefinableMeasure& m, const Cell& cell, const geom::ConeRegion& region,
             const BBox& box, int depth_left, double weight_floor, MeasureBound& out) {
  geom::Ball b{cell.bound.center, cell.bound.radius};
  switch (geom::ball_disposition(b, region)) {
    case geom::Disposition::Inside:
      out.lower += cell.weight;
      out.upper += cell.weight;
      return;
    case geom::Disposition::Outside:
      return;
    case geom::Disposition::Unknown:
      break;
  }
  if (depth_left == 0 || cell.weight <= weight_floor) {
    out.upper += cell.weight;
    out.unresolved_cells += 1;
    out.unresolved_mass += cell.weight;
    return;
  }
  for (const Cell& child : m.refine_window(cell, box))
    descend(m, child, region, box, depth_left - 1, weight_floor, out);
}

}  // namespace

MeasureBound measure_region(const RefinableMeasure& m, const geom::ConeRegion& region,
                            int depth_cap, double weight_floor) {
  if (depth_cap < 0) throw std::invalid_argument("depth_cap must be >= 0");
  BBox box;
  box.lo = region.ball.center;
  box.hi = region.ball.center;
  // pad by a hair so children touching the sphere are kept
  double pad = region.ball.radius * (1.0 + 1e-9) + 1e-300;
  for (int i = 0; i < box.lo.n; ++i) {
    box.lo[i] -= pad;
    box.hi[i] += pad;
  }
  MeasureBound out;
  descend(m, m.root(), region, box, depth_cap, weight_floor, out);
  if (out.upper > 1.0) out.upper = 1.0;
  return out;
}

MeasureBound measure_region_budget(const RefinableMeasure& m, const geom::ConeRegion& region,
                                   int depth_cap, size_t refine_budget) {
  if (depth_cap < 0) throw std::invalid_argument("depth_cap must be >= 0");
  BBox box;
  box.lo = region.ball.center;
  box.hi = region.ball.center;
  double pad = region.ball.radius * (1.0 + 1e-9) + 1e-300;
  for (int i = 0; i < box.lo.n; ++i) {
    box.lo[i] -= pad;
    box.hi[i] += pad;
  }
  // best-first: always split the heaviest Unknown cell, so a small budget
  // already resolves the bulk of the mass and the cap only loosens dust
  struct Item {
    double weight;
    int depth;
    Cell cell;
  };
  auto lighter = [](const Item& a, const Item& b) { return a.weight < b.weight; };
  std::priority_queue<Item, std::vector<Item>, decltype(lighter)> queue(lighter);
  MeasureBound out;
  size_t refined = 0;
  queue.push({m.root().weight, 0, m.root()});
  while (!queue.empty()) {
    Item item = std::move(const_cast<Item&>(queue.top()));
    queue.pop();
    geom::Ball b{item.cell.bound.center, item.cell.bound.radius};
    switch (geom::ball_disposition(b, region)) {
      case geom::Disposition::Inside:
        out.lower += item.cell.weight;
        out.upper += item.cell.weight;
        continue;
      case geom::Disposition::Outside:
        continue;
      case geom::Disposition::Unknown:
        break;
    }
    if (item.depth >= depth_cap || refined >= refine_budget) {
      out.upper += item.cell.weight;
      out.unresolved_cells += 1;
      out.unresolved_mass += item.cell.weight;
      continue;
    }
    ++refined;
    for (Cell& child : m.refine_window(item.cell, box))
      queue.push({child.weight, item.depth + 1, std::move(child)});
  }
  if (out.upper > 1.0) out.upper = 1.0;
  return out;
}

RatioInterval ratio_of(const MeasureBound& a, const MeasureBound& b) {
  RatioInterval r;
  if (b.upper <= 0.0) {
    // numerator is then also bounded by 0; the quotient is indeterminate
    r.unbounded = true;
    r.lo = 0.0;
    r.hi = std::numeric_limits<double>::infinity();
    return r;
  }
  r.lo = a.lower / b.upper;
  if (b.lower <= 0.0) {
    r.unbounded = true;
    r.hi = std::numeric_limits<double>::infinity();
  } else {
    r.hi = a.upper / b.lower;
  }
  return r;
}

Cell refine_to_scale(const RefinableMeasure& m, const sym::SymbolWord& coding, double r) {
  // the comparison carries a hair of relative slack so that scales given as
  // powers of the contraction ratio land on the intended level despite
  // floating-point drift in the cascaded radii
  auto below = [r](double diameter) { return diameter < r * (1.0 - 1e-9); };
  Cell cell = m.root();
  if (below(2.0 * cell.bound.radius)) return cell;  // even the root is smaller
  size_t depth = 0;
  while (true) {
    if (depth >= coding.length())
      throw std::invalid_argument("refine_to_scale: coding exhausted before reaching scale");
    int symbol = coding.symbols[depth];
    auto children = m.refine(cell);
    const Cell* next = nullptr;
    for (const Cell& c : children) {
      if (!c.path.symbols.empty() && c.path.symbols.back() == symbol) {
        next = &c;
        break;
      }
    }
    if (!next) throw std::invalid_argument("refine_to_scale: symbol not among children");
    if (below(2.0 * next->bound.radius)) return cell;
    cell = *next;
    ++depth;
  }
}

SelfSimilarMeasure::SelfSimilarMeasure(sym::SelfSimilarSystem sys) : sys_(std::move(sys)) {}

Cell SelfSimilarMeasure::root() const {
  Cell c;
  c.bound = sym::PointEnclosure{sys_.ball_center, sys_.ball_radius};
  c.weight = 1.0;
  c.payload = std::make_shared<sym::Similitude>(sym::Similitude::identity(sys_.n));
  return c;
}

std::vector<Cell> SelfSimilarMeasure::refine(const Cell& cell) const {
  auto g = std::static_pointer_cast<const sym::Similitude>(cell.payload);
  std::vector<Cell> out;
  out.reserve(sys_.kappa());
  for (size_t i = 0; i < sys_.kappa(); ++i) {
    sym::Similitude gi = sym::compose(*g, sys_.maps[i]);
    Cell child;
    child.path = cell.path;
    child.path.symbols.push_back(static_cast<int>(i) + 1);
    child.bound.center = gi.apply(sys_.ball_center);
    child.bound.radius = gi.ratio * sys_.ball_radius;
    child.weight = cell.weight * sys_.weights[i];
    child.payload = std::make_shared<sym::Similitude>(std::move(gi));
    out.push_back(std::move(child));
  }
  return out;
}

namespace {
using FactorPair = std::pair<Cell, Cell>;
}

ProductMeasure::ProductMeasure(std::shared_ptr<const RefinableMeasure> mx,
                               std::shared_ptr<const RefinableMeasure> my)
    : mx_(std::move(mx)), my_(std::move(my)) {
  if (mx_->dim() != 1 || my_->dim() != 1)
    throw std::invalid_argument("product factors must be one-dimensional");
}

Cell ProductMeasure::combine(const Cell& cx, const Cell& cy, const sym::SymbolWord& path) const {
  Cell c;
  c.path = path;
  c.bound.center = geom::Vec::of(cx.bound.center[0], cy.bound.center[0]);
  // circumscribed ball of the rectangle [cx +- rx] x [cy +- ry]
  c.bound.radius = std::hypot(cx.bound.radius, cy.bound.radius);
  c.weight = cx.weight * cy.weight;
  c.payload = std::make_shared<FactorPair>(cx, cy);
  return c;
}

Cell ProductMeasure::root() const { return combine(mx_->root(), my_->root(), {}); }

std::vector<Cell> ProductMeasure::refine(const Cell& cell) const {
  auto pair = std::static_pointer_cast<const FactorPair>(cell.payload);
  auto xs = mx_->refine(pair->first);
  auto ys = my_->refine(pair->second);
  std::vector<Cell> out;
  out.reserve(xs.size() * ys.size());
  int idx = 0;
  for (const Cell& cx : xs) {
    for (const Cell& cy : ys) {
      sym::SymbolWord path = cell.path;
      path.symbols.push_back(++idx);
      out.push_back(combine(cx, cy, path));
    }
  }
  return out;
}

std::pair<Rat, Rat> cantor_one_sided(const sym::SymbolWord& prefix, int n) {
  if (n < 0) throw std::invalid_argument("cantor_one_sided: n must be >= 0");
  if (prefix.length() < static_cast<size_t>(n))
    throw std::invalid_argument("cantor_one_sided: coding prefix shorter than n; extend it");
  Rat x = cantor::point_from_word(prefix);
  Rat r = rat_pow(Rat(1, 3), static_cast<unsigned long>(n));
  Rat p1(1, 2);
  return {cantor::interval_measure(p1, x, x + r), cantor::interval_measure(p1, x - r, x + r)};
}

}  // namespace conical::ref
