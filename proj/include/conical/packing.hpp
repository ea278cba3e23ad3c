#pragma once

#include <cstddef>
#include <vector>

#include "conical/geometry.hpp"

namespace conical::pack {

struct WeightedPoints {
  int n = 1;
  std::vector<geom::Vec> points;
  std::vector<double> weights;  // positive; total = mass of the set
  double total() const;
};

struct Selected {
  geom::Vec center;
  double radius = 0.0;
  double captured = 0.0;
  size_t color_class = 0;
  size_t direction_bin = 0;
};

struct PackingResult {
  std::vector<Selected> selected;
  double achieved = 0.0;   // captured sum / total weight
  double certified = 0.0;  // the constant the selection is guaranteed to beat
  size_t class_count = 0;
  size_t net_size = 1;
  bool empty_input = false;
};

// Greedy (input order) maximal packing: selected centers pairwise > 2*rho
// apart, every input point within 2*rho of a selected center.
std::vector<size_t> maximal_packing(const WeightedPoints& pts, double rho);

// Greedy coloring of the conflict graph (edges between points closer than
// `separation`); each class is pairwise >= separation apart and the class
// count is at most 1 + max degree.
std::vector<std::vector<size_t>> color_decompose(const WeightedPoints& pts,
                                                 const std::vector<size_t>& subset,
                                                 double separation);

// Certified constants. Points pairwise >= R/2 apart inside a ball of radius
// 10R + R/4 number at most 41^n (volume bound), so the conflict graph degree
// is < 41^n and the heaviest color class holds >= 1/41^n of the covered mass.
double certified_constant(int n);                        // c(n) = 1/(2*41^n)
double certified_cone_constant(int n, std::size_t net);  // c(n) / M

// Half-space selection: maximal packing at R/4, coloring at 5R, heaviest
// class, and per center the input point of B(x,R/2) maximizing y.theta; the
// returned balls B(y, r_y) are pairwise disjoint and capture, in
// B(y, r_y) \ H(y, theta), at least certified_constant(n) of the total.
PackingResult halfspace_packing(const WeightedPoints& pts, const std::vector<double>& radii,
                                double R, const geom::Direction& theta);

// Per-point cone directions: bin by nearest net direction (net resolution
// alpha, so each point's alpha-cone contains the bin's half-space), run the
// half-space selection on the heaviest bin, recompute captures with the
// per-point alpha-cones.
PackingResult cone_packing(const WeightedPoints& pts, const std::vector<double>& radii, double R,
                           const std::vector<geom::Direction>& thetas, double alpha);

}  // namespace conical::pack
