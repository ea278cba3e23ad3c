#include "conical/packing.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace conical::pack {

namespace {

void validate(const WeightedPoints& pts) {
  if (pts.n < 1 || pts.n > geom::kMaxDim) throw std::invalid_argument("dimension must be 1..3");
  if (pts.points.size() != pts.weights.size())
    throw std::invalid_argument("points/weights size mismatch");
  for (size_t i = 0; i < pts.points.size(); ++i) {
    if (pts.points[i].n != pts.n) throw std::invalid_argument("point dimension mismatch");
    if (!(pts.weights[i] > 0.0)) throw std::invalid_argument("weights must be positive");
  }
}

double dist(const geom::Vec& a, const geom::Vec& b) { return geom::norm(a - b); }

}  // namespace

double WeightedPoints::total() const {
  double s = 0;
  for (double w : weights) s += w;
  return s;
}

std::vector<size_t> maximal_packing(const WeightedPoints& pts, double rho) {
  validate(pts);
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  std::vector<size_t> selected;
  for (size_t i = 0; i < pts.points.size(); ++i) {
    bool ok = true;
    for (size_t j : selected) {
      if (dist(pts.points[i], pts.points[j]) <= 2.0 * rho) {
        ok = false;
        break;
      }
    }
    if (ok) selected.push_back(i);
  }
  return selected;
}

std::vector<std::vector<size_t>> color_decompose(const WeightedPoints& pts,
                                                 const std::vector<size_t>& subset,
                                                 double separation) {
  validate(pts);
  if (!(separation > 0.0)) throw std::invalid_argument("separation must be positive");
  std::vector<std::vector<size_t>> classes;
  for (size_t i : subset) {
    bool placed = false;
    for (auto& cls : classes) {
      bool fits = true;
      for (size_t j : cls) {
        if (dist(pts.points[i], pts.points[j]) < separation) {
          fits = false;
          break;
        }
      }
      if (fits) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

double certified_constant(int n) {
  double c = 1.0;
  for (int i = 0; i < n; ++i) c *= 41.0;
  return 1.0 / (2.0 * c);
}

double certified_cone_constant(int n, std::size_t net) {
  return certified_constant(n) / static_cast<double>(net == 0 ? 1 : net);
}

namespace {

// Shared selection machinery: restrict to `active` indices, pack, color,
// take the heaviest class, and pick the theta-extremal point per center.
struct Selection {
  std::vector<size_t> extremal;  // indices of the y_x points
  size_t class_count = 0;
  std::vector<size_t> color_of;  // parallel to extremal
};

Selection select_centers(const WeightedPoints& pts, const std::vector<size_t>& active, double R,
                         const geom::Direction& theta) {
  WeightedPoints sub;
  sub.n = pts.n;
  for (size_t i : active) {
    sub.points.push_back(pts.points[i]);
    sub.weights.push_back(pts.weights[i]);
  }
  std::vector<size_t> all(sub.points.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;

  auto f0 = maximal_packing(sub, R / 4.0);
  auto classes = color_decompose(sub, f0, 5.0 * R);

  // Heaviest class by covered mass; within a class the R/2-balls are
  // disjoint, so the per-center sums do not double count.
  size_t best = 0;
  double best_mass = -1.0;
  for (size_t c = 0; c < classes.size(); ++c) {
    double mass = 0;
    for (size_t x : classes[c])
      for (size_t p = 0; p < sub.points.size(); ++p)
        if (dist(sub.points[p], sub.points[x]) <= R / 2.0) mass += sub.weights[p];
    if (mass > best_mass) {
      best_mass = mass;
      best = c;
    }
  }

  Selection sel;
  sel.class_count = classes.size();
  for (size_t x : classes[best]) {
    // extremal point of the covered patch in direction theta; first index wins ties
    size_t arg = active[x];
    double val = -std::numeric_limits<double>::infinity();
    for (size_t p = 0; p < sub.points.size(); ++p) {
      if (dist(sub.points[p], sub.points[x]) > R / 2.0) continue;
      double v = geom::dot(sub.points[p], theta.unit);
      if (v > val) {
        val = v;
        arg = active[p];
      }
    }
    sel.extremal.push_back(arg);
    sel.color_of.push_back(best);
  }
  return sel;
}

}  // namespace

PackingResult halfspace_packing(const WeightedPoints& pts, const std::vector<double>& radii,
                                double R, const geom::Direction& theta) {
  validate(pts);
  if (!(R > 0.0)) throw std::invalid_argument("R must be positive");
  if (radii.size() != pts.points.size()) throw std::invalid_argument("radii size mismatch");
  for (double r : radii)
    if (r < R || r > 2.0 * R) throw std::invalid_argument("each radius must lie in [R, 2R]");

  PackingResult out;
  out.certified = certified_constant(pts.n);
  if (pts.points.empty()) {
    out.empty_input = true;
    return out;
  }
  std::vector<size_t> all(pts.points.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  Selection sel = select_centers(pts, all, R, theta);

  double captured_sum = 0;
  for (size_t k = 0; k < sel.extremal.size(); ++k) {
    size_t y = sel.extremal[k];
    Selected s;
    s.center = pts.points[y];
    s.radius = radii[y];
    s.color_class = sel.color_of[k];
    // capture: ball membership closed, half-space complement non-strict
    // ((w - y).theta <= 0) since H is open
    for (size_t p = 0; p < pts.points.size(); ++p) {
      geom::Vec d = pts.points[p] - s.center;
      if (geom::norm(d) <= s.radius && geom::dot(d, theta.unit) <= 0.0)
        s.captured += pts.weights[p];
    }
    captured_sum += s.captured;
    out.selected.push_back(std::move(s));
  }
  out.class_count = sel.class_count;
  out.achieved = captured_sum / pts.total();
  return out;
}

PackingResult cone_packing(const WeightedPoints& pts, const std::vector<double>& radii, double R,
                           const std::vector<geom::Direction>& thetas, double alpha) {
  validate(pts);
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in (0,1]");
  if (thetas.size() != pts.points.size()) throw std::invalid_argument("thetas size mismatch");
  if (radii.size() != pts.points.size()) throw std::invalid_argument("radii size mismatch");
  for (double r : radii)
    if (r < R || r > 2.0 * R) throw std::invalid_argument("each radius must lie in [R, 2R]");

  // Net at angular resolution alpha: if theta is within angle alpha of zeta
  // then H(y, theta, alpha) contains H(y, zeta), so the cone complement
  // B \ H(y, theta, alpha) contains B \ H(y, zeta).
  auto net = geom::direction_net(pts.n, alpha);

  PackingResult out;
  out.net_size = net.size();
  out.certified = certified_cone_constant(pts.n, net.size());
  if (pts.points.empty()) {
    out.empty_input = true;
    return out;
  }

  std::vector<size_t> bin_of(pts.points.size());
  std::vector<double> bin_mass(net.size(), 0.0);
  for (size_t p = 0; p < pts.points.size(); ++p) {
    size_t best = 0;
    double best_dot = -2.0;
    for (size_t j = 0; j < net.size(); ++j) {
      double d = geom::dot(thetas[p].unit, net[j].unit);
      if (d > best_dot) {
        best_dot = d;
        best = j;
      }
    }
    bin_of[p] = best;
    bin_mass[best] += pts.weights[p];
  }
  size_t j0 = 0;
  for (size_t j = 1; j < net.size(); ++j)
    if (bin_mass[j] > bin_mass[j0]) j0 = j;

  std::vector<size_t> active;
  for (size_t p = 0; p < pts.points.size(); ++p)
    if (bin_of[p] == j0) active.push_back(p);

  Selection sel = select_centers(pts, active, R, net[j0]);

  double captured_sum = 0;
  for (size_t k = 0; k < sel.extremal.size(); ++k) {
    size_t y = sel.extremal[k];
    Selected s;
    s.center = pts.points[y];
    s.radius = radii[y];
    s.color_class = sel.color_of[k];
    s.direction_bin = j0;
    // capture recomputed against the point's own alpha-cone (a superset of
    // what the bin's half-space leaves behind)
    for (size_t p = 0; p < pts.points.size(); ++p) {
      geom::Vec d = pts.points[p] - s.center;
      double len = geom::norm(d);
      if (len <= s.radius && geom::dot(d, thetas[y].unit) <= alpha * len)
        s.captured += pts.weights[p];
    }
    captured_sum += s.captured;
    out.selected.push_back(std::move(s));
  }
  out.class_count = sel.class_count;
  out.achieved = captured_sum / pts.total();
  return out;
}

}  // namespace conical::pack
