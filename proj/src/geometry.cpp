#include "conical/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conical::geom {

namespace {

void check_dim(const Vec& a, const Vec& b) {
  if (a.n != b.n) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

Vec operator+(const Vec& a, const Vec& b) {
  check_dim(a, b);
  Vec r = a;
  for (int i = 0; i < a.n; ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  check_dim(a, b);
  Vec r = a;
  for (int i = 0; i < a.n; ++i) r[i] -= b[i];
  return r;
}

Vec operator*(double s, const Vec& a) {
  Vec r = a;
  for (int i = 0; i < a.n; ++i) r[i] *= s;
  return r;
}

double dot(const Vec& a, const Vec& b) {
  check_dim(a, b);
  double s = 0;
  for (int i = 0; i < a.n; ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Direction::Direction(const Vec& v) : unit(v) {
  if (std::abs(norm(v) - 1.0) > kUnitTol)
    throw std::invalid_argument("direction is not a unit vector");
}

Subspace::Subspace(int n_, int codim_, std::vector<Vec> basis_)
    : n(n_), codim(codim_), basis(std::move(basis_)) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("unsupported dimension");
  if (codim < 0 || codim > n - 1) throw std::invalid_argument("codimension out of range");
  if (static_cast<int>(basis.size()) != n - codim)
    throw std::invalid_argument("basis size must equal n - codim");
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      double d = dot(basis[i], basis[j]);
      double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(d - target) > kUnitTol)
        throw std::invalid_argument("subspace basis is not orthonormal");
    }
  }
}

double Subspace::dist(const Vec& v) const {
  if (codim == 0) return 0.0;
  Vec proj = 0.0 * v;
  for (const Vec& b : basis) proj = proj + dot(v, b) * b;
  return norm(v - proj);
}

HalfCone::HalfCone(const Vec& v, const Direction& d, double alpha)
    : vertex(v), direction(d), aperture(alpha) {
  if (v.n != d.unit.n) throw std::invalid_argument("dimension mismatch");
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("aperture must be in [0,1]");
}

PlaneCone::PlaneCone(const Vec& v, Subspace s, double alpha, double beta)
    : vertex(v), subspace(std::move(s)), aperture(alpha), twist(beta) {
  if (v.n != subspace.n) throw std::invalid_argument("dimension mismatch");
  if (alpha <= 0.0 || alpha > 1.0) throw std::invalid_argument("aperture must be in (0,1]");
  if (beta < 1.0) throw std::invalid_argument("twist must be >= 1");
}

ConeRegion::ConeRegion(const Ball& b) : ball(b) {
  if (b.radius <= 0.0) throw std::invalid_argument("ball radius must be positive");
}

ConeRegion& ConeRegion::with_include(PlaneCone c) {
  if (c.vertex.n != ball.center.n) throw std::invalid_argument("dimension mismatch");
  include.clear();
  c.vertex = ball.center;  // cones are centered at the query point
  include.push_back(std::move(c));
  return *this;
}

ConeRegion& ConeRegion::with_exclude(HalfCone c) {
  if (c.vertex.n != ball.center.n) throw std::invalid_argument("dimension mismatch");
  exclude.clear();
  c.vertex = ball.center;
  exclude.push_back(std::move(c));
  return *this;
}

bool in_half_cone(const Vec& y, const HalfCone& h) {
  Vec d = y - h.vertex;
  return dot(d, h.direction.unit) > h.aperture * norm(d);
}

bool in_plane_cone(const Vec& y, const PlaneCone& c) {
  Vec d = y - c.vertex;
  double len = norm(d);
  if (len == 0.0) return false;  // vertex excluded (strict inequality)
  return c.subspace.dist(d) < c.aperture * std::pow(len, c.twist);
}

bool in_region(const Vec& y, const ConeRegion& region) {
  if (norm(y - region.ball.center) > region.ball.radius) return false;
  for (const auto& c : region.include)
    if (!in_plane_cone(y, c)) return false;
  for (const auto& h : region.exclude)
    if (in_half_cone(y, h)) return false;
  return true;
}

Disposition ball_disposition(const Ball& q, const ConeRegion& region) {
  if (q.radius <= 0.0) throw std::invalid_argument("query radius must be positive");
  const Vec& x = region.ball.center;
  const double d = norm(q.center - x);
  const double rho = q.radius;
  // relative to the local scale: an absolute term here would freeze every
  // disposition to Unknown once the query radii drop below the margin
  const double pad = kMarginFactor * (d + rho + region.ball.radius);

  // Against the region ball.
  if (d - rho > region.ball.radius + pad) return Disposition::Outside;
  bool inside = d + rho <= region.ball.radius - pad;

  // Against the included plane cone.
  for (const auto& c : region.include) {
    const double dv = c.subspace.dist(q.center - x);
    // farthest/nearest |y - x| over the query ball
    const double lo = d - rho, hi = d + rho;
    if (lo > pad) {
      // fully inside the cone: dist + rho < alpha * (min |y-x|)^beta
      if (!(dv + rho < c.aperture * std::pow(lo, c.twist) - pad)) inside = false;
    } else {
      inside = false;  // query ball touches the vertex
    }
    // fully outside the cone: dist - rho >= alpha * (max |y-x|)^beta
    if (dv - rho >= c.aperture * std::pow(hi, c.twist) + pad) return Disposition::Outside;
  }

  // Against the excluded half-space cone.
  for (const auto& h : region.exclude) {
    const double proj = dot(q.center - x, h.direction.unit);
    // query ball entirely in H => region-Outside
    if (proj - rho > h.aperture * (d + rho) + pad) return Disposition::Outside;
    // query ball certifiably avoids H
    bool avoids = d > rho && proj + rho * (1.0 + h.aperture) <= h.aperture * (d - rho) - pad;
    if (!avoids) inside = false;
  }

  return inside ? Disposition::Inside : Disposition::Unknown;
}

std::vector<Direction> direction_net(int n, double delta) {
  if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
  std::vector<Direction> net;
  if (n == 1) {
    net.emplace_back(Vec::of(1.0));
    net.emplace_back(Vec::of(-1.0));
    return net;
  }
  if (n == 2) {
    int k = static_cast<int>(std::ceil(std::numbers::pi / delta));
    if (k < 3) k = 3;
    for (int i = 0; i < k; ++i) {
      double phi = 2.0 * std::numbers::pi * i / k;
      net.emplace_back(Vec::of(std::cos(phi), std::sin(phi)));
    }
    return net;
  }
  if (n == 3) {
    // Fibonacci sphere; the point count is sized so the covering radius is
    // below delta, audited by the seeded Monte Carlo check in the tests.
    int count = static_cast<int>(std::ceil(16.0 / (delta * delta)));
    if (count < 16) count = 16;
    const double ga = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      double z = 1.0 - 2.0 * (i + 0.5) / count;
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double phi = ga * i;
      Vec v = Vec::of(r * std::cos(phi), r * std::sin(phi), z);
      net.emplace_back(Vec{3, {v[0] / norm(v), v[1] / norm(v), v[2] / norm(v)}});
    }
    return net;
  }
  throw std::invalid_argument("direction_net supports n in {1,2,3} only");
}

Subspace full_space(int n) {
  std::vector<Vec> basis;
  for (int i = 0; i < n; ++i) {
    Vec e{n, {}};
    e[i] = 1.0;
    basis.push_back(e);
  }
  return Subspace(n, 0, std::move(basis));
}

Subspace line_subspace(const Direction& d, int n) {
  if (d.unit.n != n) throw std::invalid_argument("dimension mismatch");
  return Subspace(n, n - 1, {d.unit});
}

Subspace hyperplane(const Direction& d, int n) {
  if (n == 2) {
    Vec v = d.unit;
    return Subspace(2, 1, {Vec::of(-v[1], v[0])});
  }
  if (n == 3) {
    Vec v = d.unit;
    // pick the coordinate axis least aligned with v
    int k = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(v[i]) < std::abs(v[k])) k = i;
    Vec e{3, {}};
    e[k] = 1.0;
    Vec b1 = e - dot(e, v) * v;
    b1 = (1.0 / norm(b1)) * b1;
    Vec b2 = Vec::of(v[1] * b1[2] - v[2] * b1[1], v[2] * b1[0] - v[0] * b1[2],
                     v[0] * b1[1] - v[1] * b1[0]);
    b2 = (1.0 / norm(b2)) * b2;
    return Subspace(3, 1, {b1, b2});
  }
  throw std::invalid_argument("hyperplane supports n in {2,3}");
}

std::vector<Subspace> subspace_net(int n, int m, double delta) {
  if (n < 1 || n > 3) throw std::invalid_argument("subspace_net supports n in {1,2,3}");
  if (m < 0 || m > n - 1) throw std::invalid_argument("codimension out of range");
  std::vector<Subspace> net;
  if (m == 0) {
    net.push_back(full_space(n));
    return net;
  }
  if (n == 2 && m == 1) {
    // lines through the origin: half of a direction net
    int k = static_cast<int>(std::ceil(std::numbers::pi / (2.0 * delta)));
    if (k < 2) k = 2;
    for (int i = 0; i < k; ++i) {
      double phi = std::numbers::pi * i / k;
      net.push_back(line_subspace(Direction(Vec::of(std::cos(phi), std::sin(phi))), 2));
    }
    return net;
  }
  if (n == 3 && m == 1) {
    for (const auto& d : direction_net(3, delta)) net.push_back(hyperplane(d, 3));
    return net;
  }
  if (n == 3 && m == 2) {
    for (const auto& d : direction_net(3, delta)) net.push_back(line_subspace(d, 3));
    return net;
  }
  throw std::invalid_argument("unsupported (n, m) for subspace_net");
}

}  // namespace conical::geom
