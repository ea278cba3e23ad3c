#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace conical::geom {

inline constexpr int kMaxDim = 3;
inline constexpr double kUnitTol = 1e-12;
// Disposition tests pad by kMarginFactor * scale so Unknown absorbs roundoff.
inline constexpr double kMarginFactor = 1e-12;

struct Vec {
  int n = 0;
  std::array<double, kMaxDim> c{};

  static Vec of(double x) { return Vec{1, {x, 0, 0}}; }
  static Vec of(double x, double y) { return Vec{2, {x, y, 0}}; }
  static Vec of(double x, double y, double z) { return Vec{3, {x, y, z}}; }

  double operator[](int i) const { return c[static_cast<size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<size_t>(i)]; }
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(double s, const Vec& a);
double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);

// Unit vector; construction checks |v| = 1 within kUnitTol.
struct Direction {
  Vec unit;
  explicit Direction(const Vec& v);
};

// Linear subspace V of R^n with codimension m, stored as an orthonormal
// basis of V itself (n - m vectors). codim 0 means V = R^n.
struct Subspace {
  int n = 0;
  int codim = 0;                 // m
  std::vector<Vec> basis;        // n - m orthonormal vectors spanning V
  Subspace(int n_, int codim_, std::vector<Vec> basis_);
  // distance from v to V
  double dist(const Vec& v) const;
};

// H(x, theta, alpha) = { y : (y-x).theta > alpha |y-x| }, open; alpha in [0,1].
struct HalfCone {
  Vec vertex;
  Direction direction;
  double aperture = 0.0;
  HalfCone(const Vec& v, const Direction& d, double alpha);
};

// X^beta(x, V, alpha) = { y : dist(y-x, V) < alpha |y-x|^beta }; beta = 1 is
// the ordinary cone X(x, V, alpha).
struct PlaneCone {
  Vec vertex;
  Subspace subspace;
  double aperture = 0.0;  // alpha in (0,1]
  double twist = 1.0;     // beta >= 1
  PlaneCone(const Vec& v, Subspace s, double alpha, double beta = 1.0);
};

struct Ball {
  Vec center;
  double radius = 0.0;
};

// Query region B(x,r) [ cap X(x,V,alpha) ] [ minus H(x,theta,alpha) ].
// All cone vertices coincide with the ball center.
struct ConeRegion {
  Ball ball;
  std::vector<PlaneCone> include;  // empty or one element
  std::vector<HalfCone> exclude;   // empty or one element
  ConeRegion(const Ball& b);
  ConeRegion& with_include(PlaneCone c);
  ConeRegion& with_exclude(HalfCone c);
};

enum class Disposition { Inside, Outside, Unknown };

bool in_half_cone(const Vec& y, const HalfCone& h);
bool in_plane_cone(const Vec& y, const PlaneCone& c);
bool in_region(const Vec& y, const ConeRegion& region);

// Conservative: Inside/Outside are certified with a roundoff margin, Unknown
// never lies. A ball touching the region vertex is always Unknown unless it
// is certifiably outside the region ball.
Disposition ball_disposition(const Ball& q, const ConeRegion& region);

// Finite delta-net of S^{n-1} (every unit vector within angle delta of a net
// element). n <= 3 only.
std::vector<Direction> direction_net(int n, double delta);

// Finite net of G(n, n-m) within principal angle delta. n in {1,2,3}.
std::vector<Subspace> subspace_net(int n, int m, double delta);

Subspace full_space(int n);
// Line through the origin spanned by d.
Subspace line_subspace(const Direction& d, int n);
// Hyperplane with unit normal d.
Subspace hyperplane(const Direction& d, int n);

}  // namespace conical::geom
