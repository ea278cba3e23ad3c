#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "conical/geometry.hpp"
#include "conical/rng.hpp"
#include "doctest.h"

using namespace conical;
using geom::Vec;

namespace {
double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Vec random_unit2(std::mt19937_64& rng) {
  double a = 2.0 * M_PI * u01(rng);
  return Vec::of(std::cos(a), std::sin(a));
}
}  // namespace

TEST_CASE("vector basics") {
  Vec a = Vec::of(3.0, 4.0);
  CHECK(geom::norm(a) == doctest::Approx(5.0));
  CHECK(geom::dot(a, Vec::of(1.0, 0.0)) == doctest::Approx(3.0));
  CHECK(geom::norm(a - a) == 0.0);
}

TEST_CASE("direction net covers the circle") {
  auto net = geom::direction_net(2, 0.1);
  auto rng = make_rng(42);
  for (int i = 0; i < 2000; ++i) {
    Vec v = random_unit2(rng);
    double best = -2.0;
    for (const auto& d : net) best = std::max(best, geom::dot(v, d.unit));
    CHECK(std::acos(std::min(1.0, best)) <= 0.1 + 1e-9);
  }
}

TEST_CASE("direction net in 1-D is the sign pair") {
  auto net = geom::direction_net(1, 0.5);
  REQUIRE(net.size() == 2);
  CHECK(net[0].unit[0] == doctest::Approx(1.0));
  CHECK(net[1].unit[0] == doctest::Approx(-1.0));
}

TEST_CASE("direction net covers the sphere") {
  auto net = geom::direction_net(3, 0.3);
  auto rng = make_rng(43);
  for (int i = 0; i < 500; ++i) {
    double z = 2.0 * u01(rng) - 1.0;
    double a = 2.0 * M_PI * u01(rng);
    double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    Vec v = Vec::of(s * std::cos(a), s * std::sin(a), z);
    double best = -2.0;
    for (const auto& d : net) best = std::max(best, geom::dot(v, d.unit));
    CHECK(std::acos(std::min(1.0, best)) <= 0.3 + 1e-9);
  }
}

TEST_CASE("line subspace net covers G(2,1)") {
  auto net = geom::subspace_net(2, 1, 0.1);
  auto rng = make_rng(44);
  for (int i = 0; i < 1000; ++i) {
    Vec v = random_unit2(rng);
    double best = 1e9;
    for (const auto& s : net) best = std::min(best, s.dist(v));
    // distance of a unit vector to the nearest net line = sin(angle)
    CHECK(best <= std::sin(0.1) + 1e-9);
  }
}

TEST_CASE("half cone membership excludes the vertex and respects aperture") {
  geom::HalfCone h(Vec::of(0.0, 0.0), geom::Direction(Vec::of(1.0, 0.0)), 0.5);
  CHECK(!geom::in_half_cone(Vec::of(0.0, 0.0), h));
  CHECK(geom::in_half_cone(Vec::of(1.0, 0.0), h));
  CHECK(!geom::in_half_cone(Vec::of(1.0, 2.0), h));
  CHECK(!geom::in_half_cone(Vec::of(-1.0, 0.0), h));
}

TEST_CASE("plane cone membership and twist") {
  geom::PlaneCone c(Vec::of(0.0, 0.0), geom::line_subspace(geom::Direction(Vec::of(0.0, 1.0)), 2),
                    0.3);
  CHECK(geom::in_plane_cone(Vec::of(0.0, 0.5), c));
  CHECK(!geom::in_plane_cone(Vec::of(0.5, 0.5), c));
  CHECK(!geom::in_plane_cone(Vec::of(0.0, 0.0), c));
  geom::PlaneCone tw(Vec::of(0.0, 0.0), geom::line_subspace(geom::Direction(Vec::of(1.0, 0.0)), 2),
                     0.5, 1.5);
  // |y - x| = 0.1: allowed offset 0.5 * 0.1^1.5 ~ 0.0158
  CHECK(geom::in_plane_cone(Vec::of(0.1, 0.001), tw));
  CHECK(!geom::in_plane_cone(Vec::of(0.1, 0.05), tw));
}

TEST_CASE("ball disposition is sound against point sampling") {
  auto rng = make_rng(45);
  int inside_seen = 0, outside_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Vec center = Vec::of(u01(rng) * 2 - 1, u01(rng) * 2 - 1);
    double radius = 0.05 + 0.8 * u01(rng);
    geom::ConeRegion region{geom::Ball{center, radius}};
    if (trial % 3 == 1)
      region.with_include(
          geom::PlaneCone(center, geom::line_subspace(geom::Direction(random_unit2(rng)), 2),
                          0.2 + 0.6 * u01(rng)));
    if (trial % 3 == 2)
      region.with_exclude(
          geom::HalfCone(center, geom::Direction(random_unit2(rng)), 0.5 * u01(rng)));
    Vec qc = Vec::of(u01(rng) * 2 - 1, u01(rng) * 2 - 1);
    double qr = 0.02 + 0.5 * u01(rng);
    auto disp = geom::ball_disposition(geom::Ball{qc, qr}, region);
    if (disp == geom::Disposition::Unknown) continue;
    for (int s = 0; s < 60; ++s) {
      // rejection-sample a point of the query ball
      Vec p;
      do {
        p = Vec::of(qc[0] + qr * (2 * u01(rng) - 1), qc[1] + qr * (2 * u01(rng) - 1));
      } while (geom::norm(p - qc) > qr);
      bool in = geom::in_region(p, region);
      if (disp == geom::Disposition::Inside) {
        CHECK(in);
        ++inside_seen;
      } else {
        CHECK(!in);
        ++outside_seen;
      }
    }
  }
  CHECK(inside_seen > 0);
  CHECK(outside_seen > 0);
}

TEST_CASE("subspace distance") {
  auto s = geom::line_subspace(geom::Direction(Vec::of(1.0, 0.0)), 2);
  CHECK(s.dist(Vec::of(5.0, 2.0)) == doctest::Approx(2.0));
  auto h = geom::hyperplane(geom::Direction(Vec::of(0.0, 1.0)), 2);
  CHECK(h.dist(Vec::of(5.0, 2.0)) == doctest::Approx(2.0));
  auto full = geom::full_space(2);
  CHECK(full.dist(Vec::of(5.0, 2.0)) == doctest::Approx(0.0));
}
