#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "conical/packing.hpp"
#include "conical/rng.hpp"
#include "doctest.h"

using namespace conical;

namespace {
double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

pack::WeightedPoints random_points(std::mt19937_64& rng, int n, size_t count) {
  pack::WeightedPoints pts;
  pts.n = n;
  for (size_t i = 0; i < count; ++i) {
    pts.points.push_back(n == 1 ? geom::Vec::of(u01(rng)) : geom::Vec::of(u01(rng), u01(rng)));
    pts.weights.push_back(0.01 + u01(rng));
  }
  return pts;
}
}  // namespace

TEST_CASE("certified constants") {
  CHECK(pack::certified_constant(1) == doctest::Approx(1.0 / 82.0));
  CHECK(pack::certified_constant(2) == doctest::Approx(1.0 / 3362.0));
  CHECK(pack::certified_cone_constant(2, 10) == doctest::Approx(1.0 / 33620.0));
}

TEST_CASE("maximal packing is a packing and maximal") {
  auto rng = make_rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    auto pts = random_points(rng, 2, 30);
    double rho = 0.02 + 0.1 * u01(rng);
    auto sel = pack::maximal_packing(pts, rho);
    for (size_t a = 0; a < sel.size(); ++a)
      for (size_t b = a + 1; b < sel.size(); ++b)
        CHECK(geom::norm(pts.points[sel[a]] - pts.points[sel[b]]) > 2 * rho);
    for (size_t p = 0; p < pts.points.size(); ++p) {
      double best = 1e9;
      for (size_t s : sel) best = std::min(best, geom::norm(pts.points[p] - pts.points[s]));
      CHECK(best <= 2 * rho);
    }
  }
}

TEST_CASE("color classes are separated and few") {
  auto rng = make_rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    auto pts = random_points(rng, 2, 30);
    std::vector<size_t> subset;
    for (size_t i = 0; i < pts.points.size(); i += 2) subset.push_back(i);
    double sep = 0.1 + 0.3 * u01(rng);
    auto classes = pack::color_decompose(pts, subset, sep);
    size_t covered = 0;
    size_t max_deg = 0;
    for (size_t i : subset) {
      size_t deg = 0;
      for (size_t j : subset)
        if (j != i && geom::norm(pts.points[i] - pts.points[j]) < sep) ++deg;
      max_deg = std::max(max_deg, deg);
    }
    for (const auto& cls : classes) {
      covered += cls.size();
      for (size_t a = 0; a < cls.size(); ++a)
        for (size_t b = a + 1; b < cls.size(); ++b)
          CHECK(geom::norm(pts.points[cls[a]] - pts.points[cls[b]]) >= sep);
    }
    CHECK(covered == subset.size());
    CHECK(classes.size() <= max_deg + 1);
  }
}

TEST_CASE("halfspace packing certificate holds on seeded instances") {
  auto rng = make_rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 2;
    auto pts = random_points(rng, n, 5 + rng() % 30);
    double R = 0.02 + 0.1 * u01(rng);
    std::vector<double> radii;
    for (size_t i = 0; i < pts.points.size(); ++i) radii.push_back(R * (1.0 + u01(rng)));
    geom::Direction theta(n == 1 ? geom::Vec::of(1.0) : geom::Vec::of(0.6, 0.8));
    auto r = pack::halfspace_packing(pts, radii, R, theta);
    CHECK(r.achieved >= r.certified);
    for (size_t a = 0; a < r.selected.size(); ++a)
      for (size_t b = a + 1; b < r.selected.size(); ++b)
        CHECK(geom::norm(r.selected[a].center - r.selected[b].center) >
              r.selected[a].radius + r.selected[b].radius);
  }
}

TEST_CASE("cone packing certificate holds on seeded instances") {
  auto rng = make_rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 2;
    auto pts = random_points(rng, n, 5 + rng() % 30);
    double R = 0.02 + 0.1 * u01(rng);
    std::vector<double> radii;
    std::vector<geom::Direction> thetas;
    for (size_t i = 0; i < pts.points.size(); ++i) {
      radii.push_back(R * (1.0 + u01(rng)));
      if (n == 1)
        thetas.push_back(geom::Direction(geom::Vec::of(u01(rng) < 0.5 ? -1.0 : 1.0)));
      else {
        double a = 2 * M_PI * u01(rng);
        thetas.push_back(geom::Direction(geom::Vec::of(std::cos(a), std::sin(a))));
      }
    }
    auto r = pack::cone_packing(pts, radii, R, thetas, 0.5);
    CHECK(r.net_size >= 2);
    CHECK(r.achieved >= r.certified);
    for (size_t a = 0; a < r.selected.size(); ++a)
      for (size_t b = a + 1; b < r.selected.size(); ++b)
        CHECK(geom::norm(r.selected[a].center - r.selected[b].center) >
              r.selected[a].radius + r.selected[b].radius);
  }
}

TEST_CASE("input validation and empty input") {
  pack::WeightedPoints empty;
  empty.n = 2;
  auto r = pack::halfspace_packing(empty, {}, 0.1, geom::Direction(geom::Vec::of(0.0, 1.0)));
  CHECK(r.empty_input);
  CHECK(r.selected.empty());

  pack::WeightedPoints one;
  one.n = 1;
  one.points.push_back(geom::Vec::of(0.5));
  one.weights.push_back(1.0);
  CHECK_THROWS(pack::halfspace_packing(one, {0.5}, 0.1, geom::Direction(geom::Vec::of(1.0))));
  CHECK_THROWS(pack::maximal_packing(one, 0.0));
}
