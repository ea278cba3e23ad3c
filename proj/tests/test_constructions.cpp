#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "conical/constructions.hpp"
#include "conical/rng.hpp"
#include "doctest.h"

using namespace conical;

TEST_CASE("sharpness removal matches the greedy hand computation") {
  // constant gauge 1/2, one level: each level-1 interval loses a right piece
  // of half its mass; for [0,1/3] the greedy cut lands at 2/9
  auto c = cons::build_sharpness(dim::Gauge::constant(0.5), 1, 1, 12);
  REQUIRE(c.levels.size() == 1);
  const auto& lvl = c.levels[0];
  REQUIRE(lvl.intervals.size() == 2);
  REQUIRE(lvl.removed.size() == 2);
  CHECK(lvl.removed[0].left == Rat(2, 9));
  CHECK(lvl.removed[0].right == Rat(1, 3));
  CHECK(lvl.removed[1].left == Rat(8, 9));
  CHECK(lvl.removed[1].right == Rat(1));
  CHECK(lvl.removed_mass == Rat(1, 2));
  CHECK(c.surviving_mass == Rat(1, 2));
}

TEST_CASE("sharpness across two levels keeps exact mass accounting") {
  auto c = cons::build_sharpness(dim::Gauge::logpow(1.0), 2, 4, 14);
  Rat removed_total = 0;
  for (const auto& lvl : c.levels) {
    CHECK(lvl.removed_mass >= lvl.target_mass);
    removed_total += lvl.removed_mass;
  }
  CHECK(c.surviving_mass + removed_total == 1);
  CHECK(c.surviving_mass > 0);
}

TEST_CASE("decay product closed form for constant gauges") {
  // f == 1/2, eps = 1, L = 1: each factor is 1 - 1/4
  double p = cons::sharpness_product_bound(dim::Gauge::constant(0.5), 1.0, 1, 1, 10);
  CHECK(p == doctest::Approx(std::pow(0.75, 10)));
  // the borderline gauge decays slower than any power but still to zero
  double p100 = cons::sharpness_product_bound(dim::Gauge::logpow(1.0), 1.0, 1, 1, 100);
  double p1000 = cons::sharpness_product_bound(dim::Gauge::logpow(1.0), 1.0, 1, 1, 1000);
  CHECK(p1000 < p100);
  CHECK(p1000 > 0.0);
}

TEST_CASE("grid measure first two subdivisions") {
  cons::GridMeasure gm(1.2, 1.5);
  CHECK(gm.conical_target() == doctest::Approx(3.0));
  auto root = gm.root();
  CHECK(root.weight == doctest::Approx(1.0));
  auto l1 = gm.refine(root);
  REQUIRE(l1.size() == 4);
  for (const auto& c : l1) CHECK(c.weight == doctest::Approx(0.25));
  auto l2 = gm.refine(l1[0]);
  REQUIRE(l2.size() == 17);  // bottom row of a 17-way split
  double mass = 0;
  for (const auto& c : l2) {
    CHECK(c.weight == doctest::Approx(0.25 / 17.0));
    mass += c.weight;
    const auto& nd = cons::GridMeasure::node_of(c);
    CHECK(nd.side == Rat(1, 34));
    CHECK(nd.y0 == cons::GridMeasure::node_of(l1[0]).y0);  // bottom row
  }
  CHECK(mass == doctest::Approx(0.25 / 17.0 * 17));
}

TEST_CASE("grid refine_window agrees with filtered refinement") {
  cons::GridMeasure gm(1.2, 1.5);
  auto root = gm.root();
  auto l1 = gm.refine(root);
  auto l2 = gm.refine(l1[1]);
  for (const auto& parent : {root, l1[1], l2[3]}) {
    ref::BBox box;
    box.lo = geom::Vec::of(0.1, 0.0);
    box.hi = geom::Vec::of(0.6, 0.02);
    auto fast = gm.refine_window(parent, box);
    std::vector<std::string> expect;
    for (const auto& c : gm.refine(parent))
      if (box.meets(c.bound)) expect.push_back(c.path.to_string());
    REQUIRE(fast.size() == expect.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].path.to_string() == expect[i]);
  }
}

TEST_CASE("grid sample profiles alternate between the two exponents") {
  cons::GridMeasure gm(1.2, 1.5);
  auto [pt, profile] = cons::grid_sample_path(gm, std::pow(2.0, -30), split_seed(31, 0));
  REQUIRE(profile.size() >= 5);
  CHECK(pt[0] >= 0.0);
  CHECK(pt[0] <= 1.0);
  // frozen level data: sides 1/2, 1/34, 1/306 with masses 1/4, 1/68, 1/5508
  CHECK(profile[1].first == doctest::Approx(0.5));
  CHECK(profile[1].second == doctest::Approx(0.25));
  CHECK(profile[2].first == doctest::Approx(1.0 / 34.0));
  CHECK(profile[2].second == doctest::Approx(1.0 / 68.0));
  CHECK(profile[3].first == doctest::Approx(1.0 / 306.0));
  CHECK(profile[3].second == doctest::Approx(1.0 / 5508.0));
  double s3 = std::log(profile[3].second) / std::log(profile[3].first);
  CHECK(s3 == doctest::Approx(1.505).epsilon(0.01));
}

TEST_CASE("cone inclusion search on the line") {
  auto sys = sym::preset_cantor13();
  auto r = cons::cone_inclusion_search(sys, 0, 0.25, 4);
  REQUIRE(r.found);
  // one stage per direction: (apex "2", witness "1") serves theta = +1,
  // then (apex "1", witness "2") nested inside "2" serves theta = -1
  CHECK(r.level == 1);
  CHECK(r.h.to_string() == "21");
  CHECK(r.margin > 0.0);
  CHECK(r.net_dirs == 2);
}

TEST_CASE("cone search witnesses actually witness") {
  auto sys = sym::preset_cantor13();
  double alpha = 0.25;
  auto r = cons::cone_inclusion_search(sys, 0, alpha, 4);
  REQUIRE(r.found);
  REQUIRE(r.witnesses.size() == 2);
  auto gh = sym::compose(sys, r.h);
  double yc = gh.apply(geom::Vec::of(0.5))[0];
  double yr = gh.ratio * 0.5;
  // for every point y of E_h's enclosure and each direction theta, the
  // witness cylinder must avoid H(y, theta, alpha/2)
  for (int t = 0; t < 2; ++t) {
    double theta = t == 0 ? 1.0 : -1.0;
    auto gw = sym::compose(sys, r.witnesses[t]);
    double wc = gw.apply(geom::Vec::of(0.5))[0];
    double wr = gw.ratio * 0.5;
    for (double y : {yc - yr, yc + yr}) {
      for (double w : {wc - wr, wc + wr}) {
        CHECK((w - y) * theta <= 0.5 * alpha * std::abs(w - y) + 1e-12);
      }
    }
  }
}

TEST_CASE("separation certificates") {
  auto c13 = cons::separation_word_search(sym::preset_cantor13(), 8);
  REQUIRE(c13.found);
  CHECK(c13.k.symbols.empty());
  CHECK(c13.delta == 0.9);
  CHECK(c13.audited);

  auto ui = cons::separation_word_search(sym::preset_unit_interval(), 8);
  REQUIRE(ui.found);
  CHECK(ui.k.to_string() == "12");
  CHECK(ui.delta == doctest::Approx(0.225));
  CHECK(ui.audited);
}

TEST_CASE("exponents from the certificates") {
  auto sys = sym::preset_cantor13();
  cons::ConeSearchResult search;
  search.found = true;
  search.level = 1;
  search.h = sym::SymbolWord::from_string("1");
  cons::SeparationResult sep;
  sep.found = true;
  auto ex = cons::theorem41_exponents(sys, search, sep);
  // gamma = 1/2 and mu(E_h) = 1/2 give s1 = 2 exactly; empty k gives s2 = 0
  CHECK(ex.s1 == doctest::Approx(2.0));
  CHECK(ex.s2 == 0.0);
  CHECK(ex.s == doctest::Approx(2.0));

  sep.k = sym::SymbolWord::from_string("12");
  auto ex2 = cons::theorem41_exponents(sys, search, sep);
  // s2 = 2 ln(1/2) / ln(3/4)
  CHECK(ex2.s2 == doctest::Approx(2.0 * std::log(0.5) / std::log(0.75)));
  CHECK(ex2.s2 > 0.0);
}
