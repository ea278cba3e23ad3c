#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <memory>

#include "conical/dimension.hpp"
#include "conical/refinable.hpp"
#include "conical/rng.hpp"
#include "doctest.h"

using namespace conical;

namespace {
ref::SelfSimilarMeasure cantor_measure() { return ref::SelfSimilarMeasure(sym::preset_cantor13()); }
}  // namespace

TEST_CASE("triadic interval validation") {
  CHECK_NOTHROW(ref::TriadicInterval(Rat(1, 3), Rat(2, 3)));
  CHECK_THROWS(ref::TriadicInterval(Rat(2, 3), Rat(1, 3)));
  CHECK_THROWS(ref::TriadicInterval(Rat(1, 2), Rat(2, 3)));
  CHECK_THROWS(ref::TriadicInterval(Rat(-1, 3), Rat(1, 3)));
}

TEST_CASE("whole-space ball resolves to measure one") {
  auto m = cantor_measure();
  auto b = ref::measure_region(m, geom::ConeRegion{geom::Ball{geom::Vec::of(0.5), 0.51}}, 10);
  CHECK(b.lower == doctest::Approx(1.0));
  CHECK(b.upper == doctest::Approx(1.0));
}

TEST_CASE("bounds contain the exact oracle and tighten with depth") {
  auto m = cantor_measure();
  Rat half(1, 2);
  auto rng = make_rng(11);
  for (int q = 0; q < 25; ++q) {
    long den = 1L << 12;
    long cn = static_cast<long>(rng() % static_cast<uint64_t>(den + 1));
    long rn = 1 + static_cast<long>(rng() % static_cast<uint64_t>(den / 2));
    double c = double(cn) / double(den), r = double(rn) / double(den);
    Rat oracle = cantor::interval_measure(half, Rat(cn) / den - Rat(rn) / den,
                                          Rat(cn) / den + Rat(rn) / den);
    double prev = 2.0;
    for (int depth : {6, 10, 14, 18}) {
      auto b = ref::measure_region(m, geom::ConeRegion{geom::Ball{geom::Vec::of(c), r}}, depth);
      CHECK(Rat(b.lower) <= oracle);
      CHECK(Rat(b.upper) >= oracle);
      CHECK(b.width() <= prev + 1e-15);
      prev = b.width();
    }
  }
}

TEST_CASE("one-sided region matches the one-sided oracle") {
  auto m = cantor_measure();
  Rat half(1, 2);
  auto fam = dim::one_sided_family(+1);
  double c = 2.0 / 8.0, r = 1.0 / 8.0;
  Rat oracle = cantor::interval_measure(half, Rat(1, 4), Rat(1, 4) + Rat(1, 8));
  auto b = ref::measure_region(m, fam(geom::Vec::of(c), r), 20);
  CHECK(Rat(b.lower) <= oracle);
  CHECK(Rat(b.upper) >= oracle);
  CHECK(b.width() < 1e-4);
}

TEST_CASE("ratio_of interval rules") {
  ref::MeasureBound a{0.2, 0.4, 0, 0.0};
  ref::MeasureBound b{0.5, 0.8, 0, 0.0};
  auto r = ref::ratio_of(a, b);
  CHECK(r.lo == doctest::Approx(0.25));
  CHECK(r.hi == doctest::Approx(0.8));
  CHECK(!r.unbounded);

  ref::MeasureBound zero_lower{0.0, 0.3, 1, 0.3};
  auto r2 = ref::ratio_of(a, zero_lower);
  CHECK(r2.unbounded);
  CHECK(std::isinf(r2.hi));

  ref::MeasureBound zero{0.0, 0.0, 0, 0.0};
  auto r3 = ref::ratio_of(a, zero);
  CHECK(r3.unbounded);
  CHECK(r3.lo == 0.0);
}

TEST_CASE("refine_to_scale uses the enclosure diameter") {
  auto m = cantor_measure();
  auto coding = sym::SymbolWord::from_string("111111111111");
  for (int k = 1; k <= 8; ++k) {
    auto cell = ref::refine_to_scale(m, coding, std::pow(3.0, -k));
    CHECK(cell.weight == doctest::Approx(std::pow(0.5, k)));
    CHECK(2.0 * cell.bound.radius == doctest::Approx(std::pow(3.0, -k)));
  }
  CHECK_THROWS(ref::refine_to_scale(m, sym::SymbolWord::from_string("1"), 1e-9));
}

TEST_CASE("self-similar refinement conserves mass") {
  auto m = cantor_measure();
  auto root = m.root();
  auto kids = m.refine(root);
  REQUIRE(kids.size() == 2);
  CHECK(kids[0].weight + kids[1].weight == doctest::Approx(root.weight));
  CHECK(kids[0].bound.radius == doctest::Approx(root.bound.radius / 3.0));
  auto grand = m.refine(kids[1]);
  CHECK(grand[0].path.to_string() == "21");
}

TEST_CASE("product measure refines both factors") {
  auto mx = std::make_shared<ref::SelfSimilarMeasure>(sym::preset_unit_interval());
  auto my = std::make_shared<ref::SelfSimilarMeasure>(sym::preset_cantor13());
  ref::ProductMeasure prod(mx, my);
  auto root = prod.root();
  CHECK(root.weight == doctest::Approx(1.0));
  auto kids = prod.refine(root);
  REQUIRE(kids.size() == 4);
  double total = 0;
  for (const auto& k : kids) total += k.weight;
  CHECK(total == doctest::Approx(1.0));

  // Lebesgue x Cantor ball mass around an interior point
  auto b = ref::measure_region(
      prod, geom::ConeRegion{geom::Ball{geom::Vec::of(0.5, 0.5), 0.8}}, 24);
  CHECK(b.lower > 0.5);
  CHECK(b.upper <= 1.0);
}

TEST_CASE("cantor_one_sided equals the CDF oracle") {
  auto prefix = sym::SymbolWord::from_string("12211212");
  Rat x = cantor::point_from_word(prefix);
  for (int n = 1; n <= 8; ++n) {
    auto [one, two] = ref::cantor_one_sided(prefix, n);
    Rat r = rat_pow(Rat(1, 3), static_cast<unsigned long>(n));
    CHECK(one == cantor::interval_measure(Rat(1, 2), x, x + r));
    CHECK(two == cantor::interval_measure(Rat(1, 2), x - r, x + r));
  }
  CHECK_THROWS(ref::cantor_one_sided(prefix, 20));
}

TEST_CASE("weight floor caps refinement but keeps soundness") {
  auto m = cantor_measure();
  geom::ConeRegion region{geom::Ball{geom::Vec::of(0.1), 0.07}};
  auto fine = ref::measure_region(m, region, 30);
  auto floored = ref::measure_region(m, region, 30, 1e-3);
  CHECK(floored.lower <= fine.lower + 1e-15);
  CHECK(floored.upper >= fine.upper - 1e-15);
}

TEST_CASE("refinement budget brackets the exhaustive enclosure") {
  auto m = cantor_measure();
  geom::ConeRegion region{geom::Ball{geom::Vec::of(0.1), 0.07}};
  auto fine = ref::measure_region(m, region, 20);

  // a generous budget visits everything the exhaustive descent visits
  auto roomy = ref::measure_region_budget(m, region, 20, 1u << 22);
  CHECK(roomy.lower == fine.lower);
  CHECK(roomy.upper == fine.upper);

  // a tight budget stays sound: wider, never narrower
  auto tight = ref::measure_region_budget(m, region, 20, 8);
  CHECK(tight.lower <= fine.lower + 1e-15);
  CHECK(tight.upper >= fine.upper - 1e-15);
  CHECK(tight.lower <= tight.upper);

  // budget zero caps at the root
  auto none = ref::measure_region_budget(m, region, 20, 0);
  CHECK(none.upper == 1.0);
  CHECK(none.lower == 0.0);
}
