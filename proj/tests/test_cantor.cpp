#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "conical/cantor.hpp"
#include "doctest.h"

using namespace conical;
using cantor::cdf;

TEST_CASE("cdf endpoints and plateaus") {
  Rat half(1, 2);
  CHECK(cdf(half, Rat(0)) == 0);
  CHECK(cdf(half, Rat(1)) == 1);
  CHECK(cdf(half, Rat(-3)) == 0);
  CHECK(cdf(half, Rat(2)) == 1);
  CHECK(cdf(half, Rat(1, 3)) == Rat(1, 2));
  CHECK(cdf(half, Rat(1, 2)) == Rat(1, 2));
  CHECK(cdf(half, Rat(2, 3)) == Rat(1, 2));
}

TEST_CASE("cdf on triadic rationals") {
  Rat half(1, 2);
  CHECK(cdf(half, Rat(1, 9)) == Rat(1, 4));
  CHECK(cdf(half, Rat(2, 9)) == Rat(1, 4));
  CHECK(cdf(half, Rat(8, 9)) == Rat(3, 4));
  CHECK(cdf(half, Rat(1, 27)) == Rat(1, 8));
}

TEST_CASE("cdf resolves periodic expansions exactly") {
  Rat half(1, 2);
  // 1/4 = 0.020202... base 3, so F(1/4) solves F = 1/4 + F/4
  CHECK(cdf(half, Rat(1, 4)) == Rat(1, 3));
  CHECK(cdf(half, Rat(3, 4)) == Rat(2, 3));
  CHECK(cdf(half, Rat(1, 10)) + cdf(half, Rat(9, 10)) == 1);  // symmetry
  // asymmetric weights on a periodic point: F(1/4) = p1^2/(1 - p1 p2)
  Rat p1(1, 4);
  CHECK(cdf(p1, Rat(1, 4)) == Rat(1, 16) / (1 - Rat(3, 16)));
}

TEST_CASE("asymmetric weights") {
  Rat p1(1, 4);
  CHECK(cdf(p1, Rat(1, 3)) == Rat(1, 4));
  CHECK(cdf(p1, Rat(7, 9)) == Rat(1, 4) + Rat(3, 4) * Rat(1, 4));
}

TEST_CASE("interval measure and one-sided pairs") {
  Rat half(1, 2);
  CHECK(cantor::interval_measure(half, Rat(0), Rat(1, 3)) == Rat(1, 2));
  CHECK_THROWS(cantor::interval_measure(half, Rat(1), Rat(0)));
  auto [right, left] = cantor::one_sided(half, Rat(0), rat_pow(Rat(1, 3), 5));
  CHECK(right == rat_pow(Rat(1, 2), 5));
  CHECK(left == 0);
}

TEST_CASE("word coordinates and runs") {
  auto w = sym::SymbolWord::from_string("21221");
  // digits 2,0,2,2,0 base 3
  CHECK(cantor::point_from_word(w) == Rat(2, 3) + Rat(2, 27) + Rat(2, 81));
  CHECK(cantor::run_after(w, 2) == 2);
  CHECK(cantor::run_after(w, 0) == 1);
  CHECK(cantor::run_after(w, 4) == 0);
  CHECK(cantor::run_after(w, 5) == 0);
}
