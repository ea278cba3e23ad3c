#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <string>

#include "conical/runner.hpp"
#include "doctest.h"

using conical::run::run;

namespace {
size_t count_lines(const std::string& s) {
  size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}
}  // namespace

TEST_CASE("verify E2 passes and reports a summary") {
  auto r = run("verify", "experiment=E2\n");
  CHECK(r.status == 0);
  CHECK(r.summary.find("E2 PASS") != std::string::npos);
  CHECK(count_lines(r.csv) >= 3);  // marker + header + rows
}

TEST_CASE("verify is bytewise deterministic") {
  auto a = run("verify", "experiment=E2\nseed=7\n");
  auto b = run("verify", "experiment=E2\nseed=7\n");
  CHECK(a.csv == b.csv);
  CHECK(a.summary == b.summary);
}

TEST_CASE("gen-samples is deterministic and seed-sensitive") {
  auto a = run("gen-samples", "system=cantor13\ncount=5\nlength=12\nseed=3\n");
  auto b = run("gen-samples", "system=cantor13\ncount=5\nlength=12\nseed=3\n");
  auto c = run("gen-samples", "system=cantor13\ncount=5\nlength=12\nseed=4\n");
  CHECK(a.csv == b.csv);
  CHECK(a.csv != c.csv);
  CHECK(count_lines(a.csv) == 6);
}

TEST_CASE("ratios emits one row per scale") {
  auto r = run("ratios",
               "system=cantor13\npoint=0\ngauge=logpow:2\nscales=3^-1..3^-40\ndepth=45\n");
  CHECK(r.status == 0);
  CHECK(count_lines(r.csv) == 41);  // header + 40 scales
  CHECK(r.csv.rfind("point_id,scale,lower,upper,ratio_lo,ratio_hi,slope_lo,slope_hi,flags\n",
                    0) == 0);
}

TEST_CASE("dims and conical-dims run on presets") {
  auto d = run("dims", "system=cantor13\npoint=word:121212121212\nscales=3^-2..3^-10\n");
  CHECK(d.status == 0);
  CHECK(count_lines(d.csv) == 10);
  auto c = run("conical-dims",
               "system=cantor13\npoint=word:121212121212\nscales=3^-2..3^-8\nalpha=0.5\nm=0\n");
  CHECK(c.status == 0);
  CHECK(count_lines(c.csv) == 8);
}

TEST_CASE("runlength output") {
  auto r = run("runlength", "p=0.5\nn=100000\nseed=1\n");
  CHECK(r.status == 0);
  CHECK(r.csv.rfind("p,n,empirical,theoretical,degenerate\n", 0) == 0);
  CHECK(count_lines(r.csv) == 2);
}

TEST_CASE("packing-demo reads a points file") {
  const char* path = "runner_points.csv";
  {
    std::ofstream out(path);
    out << "# x,y,weight\n";
    out << "0.1,0.1,1.0\n0.9,0.1,0.5\n0.5,0.8,0.25\n0.52,0.81,0.25\n";
  }
  auto r = run("packing-demo", std::string("points=") + path + "\ntheta=1,0\nR=0.05\n");
  CHECK(r.status == 0);
  CHECK(count_lines(r.csv) >= 2);
  auto rc = run("packing-demo", std::string("points=") + path + "\ntheta=0,1\nR=0.05\nalpha=0.5\n");
  CHECK(rc.status == 0);
  std::remove(path);
}

TEST_CASE("sharpness and grid-measure artifacts") {
  auto s = run("sharpness", "gauge=constant:0.5\nN=1\nkmax=2\ndepth=10\n");
  CHECK(s.status == 0);
  CHECK(count_lines(s.csv) == 3);
  auto g = run("grid-measure", "points=2\nmin-side=1e-4\nseed=5\n");
  CHECK(g.status == 0);
  CHECK(g.csv.rfind("point_id,side,mass,slope\n", 0) == 0);
}

TEST_CASE("cone-search with alpha=auto") {
  // lmax=1 cannot succeed for this system: status 1, diagnostics only
  auto r = run("cone-search", "system=prop43:0.28,0.1\nalpha=auto\nlmax=1\n");
  CHECK(r.status == 1);
  CHECK(r.csv.find("0.016") != std::string::npos);
}

TEST_CASE("usage errors name the field") {
  CHECK_THROWS_WITH_AS(run("ratios", "system=cantor13\n"), doctest::Contains("point"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(run("ratios", "system=cantor13\npoint=0\n"), doctest::Contains("scales"),
                       std::invalid_argument);
  CHECK_THROWS_AS(run("no-such-command", ""), std::invalid_argument);
  CHECK_THROWS_AS(run("ratios", "garbage line\n"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(run("runlength", "n=1\n"), doctest::Contains("n must"),
                       std::invalid_argument);
}
