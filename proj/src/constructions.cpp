#include "conical/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "conical/cantor.hpp"
#include "conical/rng.hpp"

namespace conical::cons {

namespace {

double gauge_at_pow3(const dim::Gauge& f, long k) {
  // f(3^-k) without underflowing the argument
  if (f.kind == dim::Gauge::Kind::LogPow)
    return std::pow(static_cast<double>(k) * std::log(3.0), -f.param);
  return f.param;
}

}  // namespace

SharpnessConstruction build_sharpness(const dim::Gauge& f, long N, long k_max, int depth_cap) {
  if (N < 1 || k_max < N) throw std::invalid_argument("need 1 <= N <= k_max");
  if (k_max > 20) throw std::invalid_argument("k_max > 20 would enumerate > 2^20 intervals");
  if (depth_cap < 1) throw std::invalid_argument("depth_cap must be >= 1");

  const Rat p1(1, 2);
  SharpnessConstruction out;
  out.N = N;
  out.k_max = k_max;
  out.surviving_mass = 1;

  // F as disjoint closed intervals, initially all of [0,1]
  std::vector<std::pair<Rat, Rat>> F{{Rat(0), Rat(1)}};

  for (long k = N; k <= k_max; ++k) {
    double fv = gauge_at_pow3(f, k);
    if (fv >= 1.0) throw std::invalid_argument("gauge value at 3^-k must be below 1");
    Rat fq(fv);  // exact binary rational of the double value

    SharpnessLevel level;
    level.k = k;
    level.removed_mass = 0;
    level.target_mass = 0;

    // level-k construction intervals: triadic digits in {0,2}
    Rat step = rat_pow(Rat(1, 3), static_cast<unsigned long>(k));
    std::vector<Rat> lefts{Rat(0)};
    for (long d = 0; d < k; ++d) {
      std::vector<Rat> next;
      Rat p = rat_pow(Rat(1, 3), static_cast<unsigned long>(d + 1));
      for (const Rat& a : lefts) {
        next.push_back(a);
        next.push_back(a + 2 * p);
      }
      lefts = std::move(next);
    }

    for (const Rat& a : lefts) {
      Rat c = a + step;
      // process only construction intervals still fully inside F
      bool inside = false;
      for (const auto& comp : F)
        if (comp.first <= a && c <= comp.second) {
          inside = true;
          break;
        }
      if (!inside) continue;

      Rat muI = cantor::interval_measure(p1, a, c);
      Rat target = fq * muI;
      level.target_mass += target;

      // largest depth-capped triadic b with mu([b,c]) >= target
      Rat b = a;
      Rat s = step;
      for (int d = 0; d < depth_cap; ++d) {
        s /= 3;
        while (b + s < c && cantor::interval_measure(p1, b + s, c) >= target) b += s;
      }
      Rat removed = cantor::interval_measure(p1, b, c);
      level.intervals.emplace_back(a, c);
      level.removed.emplace_back(b, c);
      level.removed_mass += removed;

      // subtract [b, c] from F
      for (size_t i = 0; i < F.size(); ++i) {
        if (F[i].first <= b && c <= F[i].second) {
          Rat A = F[i].first, C = F[i].second;
          F.erase(F.begin() + static_cast<long>(i));
          if (c < C) F.insert(F.begin() + static_cast<long>(i), {c, C});
          if (A < b) F.insert(F.begin() + static_cast<long>(i), {A, b});
          break;
        }
      }
    }
    out.surviving_mass -= level.removed_mass;
    out.levels.push_back(std::move(level));
  }
  for (const auto& comp : F) out.surviving.emplace_back(comp.first, comp.second);
  return out;
}

double sharpness_product_bound(const dim::Gauge& f, double eps, long L, long N, long n) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must be in (0,1]");
  if (L < 1) throw std::invalid_argument("L must be >= 1");
  double prod = 1.0;
  double factor = eps * std::pow(2.0, -static_cast<double>(L));
  for (long k = 1; k <= n; ++k) prod *= 1.0 - factor * gauge_at_pow3(f, N + k * L);
  return prod;
}

// --- grid measure ---------------------------------------------------------

GridMeasure::GridMeasure(double s, double t) : s_(s), t_(t) {
  if (!(1.0 < s && s < t && t < 2.0)) throw std::invalid_argument("need 1 < s < t < 2");
}

const GridMeasure::Node& GridMeasure::node_of(const ref::Cell& cell) {
  return *std::static_pointer_cast<const Node>(cell.payload);
}

namespace {

ref::Cell grid_cell(const GridMeasure::Node& nd, const sym::SymbolWord& path) {
  ref::Cell c;
  c.path = path;
  double sd = to_double(nd.side);
  c.bound.center = geom::Vec::of(to_double(nd.x0) + sd / 2.0, to_double(nd.y0) + sd / 2.0);
  // circumscribed ball of the square, padded against rounding
  c.bound.radius = sd * std::numbers::sqrt2 / 2.0 * (1.0 + 1e-12);
  c.weight = to_double(nd.mass);
  c.payload = std::make_shared<GridMeasure::Node>(nd);
  return c;
}

// subsquare counts: n - 1 <= v < n, realized as floor(v + eps) + 1
long grid_children_count(const GridMeasure::Node& nd, double s, double t) {
  double sd = to_double(nd.side);
  double ms = to_double(nd.mass);
  double v;
  if (nd.depth % 2 == 0)
    v = std::pow(std::pow(sd, -t) * ms, 1.0 / (2.0 - t));  // subdivision (1)
  else
    v = std::pow(std::pow(sd, s) / ms, 1.0 / (s - 1.0));  // subdivision (2)
  long n = static_cast<long>(std::floor(v + 1e-9)) + 1;
  if (n < 1) n = 1;
  return n;
}

GridMeasure::Node grid_child(const GridMeasure::Node& nd, long n, long i, long j) {
  GridMeasure::Node ch;
  ch.side = nd.side / static_cast<unsigned long>(n);
  ch.x0 = nd.x0 + ch.side * static_cast<unsigned long>(i);
  ch.y0 = nd.y0 + ch.side * static_cast<unsigned long>(j);
  ch.depth = nd.depth + 1;
  if (nd.depth % 2 == 0)
    ch.mass = nd.mass / static_cast<unsigned long>(n * n);
  else
    ch.mass = nd.mass / static_cast<unsigned long>(n);  // bottom row only
  return ch;
}

}  // namespace

ref::Cell GridMeasure::root() const {
  Node nd;
  nd.x0 = 0;
  nd.y0 = 0;
  nd.side = 1;
  nd.mass = 1;
  nd.depth = 0;
  return grid_cell(nd, {});
}

std::vector<ref::Cell> GridMeasure::refine(const ref::Cell& cell) const {
  const Node& nd = node_of(cell);
  long n = grid_children_count(nd, s_, t_);
  std::vector<ref::Cell> out;
  int sym = 0;
  long jmax = nd.depth % 2 == 0 ? n : 1;  // subdivision (2): bottom row only
  for (long j = 0; j < jmax; ++j) {
    for (long i = 0; i < n; ++i) {
      sym::SymbolWord path = cell.path;
      path.symbols.push_back(++sym);
      out.push_back(grid_cell(grid_child(nd, n, i, j), path));
    }
  }
  return out;
}

std::vector<ref::Cell> GridMeasure::refine_window(const ref::Cell& cell,
                                                  const ref::BBox& box) const {
  const Node& nd = node_of(cell);
  long n = grid_children_count(nd, s_, t_);
  double h = to_double(nd.side) / static_cast<double>(n);
  double x0 = to_double(nd.x0), y0 = to_double(nd.y0);
  auto clampi = [n](double v) {
    long i = static_cast<long>(std::floor(v));
    return std::max<long>(0, std::min<long>(n - 1, i));
  };
  // index window of children overlapping the box, padded one cell each way
  long i0 = clampi((box.lo[0] - x0) / h - 1), i1 = clampi((box.hi[0] - x0) / h + 1);
  long j0 = clampi((box.lo[1] - y0) / h - 1), j1 = clampi((box.hi[1] - y0) / h + 1);
  long jmax = nd.depth % 2 == 0 ? n : 1;
  j1 = std::min(j1, jmax - 1);
  std::vector<ref::Cell> out;
  for (long j = j0; j <= j1; ++j) {
    for (long i = i0; i <= i1; ++i) {
      long sym = j * n + i + 1;
      sym::SymbolWord path = cell.path;
      path.symbols.push_back(static_cast<int>(sym));
      ref::Cell child = grid_cell(grid_child(nd, n, i, j), path);
      // the index window is padded, so drop children that miss the box
      if (box.meets(child.bound)) out.push_back(std::move(child));
    }
  }
  return out;
}

std::pair<geom::Vec, std::vector<std::pair<double, double>>> grid_sample_path(
    const GridMeasure& gm, double min_side, uint64_t seed) {
  if (!(min_side > 0.0)) throw std::invalid_argument("min_side must be positive");
  auto rng = make_rng(seed);
  auto uniform_below = [&rng](long n) {
    return static_cast<long>(rng() % static_cast<uint64_t>(n));
  };
  GridMeasure::Node nd{Rat(0), Rat(0), Rat(1), Rat(1), 0};
  std::vector<std::pair<double, double>> profile;
  profile.emplace_back(1.0, 1.0);
  while (true) {
    long n = grid_children_count(nd, gm.s(), gm.t());
    long i = uniform_below(n);
    // mass-weighted descent: equal-mass children, zero-mass rows skipped
    long j = nd.depth % 2 == 0 ? uniform_below(n) : 0;
    nd = grid_child(nd, n, i, j);
    double sd = to_double(nd.side);
    if (sd < min_side) break;
    profile.emplace_back(sd, to_double(nd.mass));
  }
  // descend a little further so the returned point is a sharp location
  for (int extra = 0; extra < 2 && to_double(nd.side) > 1e-18; ++extra) {
    long n = grid_children_count(nd, gm.s(), gm.t());
    long i = uniform_below(n);
    long j = nd.depth % 2 == 0 ? uniform_below(n) : 0;
    nd = grid_child(nd, n, i, j);
  }
  double sd = to_double(nd.side);
  geom::Vec pt = geom::Vec::of(to_double(nd.x0) + sd / 2.0, to_double(nd.y0) + sd / 2.0);
  return {pt, profile};
}

// --- cone inclusion search -------------------------------------------------

namespace {

struct Cylinder {
  double cx = 0, cy = 0, rho = 0;
};

// All level-l cylinder enclosure balls in lexicographic word order.
std::vector<Cylinder> level_cylinders(const sym::SelfSimilarSystem& sys, int l) {
  std::vector<Cylinder> cur(1);
  cur[0].cx = sys.ball_center[0];
  cur[0].cy = sys.n > 1 ? sys.ball_center[1] : 0.0;
  cur[0].rho = sys.ball_radius;
  std::vector<sym::Similitude> comp{sym::Similitude::identity(sys.n)};
  for (int d = 0; d < l; ++d) {
    std::vector<Cylinder> next;
    std::vector<sym::Similitude> nextc;
    next.reserve(cur.size() * sys.kappa());
    nextc.reserve(cur.size() * sys.kappa());
    for (size_t w = 0; w < comp.size(); ++w) {
      for (size_t i = 0; i < sys.kappa(); ++i) {
        sym::Similitude g = sym::compose(comp[w], sys.maps[i]);
        Cylinder c;
        geom::Vec v = g.apply(sys.ball_center);
        c.cx = v[0];
        c.cy = sys.n > 1 ? v[1] : 0.0;
        c.rho = g.ratio * sys.ball_radius;
        next.push_back(c);
        nextc.push_back(std::move(g));
      }
    }
    cur = std::move(next);
    comp = std::move(nextc);
  }
  return cur;
}

sym::SymbolWord word_from_index(size_t idx, int l, size_t kappa) {
  std::vector<int> syms(static_cast<size_t>(l));
  for (int d = l - 1; d >= 0; --d) {
    syms[static_cast<size_t>(d)] = static_cast<int>(idx % kappa) + 1;
    idx /= kappa;
  }
  return sym::SymbolWord{std::move(syms)};
}

// Both searches below assemble the delegate in stages, one stage per net
// slot.  A stage solves the unit-scale problem: find words (a, b) of length
// l such that the cylinder of b is certified inside the slot's cone for
// every apex in the cylinder of a.  Because similitudes preserve angles, the
// certificate survives transport into the cylinder of the previous stages'
// apex words, so h = a_1 a_2 ... a_S certifies every slot at once and the
// witness for slot s is a_1 ... a_{s-1} b_s.  The reported level is the
// stage word length; |h| = S * level.

struct Stage {
  bool filled = false;
  size_t a = 0, b = 0;
  double psi = 0.0, w = 0.0, slack = 0.0;
};

// 1-D / m = 0 search: X(y, V, alpha) is everything but the vertex, so only
// the excluded half-line cone matters per net direction.
ConeSearchResult search_m0(const sym::SelfSimilarSystem& sys, double alpha, int l_max) {
  ConeSearchResult out;
  out.alpha = alpha;
  out.net_lines = 1;
  out.net_dirs = 2;
  double ap = alpha / 2.0;
  out.best_margin = -1.0;
  for (int l = 1; l <= l_max; ++l) {
    auto cyl = level_cylinders(sys, l);
    const size_t N = cyl.size();
    Stage st[2];
    size_t filled = 0;
    for (size_t a = 0; a < N && filled < 2; ++a) {
      for (size_t b = 0; b < N; ++b) {
        if (b == a) continue;
        double u = cyl[b].cx - cyl[a].cx;
        double d = std::abs(u);
        double rho = cyl[a].rho + cyl[b].rho;
        double pad = 1e-9 * (d + rho + 1.0);
        if (d - rho <= pad) continue;
        for (int t = 0; t < 2; ++t) {
          if (st[t].filled) continue;
          double theta = t == 0 ? 1.0 : -1.0;
          double slack = ap * (d - rho) - (theta * u + rho) - pad;
          if (slack > 0.0) {
            st[t].filled = true;
            st[t].a = a;
            st[t].b = b;
            st[t].slack = slack / d;
            ++filled;
          }
        }
      }
    }
    double frac = static_cast<double>(filled) / 2.0 - 1.0;
    if (frac > out.best_margin) {
      out.best_margin = frac;
      out.best_level = l;
    }
    if (filled < 2) continue;
    out.found = true;
    out.level = l;
    out.margin = std::min(st[0].slack, st[1].slack);
    sym::SymbolWord h;
    for (int t = 0; t < 2; ++t) {
      sym::SymbolWord wit = h;
      auto bw = word_from_index(st[t].b, l, sys.kappa());
      wit.symbols.insert(wit.symbols.end(), bw.symbols.begin(), bw.symbols.end());
      out.witnesses.push_back(std::move(wit));
      auto aw = word_from_index(st[t].a, l, sys.kappa());
      h.symbols.insert(h.symbols.end(), aw.symbols.begin(), aw.symbols.end());
    }
    out.h = std::move(h);
    return out;
  }
  return out;
}

ConeSearchResult search_m1_planar(const sym::SelfSimilarSystem& sys, double alpha, int l_max) {
  ConeSearchResult out;
  out.alpha = alpha;
  double ap = alpha / 2.0;
  // line net: covering radius <= asin(alpha/2) turns an alpha/2 certificate
  // into an alpha guarantee for every line; direction net: spacing <= alpha
  // so the chord to the nearest net direction is at most alpha/2
  size_t M1 = static_cast<size_t>(std::ceil(std::numbers::pi / (2.0 * std::asin(ap))));
  size_t M2 = static_cast<size_t>(std::ceil(2.0 * std::numbers::pi / alpha));
  out.net_lines = M1;
  out.net_dirs = M2;
  out.best_margin = -1.0;
  const size_t S = 2 * M1;  // slots: each net line with its two senses
  const double line_spacing = std::numbers::pi / static_cast<double>(M1);

  for (int l = 1; l <= l_max; ++l) {
    auto cyl = level_cylinders(sys, l);
    const size_t N = cyl.size();
    std::vector<Stage> st(S);
    size_t filled = 0;
    for (size_t a = 0; a < N && filled < S; ++a) {
      for (size_t b = 0; b < N; ++b) {
        if (b == a) continue;
        double ux = cyl[b].cx - cyl[a].cx;
        double uy = cyl[b].cy - cyl[a].cy;
        double d = std::hypot(ux, uy);
        double rho = cyl[a].rho + cyl[b].rho;
        double pad = 1e-9 * (d + rho + 1.0);
        if (d - rho <= pad) continue;
        double w = (ap * (d - rho) - rho - pad) / d;
        if (w <= 0.0) continue;
        double psi = std::atan2(uy, ux);
        // only the nearest net lines can sit within asin(w) of the pair
        double lpos = psi < 0 ? psi + std::numbers::pi : psi;
        if (lpos >= std::numbers::pi) lpos -= std::numbers::pi;
        long i0 = std::lround(lpos / line_spacing);
        for (long di = -1; di <= 1; ++di) {
          long i = (i0 + di) % static_cast<long>(M1);
          if (i < 0) i += static_cast<long>(M1);
          double phi = line_spacing * static_cast<double>(i);
          int sense = std::cos(psi - phi) >= 0.0 ? 0 : 1;
          size_t slot = 2 * static_cast<size_t>(i) + static_cast<size_t>(sense);
          if (st[slot].filled) continue;
          double slack = w - std::abs(std::sin(psi - phi));
          if (slack > 0.0) {
            st[slot] = Stage{true, a, b, psi, w, slack};
            ++filled;
          }
        }
      }
    }
    double frac = static_cast<double>(filled) / static_cast<double>(S) - 1.0;
    bool ok = filled == S;
    double margin = std::numeric_limits<double>::infinity();
    if (ok) {
      // every net (line, direction) pair must be served by one of the two
      // senses: the witness has to dodge H(y, theta, alpha/2) as well
      for (size_t i = 0; i < M1 && ok; ++i) {
        double phi = line_spacing * static_cast<double>(i);
        const Stage& s0 = st[2 * i];
        const Stage& s1 = st[2 * i + 1];
        double dev0 = std::abs(std::sin(s0.psi - phi));
        double dev1 = std::abs(std::sin(s1.psi - phi));
        for (size_t t = 0; t < M2; ++t) {
          double th = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(M2);
          double g0 = s0.w - std::max(dev0, std::cos(s0.psi - th));
          double g1 = s1.w - std::max(dev1, std::cos(s1.psi - th));
          double g = std::max(g0, g1);
          if (g <= 0.0) {
            ok = false;
            break;
          }
          margin = std::min(margin, g);
        }
      }
      if (!ok) frac = -1.0 / static_cast<double>(S);  // filled, but a pair is uncovered
    }
    if (frac > out.best_margin) {
      out.best_margin = frac;
      out.best_level = l;
    }
    if (!ok) continue;
    out.found = true;
    out.level = l;
    out.margin = margin;
    sym::SymbolWord h;
    out.witnesses.reserve(S);
    for (size_t s = 0; s < S; ++s) {
      sym::SymbolWord wit = h;
      auto bw = word_from_index(st[s].b, l, sys.kappa());
      wit.symbols.insert(wit.symbols.end(), bw.symbols.begin(), bw.symbols.end());
      out.witnesses.push_back(std::move(wit));
      auto aw = word_from_index(st[s].a, l, sys.kappa());
      h.symbols.insert(h.symbols.end(), aw.symbols.begin(), aw.symbols.end());
    }
    out.h = std::move(h);
    return out;
  }
  return out;
}

}  // namespace

ConeSearchResult cone_inclusion_search(const sym::SelfSimilarSystem& sys, int m, double alpha,
                                       int l_max) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in (0,1]");
  if (l_max < 1) throw std::invalid_argument("l_max must be >= 1");
  if (sys.n == 1 && m == 0) return search_m0(sys, alpha, l_max);
  if (sys.n == 2 && m == 1) return search_m1_planar(sys, alpha, l_max);
  throw std::invalid_argument("cone_inclusion_search supports (n=1,m=0) and (n=2,m=1)");
}

// --- separation word search ------------------------------------------------

SeparationResult separation_word_search(const sym::SelfSimilarSystem& sys, int k_max) {
  if (!sys.osc_asserted) throw std::invalid_argument("separation search needs osc_asserted");
  SeparationResult out;
  const double R = sys.ball_radius;
  const double diam_bound = 2.0 * R;

  auto cyl1 = level_cylinders(sys, 1);
  auto dist_lb = [](const Cylinder& a, const Cylinder& b) {
    return std::hypot(a.cx - b.cx, a.cy - b.cy) - a.rho - b.rho;
  };

  // strongly separated level-1 cylinders: empty word works, and the gap/ratio
  // induction transports the bound to every i
  double min_gap_over_ratio = std::numeric_limits<double>::infinity();
  bool separated = true;
  for (size_t b = 0; b < cyl1.size() && separated; ++b) {
    double g = std::numeric_limits<double>::infinity();
    for (size_t b2 = 0; b2 < cyl1.size(); ++b2)
      if (b2 != b) g = std::min(g, dist_lb(cyl1[b], cyl1[b2]));
    if (g <= 1e-12 * (R + 1.0)) {
      separated = false;
      break;
    }
    min_gap_over_ratio = std::min(min_gap_over_ratio, g / sys.maps[b].ratio);
  }

  if (separated && sys.exact && sys.n == 1) {
    // rational gaps are available in 1-D: avoid the roundoff haircut
    Rat best;
    bool first = true;
    for (size_t b = 0; b < cyl1.size(); ++b) {
      Rat cb = sys.maps[b].apply_exact(sys.ball_center_q)[0];
      Rat rb = sys.maps[b].ratio_q * sys.ball_radius_q;
      for (size_t b2 = 0; b2 < cyl1.size(); ++b2) {
        if (b2 == b) continue;
        Rat c2 = sys.maps[b2].apply_exact(sys.ball_center_q)[0];
        Rat r2 = sys.maps[b2].ratio_q * sys.ball_radius_q;
        Rat g = abs(cb - c2) - rb - r2;
        Rat q = g / sys.maps[b].ratio_q / (2 * sys.ball_radius_q);
        if (first || q < best) {
          best = q;
          first = false;
        }
      }
    }
    out.found = true;
    out.k = {};
    out.delta = 0.9 * to_double(best);
  } else if (separated) {
    out.found = true;
    out.k = {};
    // 0.9 times the supremum keeps the required inequality strict
    out.delta = 0.9 * min_gap_over_ratio / diam_bound;
  } else {
    // touching cylinders: certify the invariant-ball interior as an OSC open
    // set (children's open balls pairwise disjoint), then find a word k whose
    // cylinder sits strictly inside it
    for (size_t a = 0; a < cyl1.size(); ++a)
      for (size_t b = a + 1; b < cyl1.size(); ++b)
        if (dist_lb(cyl1[a], cyl1[b]) < -1e-12 * (R + 1.0))
          return out;  // overlapping child balls: no certificate here
    double cx = sys.ball_center[0];
    double cy = sys.n > 1 ? sys.ball_center[1] : 0.0;
    for (int len = 1; len <= k_max && !out.found; ++len) {
      auto cyl = level_cylinders(sys, len);
      for (size_t w = 0; w < cyl.size(); ++w) {
        double inner = R - std::hypot(cyl[w].cx - cx, cyl[w].cy - cy) - cyl[w].rho;
        if (inner > 1e-12 * (R + 1.0)) {
          out.found = true;
          out.k = word_from_index(w, len, sys.kappa());
          out.delta = 0.9 * inner / diam_bound;
          break;
        }
      }
    }
    if (!out.found) return out;
  }

  // sanity audit: dist(E_ik, E \ E_i) > delta diam(E_i) for every |i| <= 3,
  // with E \ E_i covered by the same-level sibling cylinders
  out.audited = true;
  for (int len = 1; len <= 3 && out.audited; ++len) {
    auto cyl = level_cylinders(sys, len);
    for (size_t i = 0; i < cyl.size() && out.audited; ++i) {
      sym::SymbolWord word = word_from_index(i, len, sys.kappa());
      for (int s : out.k.symbols) word.symbols.push_back(s);
      sym::Similitude g = sym::compose(sys, word);
      Cylinder ik;
      geom::Vec v = g.apply(sys.ball_center);
      ik.cx = v[0];
      ik.cy = sys.n > 1 ? v[1] : 0.0;
      ik.rho = g.ratio * sys.ball_radius;
      double need = out.delta * 2.0 * cyl[i].rho;
      for (size_t j = 0; j < cyl.size(); ++j) {
        if (j == i) continue;
        if (!(dist_lb(ik, cyl[j]) > need)) {
          out.audited = false;
          break;
        }
      }
    }
  }
  return out;
}

ExponentResult theorem41_exponents(const sym::SelfSimilarSystem& sys,
                                   const ConeSearchResult& search, const SeparationResult& sep) {
  if (!search.found || !sep.found)
    throw std::invalid_argument("exponents need successful search results");
  ExponentResult out;
  double pmin = sys.min_weight();
  // log-space: assembled delegates can be long enough that pmin^|h| and
  // mu(E_h) both underflow; log1p keeps the sign honest all the way to +inf
  double log_gamma = static_cast<double>(search.h.length()) * std::log(pmin);
  double mu_h = sym::cylinder_weight(sys, search.h);
  out.s1 = 2.0 * log_gamma / std::log1p(-mu_h);
  if (!sep.k.symbols.empty()) {
    double mu_k = sym::cylinder_weight(sys, sep.k);
    out.s2 = static_cast<double>(sep.k.length()) * std::log(pmin) / std::log(1.0 - mu_k);
  }
  out.s = out.s1 + out.s2;
  return out;
}

}  // namespace conical::cons
