#include "conical/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "conical/rng.hpp"

namespace conical::sym {

namespace {

constexpr double kTol = 1e-12;

std::array<std::array<double, 3>, 3> identity_rot() {
  std::array<std::array<double, 3>, 3> r{};
  for (int i = 0; i < 3; ++i) r[i][i] = 1.0;
  return r;
}

void check_rotation(int n, const std::array<std::array<double, 3>, 3>& rot) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double d = 0;
      for (int k = 0; k < n; ++k) d += rot[k][i] * rot[k][j];
      if (std::abs(d - (i == j ? 1.0 : 0.0)) > 1e-10)
        throw std::invalid_argument("similitude rotation is not orthogonal");
    }
  }
}

}  // namespace

SymbolWord SymbolWord::from_string(const std::string& digits) {
  SymbolWord w;
  for (char c : digits) {
    if (c < '1' || c > '9') throw std::invalid_argument("symbol word digits must be 1..9");
    w.symbols.push_back(c - '0');
  }
  return w;
}

std::string SymbolWord::to_string() const {
  std::string s;
  for (int v : symbols) s += static_cast<char>('0' + v);
  return s;
}

Similitude Similitude::identity(int n) {
  Similitude f;
  f.n = n;
  f.ratio = 1.0;
  f.rot = identity_rot();
  f.translation = geom::Vec{n, {}};
  f.rot_identity = true;
  f.exact = true;
  f.ratio_q = 1;
  return f;
}

geom::Vec Similitude::apply(const geom::Vec& x) const {
  if (x.n != n) throw std::invalid_argument("dimension mismatch");
  geom::Vec y{n, {}};
  if (rot_identity) {
    for (int i = 0; i < n; ++i) y[i] = ratio * x[i] + translation[i];
  } else {
    for (int i = 0; i < n; ++i) {
      double s = 0;
      for (int j = 0; j < n; ++j) s += rot[i][j] * x[j];
      y[i] = ratio * s + translation[i];
    }
  }
  return y;
}

std::array<Rat, 3> Similitude::apply_exact(const std::array<Rat, 3>& x) const {
  if (!exact) throw std::logic_error("similitude has no exact representation");
  std::array<Rat, 3> y{};
  for (int i = 0; i < n; ++i) y[i] = ratio_q * x[i] + translation_q[i];
  return y;
}

Similitude compose(const Similitude& outer, const Similitude& inner) {
  if (outer.n != inner.n) throw std::invalid_argument("dimension mismatch");
  Similitude f;
  f.n = outer.n;
  f.ratio = outer.ratio * inner.ratio;
  f.translation = outer.apply(inner.translation);
  f.rot_identity = outer.rot_identity && inner.rot_identity;
  if (f.rot_identity) {
    f.rot = identity_rot();
  } else {
    for (int i = 0; i < f.n; ++i)
      for (int j = 0; j < f.n; ++j) {
        double s = 0;
        for (int k = 0; k < f.n; ++k) s += outer.rot[i][k] * inner.rot[k][j];
        f.rot[i][j] = s;
      }
  }
  f.exact = outer.exact && inner.exact;
  if (f.exact) {
    f.ratio_q = outer.ratio_q * inner.ratio_q;
    f.translation_q = outer.apply_exact(inner.translation_q);
  }
  return f;
}

double SelfSimilarSystem::min_weight() const {
  return *std::min_element(weights.begin(), weights.end());
}

double SelfSimilarSystem::max_ratio() const {
  double m = 0;
  for (const auto& f : maps) m = std::max(m, f.ratio);
  return m;
}

SelfSimilarSystem make_system(int n, std::vector<Similitude> maps, std::vector<double> weights,
                              bool osc_asserted, const std::vector<Rat>* weights_q) {
  if (maps.size() < 2) throw std::invalid_argument("a self-similar system needs kappa >= 2 maps");
  if (weights.size() != maps.size())
    throw std::invalid_argument("weights count must match map count");
  double sum = 0;
  for (double p : weights) {
    if (p < 0) throw std::invalid_argument("weights must be nonnegative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kTol) throw std::invalid_argument("weights must sum to 1");
  for (const auto& f : maps) {
    if (f.n != n) throw std::invalid_argument("map dimension mismatch");
    if (!(f.ratio > 0.0 && f.ratio < 1.0))
      throw std::invalid_argument("contraction ratios must be in (0,1)");
    if (!f.rot_identity) check_rotation(n, f.rot);
  }

  SelfSimilarSystem sys;
  sys.n = n;
  sys.maps = std::move(maps);
  sys.weights = std::move(weights);
  sys.osc_asserted = osc_asserted;

  sys.exact = weights_q != nullptr;
  for (const auto& f : sys.maps) sys.exact = sys.exact && f.exact;
  if (sys.exact) {
    sys.weights_q = *weights_q;
    Rat wsum = 0;
    for (const auto& p : sys.weights_q) wsum += p;
    if (wsum != 1) throw std::invalid_argument("exact weights must sum to 1");
  }

  // Invariant bounding ball. Center: fixed point of c -> mean_i f_i(c);
  // radius: smallest R with |f_i(c) - c| + r_i R <= R for all i.
  if (sys.exact) {
    Rat mean_r = 0;
    std::array<Rat, 3> mean_t{};
    for (const auto& f : sys.maps) {
      mean_r += f.ratio_q;
      for (int i = 0; i < n; ++i) mean_t[i] += f.translation_q[i];
    }
    mean_r /= static_cast<unsigned long>(sys.maps.size());
    for (int i = 0; i < n; ++i) {
      mean_t[i] /= static_cast<unsigned long>(sys.maps.size());
      sys.ball_center_q[i] = mean_t[i] / (1 - mean_r);
      sys.ball_center.n = n;
      sys.ball_center[i] = to_double(sys.ball_center_q[i]);
    }
    sys.ball_center.n = n;
    Rat radius = 0;
    for (const auto& f : sys.maps) {
      auto fc = f.apply_exact(sys.ball_center_q);
      Rat dist;
      if (n == 1) {
        // no square root needed on the line: keep the radius exact
        dist = abs(fc[0] - sys.ball_center_q[0]);
      } else {
        Rat d2 = 0;
        for (int i = 0; i < n; ++i) {
          Rat d = fc[i] - sys.ball_center_q[i];
          d2 += d * d;
        }
        dist = sqrt_upper(d2);
      }
      Rat cand = dist / (1 - f.ratio_q);
      if (cand > radius) radius = cand;
    }
    sys.ball_radius_q = radius;
    sys.ball_radius = to_double(radius);
  } else {
    geom::Vec c{n, {}};
    for (int it = 0; it < 10000; ++it) {
      geom::Vec next{n, {}};
      for (const auto& f : sys.maps) next = next + f.apply(c);
      next = (1.0 / static_cast<double>(sys.maps.size())) * next;
      double delta = geom::norm(next - c);
      c = next;
      if (delta < kTol) break;
    }
    sys.ball_center = c;
    double radius = 0;
    for (const auto& f : sys.maps)
      radius = std::max(radius, geom::norm(f.apply(c) - c) / (1.0 - f.ratio));
    sys.ball_radius = radius * (1.0 + 1e-12);
  }
  return sys;
}

Similitude compose(const SelfSimilarSystem& sys, const SymbolWord& word) {
  Similitude f = Similitude::identity(sys.n);
  for (int s : word.symbols) {
    if (s < 1 || s > static_cast<int>(sys.kappa()))
      throw std::invalid_argument("symbol out of range");
    f = compose(f, sys.maps[static_cast<size_t>(s - 1)]);
  }
  return f;
}

double cylinder_weight(const SelfSimilarSystem& sys, const SymbolWord& word) {
  double p = 1.0;
  for (int s : word.symbols) {
    if (s < 1 || s > static_cast<int>(sys.kappa()))
      throw std::invalid_argument("symbol out of range");
    p *= sys.weights[static_cast<size_t>(s - 1)];
  }
  return p;
}

Rat cylinder_weight_exact(const SelfSimilarSystem& sys, const SymbolWord& word) {
  if (!sys.exact) throw std::logic_error("system has no exact weights");
  Rat p = 1;
  for (int s : word.symbols) {
    if (s < 1 || s > static_cast<int>(sys.kappa()))
      throw std::invalid_argument("symbol out of range");
    p *= sys.weights_q[static_cast<size_t>(s - 1)];
  }
  return p;
}

double moran_exponent(const std::vector<double>& ratios) {
  if (ratios.empty()) throw std::invalid_argument("moran_exponent needs at least one ratio");
  double rmax = 0;
  for (double r : ratios) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("ratios must be in (0,1)");
    rmax = std::max(rmax, r);
  }
  auto g = [&](double t) {
    double s = 0;
    for (double r : ratios) s += std::pow(r, t);
    return s - 1.0;
  };
  double lo = 0.0;
  double hi = std::log(static_cast<double>(ratios.size())) / std::log(1.0 / rmax) + 1.0;
  while (g(hi) > 0) hi *= 2;
  if (g(lo) <= 0) return 0.0;  // single ratio < 1: t = 0 solves sum = 1 only if kappa == 1
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (g(mid) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

PointEnclosure point_enclosure(const SelfSimilarSystem& sys, const SymbolWord& word) {
  Similitude f = compose(sys, word);
  return PointEnclosure{f.apply(sys.ball_center), f.ratio * sys.ball_radius};
}

void point_enclosure_exact(const SelfSimilarSystem& sys, const SymbolWord& word,
                           std::array<Rat, 3>& center, Rat& radius) {
  if (!sys.exact) throw std::logic_error("system has no exact representation");
  Similitude f = compose(sys, word);
  center = f.apply_exact(sys.ball_center_q);
  radius = f.ratio_q * sys.ball_radius_q;
}

SymbolWord sample_word(const SelfSimilarSystem& sys, size_t length, uint64_t seed) {
  SymbolWord w;
  w.symbols.reserve(length);
  std::vector<double> cum(sys.kappa());
  double acc = 0;
  for (size_t i = 0; i < sys.kappa(); ++i) {
    acc += sys.weights[i];
    cum[i] = acc;
  }
  auto rng = make_rng(seed);
  for (size_t k = 0; k < length; ++k) {
    // 53-bit uniform in [0,1); platform-independent
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    int sym = static_cast<int>(sys.kappa());
    for (size_t i = 0; i < cum.size(); ++i) {
      if (u < cum[i]) {
        sym = static_cast<int>(i) + 1;
        break;
      }
    }
    w.symbols.push_back(sym);
  }
  return w;
}

namespace {

Similitude make_exact_1d(const Rat& ratio, const Rat& trans) {
  Similitude f;
  f.n = 1;
  f.ratio = to_double(ratio);
  f.rot = identity_rot();
  f.translation = geom::Vec::of(to_double(trans));
  f.rot_identity = true;
  f.exact = true;
  f.ratio_q = ratio;
  f.translation_q = {trans, 0, 0};
  return f;
}

Similitude make_exact_2d(const Rat& ratio, const Rat& tx, const Rat& ty) {
  Similitude f;
  f.n = 2;
  f.ratio = to_double(ratio);
  f.rot = identity_rot();
  f.translation = geom::Vec::of(to_double(tx), to_double(ty));
  f.rot_identity = true;
  f.exact = true;
  f.ratio_q = ratio;
  f.translation_q = {tx, ty, 0};
  return f;
}

}  // namespace

SelfSimilarSystem preset_cantor13() {
  std::vector<Similitude> maps{make_exact_1d(Rat(1, 3), Rat(0)), make_exact_1d(Rat(1, 3), Rat(2, 3))};
  std::vector<Rat> wq{Rat(1, 2), Rat(1, 2)};
  return make_system(1, std::move(maps), {0.5, 0.5}, /*osc=*/true, &wq);
}

SelfSimilarSystem preset_unit_interval() {
  std::vector<Similitude> maps{make_exact_1d(Rat(1, 2), Rat(0)), make_exact_1d(Rat(1, 2), Rat(1, 2))};
  std::vector<Rat> wq{Rat(1, 2), Rat(1, 2)};
  return make_system(1, std::move(maps), {0.5, 0.5}, /*osc=*/true, &wq);
}

SelfSimilarSystem preset_prop43(const Rat& lambda, const Rat& p) {
  if (!(lambda > Rat(1, 4) && lambda < Rat(1, 3)))
    throw std::invalid_argument("prop43 requires 1/4 < lambda < 1/3");
  if (!(p > 0 && p < Rat(1, 2))) throw std::invalid_argument("prop43 requires 0 < p < 1/2");
  Rat one_minus = 1 - lambda;
  std::vector<Similitude> maps{
      make_exact_2d(lambda, Rat(0), Rat(0)),
      make_exact_2d(lambda, one_minus, Rat(0)),
      make_exact_2d(lambda, one_minus / 2, Rat(0)),
      make_exact_2d(lambda, one_minus / 2, one_minus),
  };
  Rat w12 = (1 - p) / 2;
  Rat w34 = p / 2;
  std::vector<Rat> wq{w12, w12, w34, w34};
  std::vector<double> w{to_double(w12), to_double(w12), to_double(w34), to_double(w34)};
  return make_system(2, std::move(maps), std::move(w), /*osc=*/true, &wq);
}

SelfSimilarSystem parse_preset(const std::string& spec) {
  if (spec == "cantor13") return preset_cantor13();
  if (spec == "unit-interval") return preset_unit_interval();
  if (spec.rfind("prop43", 0) == 0) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("prop43 preset needs parameters: prop43:<lambda>,<p>");
    std::string args = spec.substr(colon + 1);
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("prop43 preset needs two parameters");
    return preset_prop43(parse_rational(args.substr(0, comma)),
                         parse_rational(args.substr(comma + 1)));
  }
  throw std::invalid_argument("unknown preset: " + spec);
}

SelfSimilarSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open system file: " + path);
  std::map<int, std::map<std::string, std::string>> map_keys;
  std::map<int, std::string> weight_keys;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.rfind("map.", 0) == 0) {
      auto dot = key.find('.', 4);
      if (dot == std::string::npos) throw std::runtime_error("bad key: " + key);
      int idx = std::stoi(key.substr(4, dot - 4));
      map_keys[idx][key.substr(dot + 1)] = val;
    } else if (key.rfind("weight.", 0) == 0) {
      weight_keys[std::stoi(key.substr(7))] = val;
    } else {
      throw std::runtime_error("unknown key in system file: " + key);
    }
  }
  if (map_keys.empty()) throw std::runtime_error("system file defines no maps");

  auto split_list = [](const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
  };

  std::vector<Similitude> maps;
  std::vector<double> weights;
  std::vector<Rat> weights_q;
  bool all_exact = true;
  int n = 0;
  int expect = 1;
  for (auto& [idx, fields] : map_keys) {
    if (idx != expect++) throw std::runtime_error("map indices must be 1..kappa without gaps");
    if (!fields.count("ratio") || !fields.count("translation"))
      throw std::runtime_error("each map needs ratio and translation");
    auto trans = split_list(fields["translation"]);
    int dim = static_cast<int>(trans.size());
    if (n == 0) n = dim;
    if (dim != n) throw std::runtime_error("inconsistent translation dimensions");
    if (n < 1 || n > geom::kMaxDim) throw std::runtime_error("dimension must be 1..3");
    Similitude f;
    f.n = n;
    f.ratio_q = parse_rational(fields["ratio"]);
    f.ratio = to_double(f.ratio_q);
    f.rot = identity_rot();
    f.translation = geom::Vec{n, {}};
    for (int i = 0; i < n; ++i) {
      f.translation_q[static_cast<size_t>(i)] = parse_rational(trans[static_cast<size_t>(i)]);
      f.translation[i] = to_double(f.translation_q[static_cast<size_t>(i)]);
    }
    f.rot_identity = true;
    f.exact = true;
    if (fields.count("rotation")) {
      auto rot = split_list(fields["rotation"]);
      if (static_cast<int>(rot.size()) != n * n)
        throw std::runtime_error("rotation needs n*n entries");
      f.rot_identity = true;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          f.rot[i][j] = std::stod(rot[static_cast<size_t>(i * n + j)]);
          if (std::abs(f.rot[i][j] - (i == j ? 1.0 : 0.0)) > 1e-15) f.rot_identity = false;
        }
      if (!f.rot_identity) f.exact = false;
    }
    all_exact = all_exact && f.exact;
    maps.push_back(std::move(f));
  }
  for (size_t i = 1; i <= maps.size(); ++i) {
    auto it = weight_keys.find(static_cast<int>(i));
    if (it == weight_keys.end()) throw std::runtime_error("missing weight for map " + std::to_string(i));
    Rat w = parse_rational(it->second);
    weights_q.push_back(w);
    weights.push_back(to_double(w));
  }
  return make_system(n, std::move(maps), std::move(weights), /*osc=*/true,
                     all_exact ? &weights_q : nullptr);
}

SelfSimilarSystem resolve_system(const std::string& spec) {
  if (spec == "cantor13" || spec == "unit-interval" || spec.rfind("prop43", 0) == 0)
    return parse_preset(spec);
  return load_system(spec);
}

}  // namespace conical::sym
