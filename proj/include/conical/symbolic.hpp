#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conical/geometry.hpp"
#include "conical/rat.hpp"

namespace conical::sym {

// Finite word over {1, ..., kappa}; the empty word is allowed.
struct SymbolWord {
  std::vector<int> symbols;
  size_t length() const { return symbols.size(); }
  static SymbolWord from_string(const std::string& digits);
  std::string to_string() const;
};

// Contracting similitude f(x) = ratio * R * x + translation with R orthogonal.
struct Similitude {
  int n = 1;
  double ratio = 0.5;
  std::array<std::array<double, 3>, 3> rot{};  // row-major, identity by default
  geom::Vec translation{};
  bool rot_identity = true;

  // exact mirrors, valid when `exact` is set (rational data, identity rotation)
  bool exact = false;
  Rat ratio_q;
  std::array<Rat, 3> translation_q{};

  static Similitude identity(int n);
  geom::Vec apply(const geom::Vec& x) const;
  std::array<Rat, 3> apply_exact(const std::array<Rat, 3>& x) const;
};

Similitude compose(const Similitude& outer, const Similitude& inner);

struct PointEnclosure {
  geom::Vec center;
  double radius = 0.0;
};

struct SelfSimilarSystem {
  int n = 1;
  std::vector<Similitude> maps;
  std::vector<double> weights;
  bool osc_asserted = false;

  bool exact = false;            // all maps exact and weights rational
  std::vector<Rat> weights_q;

  // invariant bounding ball: f_i(B) subset of B for every i
  geom::Vec ball_center{};
  double ball_radius = 0.0;
  std::array<Rat, 3> ball_center_q{};
  Rat ball_radius_q;

  size_t kappa() const { return maps.size(); }
  double min_weight() const;
  double max_ratio() const;
};

// Validates invariants and computes the invariant bounding ball.
SelfSimilarSystem make_system(int n, std::vector<Similitude> maps, std::vector<double> weights,
                              bool osc_asserted,
                              const std::vector<Rat>* weights_q = nullptr);

Similitude compose(const SelfSimilarSystem& sys, const SymbolWord& word);
double cylinder_weight(const SelfSimilarSystem& sys, const SymbolWord& word);
Rat cylinder_weight_exact(const SelfSimilarSystem& sys, const SymbolWord& word);

// Unique t >= 0 with sum r_i^t = 1, by bisection to 1e-12.
double moran_exponent(const std::vector<double>& ratios);

PointEnclosure point_enclosure(const SelfSimilarSystem& sys, const SymbolWord& word);
// Exact variant; requires sys.exact.
void point_enclosure_exact(const SelfSimilarSystem& sys, const SymbolWord& word,
                           std::array<Rat, 3>& center, Rat& radius);

// Deterministic i.i.d. sampling of symbols by the Bernoulli weights.
SymbolWord sample_word(const SelfSimilarSystem& sys, size_t length, uint64_t seed);

// Presets: "cantor13", "unit-interval", "prop43:<lambda>,<p>".
SelfSimilarSystem preset_cantor13();
SelfSimilarSystem preset_unit_interval();
SelfSimilarSystem preset_prop43(const Rat& lambda, const Rat& p);
SelfSimilarSystem parse_preset(const std::string& spec);

// Plain-text key=value system description (map.<i>.ratio, map.<i>.rotation,
// map.<i>.translation, weight.<i>; fraction literals accepted).
SelfSimilarSystem load_system(const std::string& path);
// Dispatch: preset name or a path to a description file.
SelfSimilarSystem resolve_system(const std::string& spec);

}  // namespace conical::sym
