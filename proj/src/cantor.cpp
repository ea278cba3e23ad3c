#include "conical/cantor.hpp"

#include <map>
#include <stdexcept>

namespace conical::cantor {

Rat cdf(const Rat& p1, const Rat& x) {
  if (p1 < 0 || p1 > 1) throw std::invalid_argument("p1 must be in [0,1]");
  Rat p2 = 1 - p1;
  Rat acc = 0;    // mass certainly to the left
  Rat scale = 1;  // mass of the current cylinder
  Rat t = x;
  const Rat third(1, 3), two_thirds(2, 3);
  // the orbit t -> 3t (mod translates) of a rational is eventually periodic;
  // on a revisit the remaining value satisfies V = A + B V with the recorded
  // affine data, so the geometric tail resolves exactly
  std::map<Rat, std::pair<Rat, Rat>> seen;
  for (long guard = 0; guard < 1000000; ++guard) {
    if (t <= 0) return acc;
    if (t >= 1) return acc + scale;
    auto it = seen.find(t);
    if (it != seen.end()) {
      const Rat& acc0 = it->second.first;
      const Rat& scale0 = it->second.second;
      Rat A = (acc - acc0) / scale0;
      Rat B = scale / scale0;
      return acc0 + scale0 * (A / (1 - B));
    }
    seen.emplace(t, std::make_pair(acc, scale));
    if (t < third) {
      scale *= p1;
      t *= 3;
    } else if (t <= two_thirds) {
      return acc + scale * p1;
    } else {
      acc += scale * p1;
      scale *= p2;
      t = 3 * t - 2;
    }
  }
  throw std::invalid_argument("cdf: triadic expansion of x does not terminate");
}

Rat interval_measure(const Rat& p1, const Rat& a, const Rat& b) {
  if (a > b) throw std::invalid_argument("interval_measure: a > b");
  return cdf(p1, b) - cdf(p1, a);
}

std::pair<Rat, Rat> one_sided(const Rat& p1, const Rat& x, const Rat& r) {
  if (r < 0) throw std::invalid_argument("one_sided: negative radius");
  return {interval_measure(p1, x, x + r), interval_measure(p1, x - r, x)};
}

Rat point_from_word(const sym::SymbolWord& word) {
  Rat x = 0;
  Rat pow3 = 1;
  for (int s : word.symbols) {
    pow3 /= 3;
    if (s == 2)
      x += 2 * pow3;
    else if (s != 1)
      throw std::invalid_argument("point_from_word: symbols must be 1 or 2");
  }
  return x;
}

size_t run_after(const sym::SymbolWord& word, size_t n) {
  size_t k = 0;
  for (size_t i = n; i < word.length() && word.symbols[i] == 2; ++i) ++k;
  return k;
}

}  // namespace conical::cantor
