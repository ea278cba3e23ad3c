#pragma once

#include <utility>

#include "conical/rat.hpp"
#include "conical/symbolic.hpp"

namespace conical::cantor {

// Exact distribution function of the weighted triadic Cantor measure with
// left weight p1 and right weight 1 - p1. The recursion terminates whenever
// the triadic expansion of x is eventually trivial (denominator a power of
// 3, or x outside [0,1]); other rationals hit an iteration guard.
Rat cdf(const Rat& p1, const Rat& x);

// mu([a, b]) = F(b) - F(a); the measure is non-atomic so endpoint
// conventions are immaterial.
Rat interval_measure(const Rat& p1, const Rat& a, const Rat& b);

// One-sided ball measures at x: mu([x, x+r]) and mu([x-r, x]).
std::pair<Rat, Rat> one_sided(const Rat& p1, const Rat& x, const Rat& r);

// Coding map for the triadic Cantor system: symbol 1 -> digit 0, symbol
// 2 -> digit 2; x = sum digit_k 3^-k. A finite word gives pi(word 111...).
Rat point_from_word(const sym::SymbolWord& word);

// Length of the run of symbol 2 starting right after position n (1-based),
// within the finite word; the implicit tail of 1s stops any run.
size_t run_after(const sym::SymbolWord& word, size_t n);

}  // namespace conical::cantor
