#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace conical {

// Exact rational scalar. Used wherever inputs are rational (all presets)
// so the triadic/dyadic oracles stay exact.
using Rat = mpq_class;

inline double to_double(const Rat& q) { return q.get_d(); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r = 1;
  Rat b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Parses "a/b" or a plain decimal literal ("0.28", "-1", "3e-2" is NOT
// accepted; exponents are not needed by the file format).
inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(s.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    return Rat(mpz_class(s, 10));  // explicit base: "028" must not read as octal
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  bool neg = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    neg = digits[0] == '-';
    digits = digits.substr(1);
  }
  if (digits.empty()) throw std::invalid_argument("bad numeric literal: " + s);
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  Rat q(neg ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

// Rational upper bound on sqrt(q): returns r with r*r >= q. Newton from
// above keeps the invariant r >= sqrt(q) at every step (AM-GM); the result is
// snapped up to a 2^-64 grid to bound coefficient growth.
inline Rat sqrt_upper(const Rat& q) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  if (q == 0) return 0;
  Rat x = q + 1;  // q + 1 >= sqrt(q)
  for (int it = 0; it < 48 && x * x != q; ++it) {
    Rat nx = (x + q / x) / 2;
    if (nx == x) break;
    x = nx;
    if (x * x - q < x * Rat(1, mpz_class(1) << 64)) break;
  }
  // round up on a dyadic grid
  mpz_class scaled;
  mpz_cdiv_q(scaled.get_mpz_t(), mpz_class(x.get_num() << 64).get_mpz_t(), x.get_den().get_mpz_t());
  Rat r(scaled, mpz_class(1) << 64);
  r.canonicalize();
  return r;
}

// True if denominator of q (canonicalized) is a power of `p`.
inline bool denominator_is_power_of(const Rat& q, unsigned p) {
  mpz_class d = q.get_den();
  while (d > 1) {
    if (!mpz_divisible_ui_p(d.get_mpz_t(), p)) return false;
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
  }
  return true;
}

}  // namespace conical
