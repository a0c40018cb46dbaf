#pragma once

// Exact rational scalars. All numerics in this library are arbitrary-precision
// rationals (GMP); floating point appears only when formatting output.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace einflag {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p/q", and plain decimal strings like "1.62965".
Rat parse_rat(const std::string& s);

inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline Rat rat_pow(const Rat& a, unsigned k) {
  Rat r(1);
  Rat b = a;
  for (unsigned e = k; e; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

inline Rat pow10(int k) {
  Rat r(1);
  Rat ten = k >= 0 ? Rat(10) : Rat(1, 10);
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) r *= ten;
  return r;
}

// "p/q" (or "p" when q = 1), always in lowest terms.
std::string to_fraction_string(const Rat& a);

// Fixed-point decimal, rounded to `digits` places after the point.
std::string to_decimal_string(const Rat& a, int digits);

}  // namespace einflag
