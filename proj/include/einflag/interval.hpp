#pragma once

// Closed intervals with exact rational endpoints. Used to carry rigorous
// enclosures of algebraic numbers through metric/Ricci evaluations.

#include <optional>
#include <stdexcept>

#include "einflag/rational.hpp"

namespace einflag {

struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(const Rat& a) : lo(a), hi(a) {}
  RatInterval(const Rat& a, const Rat& b) : lo(a), hi(b) {
    if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
  }

  static RatInterval point(const Rat& a) { return RatInterval(a); }

  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  // Largest absolute value attained on the interval.
  Rat mag() const { return std::max(rat_abs(lo), rat_abs(hi)); }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool strictly_positive() const { return lo > 0; }
  bool strictly_negative() const { return hi < 0; }

  RatInterval operator-() const { return RatInterval(-hi, -lo); }

  RatInterval& operator+=(const RatInterval& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
  RatInterval& operator-=(const RatInterval& o) { return *this += -o; }

  friend RatInterval operator+(RatInterval a, const RatInterval& b) { return a += b; }
  friend RatInterval operator-(RatInterval a, const RatInterval& b) { return a -= b; }

  friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return RatInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                       std::max(std::max(p1, p2), std::max(p3, p4)));
  }
  RatInterval& operator*=(const RatInterval& o) { return *this = *this * o; }

  // Requires 0 outside b.
  friend RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) throw std::domain_error("RatInterval: division by interval containing 0");
    return a * RatInterval(Rat(1) / b.hi, Rat(1) / b.lo);
  }
  RatInterval& operator/=(const RatInterval& o) { return *this = *this / o; }

  friend RatInterval operator+(const RatInterval& a, const Rat& s) { return a + RatInterval(s); }
  friend RatInterval operator*(const Rat& s, const RatInterval& a) { return RatInterval(s) * a; }
};

// True iff the two intervals cannot represent the same number.
inline bool disjoint(const RatInterval& a, const RatInterval& b) {
  return a.hi < b.lo || b.hi < a.lo;
}

// Gap between the intervals (0 when they overlap).
inline Rat interval_gap(const RatInterval& a, const RatInterval& b) {
  if (!disjoint(a, b)) return Rat(0);
  return a.hi < b.lo ? Rat(b.lo - a.hi) : Rat(a.lo - b.hi);
}

}  // namespace einflag
