#pragma once

// Exact univariate polynomials and rational functions over Q, with real-root
// counting (Sturm chains), isolation, and bisection refinement.
//
// Conventions:
//  * coefficients are stored constant-term first, with no zero leading
//    coefficient (the zero polynomial has an empty coefficient vector);
//  * root isolation works on the squarefree part and always hands back either
//    an exact rational root or an open interval with a sign change;
//  * positive roots are searched on (0, U) with U a Cauchy bound, never on a
//    window guessed from the application.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "einflag/interval.hpp"
#include "einflag/rational.hpp"

namespace einflag {

class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RationalPoly zero() { return RationalPoly(); }
  static RationalPoly constant(const Rat& a) { return RationalPoly({a}); }
  // c0 + c1 x + ... given as initializer-friendly vector of longs.
  static RationalPoly from_ints(const std::vector<long>& v);
  static RationalPoly identity() { return RationalPoly({Rat(0), Rat(1)}); }  // x
  static RationalPoly monomial(const Rat& a, int k);

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rat coeff(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : Rat(0); }
  Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }

  template <typename Num>
  Num eval(const Num& x) const {
    Num acc{Rat(0)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Num(*it);
    return acc;
  }
  int sign_at(const Rat& x) const { return sgn(eval<Rat>(x)); }

  RationalPoly derivative() const;

  RationalPoly operator-() const;
  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rat& s, const RationalPoly& a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

  // Field division: *this = q*d + r with deg r < deg d. Throws on d = 0.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& d) const;
  bool divisible_by(const RationalPoly& d) const;

  // Positive rational g such that (*this)/g has coprime integer coefficients.
  Rat content() const;
  // (*this)/content(): integer coefficients, sign of leading term preserved.
  RationalPoly primitive_part() const;
  // primitive_part with positive leading coefficient (canonical generator).
  RationalPoly normalized() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// gcd, primitive with positive leading coefficient; gcd(0,0) = 0.
RationalPoly poly_gcd(RationalPoly a, RationalPoly b);
RationalPoly squarefree_part(const RationalPoly& p);
// Divides out (x - r)^k; returns multiplicity k.
int deflate_rational_root(RationalPoly& p, const Rat& r);

class RationalFunction {
 public:
  RationalFunction() : num_(RationalPoly::zero()), den_(RationalPoly::constant(Rat(1))) {}
  RationalFunction(const Rat& a) : RationalFunction(RationalPoly::constant(a)) {}
  explicit RationalFunction(RationalPoly num) : num_(std::move(num)), den_(RationalPoly::constant(Rat(1))) {}
  RationalFunction(RationalPoly num, RationalPoly den);

  static RationalFunction identity() { return RationalFunction(RationalPoly::identity()); }

  const RationalPoly& num() const { return num_; }
  const RationalPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const Rat& s, const RationalFunction& a);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  // Identical as functions (cross-multiplication test).
  friend bool same_function(const RationalFunction& a, const RationalFunction& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
  }

  // Exact value; throws std::domain_error if the denominator vanishes at x.
  Rat eval(const Rat& x) const;
  bool defined_at(const Rat& x) const { return den_.sign_at(x) != 0; }
  // Enclosure of the value over an interval; nullopt when the denominator
  // enclosure straddles 0 (caller should refine its input).
  std::optional<RatInterval> eval(const RatInterval& x) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  RationalPoly num_, den_;
};

// p composed with a rational function: p(f) as a RationalFunction.
RationalFunction compose(const RationalPoly& p, const RationalFunction& f);

// One isolated real root of `poly` (squarefree, primitive). Either an exact
// rational (lo == hi) or an open interval with poly(lo)*poly(hi) < 0.
struct IsolatedRoot {
  RationalPoly poly;
  Rat lo, hi;
  bool exact = false;

  RatInterval interval() const { return RatInterval(lo, hi); }
  Rat mid() const { return (lo + hi) / 2; }
};

class SturmChain {
 public:
  explicit SturmChain(const RationalPoly& squarefree);
  int variations_at(const Rat& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;
  // Number of real roots in (a, b], by sign-variation difference.
  int count_half_open(const Rat& a, const Rat& b) const;
  const std::vector<RationalPoly>& polys() const { return seq_; }

 private:
  std::vector<RationalPoly> seq_;
};

// Root counting / isolation. Bounds are open; std::nullopt means -inf / +inf.
int count_real_roots(const RationalPoly& p, std::optional<Rat> lo, std::optional<Rat> hi);
std::vector<IsolatedRoot> isolate_real_roots(const RationalPoly& p, std::optional<Rat> lo,
                                             std::optional<Rat> hi);
inline std::vector<IsolatedRoot> isolate_positive_roots(const RationalPoly& p) {
  return isolate_real_roots(p, Rat(0), std::nullopt);
}

// Bisection until hi - lo <= width; preserves the sign-change invariant and
// collapses to an exact root when the midpoint lands on one.
IsolatedRoot refine(IsolatedRoot r, const Rat& width);

// 1 + max |c_i| / |c_n|: every real root has absolute value below this.
Rat cauchy_root_bound(const RationalPoly& p);

// Exact roots for degree <= 2 when they are rational; nullopt when the
// discriminant is not a rational square (isolation handles those).
std::optional<std::vector<Rat>> exact_roots_deg_le2(const RationalPoly& p);

}  // namespace einflag
