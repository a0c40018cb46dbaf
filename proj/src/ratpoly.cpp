#include "einflag/ratpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace einflag {

Rat parse_rat(const std::string& s) {
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos && s.find('/') == std::string::npos) {
    Rat mant = parse_rat(s.substr(0, epos));
    int exp = std::stoi(s.substr(epos + 1));
    return mant * pow10(exp);
  }
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rat r(s, 10);
    r.canonicalize();
    return r;
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rat r(s, 10);
    r.canonicalize();
    return r;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  int places = static_cast<int>(s.size() - dot - 1);
  Rat r(digits, 10);
  r.canonicalize();
  return r / pow10(places);
}

std::string to_fraction_string(const Rat& a) {
  std::ostringstream os;
  os << a.get_num();
  if (a.get_den() != 1) os << "/" << a.get_den();
  return os.str();
}

std::string to_decimal_string(const Rat& a, int digits) {
  if (digits < 0) digits = 0;
  bool neg = a < 0;
  Rat x = rat_abs(a);
  // Round half away from zero at the last kept digit.
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Int n = x.get_num() * scale * 2 + x.get_den();
  Int q = n / (x.get_den() * 2);
  std::string s = q.get_str();
  if ((int)s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
  std::string ip = s.substr(0, s.size() - digits);
  std::string fp = digits > 0 ? "." + s.substr(s.size() - digits) : "";
  return (neg && (q != 0) ? "-" : "") + ip + fp;
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly RationalPoly::from_ints(const std::vector<long>& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (long x : v) c.emplace_back(x);
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::monomial(const Rat& a, int k) {
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = a;
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return zero();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rat> d(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
  return RationalPoly(std::move(d));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rat> d(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
  return RationalPoly(std::move(d));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return RationalPoly::zero();
  std::vector<Rat> d(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
  return RationalPoly(std::move(d));
}

RationalPoly operator*(const Rat& s, const RationalPoly& a) {
  std::vector<Rat> d(a.c_.size());
  for (size_t i = 0; i < a.c_.size(); ++i) d[i] = s * a.c_[i];
  return RationalPoly(std::move(d));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = c_;
  int dd = d.degree();
  int dr = static_cast<int>(rem.size()) - 1;
  if (dr < dd) return {zero(), *this};
  std::vector<Rat> quot(dr - dd + 1, Rat(0));
  Rat lead = d.c_.back();
  for (int k = dr; k >= dd; --k) {
    if (rem[k] == 0) continue;
    Rat f = rem[k] / lead;
    quot[k - dd] = f;
    for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= f * d.c_[i];
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

bool RationalPoly::divisible_by(const RationalPoly& d) const {
  return divmod(d).second.is_zero();
}

Rat RationalPoly::content() const {
  if (is_zero()) return Rat(0);
  Int num_gcd(0), den_lcm(1);
  for (const Rat& a : c_) {
    if (a == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), a.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den().get_mpz_t());
  }
  Rat g(num_gcd, den_lcm);
  g.canonicalize();
  return g;
}

RationalPoly RationalPoly::primitive_part() const {
  if (is_zero()) return zero();
  Rat g = content();
  std::vector<Rat> d(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] / g;
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::normalized() const {
  RationalPoly p = primitive_part();
  if (!p.is_zero() && p.leading() < 0) p = -p;
  return p;
}

std::string RationalPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& a = c_[k];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    Rat mag = rat_abs(a);
    bool unit = (mag == 1);
    if (!unit || k == 0) os << to_fraction_string(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  while (!b.is_zero()) {
    RationalPoly r = a.divmod(b).second;
    a = std::move(b);
    // Primitive normalization keeps coefficient growth in check.
    b = r.is_zero() ? RationalPoly::zero() : r.primitive_part();
  }
  return a.normalized();
}

RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.degree() <= 1) return p.normalized();
  RationalPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.normalized();
  return p.divmod(g).first.normalized();
}

int deflate_rational_root(RationalPoly& p, const Rat& r) {
  int mult = 0;
  RationalPoly lin({-r, Rat(1)});
  while (!p.is_zero() && p.sign_at(r) == 0) {
    p = p.divmod(lin).first;
    ++mult;
  }
  return mult;
}

RationalFunction::RationalFunction(RationalPoly num, RationalPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = RationalPoly::constant(Rat(1));
    return;
  }
  RationalPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  // Canonical form: denominator primitive with positive leading coefficient.
  Rat s = den_.content();
  if (den_.leading() < 0) s = -s;
  den_ = (Rat(1) / s) * den_;
  num_ = (Rat(1) / s) * num_;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}
RationalFunction operator*(const Rat& s, const RationalFunction& a) {
  return RationalFunction(s * a.num_, a.den_);
}

Rat RationalFunction::eval(const Rat& x) const {
  Rat d = den_.eval<Rat>(x);
  if (d == 0) throw std::domain_error("RationalFunction: pole at evaluation point");
  return num_.eval<Rat>(x) / d;
}

std::optional<RatInterval> RationalFunction::eval(const RatInterval& x) const {
  if (x.is_point()) {
    if (den_.sign_at(x.lo) == 0) return std::nullopt;
    return RatInterval::point(eval(x.lo));
  }
  RatInterval d = den_.eval<RatInterval>(x);
  if (d.contains_zero()) return std::nullopt;
  return num_.eval<RatInterval>(x) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_ == RationalPoly::constant(Rat(1))) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RationalFunction compose(const RationalPoly& p, const RationalFunction& f) {
  RationalFunction acc{Rat(0)};
  for (int k = p.degree(); k >= 0; --k) acc = acc * f + RationalFunction(p.coeff(k));
  return acc;
}

SturmChain::SturmChain(const RationalPoly& squarefree) {
  RationalPoly p0 = squarefree.normalized();
  seq_.push_back(p0);
  if (p0.degree() < 1) return;
  RationalPoly p1 = p0.derivative().primitive_part();
  seq_.push_back(p1);
  while (seq_.back().degree() > 0) {
    RationalPoly r = seq_[seq_.size() - 2].divmod(seq_.back()).second;
    if (r.is_zero()) break;
    // Negate, then rescale by a positive rational: signs are what matter.
    seq_.push_back((-r).primitive_part());
  }
}

namespace {
int count_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}
}  // namespace

int SturmChain::variations_at(const Rat& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) signs.push_back(p.sign_at(x));
  return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& p : seq_) signs.push_back(sgn(p.leading()));
  return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& p : seq_) {
    int s = sgn(p.leading());
    if (p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int SturmChain::count_half_open(const Rat& a, const Rat& b) const {
  return variations_at(a) - variations_at(b);
}

namespace {

struct IsolationContext {
  const RationalPoly& q;
  const SturmChain& chain;
  std::vector<IsolatedRoot>* out;

  // Number of roots in the open interval (a, b), both endpoints non-roots.
  int count_open(const Rat& a, const Rat& b) const {
    return chain.variations_at(a) - chain.variations_at(b);
  }

  void split(const Rat& lo, const Rat& hi, int nroots) {
    if (nroots == 0) return;
    if (nroots == 1) {
      out->push_back(IsolatedRoot{q, lo, hi, false});
      return;
    }
    Rat m = (lo + hi) / 2;
    if (q.sign_at(m) == 0) {
      out->push_back(IsolatedRoot{q, m, m, true});
      // Step off the root by a width small enough to separate it.
      Rat eps = (hi - lo) / 4;
      while (true) {
        Rat a = m - eps, b = m + eps;
        if (q.sign_at(a) != 0 && q.sign_at(b) != 0 && count_open(a, b) == 1) {
          split(lo, a, count_open(lo, a));
          split(b, hi, count_open(b, hi));
          return;
        }
        eps /= 2;
      }
    }
    int left = count_open(lo, m);
    split(lo, m, left);
    split(m, hi, nroots - left);
  }
};

}  // namespace

Rat cauchy_root_bound(const RationalPoly& p) {
  if (p.degree() < 1) return Rat(1);
  Rat lead = rat_abs(p.leading());
  Rat mx(0);
  for (int i = 0; i < p.degree(); ++i) mx = std::max(mx, rat_abs(p.coeff(i)));
  return Rat(1) + mx / lead;
}

int count_real_roots(const RationalPoly& p, std::optional<Rat> lo, std::optional<Rat> hi) {
  RationalPoly q = squarefree_part(p);
  if (q.degree() < 1) return 0;
  if (!lo && !hi) {
    SturmChain chain(q);
    return chain.variations_at_neg_inf() - chain.variations_at_pos_inf();
  }
  Rat bound = cauchy_root_bound(q);
  Rat a = lo ? *lo : -bound;
  Rat b = hi ? *hi : bound;
  if (a >= b) return 0;
  // Endpoint roots are not in the open interval; divide them out first.
  if (q.sign_at(a) == 0) deflate_rational_root(q, a);
  if (!q.is_zero() && q.sign_at(b) == 0) deflate_rational_root(q, b);
  if (q.degree() < 1) return 0;
  SturmChain chain(q);
  return chain.variations_at(a) - chain.variations_at(b);
}

std::vector<IsolatedRoot> isolate_real_roots(const RationalPoly& p, std::optional<Rat> lo,
                                             std::optional<Rat> hi) {
  std::vector<IsolatedRoot> out;
  RationalPoly q = squarefree_part(p);
  if (q.degree() < 1) return out;
  Rat bound = cauchy_root_bound(q);
  Rat a = lo ? *lo : -bound;
  Rat b = hi ? *hi : bound;
  if (a >= b) return out;
  // Endpoint roots are excluded from the open interval; divide them out so the
  // variation counts see interior roots only.
  if (q.sign_at(a) == 0) deflate_rational_root(q, a);
  if (!q.is_zero() && q.sign_at(b) == 0) deflate_rational_root(q, b);
  if (q.degree() < 1) return out;
  SturmChain chain(q);
  IsolationContext ctx{q, chain, &out};
  ctx.split(a, b, ctx.count_open(a, b));
  std::sort(out.begin(), out.end(),
            [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo + x.hi < y.lo + y.hi; });
  return out;
}

IsolatedRoot refine(IsolatedRoot r, const Rat& width) {
  if (r.exact) return r;
  while (r.hi - r.lo > width) {
    Rat m = (r.lo + r.hi) / 2;
    int sm = r.poly.sign_at(m);
    if (sm == 0) {
      r.lo = r.hi = m;
      r.exact = true;
      return r;
    }
    if (sm == r.poly.sign_at(r.lo)) r.lo = m;
    else r.hi = m;
  }
  return r;
}

std::optional<std::vector<Rat>> exact_roots_deg_le2(const RationalPoly& p) {
  int d = p.degree();
  if (d <= 0) return std::vector<Rat>{};
  if (d == 1) return std::vector<Rat>{-p.coeff(0) / p.coeff(1)};
  if (d > 2) return std::nullopt;
  Rat a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
  Rat disc = b * b - 4 * a * c;
  if (disc < 0) return std::vector<Rat>{};
  if (mpz_perfect_square_p(disc.get_num().get_mpz_t()) == 0 ||
      mpz_perfect_square_p(disc.get_den().get_mpz_t()) == 0)
    return std::nullopt;
  Int sn, sd;
  mpz_sqrt(sn.get_mpz_t(), disc.get_num().get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), disc.get_den().get_mpz_t());
  Rat s(sn, sd);
  s.canonicalize();
  Rat r1 = (-b - s) / (2 * a), r2 = (-b + s) / (2 * a);
  if (r1 > r2) std::swap(r1, r2);
  if (r1 == r2) return std::vector<Rat>{r1};
  return std::vector<Rat>{r1, r2};
}

}  // namespace einflag
