#include "einflag/solver.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace einflag {

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::BiInvariant: return "BiInvariant";
    case Branch::NaturallyReductiveBranch: return "NaturallyReductiveBranch";
    case Branch::GenericBranch: return "GenericBranch";
  }
  return "?";
}

AlgebraicNumber::AlgebraicNumber(IsolatedRoot r) : exact_(r.exact), value_(r.lo) {
  if (!r.exact) root_ = std::move(r);
}

const Rat& AlgebraicNumber::exact_value() const {
  if (!exact_) throw std::logic_error("AlgebraicNumber: not exact");
  return value_;
}

RatInterval AlgebraicNumber::interval() const {
  if (exact_) return RatInterval::point(value_);
  return root_->interval();
}

void AlgebraicNumber::refine_to(const Rat& width) {
  if (exact_) return;
  *root_ = refine(*root_, width);
  if (root_->exact) {
    exact_ = true;
    value_ = root_->lo;
    root_.reset();
  }
}

const RationalPoly* AlgebraicNumber::defining() const {
  return exact_ ? nullptr : &root_->poly;
}

namespace {

RationalFunction rf_const(const Rat& a) { return RationalFunction(a); }
RationalFunction rf_x() { return RationalFunction::identity(); }
RationalFunction rf_poly(std::vector<Rat> coeffs) {
  return RationalFunction(RationalPoly(std::move(coeffs)));
}

// 3x3 determinant over polynomials.
RationalPoly det3(const std::array<std::array<RationalPoly, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<RationalFunction, 3> cramer3(const std::array<std::array<RationalPoly, 3>, 3>& m,
                                        const std::array<RationalPoly, 3>& b,
                                        const RationalPoly& det) {
  std::array<RationalFunction, 3> out;
  for (int col = 0; col < 3; ++col) {
    auto mc = m;
    for (int row = 0; row < 3; ++row) mc[row][col] = b[row];
    out[col] = RationalFunction(det3(mc), det);
  }
  return out;
}

// x2 is the polynomial variable throughout; x1 = 1.
struct IIbSystem {
  // Linear block, M (u0,u1,e)^T = b_const + b_u2 * u2.
  std::array<std::array<RationalPoly, 3>, 3> M;
  std::array<RationalPoly, 3> b_const, b_u2;
  // h1 equation K u1^2 + C x2^2 + 4 d1 D e u1 x2^2, with
  // K = 2d4(2-d4) - d1 d3 x2^2 and C = -2d4(2+2d1-d4).
  // h2 equation c24 + 8 d2 D e u2 + d3 (2+2d1-d3-2d4) u2^2.
};

IIbSystem make_iib_system(const Decomposition& d) {
  const long D = d.d3 + 4 * d.d4;
  IIbSystem s;
  auto P = [](std::vector<long> v) {
    std::vector<Rat> c;
    for (long x : v) c.emplace_back(x);
    return RationalPoly(std::move(c));
  };
  // h0 equation: (-4d4 - d3 x^2) u0 + 4 D x^2 e = 0.
  s.M[0] = {P({-4 * d.d4, 0, -d.d3}), P({0}), P({0, 0, 4 * D})};
  s.b_const[0] = P({0});
  s.b_u2[0] = P({0});
  // m1 equation: 2 u0 + 2 d1 u1 + 4 D e + (2 d4 x - 2 d3 - 8 d4) + S' u2 = 0,
  // S' = -2 - 2 d1 + d3 + 2 d4; move the constants to the right-hand side.
  s.M[1] = {P({2}), P({2 * d.d1}), P({4 * D})};
  s.b_const[1] = P({2 * d.d3 + 8 * d.d4, -2 * d.d4});
  s.b_u2[1] = P({2 + 2 * d.d1 - d.d3 - 2 * d.d4});
  // m2 equation: 8 u0 + (4 d4 - 8) u1 + 4 D x^2 e - 8 d4 x - d3 x^3 = 0.
  s.M[2] = {P({8}), P({4 * d.d4 - 8}), P({0, 0, 4 * D})};
  s.b_const[2] = P({0, 8 * d.d4, 0, d.d3});
  s.b_u2[2] = P({0});
  return s;
}

// Coefficients of the u2 quadratic obtained from the h1 equation after the
// linear solve: qc2 u2^2 + qc1 u2 + qc0 = 0.
struct U2Quadratic {
  RationalFunction qc2, qc1, qc0;
};

U2Quadratic u2_quadratic(const Decomposition& d, const LinearSolveIIb& ls) {
  RationalFunction K = rf_poly({Rat(2 * d.d4) * Rat(2 - d.d4), Rat(0), Rat(-d.d1 * d.d3)});
  RationalFunction C = rf_poly({Rat(0), Rat(0), Rat(-2 * d.d4) * Rat(2 + 2 * d.d1 - d.d4)});
  RationalFunction L = rf_poly({Rat(0), Rat(0), Rat(4 * d.d1) * Rat(d.d3 + 4 * d.d4)});
  const RationalFunction &A = ls.u1_base, &B = ls.u1_slope;
  const RationalFunction &E = ls.e_base, &F = ls.e_slope;
  U2Quadratic q;
  q.qc2 = K * B * B + L * F * B;
  q.qc1 = Rat(2) * K * A * B + L * (E * B + F * A);
  q.qc0 = K * A * A + L * E * A + C;
  return q;
}

// h2 equation as a function of (u2, e).
RationalFunction h2_equation_value(const Decomposition& d, const RationalFunction& u2,
                                   const RationalFunction& e) {
  Rat c24 = Rat(-2 * d.d3) - Rat(2 * d.d1 * d.d3) - Rat(2 * d.d2 * d.d3) + Rat(d.d3 * d.d3) -
            Rat(8 * d.d2 * d.d4) + Rat(2 * d.d3 * d.d4);
  Rat lin = Rat(8 * d.d2) * Rat(d.d3 + 4 * d.d4);
  Rat quad = Rat(d.d3) * Rat(2 + 2 * d.d1 - d.d3 - 2 * d.d4);
  return rf_const(c24) + lin * (e * u2) + quad * (u2 * u2);
}

RationalFunction nr_einstein_constant(const Decomposition& d) {
  // e = (4 d4 + d3 x^2) / (4 (d3 + 4 d4) x) on the closed-form branch.
  return RationalFunction(RationalPoly({Rat(4 * d.d4), Rat(0), Rat(d.d3)}),
                          RationalPoly({Rat(0), Rat(4) * Rat(d.d3 + 4 * d.d4)}));
}

// Whether a denominator vanishes exactly at the algebraic number: for an
// isolated root, iff gcd(its squarefree defining polynomial, den) has a root
// inside the isolating interval (which contains no other root of defining).
bool vanishes_at(const RationalPoly& den, const AlgebraicNumber& x) {
  if (den.degree() <= 0) return den.is_zero();
  if (x.exact()) return den.sign_at(x.exact_value()) == 0;
  RationalPoly g = poly_gcd(*x.defining(), den);
  if (g.degree() < 1) return false;
  RatInterval iv = x.interval();
  return count_real_roots(g, iv.lo, iv.hi) > 0 || g.sign_at(iv.lo) == 0 ||
         g.sign_at(iv.hi) == 0;
}

}  // namespace

std::vector<RatInterval> EinsteinSolution::param_intervals(const Rat& width) const {
  AlgebraicNumber x = x2;
  x.refine_to(width);
  Rat w = width;
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<RatInterval> out;
    out.reserve(params.size());
    bool ok = true;
    for (const auto& f : params) {
      auto iv = f.eval(x.interval());
      if (!iv) {
        ok = false;
        break;
      }
      out.push_back(*iv);
    }
    if (ok) return out;
    w /= 1024;
    x.refine_to(w);
  }
  throw std::runtime_error("parameter enclosure failed: denominator straddles zero");
}

RatInterval EinsteinSolution::e_interval(const Rat& width) const {
  AlgebraicNumber x = x2;
  x.refine_to(width);
  Rat w = width;
  for (int attempt = 0; attempt < 200; ++attempt) {
    auto iv = e.eval(x.interval());
    if (iv) return *iv;
    w /= 1024;
    x.refine_to(w);
  }
  throw std::runtime_error("Einstein constant enclosure failed");
}

LinearSolveIIb linear_solve_IIb_symbolic(const Decomposition& dims) {
  if (dims.dtype != DType::IIa && dims.dtype != DType::IIb)
    throw std::invalid_argument("linear_solve_IIb needs type IIa/IIb");
  IIbSystem sys = make_iib_system(dims);
  RationalPoly det = det3(sys.M);
  if (det.is_zero()) throw DegenerateDenominator("linear system singular as a function of x2");
  auto base = cramer3(sys.M, sys.b_const, det);
  auto slope = cramer3(sys.M, sys.b_u2, det);
  LinearSolveIIb ls;
  ls.u0_base = base[0];
  ls.u1_base = base[1];
  ls.e_base = base[2];
  ls.u0_slope = slope[0];
  ls.u1_slope = slope[1];
  ls.e_slope = slope[2];
  ls.det = RationalFunction(det.normalized());
  return ls;
}

LinearSolveAt linear_solve_IIb(const Decomposition& dims, const Rat& x2) {
  LinearSolveIIb ls = linear_solve_IIb_symbolic(dims);
  if (ls.det.num().sign_at(x2) == 0)
    throw DegenerateDenominator("linear solve degenerates at x2 = " + to_fraction_string(x2));
  auto affine = [&](const RationalFunction& b, const RationalFunction& s) {
    return RationalFunction(RationalPoly({b.eval(x2), s.eval(x2)}));
  };
  return {affine(ls.u0_base, ls.u0_slope), affine(ls.u1_base, ls.u1_slope),
          affine(ls.e_base, ls.e_slope)};
}

std::pair<RationalFunction, RationalFunction> u2_branches_symbolic(const Decomposition& dims) {
  long dencoef = 2 + 2 * dims.d1 - dims.d3 - 2 * dims.d4;
  if (dencoef == 0) throw DegenerateDenominator("closed-form branch denominator vanishes");
  RationalFunction u2_nr(
      RationalPoly({Rat(4 * dims.d4), Rat(-(2 * dims.d3 + 8 * dims.d4)),
                    Rat(2 + 2 * dims.d1 + dims.d3 + 2 * dims.d4)}),
      RationalPoly({Rat(0), Rat(dencoef)}));
  LinearSolveIIb ls = linear_solve_IIb_symbolic(dims);
  U2Quadratic q = u2_quadratic(dims, ls);
  if (q.qc2.is_zero()) throw DegenerateDenominator("u2 quadratic degenerates");
  RationalFunction check = q.qc2 * u2_nr * u2_nr + q.qc1 * u2_nr + q.qc0;
  if (!check.is_zero())
    throw std::logic_error("closed-form branch is not a root of the u2 quadratic for " +
                           dims.kind.name());
  RationalFunction u2_gen = q.qc0 / (q.qc2 * u2_nr);
  return {u2_nr, u2_gen};
}

std::pair<Rat, Rat> u2_branches(const Decomposition& dims, const Rat& x2) {
  auto [nr, gen] = u2_branches_symbolic(dims);
  if (!nr.defined_at(x2) || !gen.defined_at(x2))
    throw DegenerateDenominator("u2 branch has a pole at x2 = " + to_fraction_string(x2));
  return {nr.eval(x2), gen.eval(x2)};
}

namespace {

// Everything the IIb elimination produces, kept for back-substitution.
struct IIbPipeline {
  LinearSolveIIb ls;
  RationalFunction u2_nr, u2_gen;
  RationalFunction u0_gen, u1_gen, e_gen;  // generic branch, functions of x2
  RationalFunction e_nr;
  RationalPoly f_gen, f_nr;
};

IIbPipeline iib_pipeline(const Decomposition& dims) {
  IIbPipeline p;
  p.ls = linear_solve_IIb_symbolic(dims);
  std::tie(p.u2_nr, p.u2_gen) = u2_branches_symbolic(dims);
  p.u0_gen = p.ls.u0_base + p.ls.u0_slope * p.u2_gen;
  p.u1_gen = p.ls.u1_base + p.ls.u1_slope * p.u2_gen;
  p.e_gen = p.ls.e_base + p.ls.e_slope * p.u2_gen;
  p.e_nr = nr_einstein_constant(dims);
  p.f_gen = h2_equation_value(dims, p.u2_gen, p.e_gen).num().normalized();
  p.f_nr = h2_equation_value(dims, p.u2_nr, p.e_nr).num().normalized();
  return p;
}

}  // namespace

RationalPoly build_polynomial_IIb(const Decomposition& dims) {
  if (dims.dtype != DType::IIb)
    throw std::invalid_argument("build_polynomial_IIb needs type IIb");
  return iib_pipeline(dims).f_gen;
}

RationalPoly build_polynomial_IIb_nr(const Decomposition& dims) {
  if (dims.dtype != DType::IIb)
    throw std::invalid_argument("build_polynomial_IIb_nr needs type IIb");
  return iib_pipeline(dims).f_nr;
}

EinsteinSolution bi_invariant_solution(const Decomposition& dims) {
  EinsteinSolution s;
  s.dtype = dims.dtype;
  s.branch = Branch::BiInvariant;
  s.x2 = AlgebraicNumber(Rat(1));
  size_t nb = dims.blocks().size();
  s.params.assign(nb, rf_const(Rat(1)));
  s.params.back() = rf_x();  // the m2 scale is the solve variable
  s.e = rf_const(Rat(1, 4));
  s.residual_bound = Rat(0);
  return s;
}

namespace {

struct VerifyOutcome {
  enum class Status { Verified, NonPositive, ResidualTooLarge, Indeterminate } status;
  Rat bound;
  std::string detail;
};

VerifyOutcome verify_candidate(EinsteinSolution& sol, const Decomposition& dims,
                               const SolveOptions& opts) {
  Rat w = opts.refine_width;
  while (true) {
    sol.x2.refine_to(w);
    RatInterval x = sol.x2.interval();
    bool undecided = false;

    std::vector<RatInterval> y;
    y.reserve(sol.params.size());
    std::optional<RatInterval> ev = sol.e.eval(x);
    bool eval_ok = ev.has_value();
    if (eval_ok) {
      for (const auto& f : sol.params) {
        auto iv = f.eval(x);
        if (!iv) {
          eval_ok = false;
          break;
        }
        y.push_back(*iv);
      }
    }

    if (eval_ok) {
      bool nonpositive = false;
      for (const auto& iv : y) {
        if (iv.hi <= 0) nonpositive = true;
        else if (iv.lo <= 0) undecided = true;
      }
      if (nonpositive)
        return {VerifyOutcome::Status::NonPositive, Rat(0), "metric parameter not positive"};
      if (!undecided) {
        auto r = ricci_components_t<RatInterval>(dims, y);
        Rat bound(0);
        Rat worst_lower(0);
        for (const auto& rk : r) {
          RatInterval diff = rk - *ev;
          bound = std::max(bound, diff.mag());
          if (!diff.contains_zero())
            worst_lower = std::max(worst_lower, std::min(rat_abs(diff.lo), rat_abs(diff.hi)));
        }
        if (bound <= opts.residual_threshold)
          return {VerifyOutcome::Status::Verified, bound, ""};
        if (worst_lower > opts.residual_threshold)
          return {VerifyOutcome::Status::ResidualTooLarge, worst_lower,
                  "residual bounded away from zero"};
        // Inconclusive: the enclosure is still too wide.
      }
    }

    if (sol.x2.exact() || w <= opts.max_refine_width)
      return {VerifyOutcome::Status::Indeterminate, Rat(-1),
              "undecided at maximal refinement width"};
    w = w * opts.refine_width;  // geometric refinement schedule
    if (w < opts.max_refine_width) w = opts.max_refine_width;
  }
}

bool same_solution(EinsteinSolution& a, EinsteinSolution& b, const Rat& width) {
  if (a.params.size() != b.params.size()) return false;
  auto pa = a.param_intervals(width), pb = b.param_intervals(width);
  for (size_t i = 0; i < pa.size(); ++i)
    if (disjoint(pa[i], pb[i])) return false;
  return !disjoint(a.e_interval(width), b.e_interval(width));
}

void sort_solutions(std::vector<EinsteinSolution>& sols) {
  std::stable_sort(sols.begin(), sols.end(), [](const EinsteinSolution& a, const EinsteinSolution& b) {
    if (a.branch != b.branch) return static_cast<int>(a.branch) < static_cast<int>(b.branch);
    return a.x2.interval().mid() < b.x2.interval().mid();
  });
}

// Shared back-substitution driver: build a candidate for each positive root,
// verify it rigorously, and file accepted/rejected accordingly.
void emit_candidates(const Decomposition& dims, const RationalPoly& poly, Branch branch,
                     const std::vector<RationalFunction>& params, const RationalFunction& e,
                     const SolveOptions& opts, std::vector<EinsteinSolution>& out,
                     std::vector<RejectedRoot>& rejected) {
  RationalPoly work = poly;
  std::vector<AlgebraicNumber> roots;
  // Rational roots of low-degree factors come out exact.
  if (auto exact = exact_roots_deg_le2(work.normalized())) {
    for (const Rat& r : *exact)
      if (r > 0) roots.emplace_back(r);
  } else {
    // x2 = 1 is worth testing exactly: the bi-invariant point sits there.
    if (work.sign_at(Rat(1)) == 0) {
      deflate_rational_root(work, Rat(1));
      roots.emplace_back(Rat(1));
    }
    for (auto& r : isolate_positive_roots(work)) roots.emplace_back(std::move(r));
  }

  for (AlgebraicNumber& x : roots) {
    // Roots where a back-substitution denominator degenerates cannot be
    // solutions of the original system; reject them up front.
    bool degenerate = false;
    for (const auto& f : params)
      if (vanishes_at(f.den(), x)) degenerate = true;
    if (vanishes_at(e.den(), x)) degenerate = true;
    if (degenerate) {
      rejected.push_back(RejectedRoot{branch, x.interval(), "degenerate denominator at root"});
      continue;
    }
    EinsteinSolution cand;
    cand.dtype = dims.dtype;
    cand.branch = branch;
    cand.x2 = x;
    cand.params = params;
    cand.e = e;
    VerifyOutcome v = verify_candidate(cand, dims, opts);
    switch (v.status) {
      case VerifyOutcome::Status::Verified:
        cand.residual_bound = v.bound;
        out.push_back(std::move(cand));
        break;
      case VerifyOutcome::Status::NonPositive:
      case VerifyOutcome::Status::ResidualTooLarge:
      case VerifyOutcome::Status::Indeterminate:
        rejected.push_back(RejectedRoot{branch, x.interval(), v.detail});
        break;
    }
  }
}

}  // namespace

Rat verify_solution(EinsteinSolution& sol, const Decomposition& dims, const SolveOptions& opts) {
  VerifyOutcome v = verify_candidate(sol, dims, opts);
  if (v.status == VerifyOutcome::Status::Verified ||
      v.status == VerifyOutcome::Status::ResidualTooLarge) {
    sol.residual_bound = v.bound;
    return v.bound;
  }
  throw std::runtime_error("verification undecided: " + v.detail);
}

SolveResult solve_IIb(const Decomposition& dims, const SolveOptions& opts) {
  if (dims.dtype != DType::IIb) throw std::invalid_argument("solve_IIb needs type IIb");
  IIbPipeline p = iib_pipeline(dims);
  SolveResult res;
  res.dims = dims;
  res.generic_poly = p.f_gen;
  res.nr_branch_poly = p.f_nr;

  res.solutions.push_back(bi_invariant_solution(dims));

  // Generic branch: params (u0, u1, u2, 1, x2) as functions of x2.
  std::vector<RationalFunction> gen_params{p.u0_gen, p.u1_gen, p.u2_gen, rf_const(Rat(1)),
                                           rf_x()};
  emit_candidates(dims, p.f_gen, Branch::GenericBranch, gen_params, p.e_gen, opts,
                  res.solutions, res.rejected);

  // Closed-form branch: u0 = u1 = x2 identically.
  RationalPoly f_nr = p.f_nr;
  int k = deflate_rational_root(f_nr, Rat(1));
  if (k > 0) res.notes.push_back("closed-form branch eliminant has the bi-invariant root x2 = 1");
  std::vector<RationalFunction> nr_params{rf_x(), rf_x(), p.u2_nr, rf_const(Rat(1)), rf_x()};
  emit_candidates(dims, f_nr, Branch::NaturallyReductiveBranch, nr_params, p.e_nr, opts,
                  res.solutions, res.rejected);

  sort_solutions(res.solutions);
  return res;
}

LinearSolveIb linear_solve_Ib_symbolic(const Decomposition& dims) {
  if (dims.dtype != DType::Ib) throw std::invalid_argument("linear_solve_Ib needs type Ib");
  const long D = dims.d3 + 4 * dims.d4;
  auto P = [](std::vector<long> v) {
    std::vector<Rat> c;
    for (long x : v) c.emplace_back(x);
    return RationalPoly(std::move(c));
  };
  std::array<std::array<RationalPoly, 3>, 3> M;
  std::array<RationalPoly, 3> b;
  // h0 equation: (-4 d4 - d3 x^2) u0 + 4 D x^2 e = 0.
  M[0] = {P({-4 * dims.d4, 0, -dims.d3}), P({0}), P({0, 0, 4 * D})};
  b[0] = P({0});
  // m1 equation: u0 + d1 u1 + 2 D e + d4 x - d3 - 4 d4 = 0.
  M[1] = {P({1}), P({dims.d1}), P({2 * D})};
  b[1] = P({dims.d3 + 4 * dims.d4, -dims.d4});
  // m2 equation: 8 u0 + (4 d4 - 8) u1 + 4 D x^2 e - 8 d4 x - d3 x^3 = 0.
  M[2] = {P({8}), P({4 * dims.d4 - 8}), P({0, 0, 4 * D})};
  b[2] = P({0, 8 * dims.d4, 0, dims.d3});
  RationalPoly det = det3(M);
  if (det.is_zero()) throw DegenerateDenominator("type Ib linear system singular");
  auto sol = cramer3(M, b, det);
  return {sol[0], sol[1], sol[2], RationalFunction(det.normalized())};
}

std::array<Rat, 3> linear_solve_Ib(const Decomposition& dims, const Rat& x2) {
  LinearSolveIb ls = linear_solve_Ib_symbolic(dims);
  if (ls.det.num().sign_at(x2) == 0)
    throw DegenerateDenominator("type Ib linear solve degenerates at x2 = " +
                                to_fraction_string(x2));
  return {ls.u0.eval(x2), ls.u1.eval(x2), ls.e.eval(x2)};
}

namespace {

// The degree-8 factor of the type Ib eliminant, by its closed coefficients.
RationalPoly ib_octic(long d1, long d3, long d4) {
  auto R = [](long v) { return Rat(v); };
  Rat D = R(d3 + 4 * d4);
  std::vector<Rat> c(9, Rat(0));
  c[8] = R(d1) * R(d3) * R(d3) * R(d3) * R(d3 + 2 * d4 + 2);
  c[7] = Rat(-2) * R(d1) * R(d3) * R(d3) * R(d3) * D;
  c[6] = Rat(2) * R(d3) * R(d3) * R(d4) *
         (4 * R(d1) * R(d1) + 10 * R(d3) * R(d1) + 10 * R(d4) * R(d1) + 28 * R(d1) +
          2 * R(d4) * R(d4) - 2 * R(d3) + R(d3) * R(d4) - 2 * R(d4) - 4);
  c[5] = Rat(-4) * R(d3) * R(d3) * D *
         (R(d4) * R(d4) + 6 * R(d1) * R(d4) - 2 * R(d4) + 4 * R(d1));
  c[4] = Rat(8) * R(d3) * R(d4) *
         (4 * R(d4) * R(d4) * R(d4) + 8 * R(d1) * R(d4) * R(d4) + 5 * R(d3) * R(d4) * R(d4) +
          8 * R(d4) * R(d4) + 8 * R(d1) * R(d1) * R(d4) + 24 * R(d1) * R(d4) +
          16 * R(d1) * R(d3) * R(d4) - 10 * R(d3) * R(d4) - 32 * R(d4) + 16 * R(d1) * R(d1) +
          16 * R(d1));
  c[3] = Rat(-32) * R(d3) * R(d4) * D *
         (R(d4) * R(d4) + 3 * R(d1) * R(d4) + 2 * R(d1) - 4);
  c[2] = Rat(32) * R(d4) *
         (2 * R(d4) * R(d4) * R(d4) * R(d4) + 2 * R(d1) * R(d4) * R(d4) * R(d4) +
          7 * R(d3) * R(d4) * R(d4) * R(d4) + 10 * R(d4) * R(d4) * R(d4) +
          4 * R(d1) * R(d1) * R(d4) * R(d4) + 10 * R(d1) * R(d3) * R(d4) * R(d4) -
          10 * R(d3) * R(d4) * R(d4) - 12 * R(d4) * R(d4) + 16 * R(d1) * R(d1) * R(d4) -
          24 * R(d1) * R(d4) - 8 * R(d1) * R(d3) * R(d4) - 12 * R(d3) * R(d4) - 40 * R(d4) +
          16 * R(d1) * R(d1) + 32 * R(d1) + 8 * R(d1) * R(d3) + 8 * R(d3) + 16);
  c[1] = Rat(-64) * R(d4 - 2) * R(d4) * R(d4 + 2) * R(2 * d1 + d4 + 2) * D;
  c[0] = Rat(128) * R(d4 - 2) * R(d4) * R(d4) *
         (3 * R(d4) * R(d4) + 2 * R(d1) * R(d4) + 4 * R(d4) - 4 * R(d1) - 4);
  return RationalPoly(std::move(c));
}

}  // namespace

BranchSplitIb branch_split_Ib(const Decomposition& dims) {
  if (dims.dtype != DType::Ib) throw std::invalid_argument("branch_split_Ib needs type Ib");
  LinearSolveIb ls = linear_solve_Ib_symbolic(dims);
  // h1 equation with the linear solve substituted.
  RationalFunction K = rf_poly({Rat(2 * dims.d4) * Rat(2 - dims.d4), Rat(0),
                                Rat(-dims.d1 * dims.d3)});
  RationalFunction C = rf_poly({Rat(0), Rat(0),
                                Rat(-2 * dims.d4) * Rat(2 + 2 * dims.d1 - dims.d4)});
  RationalFunction L = rf_poly({Rat(0), Rat(0),
                                Rat(4 * dims.d1) * Rat(dims.d3 + 4 * dims.d4)});
  RationalFunction value = K * ls.u1 * ls.u1 + C + L * ls.e * ls.u1;

  BranchSplitIb out;
  out.eliminant = value.num().normalized();
  out.quadratic = RationalPoly({Rat(4 * dims.d4), Rat(-2) * Rat(dims.d3 + 4 * dims.d4),
                                Rat(2 * dims.d1 + dims.d3 + 2 * dims.d4 + 2)});
  out.octic = ib_octic(dims.d1, dims.d3, dims.d4);
  if (!out.eliminant.divisible_by(out.quadratic.normalized()))
    throw std::logic_error("type Ib eliminant not divisible by the quadratic factor");
  if (!out.eliminant.divisible_by(out.octic.normalized()))
    throw std::logic_error("type Ib eliminant not divisible by the degree-8 factor");
  out.residual_factor =
      out.eliminant.divmod(out.quadratic.normalized()).first.divmod(out.octic.normalized())
          .first.normalized();
  return out;
}

SolveResult solve_Ib(const Decomposition& dims, const SolveOptions& opts) {
  if (dims.dtype != DType::Ib) throw std::invalid_argument("solve_Ib needs type Ib");
  LinearSolveIb ls = linear_solve_Ib_symbolic(dims);
  BranchSplitIb split = branch_split_Ib(dims);
  SolveResult res;
  res.dims = dims;
  res.generic_poly = split.octic.normalized();
  res.nr_branch_poly = split.quadratic.normalized();

  res.solutions.push_back(bi_invariant_solution(dims));

  // Quadratic branch carries u0 = u1 = x2 identically.
  RationalPoly quad = split.quadratic.normalized();
  if (quad.sign_at(Rat(1)) == 0) deflate_rational_root(quad, Rat(1));
  std::vector<RationalFunction> nr_params{rf_x(), rf_x(), rf_const(Rat(1)), rf_x()};
  emit_candidates(dims, quad, Branch::NaturallyReductiveBranch, nr_params,
                  nr_einstein_constant(dims), opts, res.solutions, res.rejected);

  // Degree-8 branch: parameters from the linear solve.
  std::vector<RationalFunction> gen_params{ls.u0, ls.u1, rf_const(Rat(1)), rf_x()};
  emit_candidates(dims, split.octic, Branch::GenericBranch, gen_params, ls.e, opts,
                  res.solutions, res.rejected);

  // Left-over factor from denominator clearing: its roots must all fail
  // verification; run them through the same gate for honesty.
  if (split.residual_factor.degree() > 0) {
    size_t before = res.solutions.size();
    emit_candidates(dims, split.residual_factor, Branch::GenericBranch, gen_params, ls.e, opts,
                    res.solutions, res.rejected);
    if (res.solutions.size() != before)
      res.notes.push_back("unexpected verified root in the spurious elimination factor");
    else if (!res.rejected.empty())
      res.notes.push_back("spurious factor roots rejected by verification");
  }

  sort_solutions(res.solutions);
  return res;
}

ForcedRelationNote verify_forced_relation(const Decomposition& dims) {
  if (dims.dtype != DType::Ia && dims.dtype != DType::IIa)
    throw std::invalid_argument("forced relation applies to types Ia/IIa");
  if (dims.d4 != 2) throw std::logic_error("type a decomposition must have d4 = 2");
  const Rat D(dims.d3 + 4 * dims.d4);
  // r0 - r4 = a(x2) u0 + b(x2): the u1 contribution to the m2 component
  // carries the factor (d4 - 2) = 0, so only u0 and x2 appear.
  RationalFunction x = rf_x();
  RationalFunction a = rf_const(Rat(dims.d3) / (4 * D)) +
                       rf_const(Rat(2 * dims.d4) / D) / (x * x);
  RationalFunction b = -(rf_const(Rat(2 * dims.d4) / D) / x +
                         rf_const(Rat(dims.d3) / (4 * D)) * x);
  ForcedRelationNote note;
  RationalFunction should_vanish = a * x + b;
  bool vanishes = should_vanish.is_zero();
  // a > 0 on (0, inf): numerator and denominator both have nonnegative
  // coefficients and positive leading terms.
  auto nonneg = [](const RationalPoly& p) {
    if (p.is_zero() || p.leading() < 0) return false;
    for (const Rat& c : p.coeffs())
      if (c < 0) return false;
    return true;
  };
  bool positive = nonneg(a.num()) && nonneg(a.den());
  note.forced_u0_equals_x2 = vanishes && positive;
  note.detail = vanishes
                    ? "difference of the h0 and m2 equations factors as (positive)*(u0 - x2)"
                    : "factorization check failed";
  return note;
}

namespace {

// Shared reduced elimination for the d4 = 2 types, after u0 = x2.
struct TypeASystem {
  RationalFunction e;                  // from the h0 equation
  RationalFunction b222, b233;         // [2;22], [2;33] as constants
  Rat d2;
};

TypeASystem type_a_base(const Decomposition& dims) {
  const Rat D(dims.d3 + 4 * dims.d4);
  TypeASystem s;
  s.e = nr_einstein_constant(dims);
  Rat span = Rat(dims.d3) * Rat(dims.d3 + 2 * dims.d4 - 2 * dims.d1 - 2) / (2 * D);
  s.b233 = rf_const(span);
  s.b222 = rf_const(Rat(dims.d2) - span);
  s.d2 = Rat(dims.d2);
  return s;
}

// h2 equation value [2;22] + [2;33] u2^2 - 4 d2 e u2 for a given u2(x2).
RationalFunction h2_reduced_value(const TypeASystem& s, const RationalFunction& u2) {
  return s.b222 + s.b233 * u2 * u2 - Rat(4) * s.d2 * s.e * u2;
}

}  // namespace

SolveResult solve_Ia_IIa(const Decomposition& dims, const SolveOptions& opts) {
  if (dims.dtype != DType::Ia && dims.dtype != DType::IIa)
    throw std::invalid_argument("solve_Ia_IIa needs type Ia or IIa");
  ForcedRelationNote note = verify_forced_relation(dims);
  if (!note.forced_u0_equals_x2)
    throw std::logic_error("u0 = x2 is not forced for " + dims.kind.name());

  SolveResult res;
  res.dims = dims;
  res.notes.push_back(note.detail);
  res.solutions.push_back(bi_invariant_solution(dims));

  TypeASystem base = type_a_base(dims);
  const Rat D(dims.d3 + 4 * dims.d4);
  RationalFunction x = rf_x();

  if (dims.dtype == DType::Ia) {
    // m1 equation, affine in u2 (u0 = x2):
    // 1/2 - 3x/(2D) - u2 (d3+2)/(4D) = e.
    RationalFunction r3_0 = rf_const(Rat(1, 2)) - rf_const(Rat(3) / (2 * D)) * x;
    RationalFunction r3_1 = rf_const(-Rat(dims.d3 + 2) / (4 * D));
    RationalFunction u2f = (base.e - r3_0) / r3_1;
    RationalPoly f = h2_reduced_value(base, u2f).num().normalized();
    int k = deflate_rational_root(f, Rat(1));
    if (k > 0) res.notes.push_back("eliminant carries the bi-invariant root x2 = 1");
    res.generic_poly = f;
    std::vector<RationalFunction> params{rf_x(), u2f, rf_const(Rat(1)), rf_x()};
    emit_candidates(dims, f, Branch::NaturallyReductiveBranch, params, base.e, opts,
                    res.solutions, res.rejected);
  } else {
    // IIa: the h1 equation factors into u1 = x2 and u1 = 8/(d3 x2).
    RationalFunction b111 = rf_const(Rat(8 * dims.d1) / D);
    RationalFunction b133 = rf_const(Rat(dims.d1 * dims.d3) / D);
    RationalFunction check = b111 + b133 * x * x - Rat(4) * Rat(dims.d1) * base.e * x;
    if (!check.is_zero())
      throw std::logic_error("u1 = x2 is not a root of the h1 equation for " + dims.kind.name());
    RationalFunction u1_other = (b111 / b133) / x;  // Vieta: product of the two roots

    long Scoef = dims.d3 + 2 * dims.d4 - 2 * dims.d1 - 2;
    if (Scoef == 0)
      throw DegenerateDenominator("the u2 coefficient of the m1 equation vanishes for " +
                                  dims.kind.name());
    bool first_branch = true;
    for (const RationalFunction& u1f : {rf_x(), u1_other}) {
      // m1 equation: 1/2 - x d4/(2D) - (x + d1 u1 + u2 S/2)/(2D) = e.
      RationalFunction r3_0 = rf_const(Rat(1, 2)) - rf_const(Rat(dims.d4) / (2 * D)) * x -
                              (x + Rat(dims.d1) * u1f) * rf_const(Rat(1) / (2 * D));
      RationalFunction r3_1 = rf_const(-Rat(Scoef) / (4 * D));
      RationalFunction u2f = (base.e - r3_0) / r3_1;
      RationalPoly f = h2_reduced_value(base, u2f).num().normalized();
      if (first_branch) {
        int k = deflate_rational_root(f, Rat(1));
        if (k > 0) res.notes.push_back("eliminant carries the bi-invariant root x2 = 1");
        res.nr_branch_poly = f;
      } else {
        res.generic_poly = f;
      }
      std::vector<RationalFunction> params{rf_x(), u1f, u2f, rf_const(Rat(1)), rf_x()};
      emit_candidates(dims, f, Branch::NaturallyReductiveBranch, params, base.e, opts,
                      res.solutions, res.rejected);
      first_branch = false;
    }
    // The two u1 branches can meet; drop duplicates.
    std::vector<EinsteinSolution> dedup;
    for (auto& s : res.solutions) {
      bool dup = false;
      for (auto& t : dedup)
        if (same_solution(s, t, opts.refine_width)) dup = true;
      if (!dup) dedup.push_back(std::move(s));
    }
    res.solutions = std::move(dedup);
  }

  sort_solutions(res.solutions);
  return res;
}

SolveResult solve(const Decomposition& dims, const SolveOptions& opts) {
  switch (dims.dtype) {
    case DType::IIb: return solve_IIb(dims, opts);
    case DType::Ib: return solve_Ib(dims, opts);
    case DType::Ia:
    case DType::IIa: return solve_Ia_IIa(dims, opts);
  }
  throw std::invalid_argument("bad decomposition type");
}

ScaledSolution rescale_to_unit_e(const EinsteinSolution& sol, const Rat& width) {
  ScaledSolution out;
  RatInterval e = sol.e_interval(width);
  auto params = sol.param_intervals(width);
  for (auto& p : params) out.params.push_back(p * e);
  out.e = RatInterval(Rat(1));
  return out;
}

}  // namespace einflag
