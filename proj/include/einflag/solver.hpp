#pragma once

// Einstein systems for the four types, eliminated down to one univariate
// polynomial in x2 (the m2 scale, normalized by x1 = 1):
//
//  * types IIa/IIb: the three equations linear in (u0, u1, e) are solved by
//    Cramer's rule over Q(x2) with u2 carried as an affine parameter; the
//    remaining h1 equation becomes a quadratic in u2 whose two branches are
//    split exactly (one closed-form branch, the other by Vieta); the h2
//    equation then eliminates to the degree-16 polynomial.
//  * type Ib: the linear solve has no u2; the h1 equation factors into a
//    quadratic (the G x K family) and a degree-8 polynomial.
//  * types Ia/IIa: the system forces u0 = x2 (verified symbolically); the
//    reduced system eliminates the remaining unknowns the same way.
//
// Every root is verified by back-substitution into the Ricci components with
// interval arithmetic before it is reported; failed roots are kept in a
// diagnostics list.

#include <optional>
#include <string>
#include <vector>

#include "einflag/classification.hpp"
#include "einflag/flagdecomp.hpp"
#include "einflag/ratpoly.hpp"
#include "einflag/ricci.hpp"

namespace einflag {

struct DegenerateDenominator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Branch { BiInvariant, NaturallyReductiveBranch, GenericBranch };
std::string branch_name(Branch b);

// A real algebraic number: exact rational or isolated polynomial root.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : exact_(true), value_(0) {}
  explicit AlgebraicNumber(Rat v) : exact_(true), value_(std::move(v)) {}
  explicit AlgebraicNumber(IsolatedRoot r);

  bool exact() const { return exact_; }
  const Rat& exact_value() const;
  RatInterval interval() const;
  Rat approx() const { return interval().mid(); }
  // Narrow the enclosure to the given width (no-op when exact).
  void refine_to(const Rat& width);
  // Defining polynomial for isolated roots; nullptr when exact.
  const RationalPoly* defining() const;

 private:
  bool exact_;
  Rat value_;
  std::optional<IsolatedRoot> root_;
};

struct EinsteinSolution {
  DType dtype;
  Branch branch = Branch::GenericBranch;
  AlgebraicNumber x2;
  // Metric scalars as rational functions of x2, aligned with
  // Decomposition::blocks(); x1 is the constant 1.
  std::vector<RationalFunction> params;
  RationalFunction e;
  Rat residual_bound;  // rigorous upper bound on max_k |r_k - e|
  Classification classification;

  // Enclosures of params and e after refining x2 to `width`.
  std::vector<RatInterval> param_intervals(const Rat& width) const;
  RatInterval e_interval(const Rat& width) const;
  bool exact() const { return x2.exact(); }
};

struct RejectedRoot {
  Branch branch;
  RatInterval where;
  std::string reason;
};

struct SolveOptions {
  Rat refine_width = pow10(-12);
  Rat residual_threshold = pow10(-8);
  Rat max_refine_width = pow10(-30);
};

struct SolveResult {
  Decomposition dims;
  std::vector<EinsteinSolution> solutions;
  std::vector<RejectedRoot> rejected;
  RationalPoly generic_poly;      // eliminant of the generic branch
  RationalPoly nr_branch_poly;    // eliminant of the closed-form branch
  std::vector<std::string> notes;
};

// ---- Type IIa/IIb machinery ----

// u0, u1, e from the three linear equations, affine in u2 over Q(x2):
// value = base + slope * u2; denominators share `det` up to normalization.
struct LinearSolveIIb {
  RationalFunction u0_base, u0_slope;
  RationalFunction u1_base, u1_slope;
  RationalFunction e_base, e_slope;
  RationalFunction det;  // vanishes exactly where the linear solve degenerates
};

LinearSolveIIb linear_solve_IIb_symbolic(const Decomposition& dims);

// At a fixed rational x2: (u0, u1, e) as rational functions of the remaining
// unknown u2 (degree <= 1 over constants). Throws DegenerateDenominator when
// the linear system is singular at x2.
struct LinearSolveAt {
  RationalFunction u0, u1, e;  // functions of u2
};
LinearSolveAt linear_solve_IIb(const Decomposition& dims, const Rat& x2);

// The two u2 branches as functions of x2: first the closed-form branch
// (4d4 - (2d3+8d4) x + (2+2d1+d3+2d4) x^2) / ((2+2d1-d3-2d4) x), then the
// generic one obtained from the product of the quadratic's roots.
std::pair<RationalFunction, RationalFunction> u2_branches_symbolic(const Decomposition& dims);
std::pair<Rat, Rat> u2_branches(const Decomposition& dims, const Rat& x2);

// Primitive, positive-leading eliminant of the generic branch.
RationalPoly build_polynomial_IIb(const Decomposition& dims);
// Same elimination along the closed-form branch.
RationalPoly build_polynomial_IIb_nr(const Decomposition& dims);

SolveResult solve_IIb(const Decomposition& dims, const SolveOptions& opts = {});

// ---- Type Ib machinery ----

struct LinearSolveIb {
  RationalFunction u0, u1, e;  // functions of x2
  RationalFunction det;
};
LinearSolveIb linear_solve_Ib_symbolic(const Decomposition& dims);
// Exact values at a rational x2; throws DegenerateDenominator on a pole.
std::array<Rat, 3> linear_solve_Ib(const Decomposition& dims, const Rat& x2);

struct BranchSplitIb {
  RationalPoly quadratic;   // (2d1+d3+2d4+2) x^2 - 2(d3+4d4) x + 4d4
  RationalPoly octic;       // the degree-8 factor, from its closed coefficients
  RationalPoly eliminant;   // numerator of the substituted h1 equation
  RationalPoly residual_factor;  // eliminant / (quadratic * octic)
};
BranchSplitIb branch_split_Ib(const Decomposition& dims);

SolveResult solve_Ib(const Decomposition& dims, const SolveOptions& opts = {});

// ---- Types Ia / IIa ----

struct ForcedRelationNote {
  bool forced_u0_equals_x2 = false;  // symbolic factorization succeeded
  std::string detail;
};

SolveResult solve_Ia_IIa(const Decomposition& dims, const SolveOptions& opts = {});
// Symbolic check that the difference of the h0 and m2 Einstein equations
// factors as (positive function) * (u0 - x2).
ForcedRelationNote verify_forced_relation(const Decomposition& dims);

// Dispatch on dims.dtype.
SolveResult solve(const Decomposition& dims, const SolveOptions& opts = {});

// Rigorous residual bound for a solution, refining x2 as needed. Throws
// std::runtime_error when positivity/residual cannot be decided at
// opts.max_refine_width.
Rat verify_solution(EinsteinSolution& sol, const Decomposition& dims,
                    const SolveOptions& opts = {});

EinsteinSolution bi_invariant_solution(const Decomposition& dims);

// Rescale a solution so that the Einstein constant becomes 1 (exact only for
// exact solutions; algebraic ones are rescaled by the midpoint enclosure).
// Used by the reporting layer.
struct ScaledSolution {
  std::vector<RatInterval> params;
  RatInterval e;
};
ScaledSolution rescale_to_unit_e(const EinsteinSolution& sol, const Rat& width);

}  // namespace einflag
