#include "einflag/classify.hpp"

namespace einflag {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NaturallyReductive_GxH: return "NaturallyReductive_GxH";
    case Verdict::NaturallyReductive_GxK: return "NaturallyReductive_GxK";
    case Verdict::BiInvariant: return "BiInvariant";
    case Verdict::NotNaturallyReductive: return "NotNaturallyReductive";
  }
  return "?";
}

namespace {

enum class Eq { Equal, Unequal, Unknown };

// Two enclosures represent equal numbers when they overlap or sit closer than
// tol relative to their size; a gap beyond tol decides inequality.
Eq interval_equal(const RatInterval& a, const RatInterval& b, const Rat& tol) {
  Rat scale = std::max(Rat(1), std::max(a.mag(), b.mag()));
  Rat gap = interval_gap(a, b);
  if (gap > tol * scale) return Eq::Unequal;
  // Overlapping or within tolerance: equal, provided the enclosures are tight
  // enough that the tolerance is meaningful.
  Rat w = std::max(a.width(), b.width());
  if (w > tol * scale) return Eq::Unknown;
  return Eq::Equal;
}

Eq combine(Eq a, Eq b) {
  if (a == Eq::Unknown || b == Eq::Unknown) return Eq::Unknown;
  if (a == Eq::Equal && b == Eq::Equal) return Eq::Equal;
  return Eq::Unequal;
}

}  // namespace

std::optional<Classification> classify_intervals(DType dtype,
                                                 const std::vector<RatInterval>& y,
                                                 const Rat& tol) {
  // Block layout per type; x1 and x2 are the last two entries.
  size_t n = y.size();
  const RatInterval& x1 = y[n - 2];
  const RatInterval& x2 = y[n - 1];
  const RatInterval& u0 = y[0];

  Eq isotropy_equal = interval_equal(x1, x2, tol);  // x1 = x2 pattern

  Eq k_pattern;  // u0 = u1 = x2 (five/four block) resp. u0 = x2 (d4 = 2 types)
  if (dtype == DType::IIb || dtype == DType::Ib)
    k_pattern = combine(interval_equal(u0, y[1], tol), interval_equal(y[1], x2, tol));
  else
    k_pattern = interval_equal(u0, x2, tol);

  Eq all_equal = combine(isotropy_equal, k_pattern);
  for (size_t i = 0; i + 1 < n; ++i)
    all_equal = combine(all_equal, interval_equal(y[i], y[i + 1], tol));

  if (isotropy_equal == Eq::Unknown || k_pattern == Eq::Unknown ||
      (all_equal == Eq::Unknown && isotropy_equal == Eq::Equal && k_pattern == Eq::Equal))
    return std::nullopt;

  Classification c;
  if (all_equal == Eq::Equal) {
    c.verdict = Verdict::BiInvariant;
    c.witness = "all parameters equal";
  } else if (k_pattern == Eq::Equal) {
    c.verdict = Verdict::NaturallyReductive_GxK;
    c.witness = (dtype == DType::IIb || dtype == DType::Ib) ? "u0 = u1 = x2" : "u0 = x2";
  } else if (isotropy_equal == Eq::Equal) {
    c.verdict = Verdict::NaturallyReductive_GxH;
    c.witness = "x1 = x2";
  } else {
    c.verdict = Verdict::NotNaturallyReductive;
    c.witness = "no equality pattern";
  }
  return c;
}

Classification classify(EinsteinSolution& sol, const Decomposition& dims,
                        const ClassifyOptions& opts) {
  Rat w = opts.width;
  while (true) {
    auto y = sol.param_intervals(w);
    auto c = classify_intervals(dims.dtype, y, opts.tolerance);
    if (c) {
      sol.classification = *c;
      return *c;
    }
    if (w <= opts.max_width)
      throw Indeterminate("equality pattern undecided at maximal refinement for " +
                          dims.kind.name());
    w = w * opts.width;
    if (w < opts.max_width) w = opts.max_width;
  }
}

bool generic_branch_is_nr_IIb(const Decomposition& dims) {
  LinearSolveIIb ls = linear_solve_IIb_symbolic(dims);
  auto [u2_nr, u2_gen] = u2_branches_symbolic(dims);
  (void)u2_gen;
  RationalFunction x = RationalFunction::identity();
  RationalFunction u0 = ls.u0_base + ls.u0_slope * u2_nr;
  RationalFunction u1 = ls.u1_base + ls.u1_slope * u2_nr;
  RationalFunction e = ls.e_base + ls.e_slope * u2_nr;
  RationalFunction e_expected(
      RationalPoly({Rat(4 * dims.d4), Rat(0), Rat(dims.d3)}),
      RationalPoly({Rat(0), Rat(4) * Rat(dims.d3 + 4 * dims.d4)}));
  return same_function(u0, x) && same_function(u1, x) && same_function(e, e_expected);
}

}  // namespace einflag
