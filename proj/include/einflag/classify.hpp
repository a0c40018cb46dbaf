#pragma once

// Decides whether a verified Einstein solution is naturally reductive, by the
// type-specific equality patterns:
//   types IIb/Ib: x1 = x2 (G x H family) or u0 = u1 = x2 (G x K family);
//   types IIa/Ia: x1 = x2 or u0 = x2;
//   all parameters equal: bi-invariant.

#include "einflag/classification.hpp"
#include "einflag/solver.hpp"

namespace einflag {

struct Indeterminate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClassifyOptions {
  Rat tolerance = pow10(-6);    // relative distance that counts as equal
  Rat width = pow10(-12);       // refinement width before testing
  Rat max_width = pow10(-30);   // give up (Indeterminate) below this
};

// Stores the verdict on the solution and returns it.
Classification classify(EinsteinSolution& sol, const Decomposition& dims,
                        const ClassifyOptions& opts = {});

// The classification core on materialized parameter enclosures (aligned with
// Decomposition::blocks()). nullopt when some equality is still undecided at
// this width. Exposed for the scale-invariance property.
std::optional<Classification> classify_intervals(DType dtype,
                                                 const std::vector<RatInterval>& params,
                                                 const Rat& tolerance);

// Exact rational-function identity: on the closed-form u2 branch the linear
// solve returns u0 = u1 = x2 and e = (4 d4 + d3 x2^2)/(4 (d3+4d4) x2).
bool generic_branch_is_nr_IIb(const Decomposition& dims);

}  // namespace einflag
