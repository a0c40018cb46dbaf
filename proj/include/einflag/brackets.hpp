#pragma once

// Closed-form structure-constant sums [k;ij] for the two-summand blocks, on
// the fixed block labels 0:h0, 1:h1, 2:h2, 3:m1, 4:m2. The table is stored on
// unordered triples, so the permutation symmetry of [k;ij] is structural.
// Values are validated against the row-sum identities rather than rebuilt
// from a Chevalley basis.

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "einflag/flagdecomp.hpp"
#include "einflag/rational.hpp"

namespace einflag {

struct NegativeEntry : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BracketTable {
  Decomposition dims;
  std::map<std::array<int, 3>, Rat> entries;  // keyed by sorted triple {k,i,j}

  // Symmetrized lookup: [k;ij] = [k;ji] = [j;ki]; absent triples are 0.
  Rat get(int k, int i, int j) const;
  void set(int k, int i, int j, const Rat& v);
};

// Nonzero entries for the five-block case (types IIa and IIb):
//   [0;33], [0;44], [1;11], [1;33], [1;44], [2;22], [2;33], [4;33].
BracketTable closed_form_IIb(const Decomposition& d);
// Four-block case with h2 = 0 (type Ib): the [2;*] rows drop out.
BracketTable closed_form_Ib(const Decomposition& d);
// Four-block case with h1 = 0 (type Ia): the ideal sits in the h2 slot, so the
// [1;*] rows vanish and [2;22], [2;33] carry the ideal.
BracketTable closed_form_Ia(const Decomposition& d);
// Dispatch on d.dtype.
BracketTable closed_form_table(const Decomposition& d);

struct IdentityReport {
  bool row_sums_ok = false;       // the per-block sum rules
  bool m2_block_identity_ok = false;  // [4;33] = d3 d4 / (d3 + 4 d4)
  bool kahler_einstein_ok = false;    // quotient Ricci equal at weights (1, 2)
  std::vector<std::string> failures;

  bool all_ok() const { return row_sums_ok && m2_block_identity_ok && kahler_einstein_ok; }
};

IdentityReport verify_identities(const BracketTable& t);

}  // namespace einflag
