#pragma once

// Painted-diagram machinery: grade the positive roots by their coefficient at
// the painted node, keep the two-summand cases, and split off the five-block
// decomposition (center, up to two semisimple ideals, two isotropy blocks).

#include <stdexcept>
#include <vector>

#include "einflag/rational.hpp"
#include "einflag/rootsys.hpp"

namespace einflag {

enum class DType { Ia, Ib, IIa, IIb };
std::string dtype_name(DType t);

struct NotTwoSummands : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PaintedDiagram {
  RootSystem rs;
  int i0;  // 0-based painted node
};

// Partition of the positive roots by coefficient at i0; index k holds the
// roots with coefficient exactly k, up to the coefficient of the highest root.
std::vector<std::vector<Root>> grade_roots(const RootSystem& rs, int i0);
inline std::vector<std::vector<Root>> grade_roots(const PaintedDiagram& pd) {
  return grade_roots(pd.rs, pd.i0);
}

struct Decomposition {
  LieKind kind;
  int i0 = -1;    // painted node, 0-based
  int q = 0;      // number of isotropy summands (always 2 here)
  long d0 = 1, d1 = 0, d2 = 0, d3 = 0, d4 = 0;
  DType dtype = DType::Ia;
  std::vector<std::vector<int>> pi0_components;  // node index sets
  std::vector<int> h1_nodes, h2_nodes;           // component(s) behind d1 / d2

  long dim_g() const { return kind.dim(); }
  // Block ids present, in the fixed order 0:h0, 1:h1, 2:h2, 3:m1, 4:m2.
  std::vector<int> blocks() const;
  std::vector<long> block_dims() const;  // aligned with blocks()
  long dim_of_block(int id) const;
};

// Requires the grading to have exactly two isotropy summands, else throws
// NotTwoSummands. Ideal assignment: the component acting nontrivially on m2
// goes to h1; components commuting with m2 are collected in h2. When every
// component commutes with m2 the split is fixed by the Killing-ratio
// consistency test (see implementation).
Decomposition decompose(const RootSystem& rs, int i0);
inline Decomposition decompose(const PaintedDiagram& pd) { return decompose(pd.rs, pd.i0); }

// All painted nodes whose highest-root coefficient is exactly 2.
std::vector<Decomposition> find_nodes_with_q2(const RootSystem& rs);

// Ratio (Killing form of g restricted to the component) / (its own Killing
// form), computed from root sums. Exposed for tests.
Rat killing_ratio(const RootSystem& rs, const std::vector<int>& component_nodes);

}  // namespace einflag
