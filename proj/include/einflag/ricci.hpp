#pragma once

// Ricci components of the block-diagonal left-invariant metrics, in exact
// rational arithmetic, plus the quotient-metric components on G/H. The same
// formulas are instantiated over plain rationals and over rational intervals
// (the latter for rigorous residual bounds at isolated roots).

#include <vector>

#include "einflag/brackets.hpp"
#include "einflag/flagdecomp.hpp"
#include "einflag/interval.hpp"
#include "einflag/rational.hpp"

namespace einflag {

struct ZeroParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Metric scalars aligned with Decomposition::blocks():
//   IIa/IIb: (u0, u1, u2, x1, x2); Ib: (u0, u1, x1, x2); Ia: (u0, u2, x1, x2).
struct MetricParams {
  std::vector<Rat> y;

  static MetricParams iib(Rat u0, Rat u1, Rat u2, Rat x1, Rat x2) {
    return {{std::move(u0), std::move(u1), std::move(u2), std::move(x1), std::move(x2)}};
  }
  static MetricParams ib(Rat u0, Rat u1, Rat x1, Rat x2) {
    return {{std::move(u0), std::move(u1), std::move(x1), std::move(x2)}};
  }
  static MetricParams ia(Rat u0, Rat u2, Rat x1, Rat x2) {
    return {{std::move(u0), std::move(u2), std::move(x1), std::move(x2)}};
  }
  static MetricParams ones(const Decomposition& d) {
    return {std::vector<Rat>(d.blocks().size(), Rat(1))};
  }
};

struct QuotientMetricParams {
  Rat w1, w2;
};

struct RicciComponents {
  std::vector<Rat> r;  // aligned with Decomposition::blocks()
};

// General formula over any bracket table:
//   r_k = 1/(2 y_k) + (1/4d_k) sum_{j,i} (y_k / y_j y_i) [k;ji]
//                   - (1/2d_k) sum_{j,i} (y_j / y_k y_i) [j;ki].
template <typename Num>
std::vector<Num> ricci_general_t(const BracketTable& t, const Decomposition& dims,
                                 const std::vector<Num>& y) {
  const std::vector<int> blocks = dims.blocks();
  const std::vector<long> d = dims.block_dims();
  const size_t nb = blocks.size();
  std::vector<Num> out;
  out.reserve(nb);
  for (size_t kk = 0; kk < nb; ++kk) {
    Num acc = Num(Rat(1)) / (Num(Rat(2)) * y[kk]);
    Num s1{Rat(0)}, s2{Rat(0)};
    for (size_t jj = 0; jj < nb; ++jj) {
      for (size_t ii = 0; ii < nb; ++ii) {
        Rat bkji = t.get(blocks[kk], blocks[jj], blocks[ii]);
        if (bkji != 0) s1 += Num(bkji) * (y[kk] / (y[jj] * y[ii]));
        Rat bjki = t.get(blocks[jj], blocks[kk], blocks[ii]);
        if (bjki != 0) s2 += Num(bjki) * (y[jj] / (y[kk] * y[ii]));
      }
    }
    acc += Num(Rat(1, 4 * d[kk])) * s1 - Num(Rat(1, 2 * d[kk])) * s2;
    out.push_back(acc);
  }
  return out;
}

RicciComponents ricci_general(const BracketTable& t, const Decomposition& dims,
                              const MetricParams& m);

// Specialized closed forms (five components for IIa/IIb, four for Ib / Ia).
template <typename Num>
std::vector<Num> ricci_IIb_t(const Decomposition& d, const std::vector<Num>& y);
template <typename Num>
std::vector<Num> ricci_Ib_t(const Decomposition& d, const std::vector<Num>& y);
template <typename Num>
std::vector<Num> ricci_Ia_t(const Decomposition& d, const std::vector<Num>& y);
// Dispatch on d.dtype over the specialized forms.
template <typename Num>
std::vector<Num> ricci_components_t(const Decomposition& d, const std::vector<Num>& y);

RicciComponents ricci_IIb(const Decomposition& dims, const MetricParams& m);
RicciComponents ricci_Ib(const Decomposition& dims, const MetricParams& m);
RicciComponents ricci_Ia(const Decomposition& dims, const MetricParams& m);

// Quotient metric on G/H: components on (m1, m2) for weights (w1, w2).
std::pair<Rat, Rat> ricci_quotient(const BracketTable& t, const Decomposition& dims,
                                   const QuotientMetricParams& w);

}  // namespace einflag
