#include "einflag/brackets.hpp"

#include <algorithm>

namespace einflag {

namespace {
std::array<int, 3> key(int k, int i, int j) {
  std::array<int, 3> a{k, i, j};
  std::sort(a.begin(), a.end());
  return a;
}
}  // namespace

Rat BracketTable::get(int k, int i, int j) const {
  auto it = entries.find(key(k, i, j));
  return it == entries.end() ? Rat(0) : it->second;
}

void BracketTable::set(int k, int i, int j, const Rat& v) {
  if (v < 0)
    throw NegativeEntry("negative bracket sum [" + std::to_string(k) + ";" + std::to_string(i) +
                        std::to_string(j) + "] = " + to_fraction_string(v) + " for " +
                        dims.kind.name());
  if (v != 0) entries[key(k, i, j)] = v;
}

namespace {

// Shared core: the h-ideal in `slot` (1 or 2) with dimension dh, the other
// ideal contributing only through the grading dimensions d3, d4.
BracketTable two_summand_table(const Decomposition& d) {
  const Rat D(d.d3 + 4 * d.d4);
  BracketTable t;
  t.dims = d;
  t.set(0, 3, 3, Rat(d.d3) / D);
  t.set(0, 4, 4, Rat(4 * d.d4) / D);
  if (d.d1 > 0) {
    t.set(1, 1, 1, Rat(2 * d.d4) * Rat(2 * d.d1 + 2 - d.d4) / D);
    t.set(1, 3, 3, Rat(d.d1 * d.d3) / D);
    t.set(1, 4, 4, Rat(2 * d.d4) * Rat(d.d4 - 2) / D);
  }
  if (d.d2 > 0) {
    Rat s = Rat(d.d3) * Rat(d.d3 + 2 * d.d4 - 2 * d.d1 - 2) / (2 * D);
    t.set(2, 2, 2, Rat(d.d2) - s);
    t.set(2, 3, 3, s);
  }
  t.set(4, 3, 3, Rat(d.d3 * d.d4) / D);
  return t;
}

}  // namespace

BracketTable closed_form_IIb(const Decomposition& d) {
  if (d.dtype != DType::IIa && d.dtype != DType::IIb)
    throw std::invalid_argument("closed_form_IIb needs a two-component decomposition");
  return two_summand_table(d);
}

BracketTable closed_form_Ib(const Decomposition& d) {
  if (d.dtype != DType::Ib) throw std::invalid_argument("closed_form_Ib needs type Ib");
  return two_summand_table(d);
}

BracketTable closed_form_Ia(const Decomposition& d) {
  if (d.dtype != DType::Ia) throw std::invalid_argument("closed_form_Ia needs type Ia");
  return two_summand_table(d);
}

BracketTable closed_form_table(const Decomposition& d) {
  switch (d.dtype) {
    case DType::IIa:
    case DType::IIb: return closed_form_IIb(d);
    case DType::Ib: return closed_form_Ib(d);
    case DType::Ia: return closed_form_Ia(d);
  }
  throw std::invalid_argument("bad decomposition type");
}

IdentityReport verify_identities(const BracketTable& t) {
  const Decomposition& d = t.dims;
  IdentityReport rep;
  rep.row_sums_ok = true;

  auto check = [&](const std::string& what, const Rat& lhs, const Rat& rhs) {
    if (lhs != rhs) {
      rep.row_sums_ok = false;
      rep.failures.push_back(what + ": " + to_fraction_string(lhs) + " != " +
                             to_fraction_string(rhs));
    }
  };

  check("[3;03]+[4;04] = 1", t.get(3, 0, 3) + t.get(4, 0, 4), Rat(1));
  if (d.d1 > 0)
    check("[1;11]+[3;13]+[4;14] = d1", t.get(1, 1, 1) + t.get(3, 1, 3) + t.get(4, 1, 4),
          Rat(d.d1));
  if (d.d2 > 0)
    check("[2;22]+[3;23] = d2", t.get(2, 2, 2) + t.get(3, 2, 3), Rat(d.d2));
  check("m1 row sum = d3",
        2 * (t.get(0, 3, 3) + t.get(1, 3, 3) + t.get(2, 3, 3) + t.get(4, 3, 3)), Rat(d.d3));
  check("m2 row sum = d4",
        2 * t.get(0, 4, 4) + 2 * t.get(1, 4, 4) + 2 * t.get(2, 4, 4) + t.get(3, 4, 3),
        Rat(d.d4));

  Rat expected433 = Rat(d.d3 * d.d4) / Rat(d.d3 + 4 * d.d4);
  rep.m2_block_identity_ok = (t.get(4, 3, 3) == expected433);
  if (!rep.m2_block_identity_ok)
    rep.failures.push_back("[4;33] != d3*d4/(d3+4*d4)");

  // Quotient metric with weights (1, 2) must be Einstein: the two quotient
  // Ricci components agree.
  {
    Rat w1(1), w2(2);
    Rat b433 = t.get(4, 3, 3);
    Rat r1 = Rat(1) / (2 * w1) - w2 * b433 / (2 * Rat(d.d3) * w1 * w1);
    Rat r2 = (Rat(1, 2) - t.get(3, 4, 3) / (2 * Rat(d.d4))) / w2 +
             w2 * b433 / (4 * Rat(d.d4) * w1 * w1);
    rep.kahler_einstein_ok = (r1 == r2);
    if (!rep.kahler_einstein_ok)
      rep.failures.push_back("quotient Ricci components differ at weights (1,2): " +
                             to_fraction_string(r1) + " vs " + to_fraction_string(r2));
  }
  return rep;
}

}  // namespace einflag
