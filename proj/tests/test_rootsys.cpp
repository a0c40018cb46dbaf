#include <doctest.h>

#include "einflag/rootsys.hpp"

using namespace einflag;

TEST_CASE("positive root counts follow the dimension formula") {
  // |roots| = (dim - rank)/2, checked per family across the supported ranks.
  CHECK(enumerate_positive_roots(LieKind::parse("G2")).positive_roots.size() == 6);
  CHECK(enumerate_positive_roots(LieKind::parse("E8")).positive_roots.size() == 120);
  CHECK(enumerate_positive_roots(LieKind::parse("B2")).positive_roots.size() == 4);
  CHECK(enumerate_positive_roots(LieKind::parse("F4")).positive_roots.size() == 24);
  CHECK(enumerate_positive_roots(LieKind::parse("E6")).positive_roots.size() == 36);
  CHECK(enumerate_positive_roots(LieKind::parse("E7")).positive_roots.size() == 63);
  for (int n = 2; n <= 30; ++n)
    CHECK((long)enumerate_positive_roots(LieKind::make(Family::B, n)).positive_roots.size() ==
          (LieKind::make(Family::B, n).dim() - n) / 2);
  for (int n = 3; n <= 30; ++n)
    CHECK((long)enumerate_positive_roots(LieKind::make(Family::C, n)).positive_roots.size() ==
          (LieKind::make(Family::C, n).dim() - n) / 2);
  for (int n = 4; n <= 30; ++n)
    CHECK((long)enumerate_positive_roots(LieKind::make(Family::D, n)).positive_roots.size() ==
          (LieKind::make(Family::D, n).dim() - n) / 2);
}

TEST_CASE("highest roots") {
  CHECK(enumerate_positive_roots(LieKind::parse("G2")).highest_root.coeffs ==
        std::vector<int>{3, 2});
  CHECK(enumerate_positive_roots(LieKind::parse("F4")).highest_root.coeffs ==
        std::vector<int>{2, 3, 4, 2});
  CHECK(enumerate_positive_roots(LieKind::parse("E8")).highest_root.coeffs ==
        std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(enumerate_positive_roots(LieKind::parse("B6")).highest_root.coeffs ==
        std::vector<int>{1, 2, 2, 2, 2, 2});
  CHECK(enumerate_positive_roots(LieKind::parse("C5")).highest_root.coeffs ==
        std::vector<int>{2, 2, 2, 2, 1});
  CHECK(enumerate_positive_roots(LieKind::parse("D7")).highest_root.coeffs ==
        std::vector<int>{1, 2, 2, 2, 2, 1, 1});

  // Uniqueness: exactly one root dominates every other coefficient-wise.
  for (auto name : {"E6", "B5", "F4"}) {
    RootSystem rs = enumerate_positive_roots(LieKind::parse(name));
    int dominant = 0;
    for (const Root& r : rs.positive_roots) {
      bool dom = true;
      for (const Root& s : rs.positive_roots)
        for (int i = 0; i < rs.rank(); ++i)
          if (s.coeffs[i] > r.coeffs[i]) dom = false;
      if (dom) ++dominant;
    }
    CHECK(dominant == 1);
  }
}

TEST_CASE("coefficient access") {
  RootSystem rs = enumerate_positive_roots(LieKind::parse("G2"));
  CHECK(coefficient_at(rs.highest_root, 0) == 3);
  CHECK(coefficient_at(rs.highest_root, 1) == 2);
  // simple roots expand trivially
  for (int j = 0; j < rs.rank(); ++j) {
    std::vector<int> e(rs.rank(), 0);
    e[j] = 1;
    Root alpha{e};
    for (int k = 0; k < rs.rank(); ++k) CHECK(coefficient_at(alpha, k) == (k == j ? 1 : 0));
  }
}

TEST_CASE("extended diagram adjacency") {
  for (int n = 3; n <= 12; ++n)
    CHECK(extended_neighbors(enumerate_positive_roots(LieKind::make(Family::B, n))) ==
          std::vector<int>{1});
  for (int n = 3; n <= 12; ++n)
    CHECK(extended_neighbors(enumerate_positive_roots(LieKind::make(Family::C, n))) ==
          std::vector<int>{0});
  for (int n = 4; n <= 12; ++n)
    CHECK(extended_neighbors(enumerate_positive_roots(LieKind::make(Family::D, n))) ==
          std::vector<int>{1});
  CHECK(extended_neighbors(enumerate_positive_roots(LieKind::parse("E6"))) ==
        std::vector<int>{1});
  CHECK(extended_neighbors(enumerate_positive_roots(LieKind::parse("E7"))) ==
        std::vector<int>{0});
  CHECK(extended_neighbors(enumerate_positive_roots(LieKind::parse("E8"))) ==
        std::vector<int>{7});
  CHECK(extended_neighbors(enumerate_positive_roots(LieKind::parse("F4"))) ==
        std::vector<int>{0});
  CHECK(extended_neighbors(enumerate_positive_roots(LieKind::parse("G2"))) ==
        std::vector<int>{1});
}

TEST_CASE("closure property and determinism") {
  for (auto name : {"E6", "B4", "F4", "G2", "C4"}) {
    RootSystem rs = enumerate_positive_roots(LieKind::parse(name));
    // If two positive roots pair negatively their sum is again a root.
    for (const Root& a : rs.positive_roots)
      for (const Root& b : rs.positive_roots) {
        if (a == b) continue;
        if (rs.inner(a.coeffs, b.coeffs) < 0) {
          std::vector<int> sum(rs.rank());
          for (int i = 0; i < rs.rank(); ++i) sum[i] = a.coeffs[i] + b.coeffs[i];
          CHECK(rs.contains(sum));
        }
      }
    // Sums of positive roots never escape the highest-root box.
    for (const Root& r : rs.positive_roots)
      for (int i = 0; i < rs.rank(); ++i) CHECK(r.coeffs[i] <= rs.highest_root.coeffs[i]);
    // Re-running enumeration is bit-identical.
    RootSystem again = enumerate_positive_roots(rs.kind);
    CHECK(again.positive_roots == rs.positive_roots);
  }
}

TEST_CASE("rank validation") {
  CHECK_THROWS_AS(LieKind::make(Family::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(LieKind::make(Family::C, 2), std::invalid_argument);
  CHECK_THROWS_AS(LieKind::make(Family::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(LieKind::parse("A5"), std::invalid_argument);
  CHECK_THROWS_AS(LieKind::parse("E9"), std::invalid_argument);
  CHECK(LieKind::parse("B2").dim() == 10);
  CHECK(LieKind::parse("D12").dim() == 276);
}
