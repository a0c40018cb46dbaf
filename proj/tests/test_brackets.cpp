#include <doctest.h>

#include "einflag/brackets.hpp"
#include "einflag/reproduce.hpp"

using namespace einflag;

TEST_CASE("five-block closed forms, E6") {
  BracketTable t = closed_form_IIb(decomposition_for("E6", DType::IIb));
  CHECK(t.get(0, 3, 3) == Rat(1, 2));
  CHECK(t.get(4, 3, 3) == Rat(5));
  CHECK(t.get(2, 2, 2) == Rat(1, 2));
  CHECK(t.get(2, 3, 3) == Rat(5, 2));
  // row sum for the h2 block
  CHECK(t.get(2, 2, 2) + t.get(3, 2, 3) == Rat(3));
}

TEST_CASE("symmetrized lookup") {
  BracketTable t = closed_form_IIb(decomposition_for("E6", DType::IIb));
  CHECK(t.get(4, 3, 3) == t.get(3, 4, 3));
  CHECK(t.get(4, 3, 3) == t.get(3, 3, 4));
  CHECK(t.get(0, 3, 3) == t.get(3, 0, 3));
  CHECK(t.get(1, 2, 3) == Rat(0));  // absent triple
}

TEST_CASE("d4 = 2 kills the h1-m2 coupling") {
  BracketTable t = closed_form_IIb(decomposition_for(Family::B, 4, 2));
  CHECK(t.get(1, 4, 4) == Rat(0));
  CHECK(t.get(1, 1, 1) == Rat(6, 7));
  CHECK(t.get(1, 3, 3) == Rat(15, 7));
}

TEST_CASE("B5 p=3 value") {
  BracketTable t = closed_form_IIb(decomposition_for(Family::B, 5, 3));
  CHECK(t.dims.d1 == 8);
  CHECK(t.dims.d4 == 6);
  CHECK(t.get(1, 1, 1) == Rat(8, 3));
}

TEST_CASE("four-block closed forms") {
  BracketTable e7 = closed_form_Ib(decomposition_for("E7", DType::Ib));
  CHECK(e7.get(0, 3, 3) == Rat(5, 9));
  CHECK(e7.get(4, 3, 3) == Rat(70, 9));
  CHECK(2 * e7.get(0, 4, 4) + 2 * e7.get(1, 4, 4) + e7.get(3, 4, 3) == Rat(14));

  BracketTable e8 = closed_form_Ib(decomposition_for("E8", DType::Ib));
  CHECK(e8.get(0, 4, 4) == Rat(7, 15));

  BracketTable f4 = closed_form_Ib(decomposition_for("F4", DType::Ib));
  CHECK(f4.get(1, 4, 4) == Rat(14, 3));

  // h1 = 0 variant: the ideal sits in the h2 slot, [1;*] rows vanish.
  BracketTable g2 = closed_form_Ia(decomposition_for("G2", DType::Ia));
  CHECK(g2.get(1, 1, 1) == Rat(0));
  CHECK(g2.get(2, 2, 2) == Rat(1, 2));
  CHECK(g2.get(2, 3, 3) + g2.get(2, 2, 2) == Rat(3));
}

TEST_CASE("identities hold for every decomposition up to rank 12") {
  auto run = [](const Decomposition& d) {
    IdentityReport rep = verify_identities(closed_form_table(d));
    INFO(d.kind.name(), " node ", d.i0 + 1);
    CHECK(rep.row_sums_ok);
    CHECK(rep.m2_block_identity_ok);
    CHECK(rep.kahler_einstein_ok);
  };
  for (auto g : {"E6", "E7", "E8", "F4", "G2"})
    for (const auto& d : find_nodes_with_q2(enumerate_positive_roots(LieKind::parse(g)))) run(d);
  for (int n = 2; n <= 12; ++n)
    for (const auto& d :
         find_nodes_with_q2(enumerate_positive_roots(LieKind::make(Family::B, n))))
      run(d);
  for (int n = 3; n <= 12; ++n)
    for (const auto& d :
         find_nodes_with_q2(enumerate_positive_roots(LieKind::make(Family::C, n))))
      run(d);
  for (int n = 4; n <= 12; ++n)
    for (const auto& d :
         find_nodes_with_q2(enumerate_positive_roots(LieKind::make(Family::D, n))))
      run(d);
}

TEST_CASE("internal sums match the Killing ratios of the ideals") {
  // [1;11] = d1 / lambda(h1) and [2;22] = d2 / lambda(h2): an independent
  // route to the closed forms, via root sums only.
  auto check_node = [](const RootSystem& rs, const Decomposition& d) {
    BracketTable t = closed_form_table(d);
    INFO(d.kind.name(), " node ", d.i0 + 1);
    if (d.d1 > 0 && !d.h1_nodes.empty()) {
      CHECK(t.get(1, 1, 1) == Rat(d.d1) / killing_ratio(rs, d.h1_nodes));
    }
    if (d.d2 > 0 && !d.h2_nodes.empty() && d.pi0_components.size() <= 2) {
      CHECK(t.get(2, 2, 2) == Rat(d.d2) / killing_ratio(rs, d.h2_nodes));
    }
  };
  for (auto g : {"E6", "E7", "E8", "F4", "G2"}) {
    RootSystem rs = enumerate_positive_roots(LieKind::parse(g));
    for (const auto& d : find_nodes_with_q2(rs)) check_node(rs, d);
  }
  for (int n : {4, 5, 7, 9}) {
    RootSystem rs = enumerate_positive_roots(LieKind::make(Family::B, n));
    for (const auto& d : find_nodes_with_q2(rs)) check_node(rs, d);
  }
  for (int n : {3, 6}) {
    RootSystem rs = enumerate_positive_roots(LieKind::make(Family::C, n));
    for (const auto& d : find_nodes_with_q2(rs)) check_node(rs, d);
  }
}

TEST_CASE("invalid block data is refused") {
  Decomposition bad = decomposition_for("E6", DType::IIb);
  bad.d1 = 100;  // makes the h2 coupling negative
  bad.d2 = 1;
  bad.d3 = 2;
  bad.d4 = 50;
  CHECK_THROWS_AS(closed_form_IIb(bad), NegativeEntry);
}
