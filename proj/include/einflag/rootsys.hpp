#pragma once

// Positive-root enumeration and extended-Dynkin-diagram combinatorics for the
// simple types B, C, D, E6, E7, E8, F4, G2 (Bourbaki node numbering; node
// indices are 0-based in code, 1-based in output).
//
// Cartan convention: cartan[i][j] = <alpha_j, alpha_i^vee>
//                                 = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
// eps[i] is (alpha_i, alpha_i)/2 on an integer scale per family, so that
// (alpha_i, alpha_j) = cartan[i][j] * eps[i] is an exact symmetric pairing.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "einflag/rational.hpp"

namespace einflag {

enum class Family { B, C, D, E6, E7, E8, F4, G2 };

std::string family_name(Family f);

struct LieKind {
  Family family;
  int rank;

  // Throws std::invalid_argument outside B(>=2), C(>=3), D(>=4) or when an
  // exceptional rank does not match.
  static LieKind make(Family f, int rank);
  // "B5", "E8", "G2", ...
  static LieKind parse(const std::string& name);

  long dim() const;  // dim of the compact group
  int num_positive_roots() const { return static_cast<int>((dim() - rank) / 2); }
  std::string name() const;
  bool operator==(const LieKind& o) const = default;
};

struct Root {
  std::vector<int> coeffs;  // m_j in the simple-root basis, all >= 0

  int height() const;
  bool operator==(const Root& o) const = default;
  auto operator<=>(const Root& o) const = default;
};

struct RootSystem {
  LieKind kind;
  std::vector<std::vector<int>> cartan;
  std::vector<long> eps;  // relative squared lengths /2, integer scale
  std::vector<Root> positive_roots;  // lexicographic on coeffs
  Root highest_root;
  std::vector<bool> extended_adjacency;  // node i adjacent to -highest_root

  int rank() const { return kind.rank; }
  bool contains(const std::vector<int>& coeffs) const { return root_set.count(coeffs) > 0; }
  // (alpha_i, alpha_j) on the integer scale.
  long simple_inner(int i, int j) const { return cartan[i][j] * eps[i]; }
  // Exact pairing of two coefficient vectors.
  long inner(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> neighbors(int i) const;  // diagram adjacency

  std::set<std::vector<int>> root_set;
};

RootSystem enumerate_positive_roots(LieKind kind);

inline int coefficient_at(const Root& r, int i0) { return r.coeffs.at(i0); }

// Simple-root indices i with (alpha_i, highest_root) != 0.
std::vector<int> extended_neighbors(const RootSystem& rs);

}  // namespace einflag
