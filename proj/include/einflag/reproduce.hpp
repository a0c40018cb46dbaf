#pragma once

// Regenerates every published numeric artifact for these spaces and checks it
// against the independently computed value: dimension tables, eliminant
// coefficients, branch equations, sign evaluations, and solution tuples.
// Shared by the `reproduce` CLI command and the acceptance suite.

#include <string>
#include <vector>

#include "einflag/solver.hpp"

namespace einflag {

struct CheckResult {
  std::string id;        // stable machine-readable identifier
  std::string ref;       // what reference quantity is being reproduced
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string note;      // e.g. documented errata in the reference values
};

struct ReproduceOptions {
  int table_rank_max = 12;   // classical-family rank range for table checks
  int sign_rank_max = 30;    // rank range for the sign evaluations
  bool include_sweep = false;  // the (slow) full existence sweep
  int sweep_rank_max = 30;
};

// Reference eliminants, from their published coefficient expressions.
RationalPoly published_poly_B(int n);   // painted node 3
RationalPoly published_poly_C(int n);   // painted node 2
RationalPoly published_poly_D(int n);   // painted node 3
RationalPoly published_poly_E6();
RationalPoly published_poly_E7();
// Value of the published factorization of f(1) for the B family.
Rat published_f1_factored_B(int n);

std::vector<CheckResult> check_dimension_tables(int rank_max);
std::vector<CheckResult> check_exceptional_polynomials();
std::vector<CheckResult> check_classical_polynomials();
std::vector<CheckResult> check_sign_analysis(int rank_max);
std::vector<CheckResult> check_solution_tuples_IIb();
std::vector<CheckResult> check_type_Ib();
std::vector<CheckResult> check_nr_branch_identity(int rank_max);
std::vector<CheckResult> check_type_a_conclusions(int rank_max);
std::vector<CheckResult> check_existence_sweep(int rank_max);

std::vector<CheckResult> run_reproduction(const ReproduceOptions& opts = {});

// Decomposition for a classical family member at painted node p (1-based), or
// an exceptional group at its unique node of the given type.
Decomposition decomposition_for(Family fam, int n, int p);
Decomposition decomposition_for(const std::string& group, DType t);

}  // namespace einflag
