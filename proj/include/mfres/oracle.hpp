#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfres/betti.hpp"
#include "mfres/resolution.hpp"

namespace mfres {

struct OracleResult {
  BettiTable table;
  int degree_cap = 0;
  bool complete = false;  // every nonzero beta_ij is guaranteed to have j <= degree_cap
  std::string warning;
};

// Taylor-style cap: largest twist plus the sum of relation degrees above their twists
// (the sum of generator degrees for S/I).
int default_degree_cap(const ModulePresentation& m);

// beta_ij = dim_k H_i(K(x_1..x_n) (x) M)_j for j <= cap, by ranks of Koszul differentials.
// Monomial presentations are split by multidegree; others use graded pieces of M computed from a
// Groebner basis of the relations.
OracleResult koszul_betti_oracle(const ModulePresentation& m, std::optional<int> degree_cap = std::nullopt,
                                 const Budget& budget = unlimited_budget());

// The graded (not multigraded) route, usable on any presentation; exposed for cross-checks.
OracleResult koszul_betti_oracle_graded(const ModulePresentation& m, int degree_cap,
                                        const Budget& budget = unlimited_budget());

// dim_k M_d for d = 0..max_degree, counted as standard monomials of the lead-term module.
std::vector<long> hilbert_function(const ModulePresentation& m, int max_degree);

// sum_i (-1)^i sum_j beta_ij * dim S_{d-j} for d = 0..max_degree.
std::vector<long> hilbert_from_betti(const BettiTable& b, int num_vars, int max_degree);

}  // namespace mfres
