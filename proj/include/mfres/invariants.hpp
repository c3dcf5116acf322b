#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mfres/betti.hpp"
#include "mfres/resolution.hpp"

namespace mfres {

struct InvariantReport {
  int dim = 0;
  int codim = 0;
  int depth = 0;
  int pd = 0;
  bool is_cm = false;
  bool zero_module = false;
  std::uint32_t char_used = 0;
};

// Krull dimension of S/I from the lead-term ideal; n for I = 0 and -1 for the unit ideal.
int dim_lead_term(const Ideal& ideal, const Budget& budget = unlimited_budget());
int codim_ideal(const Ideal& ideal, const Budget& budget = unlimited_budget());

// Maximal minors of the presentation matrix, or nullopt when the matrix is beyond the size cap.
std::optional<Ideal> fitting_ideal(const ModulePresentation& m, std::size_t max_minors = 500);

enum class CodimRoute { Cyclic, Minors, LeadTerms };

// n - dim Supp(M). The zero module gets the sentinel n + 1.
int codim_module(const ModulePresentation& m, const Budget& budget = unlimited_budget(),
                 CodimRoute* route = nullptr);
// Same quantity from the lead-term module only: Supp of M and of coker LT agree in dimension.
int codim_lead_terms(const ModulePresentation& m, const Budget& budget = unlimited_budget());
// min over the summands; only for direct sums of cyclic modules.
int codim_structural(const ModulePresentation& m, const Budget& budget = unlimited_budget());

bool is_zero_module(const ModulePresentation& m, const Budget& budget = unlimited_budget());

int depth_ab(const ShiftProfile& profile, int num_vars);

bool is_cohen_macaulay(const ModulePresentation& m, const Budget& budget = unlimited_budget());

// Every generator of J times every basis vector of F_0 lies in the relation module.
bool ann_contains(const Ideal& j, const ModulePresentation& m, const Budget& budget = unlimited_budget());

// q forms of degree d in I such that each prefix of length k has codimension k.
std::optional<std::vector<Polynomial>> find_regular_sequence(const Ideal& ideal, int degree, int length,
                                                             std::uint64_t seed = 0, int retries = 64,
                                                             const Budget& budget = unlimited_budget());

// Invariants of M given its (minimal) Betti table.
InvariantReport compute_invariants(const ModulePresentation& m, const BettiTable& b,
                                   const Budget& budget = unlimited_budget());

}  // namespace mfres
