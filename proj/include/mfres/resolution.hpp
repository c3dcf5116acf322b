#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mfres/betti.hpp"
#include "mfres/budget.hpp"
#include "mfres/groebner.hpp"

namespace mfres {

// coker(relations : sum S(-deg r) -> F_0).
struct ModulePresentation {
  ModulePtr free;
  std::vector<Vector> relations;
  // Filled when the module was built as a direct sum of cyclic modules S/I_k (all twists 0).
  std::vector<Ideal> summands;

  const RingPtr& ring() const { return free->ring(); }
  bool is_cyclic() const { return summands.size() == 1; }
  bool is_direct_sum_of_cyclics() const { return !summands.empty(); }
  // Every relation is a single term c*m*e_k.
  bool is_monomial() const;
};

ModulePresentation cyclic_module(const Ideal& ideal);
ModulePresentation direct_sum(std::span<const Ideal> ideals);
ModulePresentation make_presentation(ModulePtr free, std::vector<Vector> relations);

// Sparse matrix column: (row index, entry), rows ascending, entries nonzero.
using Column = std::vector<std::pair<int, Polynomial>>;

struct ResolutionStep {
  std::vector<int> row_degrees;  // twists of F_{i-1}
  std::vector<int> col_degrees;  // twists of F_i
  std::vector<Column> columns;

  Polynomial entry(int row, int col, const RingPtr& ring) const;
};

// Complex  0 <- F_0 <- F_1 <- ... <- F_len  of graded free modules.
struct GradedResolution {
  RingPtr ring;
  std::vector<std::vector<int>> free_degrees;  // free_degrees[i] = twists of F_i
  std::vector<ResolutionStep> steps;           // steps[i-1] = differential F_i -> F_{i-1}
  bool minimal = false;

  int length() const { return static_cast<int>(free_degrees.size()) - 1; }
  int rank(int i) const {
    return i < 0 || i > length() ? 0 : static_cast<int>(free_degrees[static_cast<std::size_t>(i)].size());
  }
  const ResolutionStep& differential(int i) const { return steps.at(static_cast<std::size_t>(i - 1)); }
  bool is_zero_module() const { return rank(0) == 0; }
};

// Iterated Schreyer syzygies starting from a Groebner basis of the relations. Generally not minimal.
GradedResolution schreyer_resolution(const ModulePresentation& m, const Budget& budget = unlimited_budget());

// Cancels every unit entry (Gaussian elimination on the complex); the result is minimal.
GradedResolution minimalize(const GradedResolution& r, const Budget& budget = unlimited_budget());

GradedResolution resolve_minimal(const ModulePresentation& m, const Budget& budget = unlimited_budget());

// Minimal resolution without a Schreyer frame: minimal generators of each syzygy module are picked
// before the next syzygies are computed (by elimination). Smaller complexes, one more Buchberger
// run per step. Falls back to resolve_minimal when F_0 is not minimal for the presentation.
GradedResolution resolve_minimal_per_step(const ModulePresentation& m, const Budget& budget = unlimited_budget());

enum class ResolveStrategy { FullTower, PerStep };

GradedResolution resolve_minimal(const ModulePresentation& m, ResolveStrategy strategy,
                                 const Budget& budget = unlimited_budget());

// Throws std::invalid_argument for a resolution containing a nonzero constant entry.
BettiTable betti(const GradedResolution& r);

// Minimal Betti numbers read off any (possibly non-minimal) free resolution through the ranks of
// the scalar parts of its differentials: beta_ij = f_ij - rank(d_i)_j - rank(d_{i+1})_j.
BettiTable betti_from_frame(const GradedResolution& r);

// d_i o d_{i+1} == 0 for every i.
bool composes_to_zero(const GradedResolution& r);
// No entry is a nonzero constant.
bool has_no_unit_entries(const GradedResolution& r);
// Entry (r, c) of step i is zero or homogeneous of degree col_degrees[c] - row_degrees[r].
bool entries_homogeneous(const GradedResolution& r);

// Lemma-style shift inequalities on  0 -> Syz^1(M) -> F_0 -> M -> 0.
struct SesReport {
  std::vector<int> shifts_syzygy;  // T_i(Syz^1 M), computed from an independent presentation
  std::vector<int> shifts_free;    // T_i(F_0)
  std::vector<int> shifts_module;  // T_i(M)
  std::vector<std::string> failures;
  bool holds() const { return failures.empty(); }
};

SesReport ses_shift_check(const ModulePresentation& m, const Budget& budget = unlimited_budget());

// Generators of the syzygy module of `gens` (vectors of one free module), computed by
// elimination in F_0 + F_1 under a position-over-term order. Independent of syzygy_basis.
ModulePresentation syzygy_presentation_by_elimination(std::span<const Vector> gens, const Budget& budget = unlimited_budget());

}  // namespace mfres
