#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfres/betti.hpp"
#include "mfres/invariants.hpp"
#include "mfres/resolution.hpp"

namespace mfres {

struct WeightVector {
  std::vector<int> entries;  // a_1..a_c
};

// sum_i a_i (i + 1), with a_1 carrying weight 2.
int weight_norm(const WeightVector& a);

// Every a in N^c with |a| <= cap, lexicographically ascending.
std::vector<WeightVector> enumerate_weights(int c, int cap);

enum class BoundMode { Asserted, Probe, Skipped };
std::string to_string(BoundMode mode);

struct BoundReport {
  std::string name;
  BoundMode mode = BoundMode::Skipped;
  bool hypotheses_met = false;
  std::vector<std::string> reasons;  // unmet hypotheses, or notes
  int lhs = 0;
  int rhs = 0;
  std::optional<int> witness_i;
  std::optional<WeightVector> witness_a;
  std::optional<int> q;  // per-q reports

  int slack() const { return rhs - lhs; }
  bool violated() const { return mode != BoundMode::Skipped && lhs > rhs; }
  bool is_violation() const { return mode == BoundMode::Asserted && lhs > rhs; }
  bool is_candidate() const { return mode == BoundMode::Probe && lhs > rhs; }
};

// What is known about J relative to M.
struct JHypotheses {
  bool contained_in_ann = false;
  int codim = 0;
  int pd = 0;
  int depth = 0;
  bool cm() const { return pd == codim; }
};
JHypotheses j_hypotheses(const Ideal& j, const ModulePresentation& m, const BettiTable& betti_j,
                         const Budget& budget = unlimited_budget());

struct WeightedMax {
  int value = kNegInf;
  int i = 0;
  WeightVector a;
};
// max over 0 <= i <= p - c and |a| <= p - c - i + extra of T_i(M) + sum_j a_j T_j(S/J).
// Ties keep the smallest i, then the lexicographically smallest a.
WeightedMax weighted_max(const ShiftProfile& pm, const ShiftProfile& pj, int c, int extra = 0);

BoundReport bound_regthm(const ShiftProfile& pm, const ShiftProfile& pj, const JHypotheses& h);
BoundReport bound_main(const ShiftProfile& pm, const ShiftProfile& pj, const JHypotheses& h);
// reg(M) <= T_0(M) + T_c(S/J) - c for CM M with a CM J of the same codimension in Ann(M).
BoundReport bound_cor24(const ShiftProfile& pm, const InvariantReport& im, const ShiftProfile& pj, const JHypotheses& h);
// found: a regular sequence of c forms of degree d exists in I.
BoundReport bound_common_degree(const ShiftProfile& pi, int c, int d, bool found);
BoundReport bound_maincor(const ShiftProfile& pi, int c, bool cyclic);
// d = degree of a form in Ann(M); nullopt when none is known.
BoundReport check_codim1(const ShiftProfile& pm, std::optional<int> d);
BoundReport check_ehu_thm1(const ShiftProfile& pi, int dim_minus_depth, bool cyclic);
BoundReport check_ehu_thm2(const ShiftProfile& pm, const ShiftProfile& pj, int q, const InvariantReport& im,
                           const JHypotheses& h);
// T_i(M) < T_{i+1}(M) for 0 <= i < codim(M); the worst i is reported.
BoundReport check_prop22(const ShiftProfile& pm, int codim);
BoundReport check_lemma21(const SesReport& ses);

}  // namespace mfres
