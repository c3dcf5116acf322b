#include "mfres/bounds.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace mfres {

int weight_norm(const WeightVector& a) {
  int w = 0;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i] < 0) throw std::invalid_argument("weight vector with a negative entry");
    w += a.entries[i] * static_cast<int>(i + 2);
  }
  return w;
}

std::vector<WeightVector> enumerate_weights(int c, int cap) {
  if (c < 1) throw std::invalid_argument("enumerate_weights: c must be positive");
  std::vector<WeightVector> out;
  if (cap < 0) return out;
  std::vector<int> a(static_cast<std::size_t>(c), 0);
  std::function<void(int, int)> fill = [&](int pos, int left) {
    if (pos == c) {
      out.push_back({a});
      return;
    }
    const int w = pos + 2;
    for (int v = 0; v * w <= left; ++v) {
      a[static_cast<std::size_t>(pos)] = v;
      fill(pos + 1, left - v * w);
    }
    a[static_cast<std::size_t>(pos)] = 0;
  };
  fill(0, cap);
  return out;
}

std::string to_string(BoundMode mode) {
  switch (mode) {
    case BoundMode::Asserted: return "asserted";
    case BoundMode::Probe: return "probe";
    case BoundMode::Skipped: return "skipped";
  }
  return "?";
}

JHypotheses j_hypotheses(const Ideal& j, const ModulePresentation& m, const BettiTable& betti_j, const Budget& budget) {
  JHypotheses h;
  const int n = m.ring()->num_vars();
  h.contained_in_ann = ann_contains(j, m, budget);
  h.codim = codim_ideal(j, budget);
  h.pd = betti_j.empty() ? -1 : betti_j.max_index();
  h.depth = n - h.pd;
  return h;
}

WeightedMax weighted_max(const ShiftProfile& pm, const ShiftProfile& pj, int c, int extra) {
  const int p = pm.pd;
  if (c < 1 || p < c) throw std::invalid_argument("weighted_max: need 1 <= c <= pd(M)");
  if (pj.pd < c) throw std::invalid_argument("weighted_max: pd(S/J) below c");
  WeightedMax best;
  for (int i = 0; i <= p - c; ++i)
    for (const auto& a : enumerate_weights(c, p - c - i + extra)) {
      int v = pm.T(i);
      for (int j = 1; j <= c; ++j) v += a.entries[static_cast<std::size_t>(j - 1)] * pj.T(j);
      if (v > best.value) best = {v, i, a};
    }
  return best;
}

namespace {

BoundReport skipped(std::string name, std::vector<std::string> reasons) {
  BoundReport r;
  r.name = std::move(name);
  r.mode = BoundMode::Skipped;
  r.reasons = std::move(reasons);
  return r;
}

std::vector<std::string> regthm_unmet(const ShiftProfile& pj, const JHypotheses& h) {
  std::vector<std::string> why;
  if (!h.contained_in_ann) why.push_back("J is not contained in Ann(M)");
  if (!h.cm()) why.push_back("S/J is not Cohen-Macaulay");
  if (h.codim < 1) why.push_back("codim J is 0");
  if (h.cm() && h.codim >= 1 && pj.T(1) < 2) why.push_back("J is generated by linear forms");
  return why;
}

BoundReport regthm_like(const char* name, bool top_shift, const ShiftProfile& pm, const ShiftProfile& pj,
                        const JHypotheses& h) {
  auto why = regthm_unmet(pj, h);
  if (!why.empty()) return skipped(name, std::move(why));
  const int c = h.codim;
  const int p = pm.pd;
  if (p < c) throw std::logic_error(std::string(name) + ": pd(M) < codim(J) although J is in Ann(M)");
  WeightedMax w = weighted_max(pm, pj, c);
  BoundReport r;
  r.name = name;
  r.mode = BoundMode::Asserted;
  r.hypotheses_met = true;
  r.lhs = top_shift ? pm.T(p) : pm.reg;
  r.rhs = w.value + pj.T(c) - (top_shift ? 0 : p);
  r.witness_i = w.i;
  r.witness_a = w.a;
  return r;
}

}  // namespace

BoundReport bound_regthm(const ShiftProfile& pm, const ShiftProfile& pj, const JHypotheses& h) {
  return regthm_like("regthm", false, pm, pj, h);
}

BoundReport bound_main(const ShiftProfile& pm, const ShiftProfile& pj, const JHypotheses& h) {
  return regthm_like("main", true, pm, pj, h);
}

BoundReport bound_cor24(const ShiftProfile& pm, const InvariantReport& im, const ShiftProfile& pj, const JHypotheses& h) {
  std::vector<std::string> why;
  if (!im.is_cm) why.push_back("M is not Cohen-Macaulay");
  if (!h.contained_in_ann) why.push_back("J is not contained in Ann(M)");
  if (!h.cm()) why.push_back("S/J is not Cohen-Macaulay");
  if (h.codim != im.codim) why.push_back("codim J differs from codim M");
  if (!why.empty()) return skipped("cor24", std::move(why));
  BoundReport r;
  r.name = "cor24";
  r.mode = BoundMode::Asserted;
  r.hypotheses_met = true;
  r.lhs = pm.reg;
  r.rhs = pm.T(0) + pj.T(h.codim) - h.codim;
  return r;
}

BoundReport bound_common_degree(const ShiftProfile& pi, int c, int d, bool found) {
  if (!found) return skipped("common_degree", {"no regular sequence of degree " + std::to_string(d) + " found"});
  if (d < 1) throw std::invalid_argument("common_degree: d must be positive");
  const int p = pi.pd;
  if (p < c) throw std::invalid_argument("common_degree: pd below codim");
  BoundReport r;
  r.name = "common_degree";
  r.mode = BoundMode::Asserted;
  r.hypotheses_met = true;
  r.q = d;
  r.lhs = pi.reg;
  int best = kNegInf;
  for (int i = 0; i <= p - c; ++i) {
    int v = pi.T(i) + (p - i) * d;
    if (v > best) {
      best = v;
      r.witness_i = i;
    }
  }
  r.rhs = best - p;
  return r;
}

BoundReport bound_maincor(const ShiftProfile& pi, int c, bool cyclic) {
  if (!cyclic) return skipped("maincor", {"M is not cyclic"});
  BoundReport r;
  r.name = "maincor";
  r.mode = BoundMode::Asserted;
  r.hypotheses_met = true;
  r.lhs = pi.reg;
  const int p = pi.pd;
  if (p == 0) {
    r.rhs = pi.T(0);
    r.witness_i = 0;
    r.reasons.push_back("free module");
    return r;
  }
  if (p < c) throw std::invalid_argument("maincor: pd below codim");
  const int d = pi.T(1);
  int best = kNegInf;
  for (int i = 0; i <= p - c; ++i) {
    int v = pi.T(i) + (p - i) * d;
    if (v > best) {
      best = v;
      r.witness_i = i;
    }
  }
  r.rhs = best - p;
  return r;
}

BoundReport check_codim1(const ShiftProfile& pm, std::optional<int> d) {
  if (!d) return skipped("codim1", {"no form of known degree in Ann(M)"});
  if (pm.pd < 1) return skipped("codim1", {"pd(M) is 0"});
  BoundReport r;
  r.name = "codim1";
  r.mode = BoundMode::Asserted;
  r.hypotheses_met = true;
  r.q = *d;
  r.lhs = pm.T(pm.pd);
  r.rhs = pm.T(pm.pd - 1) + *d;
  return r;
}

BoundReport check_ehu_thm1(const ShiftProfile& pi, int dim_minus_depth, bool cyclic) {
  if (!cyclic) return skipped("ehu1", {"M is not cyclic"});
  BoundReport r;
  r.name = "ehu1";
  r.hypotheses_met = dim_minus_depth <= 1;
  r.mode = r.hypotheses_met ? BoundMode::Asserted : BoundMode::Probe;
  if (!r.hypotheses_met) r.reasons.push_back("dim - depth = " + std::to_string(dim_minus_depth) + " > 1: convexity probe");
  const int p = pi.pd;
  r.lhs = pi.T(p);
  r.rhs = std::numeric_limits<int>::max();
  for (int i = 0; i <= p; ++i) {
    int v = pi.T(i) + pi.T(p - i);
    if (v < r.rhs) {
      r.rhs = v;
      r.witness_i = i;
    }
  }
  return r;
}

BoundReport check_ehu_thm2(const ShiftProfile& pm, const ShiftProfile& pj, int q, const InvariantReport& im,
                           const JHypotheses& h) {
  std::vector<std::string> why;
  if (!h.contained_in_ann) why.push_back("J is not contained in Ann(M)");
  if (h.depth < im.depth) why.push_back("depth(S/J) < depth(M)");
  if (q < 0 || q > h.codim) why.push_back("q outside 0..codim(J)");
  if (!why.empty()) {
    auto r = skipped("ehu2", std::move(why));
    r.q = q;
    return r;
  }
  const int p = pm.pd;
  if (p - q < 0 || q > pj.pd) throw std::logic_error("ehu2: q exceeds pd although J is in Ann(M)");
  BoundReport r;
  r.q = q;
  r.lhs = pm.T(p);
  r.rhs = pm.T(p - q) + pj.T(q);
  if (im.dim - im.depth <= 1) {
    r.name = "ehu2";
    r.mode = BoundMode::Asserted;
    r.hypotheses_met = true;
  } else {
    r.name = "conj";
    r.mode = BoundMode::Probe;
    r.reasons.push_back("dim - depth = " + std::to_string(im.dim - im.depth) + " > 1: conjecture probe");
  }
  return r;
}

BoundReport check_prop22(const ShiftProfile& pm, int codim) {
  BoundReport r;
  r.name = "prop22";
  r.mode = BoundMode::Asserted;
  r.hypotheses_met = true;
  const int top = std::min(codim, pm.pd);
  if (top <= 0) {
    r.reasons.push_back("codim 0: nothing to check");
    return r;
  }
  // T_i + 1 <= T_{i+1}; keep the i with least slack
  int best_slack = std::numeric_limits<int>::max();
  for (int i = 0; i < top; ++i) {
    int lhs = pm.T(i) + 1, rhs = pm.T(i + 1);
    if (rhs - lhs < best_slack) {
      best_slack = rhs - lhs;
      r.lhs = lhs;
      r.rhs = rhs;
      r.witness_i = i;
    }
  }
  if (codim > pm.pd) {
    r.reasons.push_back("codim exceeds pd");
    r.lhs = 1;
    r.rhs = 0;
  }
  return r;
}

BoundReport check_lemma21(const SesReport& ses) {
  BoundReport r;
  r.name = "lemma21";
  r.mode = BoundMode::Asserted;
  r.hypotheses_met = true;
  r.lhs = static_cast<int>(ses.failures.size());
  r.rhs = 0;
  r.reasons = ses.failures;
  return r;
}

}  // namespace mfres
