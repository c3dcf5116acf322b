#include "mfres/harness.hpp"

#include <algorithm>
#include <map>

#include "mfres/errors.hpp"
#include "mfres/random.hpp"

namespace mfres {

namespace {

struct JData {
  Ideal ideal;
  std::string source;
  BettiTable betti;
  ShiftProfile profile;
  JHypotheses hyp;
};

BoundReport asserted_count(std::string name, std::vector<std::string> failures) {
  BoundReport r;
  r.name = std::move(name);
  r.mode = BoundMode::Asserted;
  r.hypotheses_met = true;
  r.lhs = static_cast<int>(failures.size());
  r.rhs = 0;
  r.reasons = std::move(failures);
  return r;
}

BoundReport no_j(const std::string& name, const std::string& why) {
  BoundReport r;
  r.name = name;
  r.mode = BoundMode::Skipped;
  r.reasons.push_back(why);
  return r;
}

std::vector<std::string> structure_failures(const ModulePresentation& m, const GradedResolution& frame,
                                            const GradedResolution& res, const BettiTable& b, const ShiftProfile& pm,
                                            const InvariantReport& inv) {
  const int n = m.ring()->num_vars();
  std::vector<std::string> bad;
  if (!composes_to_zero(res)) bad.push_back("consecutive differentials do not compose to zero");
  if (!has_no_unit_entries(res)) bad.push_back("unit entry left after minimalization");
  if (!entries_homogeneous(res)) bad.push_back("inhomogeneous matrix entry");
  if (pm.pd > n) bad.push_back("pd exceeds the number of variables");
  if (inv.depth + inv.pd != n) bad.push_back("depth + pd != n");
  if (pm.pd < inv.codim) bad.push_back("pd below codim");
  if (betti_from_frame(frame) != b) bad.push_back("Betti numbers from the Schreyer frame disagree");
  int top = kNegInf;
  for (int t : pm.max_shifts) top = std::max(top, t);
  const int hdeg = std::min(default_degree_cap(m), top + n);
  if (hilbert_function(m, hdeg) != hilbert_from_betti(b, n, hdeg)) bad.push_back("Hilbert function mismatch");
  return bad;
}

std::vector<std::string> oracle_failures(const ModulePresentation& m, const BettiTable& b, std::optional<int> cap,
                                         const Budget& budget) {
  OracleResult o = koszul_betti_oracle(m, cap, budget);
  std::vector<std::string> bad;
  auto within = [&](int j) { return o.complete || j <= o.degree_cap; };
  for (const auto& [key, v] : b.entries())
    if (within(key.second) && o.table.at(key.first, key.second) != v)
      bad.push_back("beta_" + std::to_string(key.first) + "," + std::to_string(key.second) + " differs from the oracle");
  for (const auto& [key, v] : o.table.entries())
    if (b.at(key.first, key.second) == 0)
      bad.push_back("oracle reports beta_" + std::to_string(key.first) + "," + std::to_string(key.second) + " = " +
                    std::to_string(v));
  return bad;
}

std::optional<JData> choose_j(const JobSpec& job, const ModulePresentation& m, const RunOptions& opts,
                              const ShiftProfile& pm, const InvariantReport& inv, const BettiTable& bm,
                              const Budget& budget, std::string& why) {
  JData j{Ideal{m.ring(), {}}, "", {}, {}, {}};
  if (job.ann) {
    j.ideal = *job.ann;
    j.source = "ann";
  } else if (m.is_cyclic()) {
    const Ideal& I = m.summands.front();
    if (opts.j.kind == JStrategy::Self) {
      j.ideal = I;
      j.source = "self";
      j.betti = bm;
    } else {
      const int d = opts.j.kind == JStrategy::CiDegree ? opts.j.degree : pm.T(1);
      if (pm.pd < 1 || d < 1) {
        why = "no regular sequence in the zero ideal";
        return std::nullopt;
      }
      auto seq = find_regular_sequence(I, d, inv.codim, job.seed, 64, budget);
      if (!seq) {
        why = "no regular sequence of degree " + std::to_string(d) + " found";
        return std::nullopt;
      }
      j.ideal = Ideal{m.ring(), *seq};
      j.source = "ci:" + std::to_string(d);
    }
  } else {
    why = "no J for a non-cyclic module without ann:";
    return std::nullopt;
  }
  if (j.source != "self")
    j.betti = betti(resolve_minimal(cyclic_module(j.ideal.with_order(MonomialOrder::DegRevLex)), budget));
  if (j.betti.empty()) {
    why = "J is the unit ideal";
    return std::nullopt;
  }
  j.profile = shifts(j.betti);
  j.hyp = j_hypotheses(j.ideal, m, j.betti, budget);
  return j;
}

// Degree of a form known to annihilate M.
std::optional<int> annihilator_degree(const ModulePresentation& m, const ShiftProfile& pm,
                                      const std::optional<JData>& j) {
  if (m.is_cyclic()) return pm.pd >= 1 ? std::optional<int>(pm.t(1)) : std::nullopt;
  if (j && j->hyp.contained_in_ann && j->ideal.min_degree() >= 0) return j->ideal.min_degree();
  if (m.is_direct_sum_of_cyclics()) {
    // product of one generator from each summand
    int d = 0;
    for (const auto& s : m.summands) {
      if (s.min_degree() < 0) return std::nullopt;
      d += s.min_degree();
    }
    return d;
  }
  return std::nullopt;
}

}  // namespace

InstanceReport run_instance(const JobSpec& job, const RunOptions& opts, int index) {
  InstanceReport rep;
  rep.index = index;
  rep.seed = job.seed;
  rep.input = format_input(job);
  const Budget budget = opts.timeout > 0 ? Budget::with_timeout(opts.timeout) : Budget{};
  auto wants = [&](const char* tag) { return opts.checks.count(tag) > 0; };
  try {
    const ModulePresentation m = job.presentation();
    const int n = m.ring()->num_vars();
    const bool per_step = opts.strategy == ResolveStrategy::PerStep;
    GradedResolution frame = per_step ? resolve_minimal_per_step(m, budget) : schreyer_resolution(m, budget);
    GradedResolution res = per_step ? frame : minimalize(frame, budget);
    rep.betti = betti(res);
    if (rep.betti.empty()) {
      rep.message = "zero module";
      return rep;
    }
    const ShiftProfile pm = shifts(rep.betti);
    rep.profile = pm;
    const InvariantReport inv = compute_invariants(m, rep.betti, budget);
    rep.invariants = inv;

    std::vector<BoundReport> out;
    out.push_back(asserted_count("structure", structure_failures(m, frame, res, rep.betti, pm, inv)));
    if (opts.oracle) out.push_back(asserted_count("oracle", oracle_failures(m, rep.betti, job.degree_cap, budget)));
    if (wants("prop22")) out.push_back(check_prop22(pm, inv.codim));
    if (wants("lemma21")) out.push_back(check_lemma21(ses_shift_check(m, budget)));

    std::string why_no_j;
    std::optional<JData> j = choose_j(job, m, opts, pm, inv, rep.betti, budget, why_no_j);
    if (j) {
      rep.j_source = j->source;
      rep.j_ideal = j->ideal.to_string();
      if (j->source.rfind("ci:", 0) == 0) {
        JobSpec with_ann = job;
        with_ann.ann = j->ideal;
        rep.input = format_input(with_ann);
      }
    } else {
      rep.j_source = "none";
    }

    const bool cyclic = m.is_cyclic();
    if (wants("codim1")) out.push_back(check_codim1(pm, annihilator_degree(m, pm, j)));
    if (wants("maincor")) out.push_back(bound_maincor(pm, inv.codim, cyclic));
    if (wants("common_degree")) {
      if (!cyclic) {
        out.push_back(no_j("common_degree", "M is not cyclic"));
      } else if (pm.pd < 1) {
        out.push_back(no_j("common_degree", "free module"));
      } else {
        const int d = opts.j.kind == JStrategy::CiDegree ? opts.j.degree : pm.T(1);
        bool found = find_regular_sequence(m.summands.front(), d, inv.codim, job.seed, 64, budget).has_value();
        out.push_back(bound_common_degree(pm, inv.codim, d, found));
      }
    }
    if (wants("ehu1")) out.push_back(check_ehu_thm1(pm, inv.dim - inv.depth, cyclic));
    if (j) {
      if (wants("regthm")) out.push_back(bound_regthm(pm, j->profile, j->hyp));
      if (wants("main")) out.push_back(bound_main(pm, j->profile, j->hyp));
      if (wants("cor24")) out.push_back(bound_cor24(pm, inv, j->profile, j->hyp));
      if (wants("ehu2") || wants("conj")) {
        const int qmax = j->hyp.contained_in_ann ? std::min(j->hyp.codim, n) : 0;
        for (int q = 0; q <= qmax; ++q) {
          BoundReport r = check_ehu_thm2(pm, j->profile, q, inv, j->hyp);
          if (wants(r.name.c_str())) out.push_back(std::move(r));
        }
      }
    } else {
      for (const char* tag : {"regthm", "main", "cor24", "ehu2"})
        if (wants(tag)) out.push_back(no_j(tag, why_no_j));
    }
    rep.bounds = std::move(out);

    // candidates are re-run at other characteristics before being surfaced
    rep.rechecks.assign(rep.bounds.size(), {});
    std::set<std::string> names;
    for (const auto& b : rep.bounds)
      if (b.is_candidate()) names.insert(b.name);
    if (!names.empty()) {
      for (std::uint32_t q : opts.recheck_chars) {
        if (q == m.ring()->characteristic()) continue;
        RunOptions o2 = opts;
        o2.recheck_chars.clear();
        o2.oracle = false;
        o2.checks = names;
        InstanceReport again;
        try {
          again = run_instance(parse_input(rep.input, q), o2, index);
        } catch (const std::exception& e) {
          again.status = "error";
          again.message = e.what();
        }
        for (std::size_t k = 0; k < rep.bounds.size(); ++k) {
          const auto& b = rep.bounds[k];
          if (!b.is_candidate()) continue;
          Recheck rc;
          rc.characteristic = q;
          rc.status = again.status;
          for (const auto& b2 : again.bounds)
            if (b2.name == b.name && b2.q == b.q && b2.mode != BoundMode::Skipped) {
              rc.lhs = b2.lhs;
              rc.rhs = b2.rhs;
              rc.violated = b2.violated();
            }
          rep.rechecks[k].push_back(rc);
        }
      }
    }
  } catch (const BudgetExceeded& e) {
    rep.status = "skipped";
    rep.message = e.what();
    rep.bounds.clear();
    rep.rechecks.clear();
  } catch (const std::exception& e) {
    rep.status = "error";
    rep.message = e.what();
    rep.bounds.clear();
    rep.rechecks.clear();
  }
  return rep;
}

Summary summarize(const std::vector<InstanceReport>& instances) {
  Summary s;
  for (const auto& inst : instances) {
    ++s.attempted;
    if (inst.status == "ok") ++s.ok;
    else if (inst.status == "skipped") ++s.skipped;
    else ++s.errors;
    for (const auto& b : inst.bounds) {
      switch (b.mode) {
        case BoundMode::Asserted: (b.violated() ? s.asserted_fail : s.asserted_pass)++; break;
        case BoundMode::Skipped: ++s.hypothesis_skipped; break;
        case BoundMode::Probe:
          ++s.probes;
          if (b.violated()) ++s.candidates;
          break;
      }
    }
  }
  return s;
}

RunReport run_jobs(const std::vector<JobSpec>& jobs, const RunOptions& opts) {
  RunReport r;
  if (!jobs.empty()) {
    r.characteristic = jobs.front().ring->characteristic();
    r.order = to_string(jobs.front().ring->spec().order);
  }
  r.instances.resize(jobs.size());
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    r.instances[static_cast<std::size_t>(i)] = run_instance(jobs[static_cast<std::size_t>(i)], opts, static_cast<int>(i));
  r.summary = summarize(r.instances);
  return r;
}

namespace {

JobSpec search_job(const SearchParams& p, int index) {
  JobSpec job;
  job.seed = derive_seed(p.seed, static_cast<std::uint64_t>(index));
  std::mt19937_64 g(job.seed);
  const int n = p.vars_min + static_cast<int>(bounded_draw(g, static_cast<std::uint64_t>(p.vars_max - p.vars_min + 1)));
  job.ring = make_ring(RingSpec{p.characteristic, default_var_names(n), p.order});
  if (p.family == SearchParams::Monomial) {
    const int gens = 1 + static_cast<int>(bounded_draw(g, static_cast<std::uint64_t>(p.gens)));
    job.summands.push_back(gen_monomial_ideal(job.ring, p.max_deg, gens, g()));
  } else {
    const int c = 1 + static_cast<int>(bounded_draw(g, static_cast<std::uint64_t>(std::min(p.gens, n))));
    std::vector<int> degrees;
    for (int k = 0; k < c; ++k) degrees.push_back(1 + static_cast<int>(bounded_draw(g, static_cast<std::uint64_t>(p.max_deg))));
    std::sort(degrees.begin(), degrees.end());
    job.summands.push_back(gen_generic_forms(job.ring, degrees, g()));
  }
  return job;
}

void validate(const SearchParams& p) {
  if (p.vars_min < 1 || p.vars_max < p.vars_min || p.vars_max > static_cast<int>(kMaxVars))
    throw std::invalid_argument("search: bad variable range");
  if (p.max_deg < 1 || p.gens < 1 || p.count < 0) throw std::invalid_argument("search: parameters must be positive");
}

}  // namespace

std::vector<JobSpec> make_search_jobs(const SearchParams& params) {
  validate(params);
  std::vector<JobSpec> jobs;
  for (int i = 0; i < params.count; ++i) jobs.push_back(search_job(params, i));
  return jobs;
}

RunReport run_search(const SearchParams& params, const RunOptions& opts) {
  validate(params);
  RunReport r;
  r.characteristic = params.characteristic;
  r.order = to_string(params.order);
  r.seed = params.seed;
  r.instances.resize(static_cast<std::size_t>(params.count));
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < params.count; ++i) {
    InstanceReport& slot = r.instances[static_cast<std::size_t>(i)];
    try {
      slot = run_instance(search_job(params, i), opts, i);
    } catch (const std::exception& e) {
      slot = InstanceReport{};
      slot.index = i;
      slot.seed = derive_seed(params.seed, static_cast<std::uint64_t>(i));
      slot.status = "error";
      slot.message = std::string("instance generation failed: ") + e.what();
    }
  }
  r.summary = summarize(r.instances);
  return r;
}

int exit_code(const RunReport& r) {
  if (r.summary.asserted_fail > 0) return 2;
  if (r.summary.errors > 0) return 1;
  if (r.summary.candidates > 0) return 3;
  return 0;
}

}  // namespace mfres
