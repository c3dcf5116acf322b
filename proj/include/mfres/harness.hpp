#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mfres/bounds.hpp"
#include "mfres/invariants.hpp"
#include "mfres/oracle.hpp"
#include "mfres/resolution.hpp"

namespace mfres {

inline constexpr const char* kVersion = "0.1.0";

struct JobSpec {
  RingPtr ring;
  std::vector<Ideal> summands;  // one entry: cyclic S/I
  bool direct_sum = false;      // written with summand: blocks
  std::optional<Ideal> ann;
  std::uint64_t seed = 0;
  std::optional<int> degree_cap;

  ModulePresentation presentation() const;
};

// Line-oriented input:
//   ring p=<prime> vars=x,y,z order=degrevlex
//   ideal: <poly>; <poly>; ...
//   summand: <poly>; ...     (repeatable)
//   ann: <poly>; ...
// '#' starts a comment; a line that does not start with a keyword continues the previous block.
// char_override replaces p (coefficients are reduced again).
JobSpec parse_input(std::string_view text, std::optional<std::uint32_t> char_override = std::nullopt);
// Inverse of parse_input, used as recreation data in reports.
std::string format_input(const JobSpec& job);

std::vector<std::string> default_var_names(int n);

// Minimal monomial generating set from num_gens random monomials of degree 1..max_deg.
Ideal gen_monomial_ideal(const RingPtr& ring, int max_deg, int num_gens, std::uint64_t seed);
// Dense random forms of the given degrees, redrawn until they have codimension len(degrees).
// Throws std::runtime_error after `retries` failed draws.
Ideal gen_generic_forms(const RingPtr& ring, const std::vector<int>& degrees, std::uint64_t seed, int retries = 16);

// How J is chosen for cyclic inputs without an ann: block.
struct JStrategy {
  enum Kind { Self, CiDegree, CiAuto } kind = Self;
  int degree = 0;
};
JStrategy parse_j_strategy(const std::string& text);
std::string to_string(const JStrategy& s);

// Check tags: codim1 regthm main maincor common_degree cor24 ehu1 ehu2 conj prop22 lemma21.
std::set<std::string> parse_checks(const std::string& list);
const std::set<std::string>& all_checks();

struct RunOptions {
  std::set<std::string> checks = all_checks();
  JStrategy j;
  double timeout = 0;  // seconds per instance, 0 = none
  bool oracle = false;
  std::vector<std::uint32_t> recheck_chars = {2, 101};
  // PerStep skips the Schreyer frame; the structure check then has no frame to compare against
  ResolveStrategy strategy = ResolveStrategy::FullTower;
};

struct Recheck {
  std::uint32_t characteristic = 0;
  std::string status;
  std::optional<int> lhs, rhs;
  bool violated = false;
};

struct InstanceReport {
  int index = 0;
  std::uint64_t seed = 0;
  std::string input;
  std::string status = "ok";  // ok | skipped | error
  std::string message;
  BettiTable betti;
  std::optional<ShiftProfile> profile;
  std::optional<InvariantReport> invariants;
  std::string j_source;  // self | ann | ci:d
  std::string j_ideal;
  std::vector<BoundReport> bounds;
  std::vector<std::vector<Recheck>> rechecks;  // parallel to bounds; filled for candidates only
};

struct Summary {
  int attempted = 0, ok = 0, skipped = 0, errors = 0;
  int asserted_pass = 0, asserted_fail = 0, hypothesis_skipped = 0, probes = 0, candidates = 0;
};

struct RunReport {
  std::uint32_t characteristic = 0;
  std::string order;
  std::optional<std::uint64_t> seed;
  std::vector<InstanceReport> instances;
  Summary summary;
};

Summary summarize(const std::vector<InstanceReport>& instances);

InstanceReport run_instance(const JobSpec& job, const RunOptions& opts, int index = 0);
// Instances run concurrently; the report keeps job order.
RunReport run_jobs(const std::vector<JobSpec>& jobs, const RunOptions& opts);

struct SearchParams {
  int vars_min = 2, vars_max = 4;
  int max_deg = 4;
  int gens = 5;  // each instance draws 1..gens generators
  int count = 200;
  std::uint64_t seed = 1;
  std::uint32_t characteristic = 32003;
  MonomialOrder order = MonomialOrder::DegRevLex;
  enum Family { Monomial, CompleteIntersection } family = Monomial;
};
std::vector<JobSpec> make_search_jobs(const SearchParams& params);
RunReport run_search(const SearchParams& params, const RunOptions& opts);

// 0 ok, 2 asserted violation, 1 engine error, 3 conjecture candidate; first match wins.
int exit_code(const RunReport& r);

std::string emit_report(const RunReport& r, const std::string& format);
std::string emit_resolution(const GradedResolution& r, const std::string& format);

}  // namespace mfres
