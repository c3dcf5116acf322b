// One PASS/FAIL line per acceptance criterion. Criterion 8 only runs with --stretch;
// --per-step resolves it without the Schreyer frame.
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "mfres/harness.hpp"

using namespace mfres;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Line {
  bool pass = false;
  std::string detail;
};

std::string vec(const std::vector<int>& v) {
  std::ostringstream s;
  s << '(';
  for (std::size_t k = 0; k < v.size(); ++k) s << (k ? "," : "") << v[k];
  s << ')';
  return s.str();
}

const BoundReport* find_bound(const InstanceReport& in, const std::string& name) {
  for (const auto& b : in.bounds)
    if (b.name == name) return &b;
  return nullptr;
}

Line weights() {
  Line l;
  const int w = weight_norm({{1, 2, 0, 1}});
  auto list = enumerate_weights(3, 4);
  const std::vector<std::vector<int>> want{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {2, 0, 0}};
  std::vector<std::vector<int>> got;
  for (const auto& a : list) got.push_back(a.entries);
  l.pass = w == 13 && got == want;
  l.detail = "|(1,2,0,1)| = " + std::to_string(w) + ", enumerate_weights(3,4) has " + std::to_string(got.size()) +
             " vectors";
  return l;
}

Line square_of_max() {
  Line l;
  auto t0 = Clock::now();
  JobSpec job = parse_input("ring p=32003 vars=x,y,z\nideal: x^2; x*y; x*z; y^2; y*z; z^2\n");
  InstanceReport in = run_instance(job, RunOptions{});
  const double secs = seconds_since(t0);
  if (in.status != "ok" || !in.invariants || !in.profile) {
    l.detail = "instance " + in.status + ": " + in.message;
    return l;
  }
  const auto& v = *in.invariants;
  const BoundReport* r = find_bound(in, "regthm");
  const bool tight = r && r->mode == BoundMode::Asserted && r->slack() == 0;
  l.pass = v.pd == 3 && v.codim == 3 && v.is_cm && in.profile->max_shifts == std::vector<int>{0, 2, 3, 4} &&
           in.profile->reg == 1 && tight && secs < 1.0;
  std::ostringstream d;
  d << "pd " << v.pd << " codim " << v.codim << " cm " << v.is_cm << " T " << vec(in.profile->max_shifts) << " reg "
    << in.profile->reg << " regthm " << (r ? std::to_string(r->lhs) + "<=" + std::to_string(r->rhs) : "missing")
    << " in " << secs << "s";
  l.detail = d.str();
  return l;
}

Line direct_sum_fixture() {
  Line l;
  auto t0 = Clock::now();
  JobSpec job = parse_input("ring p=32003 vars=x,y,z\nsummand: x^2; y^2\nsummand: x; y; z\n");
  InstanceReport in = run_instance(job, RunOptions{});
  const double secs = seconds_since(t0);
  if (in.status != "ok" || !in.invariants || !in.profile) {
    l.detail = "instance " + in.status + ": " + in.message;
    return l;
  }
  const BoundReport* p22 = find_bound(in, "prop22");
  const int c = in.invariants->codim;
  const int t2 = in.profile->T(2), t3 = in.profile->T(3);
  l.pass = c == 2 && t2 == 4 && t3 == 3 && p22 && p22->mode == BoundMode::Asserted && !p22->violated() && secs < 1.0;
  std::ostringstream d;
  d << "codim " << c << " T_2 " << t2 << " T_3 " << t3 << " prop22 checked below codim: "
    << (p22 && !p22->violated() ? "holds" : "FAILS") << " in " << secs << "s";
  l.detail = d.str();
  return l;
}

SearchParams monomial_batch() {
  SearchParams sp;
  sp.vars_min = 2;
  sp.vars_max = 4;
  sp.max_deg = 4;
  sp.gens = 5;
  sp.count = 200;
  sp.seed = 2024;
  return sp;
}

SearchParams ci_batch() {
  SearchParams sp;
  sp.vars_min = 1;
  sp.vars_max = 4;
  sp.max_deg = 3;
  sp.gens = 3;
  sp.count = 100;
  sp.seed = 2025;
  sp.family = SearchParams::CompleteIntersection;
  return sp;
}

struct Batches {
  RunReport monomial_oracle;              // oracle on, J = I
  std::vector<RunReport> suite;           // everything evaluated for criterion 5
  double oracle_secs = 0;
};

Line oracle_equivalence(const Batches& b) {
  Line l;
  const auto& r = b.monomial_oracle;
  int compared = 0, agree = 0;
  for (const auto& in : r.instances) {
    const BoundReport* o = find_bound(in, "oracle");
    if (!o) continue;
    ++compared;
    if (!o->violated()) ++agree;
  }
  l.pass = compared >= 200 && agree == compared && r.summary.errors == 0 && r.summary.skipped == 0 &&
           b.oracle_secs < 300;
  std::ostringstream d;
  d << agree << "/" << compared << " monomial ideals match the Koszul oracle entry for entry in " << b.oracle_secs
    << "s";
  l.detail = d.str();
  return l;
}

Line inequality_suite(const Batches& b) {
  Line l;
  std::map<std::string, std::pair<int, int>> per;  // name -> (asserted, violated)
  int instances = 0, errors = 0, worst_exit = 0;
  for (const auto& r : b.suite) {
    instances += r.summary.attempted;
    errors += r.summary.errors;
    worst_exit = std::max(worst_exit, exit_code(r) == 2 ? 2 : 0);
    for (const auto& in : r.instances)
      for (const auto& bd : in.bounds)
        if (bd.mode == BoundMode::Asserted) {
          auto& slot = per[bd.name];
          ++slot.first;
          if (bd.violated()) ++slot.second;
        }
  }
  std::ostringstream d;
  d << instances << " instances;";
  for (const char* name : {"prop22", "codim1", "maincor", "cor24", "regthm", "main", "lemma21"}) {
    auto [n, bad] = per[name];
    d << ' ' << name << ' ' << n - bad << '/' << n;
  }
  // every other asserted report counts too
  int violations = 0;
  for (const auto& [name, counts] : per) violations += counts.second;
  const bool covered = per["prop22"].first > 0 && per["codim1"].first > 0 && per["maincor"].first > 0 &&
                       per["cor24"].first > 0 && per["regthm"].first > 0 && per["lemma21"].first > 0;
  l.pass = violations == 0 && errors == 0 && worst_exit != 2 && covered;
  d << "; " << violations << " asserted violations, " << errors << " errors";
  l.detail = d.str();
  return l;
}

Line koszul_tightness() {
  Line l;
  auto t0 = Clock::now();
  int cases = 0, good = 0;
  std::string first_bad;
  for (int c = 1; c <= 4; ++c)
    for (int d = 1; d <= 3; ++d) {
      auto ring = make_ring(32003, default_var_names(4));
      Ideal ci = gen_generic_forms(ring, std::vector<int>(static_cast<std::size_t>(c), d), 1000 + 10 * c + d);
      BettiTable b = betti(resolve_minimal(cyclic_module(ci)));
      ShiftProfile p = shifts(b);
      bool ok = p.pd == c;
      for (int i = 0; i <= p.pd; ++i) ok = ok && p.T(i) == d * i;
      auto seq = find_regular_sequence(ci, d, c, 7);
      BoundReport r = bound_common_degree(p, c, d, seq.has_value());
      ok = ok && r.mode == BoundMode::Asserted && r.slack() == 0;
      ++cases;
      if (ok) ++good;
      else if (first_bad.empty()) first_bad = " first failure c=" + std::to_string(c) + " d=" + std::to_string(d);
    }
  const double secs = seconds_since(t0);
  l.pass = good == cases && secs < 10.0;
  std::ostringstream d;
  d << good << "/" << cases << " complete intersections (c<=4, d<=3) with T_i = d*i and common_degree slack 0 in "
    << secs << "s" << first_bad;
  l.detail = d.str();
  return l;
}

Line structural(const Batches& b) {
  Line l;
  int checked = 0, bad = 0;
  for (const auto& r : b.suite)
    for (const auto& in : r.instances)
      if (const BoundReport* s = find_bound(in, "structure")) {
        ++checked;
        if (s->violated()) ++bad;
      }
  l.pass = checked > 0 && bad == 0;
  l.detail = std::to_string(checked - bad) + "/" + std::to_string(checked) +
             " resolutions with d^2 = 0, no unit entries, pd <= n, depth + pd = n, pd >= codim, Hilbert check";
  return l;
}

Line determinism() {
  Line l;
  SearchParams sp = monomial_batch();
  sp.count = 60;
  sp.seed = 77;
  RunOptions opts;
  opts.j = parse_j_strategy("ci:auto");
  const std::string a = emit_report(run_search(sp, opts), "json");
  const std::string b = emit_report(run_search(sp, opts), "json");
  sp.order = MonomialOrder::Lex;
  const std::string c = emit_report(run_search(sp, opts), "json");
  const std::string d = emit_report(run_search(sp, opts), "json");
  l.pass = a == b && c == d;
  l.detail = "two reruns each at degrevlex and lex, " + std::to_string(a.size()) + " and " + std::to_string(c.size()) +
             " bytes, identical: " + (a == b && c == d ? "yes" : "no");
  return l;
}

struct Stretch {
  bool completed = false;
  bool pass = false;
  std::string detail;
};

Stretch stretch(double timeout, ResolveStrategy strategy) {
  Stretch s;
  auto t0 = Clock::now();
  JobSpec job = parse_input(
      "ring p=32003 vars=x1,x2,y1,y2,z1,z2,z3,z4\n"
      "ideal: x1^6; y1^6; x1^2*x2^4 + y1^2*y2^4 + x1*y1*(x2^3*z1 + x2^2*y2*z2 + x2*y2^2*z3 + y2^3*z4)\n");
  RunOptions opts;
  opts.timeout = timeout;
  opts.strategy = strategy;
  opts.checks = parse_checks("codim1,prop22");
  InstanceReport in = run_instance(job, opts);
  const double secs = seconds_since(t0);
  std::ostringstream d;
  if (in.status != "ok" || !in.profile) {
    d << "not completed after " << secs << "s (" << in.status << ": " << in.message << ")";
    s.detail = d.str();
    return s;
  }
  s.completed = true;
  const int t7 = in.profile->T(7), t8 = in.profile->T(8);
  const BoundReport* c1 = find_bound(in, "codim1");
  s.pass = t7 == 38 && t8 == 34 && c1 && !c1->violated();
  d << "T " << vec(in.profile->max_shifts) << ", T_7 = " << t7 << " (want 38), T_8 = " << t8 << " (want 34)";
  if (c1) d << ", codim1 " << c1->lhs << " <= " << c1->rhs;
  d << " in " << secs << "s";
  s.detail = d.str();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  bool with_stretch = false;
  double stretch_timeout = 3600;
  ResolveStrategy strategy = ResolveStrategy::FullTower;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--stretch") == 0) with_stretch = true;
    else if (std::strcmp(argv[k], "--timeout") == 0 && k + 1 < argc) stretch_timeout = std::stod(argv[++k]);
    else if (std::strcmp(argv[k], "--per-step") == 0) strategy = ResolveStrategy::PerStep;
    else {
      std::cerr << "usage: acceptance [--stretch] [--timeout SECS] [--per-step]\n";
      return 1;
    }
  }

  Batches b;
  {
    RunOptions opts;
    opts.oracle = true;
    auto t0 = Clock::now();
    b.monomial_oracle = run_search(monomial_batch(), opts);
    b.oracle_secs = seconds_since(t0);
    b.suite.push_back(b.monomial_oracle);
    RunOptions ci_j;
    ci_j.j = parse_j_strategy("ci:auto");
    b.suite.push_back(run_search(monomial_batch(), ci_j));
    b.suite.push_back(run_search(ci_batch(), RunOptions{}));
    b.suite.push_back(run_search(ci_batch(), ci_j));
  }

  std::vector<std::pair<std::string, std::function<Line()>>> rows = {
      {"weight arithmetic", weights},
      {"(x,y,z)^2 fixture", square_of_max},
      {"direct-sum fixture", direct_sum_fixture},
      {"oracle equivalence", [&] { return oracle_equivalence(b); }},
      {"proved inequalities", [&] { return inequality_suite(b); }},
      {"Koszul tightness", koszul_tightness},
      {"structural invariants", [&] { return structural(b); }},
  };
  int failed = 0;
  int idx = 1;
  for (auto& [name, fn] : rows) {
    Line l = fn();
    if (!l.pass) ++failed;
    std::cout << (l.pass ? "PASS" : "FAIL") << "  " << idx++ << ". " << name << ": " << l.detail << std::endl;
  }
  if (with_stretch) {
    Stretch s = stretch(stretch_timeout, strategy);
    const char* tag = !s.completed ? "INCOMPLETE" : s.pass ? "PASS" : "FAIL";
    std::cout << tag << "  8. 8-variable fixture (not counted): " << s.detail << std::endl;
  } else {
    std::cout << "SKIP  8. 8-variable fixture (not counted): run with --stretch" << std::endl;
  }
  Line det = determinism();
  if (!det.pass) ++failed;
  std::cout << (det.pass ? "PASS" : "FAIL") << "  9. determinism: " << det.detail << std::endl;
  return failed == 0 ? 0 : 1;
}
