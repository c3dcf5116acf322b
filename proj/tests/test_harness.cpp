#include <doctest.h>

#include <json.hpp>

#include "mfres/errors.hpp"
#include "mfres/harness.hpp"
#include "mfres/random.hpp"
#include "support.hpp"

using namespace mfres;
using namespace mfres::test;

namespace {

const char* kEightVars =
    "ring p=32003 vars=x1,x2,y1,y2,z1,z2,z3,z4\n"
    "ideal: x1^6; y1^6; x1^2*x2^4+y1^2*y2^4+x1*y1*(x2^3*z1+x2^2*y2*z2+x2*y2^2*z3+y2^3*z4)\n";

int parse_error_line(const std::string& text) {
  try {
    parse_input(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

const BoundReport* find_bound(const InstanceReport& in, const std::string& name, std::optional<int> q = std::nullopt) {
  for (const auto& b : in.bounds)
    if (b.name == name && (!q || b.q == q)) return &b;
  return nullptr;
}

}  // namespace

TEST_CASE("parse_input examples") {
  JobSpec job = parse_input("ring p=32003 vars=x,y,z order=degrevlex\nideal: x^2; x*y\n");
  CHECK(job.ring->num_vars() == 3);
  CHECK(job.summands.size() == 1);
  CHECK_FALSE(job.direct_sum);
  CHECK(job.presentation().is_cyclic());

  job = parse_input("ring p=32003 vars=x,y,z\nsummand: x^2; y^2\nsummand: x; y; z\n");
  CHECK(job.direct_sum);
  CHECK(job.summands.size() == 2);
  CHECK(job.presentation().free->rank() == 2);
  CHECK(job.presentation().relations.size() == 5);

  job = parse_input(kEightVars);
  CHECK(job.ring->num_vars() == 8);
  REQUIRE(job.summands.size() == 1);
  CHECK(job.summands[0].gens.size() == 3);
  CHECK(job.summands[0].gens[2].degree() == 6);
}

TEST_CASE("parse_input details") {
  JobSpec job = parse_input(
      "# comment\n"
      "ring p=101 vars=a,b order=lex   # trailing\n"
      "ideal: a^2;\n"
      "   a*b; b^2\n"
      "ann: a^3\n");
  CHECK(job.ring->characteristic() == 101);
  CHECK(job.ring->spec().order == MonomialOrder::Lex);
  CHECK(job.summands[0].gens.size() == 3);
  REQUIRE(job.ann);
  CHECK(job.ann->gens.size() == 1);

  job = parse_input("ring p=32003 vars=x,y\nideal: 5*x\n", 2);
  CHECK(job.ring->characteristic() == 2);
  CHECK(job.summands[0].gens[0] == poly(job.ring, "x"));
}

TEST_CASE("parse_input errors carry positions") {
  CHECK(parse_error_line("ring p=32003 vars=x,y\nideal: x + y^2\n") == 2);
  CHECK(parse_error_line("ring p=32001 vars=x,y\nideal: x\n") == 1);
  CHECK(parse_error_line("ideal: x\n") != 0);
  CHECK(parse_error_line("ring p=7 vars=x,y colour=red\nideal: x\n") == 1);
  CHECK(parse_error_line("ring p=7 vars=x,y\nideal: x\nsummand: y\n") == 3);
  CHECK(parse_error_line("ring p=7 vars=x,y\nideal: x\nann: x\nann: y\n") == 4);
  CHECK(parse_error_line("ring p=7 vars=x,y\n\n\nideal: x*q\n") == 4);
  CHECK(parse_error_line("ring p=7 vars=x,y\n") != 0);
  try {
    parse_input("ring p=7 vars=x,y\nideal: x; y; x*?\n");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 10);
  }
}

TEST_CASE("format_input round-trips") {
  for (const char* text : {"ring p=32003 vars=x,y,z order=deglex\nideal: x^2 - 3*y*z; z^2\n",
                           "ring p=101 vars=x,y,z order=degrevlex\nsummand: x^2; y^2\nsummand: x; y; z\nann: x^2; y^2\n",
                           kEightVars}) {
    JobSpec a = parse_input(text);
    std::string once = format_input(a);
    JobSpec b = parse_input(once);
    CHECK(format_input(b) == once);
    CHECK(b.summands.size() == a.summands.size());
    for (std::size_t k = 0; k < a.summands.size(); ++k) CHECK(b.summands[k].gens == a.summands[k].gens);
  }
}

TEST_CASE("seeds") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 5) == derive_seed(1, 5));
  CHECK(derive_seed(1, 5) != derive_seed(2, 5));
  std::mt19937_64 g(3);
  for (int k = 0; k < 1000; ++k) CHECK(bounded_draw(g, 7) < 7);
  CHECK_THROWS(bounded_draw(g, 0));
}

TEST_CASE("gen_monomial_ideal") {
  auto r3 = ring({"x", "y", "z"});
  CHECK(gen_monomial_ideal(r3, 4, 6, 77).gens == gen_monomial_ideal(r3, 4, 6, 77).gens);
  auto r2 = ring({"x", "y"});
  for (std::uint64_t s = 0; s < 20; ++s) {
    Ideal i = gen_monomial_ideal(r2, 1, 3, s);
    CHECK_FALSE(i.gens.empty());
    CHECK(i.gens.size() <= 2);
    for (const auto& f : i.gens) CHECK((f == poly(r2, "x") || f == poly(r2, "y")));
  }
  for (std::uint64_t s = 0; s < 50; ++s) {
    Ideal i = gen_monomial_ideal(r3, 4, 8, s);
    CHECK(i.is_monomial());
    for (std::size_t a = 0; a < i.gens.size(); ++a)
      for (std::size_t b = 0; b < i.gens.size(); ++b)
        if (a != b) CHECK_FALSE(i.gens[a].lead().mono.divides(i.gens[b].lead().mono));
  }
  CHECK_THROWS(gen_monomial_ideal(r3, 0, 3, 1));
}

TEST_CASE("gen_generic_forms") {
  auto r3 = ring({"x", "y", "z"});
  Ideal ci = gen_generic_forms(r3, {2, 2, 2}, 5);
  ShiftProfile p = shifts(betti(resolve_minimal(cyclic_module(ci))));
  CHECK(p.max_shifts == std::vector<int>{0, 2, 4, 6});
  CHECK(betti(resolve_minimal(cyclic_module(ci))) == table({{0, 0, 1}, {1, 2, 3}, {2, 4, 3}, {3, 6, 1}}));

  Ideal lin = gen_generic_forms(r3, {1, 1}, 5);
  CHECK(shifts(betti(resolve_minimal(cyclic_module(lin)))).reg == 0);

  Ideal mixed = gen_generic_forms(r3, {2, 3}, 5);
  CHECK(shifts(betti(resolve_minimal(cyclic_module(mixed)))).max_shifts == std::vector<int>{0, 3, 5});

  CHECK(gen_generic_forms(r3, {2, 3}, 9).gens == gen_generic_forms(r3, {2, 3}, 9).gens);
  CHECK_THROWS(gen_generic_forms(r3, {2, 2, 2, 2}, 1, 3));
}

TEST_CASE("J strategies and check tags") {
  CHECK(parse_j_strategy("self").kind == JStrategy::Self);
  CHECK(parse_j_strategy("ci:3").degree == 3);
  CHECK(parse_j_strategy("ci:auto").kind == JStrategy::CiAuto);
  CHECK_THROWS(parse_j_strategy("ci:0"));
  CHECK_THROWS(parse_j_strategy("ci:2x"));
  CHECK(to_string(parse_j_strategy("ci:2")) == "ci:2");
  CHECK(parse_checks("all") == all_checks());
  CHECK(parse_checks("codim1,conj").size() == 2);
  CHECK_THROWS(parse_checks("codim1,bogus"));
}

TEST_CASE("run_instance on (x,y,z)^2") {
  JobSpec job = parse_input("ring p=32003 vars=x,y,z\nideal: x^2; x*y; x*z; y^2; y*z; z^2\n");
  RunOptions opts;
  opts.oracle = true;
  InstanceReport in = run_instance(job, opts);
  CHECK(in.status == "ok");
  REQUIRE(in.invariants);
  CHECK(in.invariants->pd == 3);
  CHECK(in.invariants->codim == 3);
  CHECK(in.invariants->is_cm);
  CHECK(in.profile->reg == 1);
  CHECK(in.j_source == "self");
  const BoundReport* r = find_bound(in, "regthm");
  REQUIRE(r);
  CHECK(r->mode == BoundMode::Asserted);
  CHECK(r->slack() == 0);
  for (const auto& b : in.bounds) CHECK_FALSE(b.is_violation());
  for (const char* name : {"structure", "oracle", "prop22", "lemma21", "codim1", "maincor", "main", "cor24"})
    CHECK_MESSAGE(find_bound(in, name), name);
}

TEST_CASE("run_instance honours ann: and J strategies") {
  JobSpec job = parse_input("ring p=32003 vars=x,y,z\nsummand: x^2; y^2\nsummand: x; y; z\nann: x^2; y^2\n");
  InstanceReport in = run_instance(job, RunOptions{});
  CHECK(in.j_source == "ann");
  const BoundReport* r = find_bound(in, "regthm");
  REQUIRE(r);
  CHECK(r->mode == BoundMode::Asserted);
  CHECK(r->slack() >= 0);
  REQUIRE(in.profile);
  CHECK(in.profile->T(2) == 4);
  CHECK(in.profile->T(3) == 3);

  job = parse_input("ring p=32003 vars=x,y,z\nideal: x^2; x*y; y^3; z^4\n");
  RunOptions opts;
  opts.j = parse_j_strategy("ci:auto");
  in = run_instance(job, opts);
  CHECK(in.j_source.rfind("ci:", 0) == 0);
  // the recreation text pins down the J that was used
  CHECK(in.input.find("ann:") != std::string::npos);
  opts.j = parse_j_strategy("ci:1");
  in = run_instance(job, opts);
  CHECK(in.j_source == "none");
}

TEST_CASE("zero module and budgets") {
  InstanceReport in = run_instance(parse_input("ring p=32003 vars=x,y\nideal: x; 1\n"), RunOptions{});
  CHECK(in.status == "ok");
  CHECK(in.message == "zero module");
  CHECK(in.betti.empty());
  CHECK(in.bounds.empty());

  RunOptions opts;
  opts.timeout = 0.001;
  in = run_instance(parse_input(kEightVars), opts);
  CHECK(in.status == "skipped");
  CHECK(in.bounds.empty());
  RunReport r = run_jobs({parse_input(kEightVars)}, opts);
  CHECK(r.summary.skipped == 1);
  CHECK(exit_code(r) == 0);
}

TEST_CASE("run_search basics") {
  SearchParams sp;
  sp.count = 0;
  RunReport empty = run_search(sp, RunOptions{});
  CHECK(empty.instances.empty());
  CHECK(empty.summary.attempted == 0);
  CHECK(empty.summary.asserted_pass == 0);
  CHECK(exit_code(empty) == 0);

  sp.count = 30;
  sp.seed = 8;
  RunReport a = run_search(sp, RunOptions{});
  RunReport b = run_search(sp, RunOptions{});
  CHECK(emit_report(a, "json") == emit_report(b, "json"));
  CHECK(emit_report(a, "table") == emit_report(b, "table"));
  CHECK(a.summary.attempted == 30);
  CHECK(a.summary.ok + a.summary.skipped + a.summary.errors == 30);
  CHECK(exit_code(a) == 0);
  CHECK_THROWS(emit_report(a, "xml"));

  // summary counts equal the per-instance sums
  int asserted = 0, skipped = 0;
  for (const auto& in : a.instances)
    for (const auto& bd : in.bounds) {
      if (bd.mode == BoundMode::Asserted && !bd.violated()) ++asserted;
      if (bd.mode == BoundMode::Skipped) ++skipped;
    }
  CHECK(a.summary.asserted_pass == asserted);
  CHECK(a.summary.hypothesis_skipped == skipped);

  sp.seed = 9;
  CHECK(emit_report(run_search(sp, RunOptions{}), "json") != emit_report(a, "json"));
}

TEST_CASE("json report re-creates each instance") {
  SearchParams sp;
  sp.count = 15;
  sp.seed = 21;
  RunReport r = run_search(sp, RunOptions{});
  auto doc = nlohmann::json::parse(emit_report(r, "json"));
  CHECK(doc["environment"]["characteristic"] == 32003);
  CHECK(doc["summary"]["attempted"] == 15);
  REQUIRE(doc["instances"].size() == 15);
  for (std::size_t k = 0; k < 15; ++k) {
    const auto& rec = doc["instances"][k];
    InstanceReport again = run_instance(parse_input(rec["input"].get<std::string>()), RunOptions{}, static_cast<int>(k));
    REQUIRE(again.bounds.size() == rec["bounds"].size());
    for (std::size_t b = 0; b < again.bounds.size(); ++b) {
      const auto& jb = rec["bounds"][b];
      CHECK(jb["name"] == again.bounds[b].name);
      if (jb.contains("lhs")) {
        CHECK(jb["lhs"] == again.bounds[b].lhs);
        CHECK(jb["rhs"] == again.bounds[b].rhs);
      }
    }
  }
}

TEST_CASE("exit codes") {
  RunReport r;
  CHECK(exit_code(r) == 0);
  r.summary.candidates = 1;
  CHECK(exit_code(r) == 3);
  r.summary.errors = 1;
  CHECK(exit_code(r) == 1);
  r.summary.asserted_fail = 1;
  CHECK(exit_code(r) == 2);
}
