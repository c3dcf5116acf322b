#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mfres/errors.hpp"
#include "mfres/harness.hpp"

using namespace mfres;

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// "3" or "2-4"
std::pair<int, int> parse_range(const std::string& s) {
  auto dash = s.find('-');
  if (dash == std::string::npos) {
    int v = std::stoi(s);
    return {v, v};
  }
  return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal free resolutions, Betti tables and regularity bound checks over F_p"};
  app.require_subcommand(1);
  std::string format = "table";
  double timeout = 0;
  std::optional<std::uint32_t> char_override;
  app.add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--timeout", timeout, "seconds per instance (0 = none)");
  bool per_step = false;
  app.add_flag("--per-step", per_step, "minimalize after every syzygy step instead of building the Schreyer frame");

  std::string file;
  auto* resolve = app.add_subcommand("resolve", "print the minimal free resolution");
  resolve->add_option("file", file, "input file, - for stdin")->required();
  resolve->add_option("--char", char_override, "override the characteristic");

  bool oracle = false;
  std::optional<int> cap;
  auto* betti_cmd = app.add_subcommand("betti", "Betti table, shifts and invariants");
  betti_cmd->add_option("file", file, "input file, - for stdin")->required();
  betti_cmd->add_flag("--oracle", oracle, "cross-check against Koszul homology");
  betti_cmd->add_option("--cap", cap, "oracle degree cap");
  betti_cmd->add_option("--char", char_override, "override the characteristic");

  std::string bounds = "all";
  std::string jstrat = "self";
  auto* check = app.add_subcommand("check", "evaluate bounds on one input");
  check->add_option("file", file, "input file, - for stdin")->required();
  check->add_option("--bounds", bounds, "comma list: all codim1 regthm main maincor common_degree cor24 ehu1 ehu2 conj prop22 lemma21");
  check->add_option("--j", jstrat, "J for cyclic input without ann: self, ci:<d>, ci:auto");
  check->add_option("--char", char_override, "override the characteristic");
  check->add_flag("--oracle", oracle, "also cross-check against Koszul homology");

  SearchParams sp;
  std::string vars = "2-4", family = "monomial", order = "degrevlex";
  auto* search = app.add_subcommand("search", "random instances, all checks");
  search->add_option("--vars", vars, "number of variables, N or A-B")->capture_default_str();
  search->add_option("--maxdeg", sp.max_deg, "largest generator degree")->capture_default_str();
  search->add_option("--gens", sp.gens, "at most this many generators per instance")->capture_default_str();
  search->add_option("--count", sp.count, "number of instances")->capture_default_str();
  search->add_option("--seed", sp.seed, "master seed")->capture_default_str();
  search->add_option("--char", sp.characteristic, "characteristic")->capture_default_str();
  search->add_option("--order", order, "degrevlex, deglex or lex")->capture_default_str();
  search->add_option("--family", family, "monomial or ci")->check(CLI::IsMember({"monomial", "ci"}))->capture_default_str();
  search->add_option("--j", jstrat, "self, ci:<d>, ci:auto")->capture_default_str();
  search->add_option("--bounds", bounds, "checks to run")->capture_default_str();
  search->add_flag("--oracle", oracle, "cross-check every instance against Koszul homology");

  for (auto* sub : {resolve, betti_cmd, check, search}) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);

  try {
    RunOptions opts;
    opts.timeout = timeout;
    opts.oracle = oracle;
    opts.j = parse_j_strategy(jstrat);
    opts.checks = parse_checks(bounds);
    opts.strategy = per_step ? ResolveStrategy::PerStep : ResolveStrategy::FullTower;

    if (*resolve) {
      JobSpec job = parse_input(read_file(file), char_override);
      const Budget budget = timeout > 0 ? Budget::with_timeout(timeout) : Budget{};
      std::cout << emit_resolution(resolve_minimal(job.presentation(), opts.strategy, budget), format);
      return 0;
    }
    if (*betti_cmd || *check) {
      JobSpec job = parse_input(read_file(file), char_override);
      job.degree_cap = cap;
      if (*betti_cmd) opts.checks.clear();
      RunReport r = run_jobs({job}, opts);
      std::cout << emit_report(r, format);
      return exit_code(r);
    }
    auto [lo, hi] = parse_range(vars);
    sp.vars_min = lo;
    sp.vars_max = hi;
    sp.order = parse_monomial_order(order);
    sp.family = family == "ci" ? SearchParams::CompleteIntersection : SearchParams::Monomial;
    RunReport r = run_search(sp, opts);
    std::cout << emit_report(r, format);
    return exit_code(r);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
