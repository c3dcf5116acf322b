#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "mfres/harness.hpp"

namespace mfres {

namespace {

using json = nlohmann::ordered_json;

json betti_json(const BettiTable& b) {
  json arr = json::array();
  for (const auto& [key, v] : b.entries()) arr.push_back({{"i", key.first}, {"j", key.second}, {"beta", v}});
  return arr;
}

json bound_json(const BoundReport& b, const std::vector<Recheck>* rechecks) {
  json o;
  o["name"] = b.name;
  o["mode"] = to_string(b.mode);
  o["hypotheses_met"] = b.hypotheses_met;
  if (b.q) o["q"] = *b.q;
  if (b.mode != BoundMode::Skipped) {
    o["lhs"] = b.lhs;
    o["rhs"] = b.rhs;
    o["slack"] = b.slack();
    o["violated"] = b.violated();
  }
  if (b.witness_i) {
    json w;
    w["i"] = *b.witness_i;
    if (b.witness_a) w["a"] = b.witness_a->entries;
    o["witness"] = w;
  }
  o["reasons"] = b.reasons;
  if (rechecks && !rechecks->empty()) {
    json arr = json::array();
    for (const auto& rc : *rechecks) {
      json r{{"characteristic", rc.characteristic}, {"status", rc.status}};
      if (rc.lhs) r["lhs"] = *rc.lhs;
      if (rc.rhs) r["rhs"] = *rc.rhs;
      r["violated"] = rc.violated;
      arr.push_back(r);
    }
    o["rechecks"] = arr;
  }
  return o;
}

json instance_json(const InstanceReport& in) {
  json o;
  o["index"] = in.index;
  o["seed"] = in.seed;
  o["status"] = in.status;
  if (!in.message.empty()) o["message"] = in.message;
  o["input"] = in.input;
  o["betti"] = betti_json(in.betti);
  if (in.profile) {
    o["shifts"] = {{"T", in.profile->max_shifts}, {"t", in.profile->min_shifts}, {"pd", in.profile->pd},
                   {"reg", in.profile->reg}};
  }
  if (in.invariants) {
    const auto& v = *in.invariants;
    o["invariants"] = {{"dim", v.dim},     {"codim", v.codim}, {"depth", v.depth},
                       {"pd", v.pd},       {"is_cm", v.is_cm}, {"char", v.char_used}};
  }
  if (!in.j_source.empty()) o["j"] = {{"source", in.j_source}, {"ideal", in.j_ideal}};
  json bounds = json::array();
  for (std::size_t k = 0; k < in.bounds.size(); ++k)
    bounds.push_back(bound_json(in.bounds[k], k < in.rechecks.size() ? &in.rechecks[k] : nullptr));
  o["bounds"] = bounds;
  return o;
}

json summary_json(const Summary& s) {
  return {{"attempted", s.attempted},
          {"ok", s.ok},
          {"skipped", s.skipped},
          {"errors", s.errors},
          {"asserted_pass", s.asserted_pass},
          {"asserted_fail", s.asserted_fail},
          {"hypothesis_skipped", s.hypothesis_skipped},
          {"probes", s.probes},
          {"candidates", s.candidates}};
}

std::string witness_text(const BoundReport& b) {
  std::ostringstream w;
  if (b.witness_i) w << "i=" << *b.witness_i;
  if (b.witness_a) {
    w << " a=(";
    for (std::size_t k = 0; k < b.witness_a->entries.size(); ++k) w << (k ? "," : "") << b.witness_a->entries[k];
    w << ')';
  }
  return w.str();
}

std::string vec_text(const std::vector<int>& v) {
  std::ostringstream s;
  s << '(';
  for (std::size_t k = 0; k < v.size(); ++k) s << (k ? "," : "") << v[k];
  s << ')';
  return s.str();
}

void instance_table(std::ostream& out, const InstanceReport& in) {
  out << "== instance " << in.index << " [" << in.status << "]";
  if (!in.message.empty()) out << "  " << in.message;
  out << '\n' << in.input;
  if (!in.betti.empty()) out << in.betti.grid();
  if (in.profile && in.invariants) {
    const auto& v = *in.invariants;
    out << "T " << vec_text(in.profile->max_shifts) << "  t " << vec_text(in.profile->min_shifts) << '\n';
    out << "pd " << v.pd << "  reg " << in.profile->reg << "  codim " << v.codim << "  dim " << v.dim << "  depth "
        << v.depth << "  cm " << (v.is_cm ? "yes" : "no") << "  char " << v.char_used << '\n';
  }
  if (!in.j_source.empty()) {
    out << "J (" << in.j_source << ")";
    if (!in.j_ideal.empty()) out << ": " << in.j_ideal;
    out << '\n';
  }
  if (in.bounds.empty()) return;
  out << std::left << std::setw(18) << "check" << std::setw(10) << "mode" << std::right << std::setw(6) << "lhs"
      << std::setw(6) << "rhs" << std::setw(7) << "slack" << "  note\n";
  for (std::size_t k = 0; k < in.bounds.size(); ++k) {
    const auto& b = in.bounds[k];
    std::string name = b.q ? b.name + "[" + std::to_string(*b.q) + "]" : b.name;
    out << std::left << std::setw(18) << name << std::setw(10) << to_string(b.mode) << std::right;
    if (b.mode == BoundMode::Skipped) {
      out << std::setw(6) << "-" << std::setw(6) << "-" << std::setw(7) << "-";
    } else {
      out << std::setw(6) << b.lhs << std::setw(6) << b.rhs << std::setw(7) << b.slack();
    }
    std::string note = witness_text(b);
    for (const auto& r : b.reasons) note += (note.empty() ? "" : "; ") + r;
    if (b.is_violation()) note = "VIOLATION " + note;
    if (b.is_candidate()) note = "CANDIDATE " + note;
    out << "  " << note << '\n';
    if (k < in.rechecks.size())
      for (const auto& rc : in.rechecks[k]) {
        out << "    recheck char " << rc.characteristic << ": " << rc.status;
        if (rc.lhs && rc.rhs) out << " lhs " << *rc.lhs << " rhs " << *rc.rhs << (rc.violated ? " violated" : " holds");
        out << '\n';
      }
  }
}

}  // namespace

std::string emit_report(const RunReport& r, const std::string& format) {
  if (format == "json") {
    json o;
    json env{{"tool", "mfres"}, {"version", kVersion}, {"characteristic", r.characteristic}, {"order", r.order}};
    if (r.seed) env["seed"] = *r.seed;
    o["environment"] = env;
    json arr = json::array();
    for (const auto& in : r.instances) arr.push_back(instance_json(in));
    o["instances"] = arr;
    o["summary"] = summary_json(r.summary);
    return o.dump(2) + "\n";
  }
  if (format == "table") {
    std::ostringstream out;
    out << "mfres " << kVersion << "  char " << r.characteristic << "  order " << r.order;
    if (r.seed) out << "  seed " << *r.seed;
    out << '\n';
    for (const auto& in : r.instances) instance_table(out, in);
    const auto& s = r.summary;
    out << "== summary\n"
        << "attempted " << s.attempted << "  ok " << s.ok << "  skipped " << s.skipped << "  errors " << s.errors << '\n'
        << "asserted pass " << s.asserted_pass << "  fail " << s.asserted_fail << "  hypothesis-skipped "
        << s.hypothesis_skipped << "  probes " << s.probes << "  candidates " << s.candidates << '\n';
    return out.str();
  }
  throw std::invalid_argument("unknown format '" + format + "' (table, json)");
}

std::string emit_resolution(const GradedResolution& r, const std::string& format) {
  if (format == "json") {
    json o;
    o["free_modules"] = r.free_degrees;
    json steps = json::array();
    for (int i = 1; i <= r.length(); ++i) {
      const auto& st = r.differential(i);
      json entries = json::array();
      for (std::size_t c = 0; c < st.columns.size(); ++c)
        for (const auto& [row, f] : st.columns[c])
          entries.push_back({{"row", row}, {"col", static_cast<int>(c)}, {"value", f.to_string()}});
      steps.push_back({{"index", i}, {"rows", st.row_degrees.size()}, {"cols", st.col_degrees.size()}, {"entries", entries}});
    }
    o["differentials"] = steps;
    o["betti"] = betti_json(betti(r));
    return o.dump(2) + "\n";
  }
  if (format == "table") {
    std::ostringstream out;
    for (int i = 0; i <= r.length(); ++i) {
      out << "F_" << i << ":";
      const auto& tw = r.free_degrees[static_cast<std::size_t>(i)];
      if (tw.empty()) out << " 0";
      std::size_t k = 0;
      while (k < tw.size()) {
        std::size_t e = k;
        while (e < tw.size() && tw[e] == tw[k]) ++e;
        out << " S(" << -tw[k] << ")";
        if (e - k > 1) out << "^" << e - k;
        k = e;
      }
      out << '\n';
    }
    for (int i = 1; i <= r.length(); ++i) {
      const auto& st = r.differential(i);
      out << "d_" << i << ":\n";
      for (std::size_t row = 0; row < st.row_degrees.size(); ++row) {
        out << "  [";
        for (std::size_t c = 0; c < st.col_degrees.size(); ++c)
          out << (c ? ", " : "") << st.entry(static_cast<int>(row), static_cast<int>(c), r.ring).to_string();
        out << "]\n";
      }
    }
    out << betti(r).grid();
    return out.str();
  }
  throw std::invalid_argument("unknown format '" + format + "' (table, json)");
}

}  // namespace mfres
