#include <algorithm>
#include <cctype>
#include <sstream>

#include "mfres/errors.hpp"
#include "mfres/harness.hpp"
#include "mfres/parse.hpp"
#include "mfres/random.hpp"

namespace mfres {

ModulePresentation JobSpec::presentation() const {
  if (summands.size() == 1 && !direct_sum) return cyclic_module(summands.front());
  return mfres::direct_sum(summands);
}

namespace {

struct Segment {
  std::string text;
  int line;
  int column;  // 1-based column of text[0]
};

struct Block {
  std::string kind;
  int line;
  std::vector<Segment> segments;
};

std::string_view trim_left(std::string_view s, int& column) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++column;
  }
  return s;
}

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Polynomial> parse_block(const RingPtr& ring, const Block& b) {
  std::vector<Polynomial> out;
  std::string current;
  int start_line = 0, start_col = 0;
  auto flush = [&] {
    std::string_view t = trim_right(current);
    if (!t.empty()) {
      Polynomial f = parse_polynomial(ring, t, start_line, start_col);
      if (!f.is_zero()) out.push_back(std::move(f));
    }
    current.clear();
  };
  for (const auto& seg : b.segments) {
    for (std::size_t i = 0; i < seg.text.size(); ++i) {
      char ch = seg.text[i];
      int col = seg.column + static_cast<int>(i);
      if (ch == ';') {
        flush();
        continue;
      }
      if (current.empty()) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        start_line = seg.line;
        start_col = col;
      }
      current.push_back(ch);
    }
    if (!current.empty()) current.push_back(' ');
  }
  flush();
  return out;
}

RingPtr parse_ring_line(std::string_view rest, int line, int column, std::optional<std::uint32_t> char_override) {
  RingSpec spec;
  bool have_vars = false;
  std::size_t pos = 0;
  while (pos < rest.size()) {
    while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
    if (pos >= rest.size()) break;
    std::size_t end = pos;
    while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end]))) ++end;
    std::string_view tok = rest.substr(pos, end - pos);
    const int col = column + static_cast<int>(pos);
    auto eq = tok.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value in ring line", line, col);
    std::string key(tok.substr(0, eq));
    std::string value(tok.substr(eq + 1));
    try {
      if (key == "p") {
        std::size_t used = 0;
        unsigned long long v = std::stoull(value, &used);
        if (used != value.size() || v > UINT32_MAX) throw std::invalid_argument("bad characteristic");
        spec.characteristic = static_cast<std::uint32_t>(v);
      } else if (key == "vars") {
        spec.var_names.clear();
        std::stringstream ss(value);
        std::string name;
        while (std::getline(ss, name, ',')) spec.var_names.push_back(name);
        have_vars = true;
      } else if (key == "order") {
        spec.order = parse_monomial_order(value);
      } else {
        throw ParseError("unknown ring key '" + key + "'", line, col);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad value for ") + key + ": " + e.what(), line, col + static_cast<int>(eq) + 1);
    }
    pos = end;
  }
  if (!have_vars) throw ParseError("ring line needs vars=...", line, column);
  if (char_override) spec.characteristic = *char_override;
  try {
    return make_ring(spec);
  } catch (const std::exception& e) {
    throw ParseError(e.what(), line, column);
  }
}

}  // namespace

JobSpec parse_input(std::string_view text, std::optional<std::uint32_t> char_override) {
  JobSpec job;
  std::vector<Block> blocks;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    int column = 1;
    line = trim_right(trim_left(line, column));
    if (line.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    if (line.substr(0, 4) == "ring" && (line.size() == 4 || std::isspace(static_cast<unsigned char>(line[4])))) {
      if (job.ring) throw ParseError("second ring line", line_no, column);
      job.ring = parse_ring_line(line.substr(4), line_no, column + 4, char_override);
    } else if (auto colon = line.find(':'); colon != std::string_view::npos &&
                                           (line.substr(0, colon) == "ideal" || line.substr(0, colon) == "summand" ||
                                            line.substr(0, colon) == "ann")) {
      Block b{std::string(line.substr(0, colon)), line_no, {}};
      b.segments.push_back({std::string(line.substr(colon + 1)), line_no, column + static_cast<int>(colon) + 1});
      blocks.push_back(std::move(b));
    } else {
      if (blocks.empty()) throw ParseError("expected 'ring', 'ideal:', 'summand:' or 'ann:'", line_no, column);
      blocks.back().segments.push_back({std::string(line), line_no, column});
    }
    if (nl == text.size()) break;
  }
  if (!job.ring) throw ParseError("missing ring line", line_no == 0 ? 1 : line_no, 1);

  bool have_ideal = false;
  for (const auto& b : blocks) {
    Ideal ideal{job.ring, parse_block(job.ring, b)};
    if (b.kind == "ideal") {
      if (have_ideal || job.direct_sum) throw ParseError("only one ideal: block, and not together with summand:", b.line, 1);
      have_ideal = true;
      job.summands.push_back(std::move(ideal));
    } else if (b.kind == "summand") {
      if (have_ideal) throw ParseError("summand: cannot be combined with ideal:", b.line, 1);
      job.direct_sum = true;
      job.summands.push_back(std::move(ideal));
    } else {
      if (job.ann) throw ParseError("second ann: block", b.line, 1);
      job.ann = std::move(ideal);
    }
  }
  if (job.summands.empty()) throw ParseError("no ideal: or summand: block", line_no, 1);
  return job;
}

std::string format_input(const JobSpec& job) {
  std::ostringstream out;
  const Ring& r = *job.ring;
  out << "ring p=" << r.characteristic() << " vars=";
  for (int i = 0; i < r.num_vars(); ++i) out << (i ? "," : "") << r.var_name(i);
  out << " order=" << to_string(r.spec().order) << '\n';
  auto block = [&](const char* kind, const Ideal& ideal) {
    out << kind << ':';
    for (std::size_t i = 0; i < ideal.gens.size(); ++i) out << (i ? "; " : " ") << ideal.gens[i].to_string();
    out << '\n';
  };
  const bool sum = job.direct_sum || job.summands.size() > 1;
  for (const auto& s : job.summands) block(sum ? "summand" : "ideal", s);
  if (job.ann) block("ann", *job.ann);
  return out.str();
}

std::vector<std::string> default_var_names(int n) {
  static const char* small[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(n <= 4 ? small[i] : "x" + std::to_string(i + 1));
  return out;
}

Ideal gen_monomial_ideal(const RingPtr& ring, int max_deg, int num_gens, std::uint64_t seed) {
  if (max_deg < 1 || num_gens < 1) throw std::invalid_argument("gen_monomial_ideal: parameters must be positive");
  const int n = ring->num_vars();
  std::mt19937_64 g(seed);
  std::vector<Monomial> monos;
  for (int k = 0; k < num_gens; ++k) {
    const int d = 1 + static_cast<int>(bounded_draw(g, static_cast<std::uint64_t>(max_deg)));
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < d; ++s) ++e[bounded_draw(g, static_cast<std::uint64_t>(n))];
    monos.push_back(Monomial(std::span<const int>(e)));
  }
  std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return ring->compare(a, b) > 0;
  });
  Ideal out{ring, {}};
  std::vector<Monomial> kept;
  for (const auto& m : monos) {
    if (std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); })) continue;
    kept.push_back(m);
    out.gens.push_back(Polynomial::monomial(ring, m));
  }
  return out;
}

Ideal gen_generic_forms(const RingPtr& ring, const std::vector<int>& degrees, std::uint64_t seed, int retries) {
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("gen_generic_forms: degrees must be positive");
  std::mt19937_64 g(seed);
  const std::uint64_t p = ring->characteristic();
  for (int attempt = 0; attempt < retries; ++attempt) {
    Ideal out{ring, {}};
    for (int d : degrees) {
      std::vector<Term> terms;
      for (const auto& m : ring->monomials_of_degree(d)) terms.push_back({static_cast<Coeff>(bounded_draw(g, p)), m});
      out.gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    if (std::any_of(out.gens.begin(), out.gens.end(), [](const Polynomial& f) { return f.is_zero(); })) continue;
    if (codim_ideal(out) == static_cast<int>(degrees.size())) return out;
  }
  throw std::runtime_error("gen_generic_forms: no complete intersection after " + std::to_string(retries) + " draws");
}

JStrategy parse_j_strategy(const std::string& text) {
  JStrategy s;
  if (text == "self") return s;
  if (text == "ci:auto") {
    s.kind = JStrategy::CiAuto;
    return s;
  }
  if (text.rfind("ci:", 0) == 0) {
    try {
      std::size_t used = 0;
      int d = std::stoi(text.substr(3), &used);
      if (used == text.size() - 3 && d >= 1) {
        s.kind = JStrategy::CiDegree;
        s.degree = d;
        return s;
      }
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("unknown J strategy '" + text + "' (self, ci:<d>, ci:auto)");
}

std::string to_string(const JStrategy& s) {
  switch (s.kind) {
    case JStrategy::Self: return "self";
    case JStrategy::CiAuto: return "ci:auto";
    case JStrategy::CiDegree: return "ci:" + std::to_string(s.degree);
  }
  return "?";
}

const std::set<std::string>& all_checks() {
  static const std::set<std::string> all = {"codim1", "regthm", "main",  "maincor", "common_degree", "cor24",
                                            "ehu1",   "ehu2",   "conj",  "prop22",  "lemma21"};
  return all;
}

std::set<std::string> parse_checks(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string tag;
  while (std::getline(ss, tag, ',')) {
    if (tag.empty()) continue;
    if (tag == "all") {
      out.insert(all_checks().begin(), all_checks().end());
    } else if (all_checks().count(tag)) {
      out.insert(tag);
    } else {
      throw std::invalid_argument("unknown check '" + tag + "'");
    }
  }
  return out;
}

}  // namespace mfres
