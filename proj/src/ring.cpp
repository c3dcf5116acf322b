#include "mfres/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace mfres {

std::string to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::DegRevLex: return "degrevlex";
    case MonomialOrder::DegLex: return "deglex";
    case MonomialOrder::Lex: return "lex";
  }
  return "?";
}

MonomialOrder parse_monomial_order(const std::string& name) {
  if (name == "degrevlex" || name == "grevlex") return MonomialOrder::DegRevLex;
  if (name == "deglex" || name == "glex") return MonomialOrder::DegLex;
  if (name == "lex") return MonomialOrder::Lex;
  throw std::invalid_argument("unknown monomial order '" + name + "'");
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Ring::Ring(RingSpec spec) : spec_(std::move(spec)), field_(spec_.characteristic) {
  if (spec_.var_names.empty()) throw std::invalid_argument("ring needs at least one variable");
  if (spec_.var_names.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
  std::set<std::string> seen;
  for (const auto& v : spec_.var_names) {
    if (!valid_identifier(v)) throw std::invalid_argument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
}

int Ring::var_index(const std::string& name) const {
  auto it = std::find(spec_.var_names.begin(), spec_.var_names.end(), name);
  return it == spec_.var_names.end() ? -1 : static_cast<int>(it - spec_.var_names.begin());
}

std::string Ring::format(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < num_vars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::vector<Monomial> Ring::monomials_of_degree(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const int n = num_vars();
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  // enumerate compositions of d into n parts
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.emplace_back(std::span<const int>(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(var)] = k;
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(),
            [this](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
  return out;
}

RingPtr make_ring(RingSpec spec) { return std::make_shared<const Ring>(std::move(spec)); }

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars, MonomialOrder order) {
  return make_ring(RingSpec{p, std::move(vars), order});
}

}  // namespace mfres
