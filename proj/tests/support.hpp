#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "mfres/parse.hpp"
#include "mfres/resolution.hpp"

namespace mfres::test {

inline RingPtr ring(std::initializer_list<const char*> vars, std::uint32_t p = 32003,
                    MonomialOrder order = MonomialOrder::DegRevLex) {
  return make_ring(p, std::vector<std::string>(vars.begin(), vars.end()), order);
}

inline Polynomial poly(const RingPtr& r, const std::string& text) { return parse_polynomial(r, text); }

inline Ideal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  Ideal out{r, {}};
  for (const char* g : gens) out.gens.push_back(parse_polynomial(r, g));
  return out;
}

inline BettiTable table(std::initializer_list<std::tuple<int, int, int>> entries) {
  BettiTable b;
  for (auto [i, j, v] : entries) b.add(i, j, v);
  return b;
}

// Reduced Groebner basis of an ideal as polynomials.
inline std::vector<Polynomial> gb_polys(const Ideal& i) {
  ModulePresentation m = cyclic_module(i);
  std::vector<Polynomial> out;
  for (const auto& v : buchberger(m.free, m.relations).elements) out.push_back(v.component(0));
  return out;
}

// Random homogeneous form of degree d with about `density` of the monomials present.
inline Polynomial random_form(const RingPtr& r, int d, std::mt19937_64& g, double density = 0.5) {
  std::vector<Term> terms;
  std::uniform_int_distribution<Coeff> coeff(1, r->characteristic() - 1);
  std::bernoulli_distribution keep(density);
  for (const auto& m : r->monomials_of_degree(d))
    if (keep(g)) terms.push_back({coeff(g), m});
  return Polynomial::from_terms(r, std::move(terms));
}

}  // namespace mfres::test
