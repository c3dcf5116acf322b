#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mfres/budget.hpp"
#include "mfres/module.hpp"

namespace mfres {

// Reduced Groebner basis of a homogeneous submodule. Elements are monic, no lead term divides
// another, and they are sorted by lead component and then lexicographically descending lead
// monomial (the ordering that keeps Schreyer towers short).
struct GroebnerBasis {
  ModulePtr module;
  std::vector<Vector> elements;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_discarded = 0;  // Gebauer-Moeller and product criteria
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

// Homogeneous Buchberger algorithm, normal strategy: work items (input generators and S-pairs)
// are processed by degree, then by insertion order.
// With minimal_inputs set, S-pairs of a degree go before the inputs of that degree, so an input
// with a nonzero remainder is a minimal generator; their indices are stored in increasing order.
GroebnerBasis buchberger(const ModulePtr& module, std::span<const Vector> generators,
                         const Budget& budget = unlimited_budget(), BuchbergerStats* stats = nullptr,
                         std::vector<int>* minimal_inputs = nullptr);

struct QuotientTerm {
  int divisor;
  Coeff coeff;
  Monomial mono;
};

// f = sum coeff*mono*divisors[divisor] + remainder.
struct Division {
  Vector remainder;
  std::vector<QuotientTerm> quotients;
};

Division divide(const Vector& f, std::span<const Vector> divisors, const Budget& budget = unlimited_budget());
Vector normal_form(const Vector& f, std::span<const Vector> divisors);

bool submodule_membership(const Vector& v, const GroebnerBasis& gb);

struct SyzygyModule {
  ModulePtr module;             // free module with one basis element per Groebner basis element
  std::vector<Vector> generators;  // Groebner basis of the syzygies in the induced Schreyer order
};

// Schreyer syzygies of a Groebner basis whose module carries a Schreyer (or plain term-over-
// position) order. Only pairs whose lead quotient is minimal for its component are kept.
SyzygyModule syzygy_basis(const GroebnerBasis& gb, const Budget& budget = unlimited_budget());

// Plain Buchberger S-vector of two elements with lead terms in the same component.
Vector s_vector(const Vector& f, const Vector& g);

}  // namespace mfres
