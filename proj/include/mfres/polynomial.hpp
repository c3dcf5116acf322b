#pragma once

#include <span>
#include <string>
#include <vector>

#include "mfres/errors.hpp"
#include "mfres/ring.hpp"

namespace mfres {

struct Term {
  Coeff coeff;
  Monomial mono;
};

// Homogeneous polynomial over F_p. Terms are nonzero and strictly descending in the ring order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  // Sorts, combines like terms and drops zeros; throws HomogeneityError on mixed degrees.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial variable(RingPtr ring, int index);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // Total degree, or -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  const Term& lead() const { return terms_.front(); }
  bool is_constant() const { return !terms_.empty() && terms_.front().mono.is_one(); }

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(Coeff c, const Monomial& m) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& g) const;
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

  std::string to_string() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}
  friend Polynomial normal_form(const Polynomial&, std::span<const Polynomial>);
  friend Polynomial add_scaled(const Polynomial&, const Polynomial&, Coeff, const Monomial&);

  RingPtr ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const RingPtr& a, const RingPtr& b);

// f + c*m*g, the basic merge step of reduction.
Polynomial add_scaled(const Polynomial& f, const Polynomial& g, Coeff c, const Monomial& m);

// Full remainder of f by the divisors: the largest reducible term is always reduced by the first
// divisor (in list order) whose lead monomial divides it.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> gens;

  // Smallest / largest degree among nonzero generators, -1 if none.
  int min_degree() const;
  int max_degree() const;
  bool is_monomial() const;
  std::string to_string() const;
  // Same generators over a copy of the ring with another monomial order.
  Ideal with_order(MonomialOrder order) const;
};

}  // namespace mfres
