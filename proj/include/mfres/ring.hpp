#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mfres/field.hpp"
#include "mfres/monomial.hpp"

namespace mfres {

enum class MonomialOrder { DegRevLex, DegLex, Lex };

std::string to_string(MonomialOrder order);
MonomialOrder parse_monomial_order(const std::string& name);

struct RingSpec {
  std::uint32_t characteristic = 32003;
  std::vector<std::string> var_names;
  MonomialOrder order = MonomialOrder::DegRevLex;
};

// Standard-graded polynomial ring F_p[x_1..x_n] with a fixed global monomial order.
class Ring {
 public:
  explicit Ring(RingSpec spec);

  const RingSpec& spec() const { return spec_; }
  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  int num_vars() const { return static_cast<int>(spec_.var_names.size()); }
  const std::string& var_name(int i) const { return spec_.var_names[static_cast<std::size_t>(i)]; }
  // -1 when the name is not a ring variable.
  int var_index(const std::string& name) const;

  // Returns 1 if a > b, -1 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (spec_.order) {
      case MonomialOrder::DegRevLex:
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        return a.compare_revlex_tail(b);
      case MonomialOrder::DegLex:
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        return a.compare_lex(b);
      case MonomialOrder::Lex:
        return a.compare_lex(b);
    }
    return 0;
  }

  std::string format(const Monomial& m) const;
  // All monomials of total degree d, in descending monomial order.
  std::vector<Monomial> monomials_of_degree(int d) const;

 private:
  RingSpec spec_;
  PrimeField field_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(RingSpec spec);
RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::DegRevLex);

}  // namespace mfres
