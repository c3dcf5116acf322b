#include "mfres/monomial.hpp"

#include <limits>
#include <string>

namespace mfres {

namespace {
constexpr int kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();
}

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("too many variables: at most " + std::to_string(kMaxVars));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > kMaxExponent)
      throw std::overflow_error("exponent out of range: " + std::to_string(exponents[i]));
    exps_[i] = static_cast<Exponent>(exponents[i]);
    degree_ += exponents[i];
  }
}

Monomial Monomial::variable(int index, int power) {
  if (index < 0 || index >= kMaxVars) throw std::out_of_range("variable index");
  if (power < 0 || power > kMaxExponent) throw std::overflow_error("exponent out of range");
  Monomial m;
  m.exps_[static_cast<std::size_t>(index)] = static_cast<Exponent>(power);
  m.degree_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = exps_[i] + other.exps_[i];
    if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] - other.exps_[i]);
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = exps_[i] > other.exps_[i] ? exps_[i] : other.exps_[i];
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace mfres
