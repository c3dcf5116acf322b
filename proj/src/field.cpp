#include "mfres/field.hpp"

#include <string>

namespace mfres {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31))
    throw std::invalid_argument("characteristic must be below 2^31, got " + std::to_string(p));
  if (!is_prime(p))
    throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

}  // namespace mfres
