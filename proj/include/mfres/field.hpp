#pragma once

#include <cstdint>
#include <stdexcept>

namespace mfres {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

// Arithmetic in F_p for a prime p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  Coeff from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  // Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

 private:
  std::uint32_t p_;
};

}  // namespace mfres
