#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>

namespace mfres {

// Upper bound on the number of ring variables; exponent vectors are stored inline.
inline constexpr int kMaxVars = 16;

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(int index, int power = 1);

  int exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }
  // Support contained in the variable set encoded by `mask` (bit i = variable i).
  bool supported_in(std::uint32_t mask) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exps_[i] != 0 && !(mask & (1u << i))) return false;
    return true;
  }

  // Throws std::overflow_error when an exponent leaves the 16-bit range.
  Monomial operator*(const Monomial& other) const;
  // Precondition: other divides *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

  // Lexicographic comparison of exponent vectors with x_0 > x_1 > ... (-1, 0, 1).
  int compare_lex(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exps_[i] != other.exps_[i]) return exps_[i] > other.exps_[i] ? 1 : -1;
    return 0;
  }
  int compare_revlex_tail(const Monomial& other) const {
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (exps_[i] != other.exps_[i]) return exps_[i] < other.exps_[i] ? 1 : -1;
    return 0;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace mfres
