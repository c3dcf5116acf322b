#pragma once

#include <chrono>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>

#include "mfres/errors.hpp"

namespace mfres {

// Per-job resource guard. A default-constructed budget never expires.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;
  static Budget with_timeout(double seconds, std::size_t max_terms = kDefaultMaxTerms) {
    Budget b;
    if (seconds > 0)
      b.deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
    b.max_terms_ = max_terms;
    return b;
  }

  void check() const {
    if (deadline_ && Clock::now() > *deadline_) throw BudgetExceeded("time budget exceeded");
  }
  // Guards the total number of stored terms of a computation (memory proxy).
  void check_terms(std::size_t terms) const {
    if (terms > max_terms_)
      throw BudgetExceeded("term budget exceeded (" + std::to_string(terms) + " terms)");
    check();
  }

  static constexpr std::size_t kDefaultMaxTerms = 50'000'000;

 private:
  std::optional<Clock::time_point> deadline_;
  std::size_t max_terms_ = std::numeric_limits<std::size_t>::max();
};

inline const Budget& unlimited_budget() {
  static const Budget b;
  return b;
}

}  // namespace mfres
