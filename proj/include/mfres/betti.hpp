#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mfres {

// Sentinel for "no shift" (T_i of an index beyond the resolution, reg of the zero module).
inline constexpr int kNegInf = std::numeric_limits<int>::min() / 4;

// beta_{i,j}: rank of the degree-j part of F_i in a minimal resolution. Only positive entries stored.
class BettiTable {
 public:
  BettiTable() = default;

  void add(int i, int j, int count);
  int at(int i, int j) const;
  bool empty() const { return entries_.empty(); }
  const std::map<std::pair<int, int>, int>& entries() const { return entries_; }

  // Largest homological index with a nonzero entry, -1 for the empty table.
  int max_index() const;
  int total(int i) const;

  // Rows j - i, columns i, in the usual computer-algebra layout.
  std::string grid() const;

  bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }
  bool operator!=(const BettiTable& o) const { return !(*this == o); }

 private:
  std::map<std::pair<int, int>, int> entries_;
};

// Maximal / minimal graded shifts T_i, t_i for 0 <= i <= pd, with derived pd and reg.
struct ShiftProfile {
  std::vector<int> max_shifts;
  std::vector<int> min_shifts;
  int pd = 0;
  int reg = 0;

  // T_i, or kNegInf outside 0..pd.
  int T(int i) const {
    return i < 0 || i > pd ? kNegInf : max_shifts[static_cast<std::size_t>(i)];
  }
  int t(int i) const {
    return i < 0 || i > pd ? kNegInf : min_shifts[static_cast<std::size_t>(i)];
  }
};

// Throws std::invalid_argument on an empty table (the zero module has no profile).
ShiftProfile shifts(const BettiTable& b);

// Profile from explicit T_i values (t_i set equal); used for evaluating bounds on given data.
ShiftProfile profile_from_max_shifts(std::vector<int> max_shifts);

}  // namespace mfres
