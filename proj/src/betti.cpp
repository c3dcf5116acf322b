#include "mfres/betti.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mfres {

void BettiTable::add(int i, int j, int count) {
  if (count == 0) return;
  int& slot = entries_[{i, j}];
  slot += count;
  if (slot < 0) throw std::logic_error("negative Betti number");
  if (slot == 0) entries_.erase({i, j});
}

int BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::max_index() const {
  int m = -1;
  for (const auto& [key, v] : entries_) m = std::max(m, key.first);
  return m;
}

int BettiTable::total(int i) const {
  int s = 0;
  for (const auto& [key, v] : entries_)
    if (key.first == i) s += v;
  return s;
}

std::string BettiTable::grid() const {
  if (entries_.empty()) return "       0\ntotal: 0\n";
  int top = max_index();
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const auto& [key, v] : entries_) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(top + 1), 1);
  for (int i = 0; i <= top; ++i) {
    width[static_cast<std::size_t>(i)] = std::max(std::to_string(i).size(), std::to_string(total(i)).size());
    for (int r = lo; r <= hi; ++r)
      width[static_cast<std::size_t>(i)] = std::max(width[static_cast<std::size_t>(i)], std::to_string(at(i, i + r)).size());
  }
  std::size_t label = 6;
  for (int r = lo; r <= hi; ++r) label = std::max(label, std::to_string(r).size() + 1);
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  std::ostringstream out;
  out << std::string(label, ' ');
  for (int i = 0; i <= top; ++i) out << ' ' << pad(std::to_string(i), width[static_cast<std::size_t>(i)]);
  out << '\n' << pad("total:", label);
  for (int i = 0; i <= top; ++i) out << ' ' << pad(std::to_string(total(i)), width[static_cast<std::size_t>(i)]);
  out << '\n';
  for (int r = lo; r <= hi; ++r) {
    out << pad(std::to_string(r) + ":", label);
    for (int i = 0; i <= top; ++i) {
      int v = at(i, i + r);
      out << ' ' << pad(v == 0 ? "." : std::to_string(v), width[static_cast<std::size_t>(i)]);
    }
    out << '\n';
  }
  return out.str();
}

ShiftProfile shifts(const BettiTable& b) {
  if (b.empty()) throw std::invalid_argument("shifts: empty Betti table (zero module)");
  ShiftProfile p;
  p.pd = b.max_index();
  p.max_shifts.assign(static_cast<std::size_t>(p.pd + 1), kNegInf);
  p.min_shifts.assign(static_cast<std::size_t>(p.pd + 1), std::numeric_limits<int>::max());
  for (const auto& [key, v] : b.entries()) {
    auto i = static_cast<std::size_t>(key.first);
    p.max_shifts[i] = std::max(p.max_shifts[i], key.second);
    p.min_shifts[i] = std::min(p.min_shifts[i], key.second);
  }
  for (int i = 0; i <= p.pd; ++i)
    if (p.max_shifts[static_cast<std::size_t>(i)] == kNegInf)
      throw std::invalid_argument("shifts: gap in the Betti table at index " + std::to_string(i));
  p.reg = kNegInf;
  for (int i = 0; i <= p.pd; ++i) p.reg = std::max(p.reg, p.max_shifts[static_cast<std::size_t>(i)] - i);
  return p;
}

ShiftProfile profile_from_max_shifts(std::vector<int> max_shifts) {
  if (max_shifts.empty()) throw std::invalid_argument("profile needs at least T_0");
  ShiftProfile p;
  p.pd = static_cast<int>(max_shifts.size()) - 1;
  p.min_shifts = max_shifts;
  p.max_shifts = std::move(max_shifts);
  p.reg = kNegInf;
  for (int i = 0; i <= p.pd; ++i) p.reg = std::max(p.reg, p.max_shifts[static_cast<std::size_t>(i)] - i);
  return p;
}

}  // namespace mfres
