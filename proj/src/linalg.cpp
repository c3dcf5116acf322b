#include "mfres/linalg.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mfres {

namespace {

// Finds a pivot in column c at or below row r; returns rows() if none.
std::size_t find_pivot(DenseMatrix& m, std::size_t r, std::size_t c) {
  for (std::size_t i = r; i < m.rows(); ++i)
    if (m.at(i, c) != 0) return i;
  return m.rows();
}

void normalize_pivot_row(DenseMatrix& m, std::size_t r, std::size_t c, const PrimeField& k) {
  Coeff inv = k.inv(m.at(r, c));
  Coeff* row = m.row(r);
  for (std::size_t j = c; j < m.cols(); ++j) row[j] = k.mul(row[j], inv);
}

inline void eliminate_row(Coeff* target, const Coeff* pivot, std::size_t c, std::size_t cols, std::uint32_t p) {
  const std::uint64_t f = target[c];
  if (f == 0) return;
  const std::uint64_t nf = p - f;
  for (std::size_t j = c; j < cols; ++j) {
    if (pivot[j] == 0) continue;
    target[j] = static_cast<Coeff>((target[j] + nf * pivot[j]) % p);
  }
}

}  // namespace

std::size_t rank_serial(DenseMatrix m, const PrimeField& k) {
  const std::uint32_t p = k.characteristic();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = find_pivot(m, rank, c);
    if (piv == m.rows()) continue;
    if (piv != rank)
      std::swap_ranges(m.row(piv), m.row(piv) + m.cols(), m.row(rank));
    normalize_pivot_row(m, rank, c, k);
    const Coeff* prow = m.row(rank);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) eliminate_row(m.row(i), prow, c, m.cols(), p);
    ++rank;
  }
  return rank;
}

std::size_t rank_parallel(DenseMatrix m, const PrimeField& k) {
  const std::uint32_t p = k.characteristic();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = find_pivot(m, rank, c);
    if (piv == m.rows()) continue;
    if (piv != rank)
      std::swap_ranges(m.row(piv), m.row(piv) + m.cols(), m.row(rank));
    normalize_pivot_row(m, rank, c, k);
    const Coeff* prow = m.row(rank);
    const std::ptrdiff_t first = static_cast<std::ptrdiff_t>(rank) + 1;
    const std::ptrdiff_t last = static_cast<std::ptrdiff_t>(m.rows());
    const std::size_t cols = m.cols();
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = first; i < last; ++i)
      eliminate_row(m.row(static_cast<std::size_t>(i)), prow, c, cols, p);
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(DenseMatrix m, const PrimeField& k) {
  if (m.rows() * m.cols() >= 256 * 256 && omp_max_threads() > 1) return rank_parallel(std::move(m), k);
  return rank_serial(std::move(m), k);
}

int omp_max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace mfres
