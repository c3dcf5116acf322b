#pragma once

#include <cstddef>
#include <vector>

#include "mfres/field.hpp"

namespace mfres {

// Row-major dense matrix over F_p.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Coeff* row(std::size_t r) { return data_.data() + r * cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coeff> data_;
};

// Reference Gaussian elimination, single-threaded. The matrix is consumed.
std::size_t rank_serial(DenseMatrix m, const PrimeField& k);

// Same elimination with the row updates below each pivot distributed over OpenMP threads.
// Pivot choice is identical to rank_serial, so both return the same value on every input.
std::size_t rank_parallel(DenseMatrix m, const PrimeField& k);

// Picks the parallel kernel for large matrices.
std::size_t rank_mod_p(DenseMatrix m, const PrimeField& k);

int omp_max_threads();

}  // namespace mfres
