// Serial vs OpenMP rank kernels, plus the two oracle routes on one module.
// Usage: bench_rank [max_size] [repeats]
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>

#include "mfres/harness.hpp"
#include "mfres/linalg.hpp"
#include "mfres/random.hpp"

using namespace mfres;

namespace {

using Clock = std::chrono::steady_clock;

// rows x cols with prescribed rank r (product of random r-wide factors)
DenseMatrix low_rank(std::size_t rows, std::size_t cols, std::size_t r, const PrimeField& k, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  DenseMatrix a(rows, r), b(r, cols), m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < r; ++j) a.at(i, j) = static_cast<Coeff>(bounded_draw(g, k.characteristic()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) b.at(i, j) = static_cast<Coeff>(bounded_draw(g, k.characteristic()));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t t = 0; t < r; ++t) {
      const Coeff x = a.at(i, t);
      if (x == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = k.add(m.at(i, j), k.mul(x, b.at(t, j)));
    }
  return m;
}

template <class F>
double best_of(int repeats, F&& f) {
  double best = 1e30;
  for (int k = 0; k < repeats; ++k) {
    auto t0 = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t max_size = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 1024;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  const PrimeField k(32003);
  std::cout << "threads " << omp_max_threads() << "\n";
  std::cout << std::setw(6) << "size" << std::setw(8) << "rank" << std::setw(12) << "serial ms" << std::setw(12)
            << "omp ms" << std::setw(9) << "speedup" << "\n";
  bool agree = true;
  for (std::size_t n = 128; n <= max_size; n *= 2) {
    DenseMatrix m = low_rank(n, n, n - n / 8, k, n);
    std::size_t rs = 0, rp = 0;
    double ts = best_of(repeats, [&] { rs = rank_serial(m, k); });
    double tp = best_of(repeats, [&] { rp = rank_parallel(m, k); });
    agree = agree && rs == rp && rs == n - n / 8;
    std::cout << std::setw(6) << n << std::setw(8) << rs << std::setw(12) << std::fixed << std::setprecision(2) << ts
              << std::setw(12) << tp << std::setw(9) << ts / tp << (rs == rp ? "" : "  MISMATCH") << "\n";
  }

  // oracle routes on a monomial ideal in 5 variables
  auto ring = make_ring(32003, default_var_names(5));
  ModulePresentation m = cyclic_module(gen_monomial_ideal(ring, 4, 8, 3));
  const int cap = default_degree_cap(m);
  BettiTable a, b;
  double tm = best_of(repeats, [&] { a = koszul_betti_oracle(m, cap).table; });
  double tg = best_of(repeats, [&] { b = koszul_betti_oracle_graded(m, cap).table; });
  double tr = best_of(repeats, [&] { resolve_minimal(m); });
  agree = agree && a == b;
  std::cout << "oracle on " << m.summands.front().to_string() << " (cap " << cap << "): multigraded "
            << std::setprecision(2) << tm << " ms, graded " << tg << " ms, resolution " << tr << " ms"
            << (a == b ? "" : "  MISMATCH") << "\n";
  return agree ? 0 : 1;
}
