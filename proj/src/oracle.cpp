#include "mfres/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "mfres/linalg.hpp"

namespace mfres {

int default_degree_cap(const ModulePresentation& m) {
  const auto& tw = m.free->twists();
  if (tw.empty()) return 0;
  int cap = *std::max_element(tw.begin(), tw.end());
  for (const auto& r : m.relations)
    if (!r.is_zero()) cap += r.degree() - m.free->twist(r.lead().comp);
  return cap;
}

namespace {

std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(g); })) out.push_back(g);
  return out;
}

bool in_ideal(const Monomial& u, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(u); });
}

// Homology ranks of the Koszul complex restricted to one multidegree of S/I.
void multidegree_contribution(const std::vector<int>& a, int twist, const std::vector<Monomial>& gens,
                              const PrimeField& k, BettiTable& out) {
  const int n = static_cast<int>(a.size());
  std::uint32_t support = 0;
  int total = 0;
  for (int v = 0; v < n; ++v) {
    if (a[static_cast<std::size_t>(v)] > 0) support |= 1u << v;
    total += a[static_cast<std::size_t>(v)];
  }
  const Monomial xa{std::span<const int>(a)};
  // chain groups indexed by subset size
  std::vector<std::vector<std::uint32_t>> chains(static_cast<std::size_t>(n + 1));
  std::vector<int> pos_of(static_cast<std::size_t>(1u << n), -1);
  for (std::uint32_t A = support;; A = (A - 1) & support) {
    Monomial xA;
    for (int v = 0; v < n; ++v)
      if (A & (1u << v)) xA = xA * Monomial::variable(v);
    if (!in_ideal(xa / xA, gens)) {
      auto& bucket = chains[static_cast<std::size_t>(std::popcount(A))];
      pos_of[A] = static_cast<int>(bucket.size());
      bucket.push_back(A);
    }
    if (A == 0) break;
  }
  std::vector<std::size_t> rank(static_cast<std::size_t>(n + 2), 0);
  for (int i = 1; i <= n; ++i) {
    const auto& src = chains[static_cast<std::size_t>(i)];
    const auto& dst = chains[static_cast<std::size_t>(i - 1)];
    if (src.empty() || dst.empty()) continue;
    DenseMatrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      std::uint32_t A = src[c];
      int t = 0;
      for (int v = 0; v < n; ++v) {
        if (!(A & (1u << v))) continue;
        std::uint32_t B = A & ~(1u << v);
        int row = pos_of[B];
        if (row >= 0) m.at(static_cast<std::size_t>(row), c) = (t % 2 == 0) ? 1 : k.neg(1);
        ++t;
      }
    }
    rank[static_cast<std::size_t>(i)] = rank_serial(std::move(m), k);
  }
  for (int i = 0; i <= n; ++i) {
    long dim = static_cast<long>(chains[static_cast<std::size_t>(i)].size());
    long b = dim - static_cast<long>(rank[static_cast<std::size_t>(i)]) - static_cast<long>(rank[static_cast<std::size_t>(i + 1)]);
    if (b > 0) out.add(i, total + twist, static_cast<int>(b));
  }
}

OracleResult monomial_oracle(const ModulePresentation& m, int cap, const Budget& budget) {
  const Ring& ring = *m.ring();
  const int n = ring.num_vars();
  const int rank = m.free->rank();
  std::vector<std::vector<Monomial>> gens(static_cast<std::size_t>(rank));
  for (const auto& r : m.relations)
    if (!r.is_zero()) gens[static_cast<std::size_t>(r.lead().comp)].push_back(r.lead().mono);

  struct Job {
    std::vector<int> a;
    int comp;
  };
  std::vector<Job> jobs;
  int needed = 0;
  for (int c = 0; c < rank; ++c) {
    auto& g = gens[static_cast<std::size_t>(c)];
    g = minimal_monomials(std::move(g));
    const int twist = m.free->twist(c);
    Monomial L;
    for (const auto& x : g) L = L.lcm(x);
    needed = std::max(needed, L.degree() + twist);
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    // odometer over 0 <= a <= L
    for (;;) {
      int deg = 0;
      for (int v : a) deg += v;
      if (deg + twist <= cap) jobs.push_back({a, c});
      int v = 0;
      while (v < n && a[static_cast<std::size_t>(v)] == L.exponent(v)) a[static_cast<std::size_t>(v++)] = 0;
      if (v == n) break;
      ++a[static_cast<std::size_t>(v)];
    }
  }

  OracleResult res;
  res.degree_cap = cap;
  const PrimeField& k = ring.field();
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(jobs.size());
  std::vector<BettiTable> partial(static_cast<std::size_t>(omp_max_threads()));
  bool expired = false;
#pragma omp parallel
  {
    BettiTable local;
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t x = 0; x < count; ++x) {
      if (expired) continue;
      if ((x & 63) == 0) {
        try {
          budget.check();
        } catch (const BudgetExceeded&) {
#pragma omp atomic write
          expired = true;
          continue;
        }
      }
      const Job& job = jobs[static_cast<std::size_t>(x)];
      multidegree_contribution(job.a, m.free->twist(job.comp), gens[static_cast<std::size_t>(job.comp)], k, local);
    }
#pragma omp critical
    for (const auto& [key, v] : local.entries()) res.table.add(key.first, key.second, v);
  }
  if (expired) throw BudgetExceeded("time budget exceeded in Koszul oracle");
  res.complete = cap >= needed;
  if (!res.complete)
    res.warning = "partial table: degree cap " + std::to_string(cap) + " is below the lcm bound " + std::to_string(needed);
  return res;
}

// Standard monomials of the lead-term module in each degree, with lookup.
class GradedBasis {
 public:
  GradedBasis(const ModulePresentation& m, const GroebnerBasis& gb, int max_degree) : ring_(*m.ring()) {
    const int rank = m.free->rank();
    std::vector<std::vector<Monomial>> leads(static_cast<std::size_t>(rank));
    for (const auto& g : gb.elements) leads[static_cast<std::size_t>(g.lead().comp)].push_back(g.lead().mono);
    basis_.resize(static_cast<std::size_t>(max_degree + 1));
    index_.resize(static_cast<std::size_t>(max_degree + 1));
    for (int d = 0; d <= max_degree; ++d)
      for (int c = 0; c < rank; ++c) {
        int e = d - m.free->twist(c);
        if (e < 0) continue;
        for (const auto& u : ring_.monomials_of_degree(e)) {
          if (in_ideal(u, leads[static_cast<std::size_t>(c)])) continue;
          index_[static_cast<std::size_t>(d)][{c, u}] = static_cast<int>(basis_[static_cast<std::size_t>(d)].size());
          basis_[static_cast<std::size_t>(d)].push_back({c, u});
        }
      }
  }

  int max_degree() const { return static_cast<int>(basis_.size()) - 1; }
  std::size_t dim(int d) const {
    return d < 0 || d > max_degree() ? 0 : basis_[static_cast<std::size_t>(d)].size();
  }
  const std::pair<int, Monomial>& element(int d, std::size_t i) const { return basis_[static_cast<std::size_t>(d)][i]; }
  int index_of(int d, int comp, const Monomial& u) const {
    const auto& idx = index_[static_cast<std::size_t>(d)];
    auto it = idx.find({comp, u});
    if (it == idx.end()) throw std::logic_error("normal form produced a non-standard monomial");
    return it->second;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<int, Monomial>& k) const { return k.second.hash() * 31 + static_cast<std::size_t>(k.first); }
  };
  const Ring& ring_;
  std::vector<std::vector<std::pair<int, Monomial>>> basis_;
  std::vector<std::unordered_map<std::pair<int, Monomial>, int, KeyHash>> index_;
};

}  // namespace

OracleResult koszul_betti_oracle_graded(const ModulePresentation& m, int cap, const Budget& budget) {
  const Ring& ring = *m.ring();
  const PrimeField& k = ring.field();
  const int n = ring.num_vars();
  GroebnerBasis gb = buchberger(m.free, m.relations, budget);
  GradedBasis B(m, gb, std::max(cap, 0) + 1);

  // multiplication by x_v on M_d -> M_{d+1}, as sparse coordinate lists
  using Sparse = std::vector<std::pair<int, Coeff>>;
  std::vector<std::vector<std::vector<Sparse>>> mult(static_cast<std::size_t>(cap + 1));
  for (int d = 0; d < cap; ++d) {
    auto& md = mult[static_cast<std::size_t>(d)];
    md.resize(B.dim(d));
    for (std::size_t i = 0; i < B.dim(d); ++i) {
      budget.check();
      const auto& [comp, u] = B.element(d, i);
      md[i].resize(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        Vector nf = normal_form(Vector::basis_term(m.free, comp, u * Monomial::variable(v)), gb.elements);
        for (const auto& t : nf.terms()) md[i][static_cast<std::size_t>(v)].push_back({B.index_of(d + 1, t.comp, t.mono), t.coeff});
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> subsets(static_cast<std::size_t>(n + 1));
  std::vector<int> subset_pos(static_cast<std::size_t>(1u << n), -1);
  for (std::uint32_t A = 0; A < (1u << n); ++A) {
    auto& s = subsets[static_cast<std::size_t>(std::popcount(A))];
    subset_pos[A] = static_cast<int>(s.size());
    s.push_back(A);
  }

  // rank[i][j] of d_i : (K_i (x) M)_j -> (K_{i-1} (x) M)_j
  std::vector<std::vector<std::size_t>> rank(static_cast<std::size_t>(n + 2), std::vector<std::size_t>(static_cast<std::size_t>(cap + 1), 0));
  std::vector<std::pair<int, int>> work;
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= cap; ++j)
      if (B.dim(j - i) > 0 && B.dim(j - i + 1) > 0) work.push_back({i, j});
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(work.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t x = 0; x < count; ++x) {
    auto [i, j] = work[static_cast<std::size_t>(x)];
    const int d = j - i;
    const auto& src = subsets[static_cast<std::size_t>(i)];
    const auto& dst = subsets[static_cast<std::size_t>(i - 1)];
    const std::size_t bd = B.dim(d), bd1 = B.dim(d + 1);
    DenseMatrix mat(dst.size() * bd1, src.size() * bd);
    for (std::size_t a = 0; a < src.size(); ++a) {
      const std::uint32_t A = src[a];
      for (std::size_t u = 0; u < bd; ++u) {
        const std::size_t col = a * bd + u;
        int t = 0;
        for (int v = 0; v < n; ++v) {
          if (!(A & (1u << v))) continue;
          const std::size_t row_block = static_cast<std::size_t>(subset_pos[A & ~(1u << v)]) * bd1;
          for (const auto& [idx, c] : mult[static_cast<std::size_t>(d)][u][static_cast<std::size_t>(v)]) {
            Coeff val = (t % 2 == 0) ? c : k.neg(c);
            Coeff& slot = mat.at(row_block + static_cast<std::size_t>(idx), col);
            slot = k.add(slot, val);
          }
          ++t;
        }
      }
    }
    rank[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rank_serial(std::move(mat), k);
  }

  OracleResult res;
  res.degree_cap = cap;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= cap; ++j) {
      long dim = static_cast<long>(subsets[static_cast<std::size_t>(i)].size() * B.dim(j - i));
      long b = dim - static_cast<long>(rank[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) -
               static_cast<long>(rank[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)]);
      if (b > 0) res.table.add(i, j, static_cast<int>(b));
    }
  // complete if M vanishes from some degree e above every generator with e + n - 1 <= cap
  const auto& tw = m.free->twists();
  const int top_twist = tw.empty() ? -1 : *std::max_element(tw.begin(), tw.end());
  for (int e = std::max(top_twist + 1, 0); e + n - 1 <= cap; ++e)
    if (B.dim(e) == 0) {
      res.complete = true;
      break;
    }
  if (tw.empty()) res.complete = true;
  if (!res.complete)
    res.warning = "partial table: cannot certify completeness at degree cap " + std::to_string(cap);
  return res;
}

OracleResult koszul_betti_oracle(const ModulePresentation& m, std::optional<int> degree_cap, const Budget& budget) {
  const int cap = degree_cap.value_or(default_degree_cap(m));
  if (m.is_monomial()) return monomial_oracle(m, cap, budget);
  return koszul_betti_oracle_graded(m, cap, budget);
}

std::vector<long> hilbert_function(const ModulePresentation& m, int max_degree) {
  GroebnerBasis gb = buchberger(m.free, m.relations);
  GradedBasis B(m, gb, max_degree);
  std::vector<long> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(static_cast<long>(B.dim(d)));
  return out;
}

std::vector<long> hilbert_from_betti(const BettiTable& b, int num_vars, int max_degree) {
  auto binom = [](long nn, long kk) -> long {
    if (kk < 0 || nn < kk) return 0;
    long r = 1;
    for (long x = 1; x <= kk; ++x) r = r * (nn - kk + x) / x;
    return r;
  };
  std::vector<long> out(static_cast<std::size_t>(max_degree + 1), 0);
  for (const auto& [key, beta] : b.entries()) {
    const long sign = key.first % 2 == 0 ? 1 : -1;
    for (int d = key.second; d <= max_degree; ++d)
      if (d >= 0) out[static_cast<std::size_t>(d)] += sign * beta * binom(d - key.second + num_vars - 1, num_vars - 1);
  }
  return out;
}

}  // namespace mfres
