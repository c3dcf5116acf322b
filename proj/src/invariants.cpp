#include "mfres/invariants.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "mfres/random.hpp"

namespace mfres {

namespace {

// Largest set of variables containing the support of no lead monomial; -1 if some lead is 1.
int max_independent_set(int n, const std::vector<Monomial>& leads) {
  if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); })) return -1;
  int best = 0;
  const std::uint32_t full = n >= 32 ? 0xffffffffu : (1u << n) - 1;
  for (std::uint32_t mask = 0;; ++mask) {
    int size = std::popcount(mask);
    if (size > best &&
        std::none_of(leads.begin(), leads.end(), [&](const Monomial& m) { return m.supported_in(mask); }))
      best = size;
    if (mask == full) break;
  }
  return best;
}

GroebnerBasis ideal_gb(const Ideal& ideal, const Budget& budget) {
  auto module = make_free_module(ideal.ring, {0});
  std::vector<Vector> gens;
  for (const auto& f : ideal.gens)
    if (!f.is_zero()) gens.push_back(Vector::from_components(module, std::span<const Polynomial>(&f, 1)));
  return buchberger(module, gens, budget);
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& a, const RingPtr& ring) {
  const std::size_t r = a.size();
  std::vector<std::size_t> perm(r);
  for (std::size_t i = 0; i < r; ++i) perm[i] = i;
  Polynomial det(ring);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial term = Polynomial::constant(ring, 1);
    for (std::size_t i = 0; i < r && !term.is_zero(); ++i) term = term * a[i][perm[i]];
    if (term.is_zero()) continue;
    det = inversions % 2 ? det - term : det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

int dim_lead_term(const Ideal& ideal, const Budget& budget) {
  const int n = ideal.ring->num_vars();
  // dimension does not depend on the order, and degrevlex bases are the cheap ones
  GroebnerBasis gb = ideal_gb(ideal.with_order(MonomialOrder::DegRevLex), budget);
  std::vector<Monomial> leads;
  for (const auto& g : gb.elements) leads.push_back(g.lead().mono);
  return max_independent_set(n, leads);
}

int codim_ideal(const Ideal& ideal, const Budget& budget) {
  const int n = ideal.ring->num_vars();
  int d = dim_lead_term(ideal, budget);
  return d < 0 ? n + 1 : n - d;
}

std::optional<Ideal> fitting_ideal(const ModulePresentation& m, std::size_t max_minors) {
  const RingPtr& ring = m.ring();
  const int r = m.free->rank();
  Ideal fitt{ring, {}};
  if (r == 0) {
    fitt.gens.push_back(Polynomial::constant(ring, 1));
    return fitt;
  }
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& rel : m.relations)
    if (!rel.is_zero()) cols.push_back(rel.components());
  const std::size_t s = cols.size();
  if (s < static_cast<std::size_t>(r)) return fitt;  // Fitt_0 = 0
  if (r > 4) return std::nullopt;
  std::size_t count = 1;
  for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) {
    count = count * (s - i) / (i + 1);
    if (count > max_minors) return std::nullopt;
  }
  std::vector<std::size_t> pick(static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
  for (;;) {
    std::vector<std::vector<Polynomial>> a(static_cast<std::size_t>(r), std::vector<Polynomial>(static_cast<std::size_t>(r), Polynomial(ring)));
    for (std::size_t row = 0; row < static_cast<std::size_t>(r); ++row)
      for (std::size_t c = 0; c < pick.size(); ++c) a[row][c] = cols[pick[c]][row];
    Polynomial d = determinant(a, ring);
    if (!d.is_zero()) fitt.gens.push_back(d.monic());
    // next combination
    int i = r - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == s - static_cast<std::size_t>(r) + static_cast<std::size_t>(i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }
  return fitt;
}

int codim_lead_terms(const ModulePresentation& m, const Budget& budget) {
  const int n = m.ring()->num_vars();
  GroebnerBasis gb = buchberger(m.free, m.relations, budget);
  std::vector<std::vector<Monomial>> leads(static_cast<std::size_t>(m.free->rank()));
  for (const auto& g : gb.elements) leads[static_cast<std::size_t>(g.lead().comp)].push_back(g.lead().mono);
  int dim = -1;
  for (const auto& l : leads) dim = std::max(dim, max_independent_set(n, l));
  return dim < 0 ? n + 1 : n - dim;
}

int codim_structural(const ModulePresentation& m, const Budget& budget) {
  if (!m.is_direct_sum_of_cyclics()) throw std::invalid_argument("codim_structural needs a direct sum of cyclic modules");
  int best = m.ring()->num_vars() + 1;
  for (const auto& s : m.summands) best = std::min(best, codim_ideal(s, budget));
  return best;
}

bool is_zero_module(const ModulePresentation& m, const Budget& budget) {
  return codim_lead_terms(m, budget) == m.ring()->num_vars() + 1;
}

int codim_module(const ModulePresentation& m, const Budget& budget, CodimRoute* route) {
  const int n = m.ring()->num_vars();
  if (m.free->rank() == 0 || is_zero_module(m, budget)) {
    if (route) *route = CodimRoute::LeadTerms;
    return n + 1;
  }
  if (m.is_cyclic()) {
    if (route) *route = CodimRoute::Cyclic;
    return codim_ideal(m.summands.front(), budget);
  }
  if (auto fitt = fitting_ideal(m)) {
    if (route) *route = CodimRoute::Minors;
    return codim_ideal(*fitt, budget);
  }
  if (route) *route = CodimRoute::LeadTerms;
  return m.is_direct_sum_of_cyclics() ? codim_structural(m, budget) : codim_lead_terms(m, budget);
}

int depth_ab(const ShiftProfile& profile, int num_vars) { return num_vars - profile.pd; }

bool is_cohen_macaulay(const ModulePresentation& m, const Budget& budget) {
  BettiTable b = betti(resolve_minimal(m, budget));
  if (b.empty()) return false;
  return b.max_index() == codim_module(m, budget);
}

bool ann_contains(const Ideal& j, const ModulePresentation& m, const Budget& budget) {
  require_same_ring(j.ring, m.ring());
  GroebnerBasis gb = buchberger(m.free, m.relations, budget);
  for (const auto& f : j.gens) {
    if (f.is_zero()) continue;
    for (int k = 0; k < m.free->rank(); ++k)
      if (!submodule_membership(Vector::basis_term(m.free, k).times(f), gb)) return false;
  }
  return true;
}

std::optional<std::vector<Polynomial>> find_regular_sequence(const Ideal& ideal, int degree, int length,
                                                             std::uint64_t seed, int retries, const Budget& budget) {
  if (degree < 1) throw std::invalid_argument("find_regular_sequence: degree must be positive");
  if (length < 0) throw std::invalid_argument("find_regular_sequence: negative length");
  std::vector<Polynomial> seq;
  if (length == 0) return seq;
  const RingPtr& ring = ideal.ring;
  const int n = ring->num_vars();
  if (length > n || codim_ideal(ideal, budget) < length) return std::nullopt;

  auto prefix_ok = [&](const std::vector<Polynomial>& s) {
    return codim_ideal(Ideal{ring, s}, budget) == static_cast<int>(s.size());
  };

  // the given generators of degree d, greedily
  for (const auto& g : ideal.gens) {
    if (g.is_zero() || g.degree() != degree) continue;
    seq.push_back(g);
    if (!prefix_ok(seq)) seq.pop_back();
    if (static_cast<int>(seq.size()) == length) return seq;
  }

  // I_d is spanned by m * g with deg m = d - deg g
  std::vector<Polynomial> span;
  for (const auto& g : ideal.gens) {
    if (g.is_zero() || g.degree() > degree) continue;
    for (const auto& mono : ring->monomials_of_degree(degree - g.degree())) span.push_back(g.mul_term(1, mono));
  }
  if (span.empty()) return std::nullopt;

  std::mt19937_64 rng(seed);
  const std::uint64_t p = ring->characteristic();
  for (int attempt = 0; attempt < retries; ++attempt) {
    seq.clear();
    bool ok = true;
    while (ok && static_cast<int>(seq.size()) < length) {
      Polynomial f(ring);
      for (const auto& s : span) {
        Coeff c = static_cast<Coeff>(bounded_draw(rng, p));
        if (c == 0) continue;
        f = f + s.scaled(c);
      }
      if (f.is_zero()) {
        ok = false;
        break;
      }
      seq.push_back(f);
      ok = prefix_ok(seq);
    }
    if (ok) return seq;
  }
  return std::nullopt;
}

InvariantReport compute_invariants(const ModulePresentation& m, const BettiTable& b, const Budget& budget) {
  InvariantReport r;
  const int n = m.ring()->num_vars();
  r.char_used = m.ring()->characteristic();
  if (b.empty()) {
    r.zero_module = true;
    r.dim = -1;
    r.codim = n + 1;
    r.pd = -1;
    r.depth = n + 1;
    return r;
  }
  r.pd = b.max_index();
  r.depth = n - r.pd;
  r.codim = codim_module(m, budget);
  r.dim = n - r.codim;
  r.is_cm = r.pd == r.codim;
  return r;
}

}  // namespace mfres
