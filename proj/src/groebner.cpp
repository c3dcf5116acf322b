#include "mfres/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace mfres {

// Division of a vector by a list of divisors, reducing the largest reducible term first.
class Reducer {
 public:
  Reducer(std::span<const Vector> divisors, const FreeModule& module)
      : divisors_(divisors), by_comp_(static_cast<std::size_t>(module.rank())) {
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i].is_zero()) throw std::invalid_argument("division by the zero vector");
      by_comp_[static_cast<std::size_t>(divisors[i].lead().comp)].push_back(static_cast<int>(i));
    }
  }

  Division run(const Vector& f, const Budget& budget, bool record) const {
    const PrimeField& k = f.ring()->field();
    Division out{f, {}};
    std::vector<VTerm>& h = out.remainder.terms_;
    std::size_t pos = 0;
    std::size_t steps = 0;
    while (pos < h.size()) {
      const VTerm& t = h[pos];
      int hit = -1;
      for (int idx : by_comp_[static_cast<std::size_t>(t.comp)])
        if (divisors_[static_cast<std::size_t>(idx)].lead().mono.divides(t.mono)) {
          hit = idx;
          break;
        }
      if (hit < 0) {
        ++pos;
        continue;
      }
      if ((++steps & 255) == 0) budget.check();
      const Vector& g = divisors_[static_cast<std::size_t>(hit)];
      Coeff q = k.div(t.coeff, g.lead().coeff);
      Monomial m = t.mono / g.lead().mono;
      if (record) out.quotients.push_back({hit, q, m});
      Vector tail(f.module(), std::vector<VTerm>(h.begin() + static_cast<std::ptrdiff_t>(pos), h.end()));
      Vector reduced = add_scaled(tail, g, k.neg(q), m);
      h.resize(pos);
      h.insert(h.end(), reduced.terms_.begin(), reduced.terms_.end());
    }
    return out;
  }

 private:
  std::span<const Vector> divisors_;
  std::vector<std::vector<int>> by_comp_;
};

Division divide(const Vector& f, std::span<const Vector> divisors, const Budget& budget) {
  for (const auto& d : divisors)
    if (d.module() != f.module()) throw std::invalid_argument("divide: module mismatch");
  return Reducer(divisors, *f.module()).run(f, budget, true);
}

Vector normal_form(const Vector& f, std::span<const Vector> divisors) {
  for (const auto& d : divisors)
    if (d.module() != f.module()) throw std::invalid_argument("normal_form: module mismatch");
  return Reducer(divisors, *f.module()).run(f, unlimited_budget(), false).remainder;
}

bool submodule_membership(const Vector& v, const GroebnerBasis& gb) {
  if (v.is_zero()) return true;
  if (v.module()->rank() != gb.module->rank()) throw std::invalid_argument("membership: rank mismatch");
  Vector w = v.module() == gb.module ? v : v.rebased(gb.module);
  return normal_form(w, gb.elements).is_zero();
}

Vector s_vector(const Vector& f, const Vector& g) {
  if (f.lead().comp != g.lead().comp) throw std::invalid_argument("s_vector: lead components differ");
  const PrimeField& k = f.ring()->field();
  Monomial l = f.lead().mono.lcm(g.lead().mono);
  Vector a = f.mul_term(k.inv(f.lead().coeff), l / f.lead().mono);
  return add_scaled(a, g, k.neg(k.inv(g.lead().coeff)), l / g.lead().mono);
}

namespace {

struct Item {
  int degree;
  long seq;
  int i;  // generator index encoded as -1-k when j < 0
  int j;
  Monomial lcm;
  bool alive = true;
};

bool lex_desc_order(const Vector& a, const Vector& b) {
  if (a.lead().comp != b.lead().comp) return a.lead().comp < b.lead().comp;
  return a.lead().mono.compare_lex(b.lead().mono) > 0;
}

}  // namespace

GroebnerBasis buchberger(const ModulePtr& module, std::span<const Vector> generators, const Budget& budget,
                         BuchbergerStats* stats, std::vector<int>* minimal_inputs) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  if (minimal_inputs) minimal_inputs->clear();
  const bool ideal_case = module->rank() == 1;
  std::vector<Vector> G;
  std::vector<Item> items;
  long seq = 0;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const Vector& g = generators[k];
    if (g.module() != module) throw std::invalid_argument("buchberger: generator in a different module");
    if (g.is_zero()) continue;
    items.push_back({g.degree(), seq++, -1 - static_cast<int>(k), -1, Monomial{}});
  }

  auto pair_degree = [&](int comp, const Monomial& l) { return l.degree() + module->twist(comp); };

  auto update = [&](int t) {
    const Vector& h = G[static_cast<std::size_t>(t)];
    const int comp = h.lead().comp;
    const Monomial& lh = h.lead().mono;
    // B criterion on existing pairs
    for (auto& it : items) {
      if (!it.alive || it.j < 0) continue;
      const Vector& gi = G[static_cast<std::size_t>(it.i)];
      if (gi.lead().comp != comp || !lh.divides(it.lcm)) continue;
      const Vector& gj = G[static_cast<std::size_t>(it.j)];
      if (gi.lead().mono.lcm(lh) != it.lcm && gj.lead().mono.lcm(lh) != it.lcm) {
        it.alive = false;
        ++st.pairs_discarded;
      }
    }
    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < t; ++i) {
      const Vector& g = G[static_cast<std::size_t>(i)];
      if (g.lead().comp != comp) continue;
      cands.push_back({i, g.lead().mono.lcm(lh), ideal_case && g.lead().mono.coprime(lh)});
    }
    st.pairs_created += cands.size();
    // M criterion: drop pairs whose lcm is a proper multiple of another candidate's lcm
    for (auto& a : cands)
      for (const auto& b : cands)
        if (&a != &b && b.lcm.divides(a.lcm) && b.lcm != a.lcm) {
          a.keep = false;
          break;
        }
    // F criterion: one pair per lcm; if any pair with that lcm is coprime, none is needed
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (!cands[x].keep) continue;
      bool any_coprime = cands[x].coprime;
      for (std::size_t y = x + 1; y < cands.size(); ++y)
        if (cands[y].keep && cands[y].lcm == cands[x].lcm) {
          any_coprime = any_coprime || cands[y].coprime;
          cands[y].keep = false;
        }
      if (any_coprime) cands[x].keep = false;
    }
    for (const auto& c : cands) {
      if (!c.keep) {
        ++st.pairs_discarded;
        continue;
      }
      items.push_back({pair_degree(comp, c.lcm), seq++, c.i, t, c.lcm});
    }
  };

  std::size_t stored_terms = 0;
  for (;;) {
    budget.check();
    int d = -1;
    for (const auto& it : items)
      if (it.alive && (d < 0 || it.degree < d)) d = it.degree;
    if (d < 0) break;
    std::vector<std::size_t> batch;
    for (std::size_t x = 0; x < items.size(); ++x)
      if (items[x].alive && items[x].degree == d) batch.push_back(x);
    std::sort(batch.begin(), batch.end(), [&](std::size_t a, std::size_t b) {
      if (minimal_inputs && (items[a].j < 0) != (items[b].j < 0)) return items[b].j < 0;
      return items[a].seq < items[b].seq;
    });
    for (std::size_t x : batch) {
      if (!items[x].alive) continue;
      items[x].alive = false;
      Item it = items[x];
      Vector v = it.j < 0 ? generators[static_cast<std::size_t>(-1 - it.i)]
                          : s_vector(G[static_cast<std::size_t>(it.i)], G[static_cast<std::size_t>(it.j)]);
      if (it.j >= 0) ++st.pairs_reduced;
      Vector r = divide(v, G, budget).remainder;  // quotients unused here
      if (r.is_zero()) {
        if (it.j >= 0) ++st.zero_reductions;
        continue;
      }
      if (r.degree() < d) throw std::logic_error("buchberger: degree dropped during reduction");
      if (minimal_inputs && it.j < 0) minimal_inputs->push_back(-1 - it.i);
      stored_terms += r.size();
      budget.check_terms(stored_terms);
      G.push_back(r.monic());
      update(static_cast<int>(G.size()) - 1);
    }
    items.erase(std::remove_if(items.begin(), items.end(), [](const Item& it) { return !it.alive; }), items.end());
  }

  // inter-reduce tails; leads are already pairwise non-divisible
  std::vector<Vector> reduced;
  reduced.reserve(G.size());
  for (std::size_t a = 0; a < G.size(); ++a) {
    std::vector<Vector> others;
    others.reserve(G.size() - 1);
    for (std::size_t b = 0; b < G.size(); ++b)
      if (b != a) others.push_back(G[b]);
    Vector r = normal_form(G[a], others);
    if (r.is_zero() || r.lead().mono != G[a].lead().mono || r.lead().comp != G[a].lead().comp)
      throw std::logic_error("buchberger: basis not minimal");
    reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), lex_desc_order);
  if (minimal_inputs) std::sort(minimal_inputs->begin(), minimal_inputs->end());
  return {module, std::move(reduced)};
}

SyzygyModule syzygy_basis(const GroebnerBasis& gb, const Budget& budget) {
  const FreeModule& F = *gb.module;
  if (F.kind() != ModuleOrderKind::Schreyer)
    throw std::invalid_argument("syzygy_basis needs a Schreyer or term-over-position order");
  const auto& elems = gb.elements;
  const std::size_t s = elems.size();

  std::vector<int> twists;
  std::vector<Monomial> tmono;
  std::vector<int> paths;
  const int plen = F.path_len() + 1;
  twists.reserve(s);
  for (const auto& g : elems) {
    if (g.is_zero()) throw std::invalid_argument("syzygy_basis: zero basis element");
    const VTerm& lt = g.lead();
    twists.push_back(g.degree());
    tmono.push_back(F.has_schreyer_data() ? lt.mono * F.schreyer_monomial(lt.comp) : lt.mono);
    if (F.has_schreyer_data()) {
      auto p = F.path(lt.comp);
      paths.insert(paths.end(), p.begin(), p.end());
    }
    paths.push_back(lt.comp);
  }
  auto next = std::make_shared<const FreeModule>(F.ring(), std::move(twists), std::move(tmono), std::move(paths), plen);

  const PrimeField& k = F.ring()->field();
  std::vector<Vector> syz;
  std::size_t stored_terms = 0;
  for (std::size_t i = 0; i < s; ++i) {
    const VTerm& li = elems[i].lead();
    struct Cand {
      std::size_t j;
      Monomial q;
    };
    std::vector<Cand> cands;
    for (std::size_t j = i + 1; j < s; ++j) {
      const VTerm& lj = elems[j].lead();
      if (lj.comp != li.comp) continue;
      cands.push_back({j, li.mono.lcm(lj.mono) / li.mono});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.q.degree() < b.q.degree(); });
    std::vector<Cand> kept;
    for (const auto& c : cands) {
      bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Cand& o) { return o.q.divides(c.q); });
      if (!redundant) kept.push_back(c);
    }
    for (const auto& c : kept) {
      budget.check();
      const Vector& gi = elems[i];
      const Vector& gj = elems[c.j];
      Monomial qj = li.mono.lcm(gj.lead().mono) / gj.lead().mono;
      Coeff ci = k.inv(gi.lead().coeff);
      Coeff cj = k.neg(k.inv(gj.lead().coeff));
      Vector sv = add_scaled(gi.mul_term(ci, c.q), gj, cj, qj);
      Division div = divide(sv, elems, budget);
      if (!div.remainder.is_zero()) throw std::logic_error("syzygy_basis: input is not a Groebner basis");
      std::vector<VTerm> terms;
      terms.reserve(div.quotients.size() + 2);
      terms.push_back({ci, c.q, static_cast<int>(i)});
      terms.push_back({cj, qj, static_cast<int>(c.j)});
      for (const auto& q : div.quotients) terms.push_back({k.neg(q.coeff), q.mono, q.divisor});
      Vector v = Vector::from_terms(next, std::move(terms));
      if (v.is_zero() || v.lead().comp != static_cast<int>(i) || v.lead().mono != c.q)
        throw std::logic_error("syzygy_basis: Schreyer lead term mismatch");
      stored_terms += v.size();
      budget.check_terms(stored_terms);
      syz.push_back(v.monic());
    }
  }
  std::sort(syz.begin(), syz.end(), lex_desc_order);
  return {next, std::move(syz)};
}

}  // namespace mfres
