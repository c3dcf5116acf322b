#include "mfres/resolution.hpp"

#include <algorithm>
#include <map>

#include "mfres/linalg.hpp"

namespace mfres {

bool ModulePresentation::is_monomial() const {
  return std::all_of(relations.begin(), relations.end(), [](const Vector& v) { return v.size() <= 1; });
}

ModulePresentation cyclic_module(const Ideal& ideal) { return direct_sum(std::span<const Ideal>(&ideal, 1)); }

ModulePresentation direct_sum(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw std::invalid_argument("direct_sum: no summands");
  RingPtr ring = ideals.front().ring;
  auto F0 = make_free_module(ring, std::vector<int>(ideals.size(), 0));
  std::vector<Vector> rels;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    require_same_ring(ring, ideals[k].ring);
    for (const auto& g : ideals[k].gens) {
      require_same_ring(ring, g.ring());
      if (g.is_zero()) continue;
      std::vector<VTerm> terms;
      for (const auto& t : g.terms()) terms.push_back({t.coeff, t.mono, static_cast<int>(k)});
      rels.push_back(Vector::from_terms(F0, std::move(terms)));
    }
  }
  return {F0, std::move(rels), std::vector<Ideal>(ideals.begin(), ideals.end())};
}

ModulePresentation make_presentation(ModulePtr free, std::vector<Vector> relations) {
  for (const auto& r : relations)
    if (r.module() != free) throw std::invalid_argument("relation lives in a different module");
  return {std::move(free), std::move(relations), {}};
}

Polynomial ResolutionStep::entry(int row, int col, const RingPtr& ring) const {
  const Column& c = columns.at(static_cast<std::size_t>(col));
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, int r) { return e.first < r; });
  if (it != c.end() && it->first == row) return it->second;
  return Polynomial(ring);
}

namespace {

Column to_column(const Vector& v) {
  std::map<int, std::vector<Term>> parts;
  for (const auto& t : v.terms()) parts[t.comp].push_back({t.coeff, t.mono});
  Column col;
  col.reserve(parts.size());
  for (auto& [row, terms] : parts) col.emplace_back(row, Polynomial::from_terms(v.ring(), std::move(terms)));
  return col;
}

Column::iterator find_row(Column& c, int row) {
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, int r) { return e.first < r; });
  return it != c.end() && it->first == row ? it : c.end();
}

// target += factor * src
void add_column(Column& target, const Column& src, const Polynomial& factor) {
  Column out;
  out.reserve(target.size() + src.size());
  std::size_t a = 0, b = 0;
  while (a < target.size() || b < src.size()) {
    if (b == src.size() || (a < target.size() && target[a].first < src[b].first)) {
      out.push_back(std::move(target[a++]));
    } else if (a == target.size() || src[b].first < target[a].first) {
      Polynomial p = factor * src[b].second;
      if (!p.is_zero()) out.emplace_back(src[b].first, std::move(p));
      ++b;
    } else {
      Polynomial p = target[a].second + factor * src[b].second;
      if (!p.is_zero()) out.emplace_back(target[a].first, std::move(p));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

}  // namespace

GradedResolution schreyer_resolution(const ModulePresentation& m, const Budget& budget) {
  const FreeModule& F0 = *m.free;
  if (F0.kind() != ModuleOrderKind::Schreyer || F0.has_schreyer_data())
    throw std::invalid_argument("presentation module must carry the plain term-over-position order");
  GradedResolution r;
  r.ring = F0.ring();
  r.free_degrees.push_back(F0.twists());
  GroebnerBasis cur = buchberger(m.free, m.relations, budget);
  while (!cur.elements.empty()) {
    budget.check();
    ResolutionStep step;
    step.row_degrees = r.free_degrees.back();
    for (const auto& g : cur.elements) {
      step.col_degrees.push_back(g.degree());
      step.columns.push_back(to_column(g));
    }
    r.free_degrees.push_back(step.col_degrees);
    r.steps.push_back(std::move(step));
    SyzygyModule syz = syzygy_basis(cur, budget);
    cur = GroebnerBasis{syz.module, std::move(syz.generators)};
  }
  r.minimal = false;
  return r;
}

GradedResolution minimalize(const GradedResolution& r, const Budget& budget) {
  const int L = r.length();
  const PrimeField& k = r.ring->field();
  std::vector<std::vector<char>> alive(static_cast<std::size_t>(L + 1));
  for (int i = 0; i <= L; ++i) alive[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(r.rank(i)), 1);
  // cols[i] = columns of the differential F_i -> F_{i-1}; cols[0] unused
  std::vector<std::vector<Column>> cols(static_cast<std::size_t>(L + 1));
  for (int i = 1; i <= L; ++i) cols[static_cast<std::size_t>(i)] = r.differential(i).columns;

  auto cancel = [&](int i, int row, int c) {
    auto& step = cols[static_cast<std::size_t>(i)];
    Column pivot = step[static_cast<std::size_t>(c)];
    Coeff b = find_row(pivot, row)->second.lead().coeff;
    Coeff minus_binv = k.neg(k.inv(b));
    for (std::size_t c2 = 0; c2 < step.size(); ++c2) {
      if (static_cast<int>(c2) == c || !alive[static_cast<std::size_t>(i)][c2]) continue;
      auto it = find_row(step[c2], row);
      if (it == step[c2].end()) continue;
      Polynomial factor = it->second.scaled(minus_binv);
      add_column(step[c2], pivot, factor);
      if (find_row(step[c2], row) != step[c2].end()) throw std::logic_error("minimalize: row not cleared");
    }
    step[static_cast<std::size_t>(c)].clear();
    alive[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = 0;
    alive[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(row)] = 0;
    if (i + 1 <= L)
      for (auto& col : cols[static_cast<std::size_t>(i + 1)]) {
        auto it = find_row(col, c);
        if (it != col.end()) col.erase(it);
      }
    if (i - 1 >= 1) cols[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(row)].clear();
  };

  for (int i = 1; i <= L; ++i) {
    bool changed = true;
    while (changed) {
      changed = false;
      budget.check();
      auto& step = cols[static_cast<std::size_t>(i)];
      for (std::size_t c = 0; c < step.size(); ++c) {
        if (!alive[static_cast<std::size_t>(i)][c]) continue;
        for (const auto& [row, e] : step[c]) {
          if (e.is_constant()) {
            cancel(i, row, static_cast<int>(c));
            changed = true;
            break;
          }
        }
      }
    }
  }

  // compact surviving basis elements
  std::vector<std::vector<int>> index(static_cast<std::size_t>(L + 1));
  GradedResolution out;
  out.ring = r.ring;
  out.minimal = true;
  for (int i = 0; i <= L; ++i) {
    auto& idx = index[static_cast<std::size_t>(i)];
    idx.assign(alive[static_cast<std::size_t>(i)].size(), -1);
    std::vector<int> degs;
    for (std::size_t e = 0; e < idx.size(); ++e)
      if (alive[static_cast<std::size_t>(i)][e]) {
        idx[e] = static_cast<int>(degs.size());
        degs.push_back(r.free_degrees[static_cast<std::size_t>(i)][e]);
      }
    out.free_degrees.push_back(std::move(degs));
  }
  for (int i = 1; i <= L; ++i) {
    ResolutionStep step;
    step.row_degrees = out.free_degrees[static_cast<std::size_t>(i - 1)];
    step.col_degrees = out.free_degrees[static_cast<std::size_t>(i)];
    const auto& src = cols[static_cast<std::size_t>(i)];
    for (std::size_t c = 0; c < src.size(); ++c) {
      if (!alive[static_cast<std::size_t>(i)][c]) continue;
      Column col;
      for (const auto& [row, e] : src[c]) {
        int nr = index[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(row)];
        if (nr < 0) throw std::logic_error("minimalize: entry in a cancelled row");
        col.emplace_back(nr, e);
      }
      step.columns.push_back(std::move(col));
    }
    out.steps.push_back(std::move(step));
  }
  while (out.free_degrees.size() > 1 && out.free_degrees.back().empty()) {
    out.free_degrees.pop_back();
    out.steps.pop_back();
  }
  return out;
}

GradedResolution resolve_minimal(const ModulePresentation& m, const Budget& budget) {
  return minimalize(schreyer_resolution(m, budget), budget);
}

GradedResolution resolve_minimal_per_step(const ModulePresentation& m, const Budget& budget) {
  GradedResolution r;
  r.ring = m.ring();
  r.minimal = true;
  r.free_degrees.push_back(m.free->twists());
  ModulePtr F = m.free;
  std::vector<Vector> gens;
  for (const auto& v : m.relations)
    if (!v.is_zero()) gens.push_back(v);
  while (!gens.empty()) {
    budget.check();
    std::vector<int> keep;
    buchberger(F, gens, budget, nullptr, &keep);
    std::vector<Vector> minimal;
    for (int k : keep) minimal.push_back(gens[static_cast<std::size_t>(k)]);
    ResolutionStep step;
    step.row_degrees = r.free_degrees.back();
    for (const auto& g : minimal) {
      // a unit entry only happens at the first step, when the presentation itself is not minimal
      for (const auto& t : g.terms())
        if (t.mono.degree() == 0) return resolve_minimal(m, budget);
      step.col_degrees.push_back(g.degree());
      step.columns.push_back(to_column(g));
    }
    r.free_degrees.push_back(step.col_degrees);
    r.steps.push_back(std::move(step));
    ModulePresentation syz = syzygy_presentation_by_elimination(minimal, budget);
    F = syz.free;
    gens = std::move(syz.relations);
  }
  return r;
}

GradedResolution resolve_minimal(const ModulePresentation& m, ResolveStrategy strategy, const Budget& budget) {
  return strategy == ResolveStrategy::PerStep ? resolve_minimal_per_step(m, budget) : resolve_minimal(m, budget);
}

bool has_no_unit_entries(const GradedResolution& r) {
  for (const auto& step : r.steps)
    for (const auto& col : step.columns)
      for (const auto& [row, e] : col)
        if (e.is_constant()) return false;
  return true;
}

bool entries_homogeneous(const GradedResolution& r) {
  for (const auto& step : r.steps)
    for (std::size_t c = 0; c < step.columns.size(); ++c)
      for (const auto& [row, e] : step.columns[c])
        if (e.is_zero() || e.degree() != step.col_degrees[c] - step.row_degrees[static_cast<std::size_t>(row)])
          return false;
  return true;
}

bool composes_to_zero(const GradedResolution& r) {
  for (int i = 1; i < r.length(); ++i) {
    const auto& lower = r.differential(i);
    const auto& upper = r.differential(i + 1);
    for (const auto& col : upper.columns) {
      std::map<int, Polynomial> acc;
      for (const auto& [mid, e] : col)
        for (const auto& [row, f] : lower.columns[static_cast<std::size_t>(mid)]) {
          auto it = acc.try_emplace(row, Polynomial(r.ring)).first;
          it->second = it->second + e * f;
        }
      for (const auto& [row, p] : acc)
        if (!p.is_zero()) return false;
    }
  }
  return true;
}

BettiTable betti(const GradedResolution& r) {
  if (!has_no_unit_entries(r)) throw std::invalid_argument("betti: resolution is not minimal");
  BettiTable b;
  for (int i = 0; i <= r.length(); ++i)
    for (int d : r.free_degrees[static_cast<std::size_t>(i)]) b.add(i, d, 1);
  return b;
}

BettiTable betti_from_frame(const GradedResolution& r) {
  const int L = r.length();
  const PrimeField& k = r.ring->field();
  // scalar_rank[i][j] = rank of the degree-0 part of d_i between degree-j basis elements
  std::vector<std::map<int, std::size_t>> scalar_rank(static_cast<std::size_t>(L + 2));
  for (int i = 1; i <= L; ++i) {
    const auto& step = r.differential(i);
    std::map<int, std::vector<int>> rows_by_deg, cols_by_deg;
    for (std::size_t a = 0; a < step.row_degrees.size(); ++a) rows_by_deg[step.row_degrees[a]].push_back(static_cast<int>(a));
    for (std::size_t c = 0; c < step.col_degrees.size(); ++c) cols_by_deg[step.col_degrees[c]].push_back(static_cast<int>(c));
    for (const auto& [deg, cs] : cols_by_deg) {
      auto rit = rows_by_deg.find(deg);
      if (rit == rows_by_deg.end()) continue;
      const auto& rs = rit->second;
      std::map<int, std::size_t> row_pos;
      for (std::size_t a = 0; a < rs.size(); ++a) row_pos[rs[a]] = a;
      DenseMatrix m(rs.size(), cs.size());
      for (std::size_t c = 0; c < cs.size(); ++c)
        for (const auto& [row, e] : step.columns[static_cast<std::size_t>(cs[c])])
          if (e.is_constant()) m.at(row_pos.at(row), c) = e.lead().coeff;
      scalar_rank[static_cast<std::size_t>(i)][deg] = rank_mod_p(std::move(m), k);
    }
  }
  auto rank_at = [&](int i, int j) -> std::size_t {
    if (i < 1 || i > L) return 0;
    auto it = scalar_rank[static_cast<std::size_t>(i)].find(j);
    return it == scalar_rank[static_cast<std::size_t>(i)].end() ? 0 : it->second;
  };
  BettiTable b;
  for (int i = 0; i <= L; ++i) {
    std::map<int, int> f;
    for (int d : r.free_degrees[static_cast<std::size_t>(i)]) ++f[d];
    for (const auto& [j, cnt] : f)
      b.add(i, j, cnt - static_cast<int>(rank_at(i, j)) - static_cast<int>(rank_at(i + 1, j)));
  }
  return b;
}

ModulePresentation syzygy_presentation_by_elimination(std::span<const Vector> gens, const Budget& budget) {
  if (gens.empty()) throw std::invalid_argument("syzygy_presentation_by_elimination: no generators");
  const ModulePtr& F = gens.front().module();
  const int r0 = F->rank();
  std::vector<int> twists = F->twists();
  std::vector<int> gen_degrees;
  for (const auto& g : gens) {
    if (g.module() != F) throw std::invalid_argument("generators live in different modules");
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    gen_degrees.push_back(g.degree());
  }
  twists.insert(twists.end(), gen_degrees.begin(), gen_degrees.end());
  auto E = make_free_module(F->ring(), std::move(twists), ModuleOrderKind::PositionOverTerm);
  std::vector<Vector> lifted;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::vector<VTerm> terms(gens[k].terms().begin(), gens[k].terms().end());
    terms.push_back({1, Monomial{}, r0 + static_cast<int>(k)});
    lifted.push_back(Vector::from_terms(E, std::move(terms)));
  }
  GroebnerBasis gb = buchberger(E, lifted, budget);
  auto Fsyz = make_free_module(F->ring(), gen_degrees);
  std::vector<Vector> rels;
  for (const auto& g : gb.elements) {
    if (g.lead().comp < r0) continue;
    std::vector<VTerm> terms;
    for (const auto& t : g.terms()) {
      if (t.comp < r0) throw std::logic_error("elimination: syzygy with a nonzero F_0 part");
      terms.push_back({t.coeff, t.mono, t.comp - r0});
    }
    rels.push_back(Vector::from_terms(Fsyz, std::move(terms)));
  }
  return make_presentation(Fsyz, std::move(rels));
}

SesReport ses_shift_check(const ModulePresentation& m, const Budget& budget) {
  SesReport rep;
  GradedResolution res = resolve_minimal(m, budget);
  if (res.is_zero_module()) return rep;
  rep.shifts_module = shifts(betti(res)).max_shifts;
  rep.shifts_free = {*std::max_element(m.free->twists().begin(), m.free->twists().end())};
  std::vector<Vector> gens;
  for (const auto& v : m.relations)
    if (!v.is_zero()) gens.push_back(v);
  if (!gens.empty()) {
    ModulePresentation syz = syzygy_presentation_by_elimination(gens, budget);
    GradedResolution rs = resolve_minimal(syz, budget);
    if (!rs.is_zero_module()) rep.shifts_syzygy = shifts(betti(rs)).max_shifts;
  }
  auto T = [](const std::vector<int>& v, int i) {
    return i < 0 || i >= static_cast<int>(v.size()) ? kNegInf : v[static_cast<std::size_t>(i)];
  };
  const int top = static_cast<int>(std::max({rep.shifts_module.size(), rep.shifts_free.size(), rep.shifts_syzygy.size()})) + 1;
  for (int i = 0; i <= top; ++i) {
    int tf = T(rep.shifts_free, i), ts = T(rep.shifts_syzygy, i), tm = T(rep.shifts_module, i);
    if (tf > std::max(ts, tm))
      rep.failures.push_back("T_" + std::to_string(i) + "(F_0) > max(T_i(Syz), T_i(M))");
    if (ts > std::max(tf, T(rep.shifts_module, i + 1)))
      rep.failures.push_back("T_" + std::to_string(i) + "(Syz) > max(T_i(F_0), T_{i+1}(M))");
    if (tm > std::max(tf, T(rep.shifts_syzygy, i - 1)))
      rep.failures.push_back("T_" + std::to_string(i) + "(M) > max(T_i(F_0), T_{i-1}(Syz))");
  }
  return rep;
}

}  // namespace mfres
