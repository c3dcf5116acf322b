#include "mfres/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace mfres {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b) throw std::invalid_argument("polynomial without ring");
  const auto& sa = a->spec();
  const auto& sb = b->spec();
  if (sa.characteristic != sb.characteristic || sa.var_names != sb.var_names || sa.order != sb.order)
    throw std::invalid_argument("ring mismatch");
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Ring& r = *ring;
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    Coeff c = t.coeff % r.characteristic();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = r.field().add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({c, t.mono});
    }
  }
  for (const auto& t : out)
    if (t.mono.degree() != out.front().mono.degree())
      throw HomogeneityError("polynomial is not homogeneous");
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  c %= ring->characteristic();
  std::vector<Term> t;
  if (c != 0) t.push_back({c, m});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::constant(RingPtr ring, Coeff c) { return monomial(std::move(ring), Monomial{}, c); }

Polynomial Polynomial::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->num_vars()) throw std::out_of_range("variable index");
  return monomial(std::move(ring), Monomial::variable(index), 1);
}

Polynomial add_scaled(const Polynomial& f, const Polynomial& g, Coeff c, const Monomial& m) {
  require_same_ring(f.ring_, g.ring_);
  const Ring& r = *f.ring_;
  const PrimeField& k = r.field();
  if (c == 0 || g.is_zero()) return f;
  if (!f.is_zero() && f.degree() != g.degree() + m.degree())
    throw HomogeneityError("adding polynomials of different degrees");
  std::vector<Term> out;
  out.reserve(f.terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < f.terms_.size() && j < g.terms_.size()) {
    Monomial gm = g.terms_[j].mono * m;
    int cmp = r.compare(f.terms_[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f.terms_[i++]);
    } else if (cmp < 0) {
      out.push_back({k.mul(c, g.terms_[j++].coeff), gm});
    } else {
      Coeff s = k.add(f.terms_[i].coeff, k.mul(c, g.terms_[j].coeff));
      if (s != 0) out.push_back({s, gm});
      ++i;
      ++j;
    }
  }
  for (; i < f.terms_.size(); ++i) out.push_back(f.terms_[i]);
  for (; j < g.terms_.size(); ++j) out.push_back({k.mul(c, g.terms_[j].coeff), g.terms_[j].mono * m});
  return Polynomial(f.ring_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& g) const { return add_scaled(*this, g, 1, Monomial{}); }

Polynomial Polynomial::operator-(const Polynomial& g) const {
  return add_scaled(*this, g, ring_->characteristic() - 1, Monomial{});
}

Polynomial Polynomial::operator-() const { return scaled(ring_->characteristic() - 1); }

Polynomial Polynomial::scaled(Coeff c) const { return mul_term(c, Monomial{}); }

Polynomial Polynomial::mul_term(Coeff c, const Monomial& m) const {
  const PrimeField& k = ring_->field();
  c %= k.characteristic();
  std::vector<Term> out;
  if (c == 0) return Polynomial(ring_, std::move(out));
  out.reserve(terms_.size());
  // multiplying by a monomial preserves the order
  for (const auto& t : terms_) out.push_back({k.mul(c, t.coeff), t.mono * m});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  if (is_zero() || g.is_zero()) return Polynomial(ring_);
  const PrimeField& k = ring_->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : g.terms_) {
      auto [it, inserted] = acc.try_emplace(a.mono * b.mono, 0);
      it->second = k.add(it->second, k.mul(a.coeff, b.coeff));
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) out.push_back({c, m});
  const Ring& r = *ring_;
  std::sort(out.begin(), out.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead().coeff));
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != g.terms_[i].coeff || terms_[i].mono != g.terms_[i].mono) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  const PrimeField& k = ring_->field();
  std::string out;
  for (const auto& t : terms_) {
    std::int64_t c = k.to_signed(t.coeff);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::int64_t a = c < 0 ? -c : c;
    if (t.mono.is_one()) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + '*';
      out += ring_->format(t.mono);
    }
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& d : divisors) {
    require_same_ring(f.ring(), d.ring());
    if (d.is_zero()) throw std::invalid_argument("normal_form: zero divisor");
  }
  const PrimeField& k = f.ring()->field();
  Polynomial h = f;
  std::size_t pos = 0;  // terms before pos are irreducible and final
  while (pos < h.terms_.size()) {
    const Term& t = h.terms_[pos];
    const Polynomial* div = nullptr;
    for (const auto& d : divisors)
      if (d.lead().mono.divides(t.mono)) {
        div = &d;
        break;
      }
    if (!div) {
      ++pos;
      continue;
    }
    Coeff c = k.neg(k.div(t.coeff, div->lead().coeff));
    Monomial q = t.mono / div->lead().mono;
    // split off the settled prefix so the merge only touches the tail
    Polynomial tail(h.ring_, std::vector<Term>(h.terms_.begin() + static_cast<std::ptrdiff_t>(pos), h.terms_.end()));
    Polynomial reduced = add_scaled(tail, *div, c, q);
    h.terms_.resize(pos);
    h.terms_.insert(h.terms_.end(), reduced.terms_.begin(), reduced.terms_.end());
  }
  return h;
}

Ideal Ideal::with_order(MonomialOrder order) const {
  if (ring->spec().order == order) return *this;
  RingSpec spec = ring->spec();
  spec.order = order;
  Ideal out{make_ring(spec), {}};
  for (const auto& f : gens) {
    std::vector<Term> terms(f.terms().begin(), f.terms().end());
    out.gens.push_back(Polynomial::from_terms(out.ring, std::move(terms)));
  }
  return out;
}

int Ideal::min_degree() const {
  int d = -1;
  for (const auto& g : gens)
    if (!g.is_zero() && (d < 0 || g.degree() < d)) d = g.degree();
  return d;
}

int Ideal::max_degree() const {
  int d = -1;
  for (const auto& g : gens)
    if (!g.is_zero() && g.degree() > d) d = g.degree();
  return d;
}

bool Ideal::is_monomial() const {
  return std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.size() <= 1; });
}

std::string Ideal::to_string() const {
  std::string out;
  for (const auto& g : gens) {
    if (!out.empty()) out += "; ";
    out += g.to_string();
  }
  return out;
}

}  // namespace mfres
