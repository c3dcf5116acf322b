#include "mfres/module.hpp"

#include <algorithm>

namespace mfres {

FreeModule::FreeModule(RingPtr ring, std::vector<int> twists, ModuleOrderKind kind)
    : ring_(std::move(ring)), twists_(std::move(twists)), kind_(kind) {}

FreeModule::FreeModule(RingPtr ring, std::vector<int> twists, std::vector<Monomial> schreyer_monomials,
                       std::vector<int> paths, int path_len)
    : ring_(std::move(ring)),
      twists_(std::move(twists)),
      kind_(ModuleOrderKind::Schreyer),
      schreyer_mono_(std::move(schreyer_monomials)),
      paths_(std::move(paths)),
      path_len_(path_len) {
  if (schreyer_mono_.size() != twists_.size() ||
      paths_.size() != twists_.size() * static_cast<std::size_t>(path_len_))
    throw std::invalid_argument("inconsistent Schreyer data");
}

int FreeModule::compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
  const Ring& r = *ring_;
  if (kind_ == ModuleOrderKind::PositionOverTerm) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return r.compare(a, b);
  }
  if (schreyer_mono_.empty()) {
    int c = r.compare(a, b);
    if (c != 0) return c;
  } else {
    int c = r.compare(a * schreyer_mono_[static_cast<std::size_t>(ca)],
                      b * schreyer_mono_[static_cast<std::size_t>(cb)]);
    if (c != 0) return c;
    if (ca != cb) {
      auto pa = path(ca);
      auto pb = path(cb);
      for (int i = 0; i < path_len_; ++i)
        if (pa[static_cast<std::size_t>(i)] != pb[static_cast<std::size_t>(i)])
          return pa[static_cast<std::size_t>(i)] < pb[static_cast<std::size_t>(i)] ? 1 : -1;
    }
  }
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

ModulePtr make_free_module(RingPtr ring, std::vector<int> twists, ModuleOrderKind kind) {
  return std::make_shared<const FreeModule>(std::move(ring), std::move(twists), kind);
}

Vector Vector::from_terms(ModulePtr module, std::vector<VTerm> terms) {
  const FreeModule& F = *module;
  const PrimeField& k = F.ring()->field();
  for (const auto& t : terms)
    if (t.comp < 0 || t.comp >= F.rank()) throw std::out_of_range("vector component out of range");
  std::sort(terms.begin(), terms.end(), [&F](const VTerm& a, const VTerm& b) {
    return F.compare(a.mono, a.comp, b.mono, b.comp) > 0;
  });
  std::vector<VTerm> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    Coeff c = t.coeff % k.characteristic();
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = k.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({c, t.mono, t.comp});
    }
  }
  if (!out.empty()) {
    int d = out.front().mono.degree() + F.twist(out.front().comp);
    for (const auto& t : out)
      if (t.mono.degree() + F.twist(t.comp) != d) throw HomogeneityError("vector is not homogeneous");
  }
  return Vector(std::move(module), std::move(out));
}

Vector Vector::from_components(ModulePtr module, std::span<const Polynomial> components) {
  if (static_cast<int>(components.size()) != module->rank())
    throw std::invalid_argument("component count does not match module rank");
  std::vector<VTerm> terms;
  for (std::size_t k = 0; k < components.size(); ++k) {
    require_same_ring(module->ring(), components[k].ring());
    for (const auto& t : components[k].terms()) terms.push_back({t.coeff, t.mono, static_cast<int>(k)});
  }
  return from_terms(std::move(module), std::move(terms));
}

Vector Vector::basis_term(ModulePtr module, int k, const Monomial& m, Coeff c) {
  return from_terms(std::move(module), {VTerm{c, m, k}});
}

Polynomial Vector::component(int k) const {
  std::vector<Term> t;
  for (const auto& v : terms_)
    if (v.comp == k) t.push_back({v.coeff, v.mono});
  return Polynomial::from_terms(ring(), std::move(t));
}

std::vector<Polynomial> Vector::components() const {
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(module_->rank()));
  for (const auto& v : terms_) parts[static_cast<std::size_t>(v.comp)].push_back({v.coeff, v.mono});
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring(), std::move(p)));
  return out;
}

Vector add_scaled(const Vector& f, const Vector& g, Coeff c, const Monomial& m) {
  if (f.module_ != g.module_) throw std::invalid_argument("vectors live in different modules");
  const FreeModule& F = *f.module_;
  const PrimeField& k = F.ring()->field();
  if (c == 0 || g.is_zero()) return f;
  if (!f.is_zero() && f.degree() != g.degree() + m.degree())
    throw HomogeneityError("adding vectors of different degrees");
  std::vector<VTerm> out;
  out.reserve(f.terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < f.terms_.size() && j < g.terms_.size()) {
    const VTerm& a = f.terms_[i];
    const VTerm& b = g.terms_[j];
    Monomial bm = b.mono * m;
    int cmp = F.compare(a.mono, a.comp, bm, b.comp);
    if (cmp > 0) {
      out.push_back(a);
      ++i;
    } else if (cmp < 0) {
      out.push_back({k.mul(c, b.coeff), bm, b.comp});
      ++j;
    } else {
      Coeff s = k.add(a.coeff, k.mul(c, b.coeff));
      if (s != 0) out.push_back({s, bm, a.comp});
      ++i;
      ++j;
    }
  }
  for (; i < f.terms_.size(); ++i) out.push_back(f.terms_[i]);
  for (; j < g.terms_.size(); ++j) {
    const VTerm& b = g.terms_[j];
    out.push_back({k.mul(c, b.coeff), b.mono * m, b.comp});
  }
  return Vector(f.module_, std::move(out));
}

Vector Vector::operator+(const Vector& g) const { return add_scaled(*this, g, 1, Monomial{}); }

Vector Vector::operator-(const Vector& g) const {
  return add_scaled(*this, g, ring()->characteristic() - 1, Monomial{});
}

Vector Vector::scaled(Coeff c) const { return mul_term(c, Monomial{}); }

Vector Vector::mul_term(Coeff c, const Monomial& m) const {
  const PrimeField& k = ring()->field();
  c %= k.characteristic();
  std::vector<VTerm> out;
  if (c != 0) {
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({k.mul(c, t.coeff), t.mono * m, t.comp});
  }
  return Vector(module_, std::move(out));
}

Vector Vector::times(const Polynomial& f) const {
  require_same_ring(ring(), f.ring());
  Vector acc(module_);
  for (const auto& t : f.terms()) acc = add_scaled(acc, *this, t.coeff, t.mono);
  return acc;
}

Vector Vector::monic() const {
  if (is_zero()) return *this;
  return scaled(ring()->field().inv(lead().coeff));
}

Vector Vector::rebased(ModulePtr module) const {
  if (module->rank() != module_->rank()) throw std::invalid_argument("rebased: rank mismatch");
  return from_terms(std::move(module), terms_);
}

bool Vector::operator==(const Vector& g) const {
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != g.terms_[i].coeff || terms_[i].comp != g.terms_[i].comp ||
        terms_[i].mono != g.terms_[i].mono)
      return false;
  return true;
}

std::string Vector::to_string() const {
  std::string out = "(";
  auto parts = components();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ", ";
    out += parts[k].to_string();
  }
  return out + ")";
}

}  // namespace mfres
