#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mfres/polynomial.hpp"

namespace mfres {

enum class ModuleOrderKind {
  // Compare m*T_i against n*T_j in the ring order, then the Schreyer path, then the index
  // (smaller index is larger). Without Schreyer data T_i = 1 and this is term-over-position.
  Schreyer,
  // Smaller component index is larger; ties broken by the ring order.
  PositionOverTerm,
};

// Graded free module  F = sum_k S(-twists[k])  with a monomial order on its terms.
class FreeModule {
 public:
  FreeModule(RingPtr ring, std::vector<int> twists, ModuleOrderKind kind = ModuleOrderKind::Schreyer);

  // Schreyer data: basis element k of this module maps with lead term T_k * e_{path_k.back()}
  // into the previous module; `paths` holds path_len indices per element, outermost first.
  FreeModule(RingPtr ring, std::vector<int> twists, std::vector<Monomial> schreyer_monomials,
             std::vector<int> paths, int path_len);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return static_cast<int>(twists_.size()); }
  int twist(int k) const { return twists_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& twists() const { return twists_; }
  ModuleOrderKind kind() const { return kind_; }
  bool has_schreyer_data() const { return !schreyer_mono_.empty(); }
  const Monomial& schreyer_monomial(int k) const { return schreyer_mono_[static_cast<std::size_t>(k)]; }
  std::span<const int> path(int k) const {
    return {paths_.data() + static_cast<std::size_t>(k) * static_cast<std::size_t>(path_len_),
            static_cast<std::size_t>(path_len_)};
  }
  int path_len() const { return path_len_; }

  // 1 if a*e_ca > b*e_cb, -1 if smaller, 0 if equal.
  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const;

 private:
  RingPtr ring_;
  std::vector<int> twists_;
  ModuleOrderKind kind_;
  std::vector<Monomial> schreyer_mono_;
  std::vector<int> paths_;
  int path_len_ = 0;
};

using ModulePtr = std::shared_ptr<const FreeModule>;

ModulePtr make_free_module(RingPtr ring, std::vector<int> twists,
                           ModuleOrderKind kind = ModuleOrderKind::Schreyer);

struct VTerm {
  Coeff coeff;
  Monomial mono;
  int comp;
};

// Homogeneous element of a graded free module, stored as a sparse term list sorted descending
// in the module order. All terms share one degree deg(mono) + twist(comp).
class Vector {
 public:
  explicit Vector(ModulePtr module) : module_(std::move(module)) {}

  static Vector from_terms(ModulePtr module, std::vector<VTerm> terms);
  static Vector from_components(ModulePtr module, std::span<const Polynomial> components);
  // c*m*e_k
  static Vector basis_term(ModulePtr module, int k, const Monomial& m = Monomial{}, Coeff c = 1);

  const ModulePtr& module() const { return module_; }
  const RingPtr& ring() const { return module_->ring(); }
  std::span<const VTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int degree() const {
    return terms_.empty() ? -1 : terms_.front().mono.degree() + module_->twist(terms_.front().comp);
  }
  const VTerm& lead() const { return terms_.front(); }

  Polynomial component(int k) const;
  std::vector<Polynomial> components() const;

  Vector operator+(const Vector& g) const;
  Vector operator-(const Vector& g) const;
  Vector scaled(Coeff c) const;
  Vector mul_term(Coeff c, const Monomial& m) const;
  Vector times(const Polynomial& f) const;
  Vector monic() const;
  // Same coefficients and components re-sorted for another module of equal rank.
  Vector rebased(ModulePtr module) const;

  bool operator==(const Vector& g) const;
  bool operator!=(const Vector& g) const { return !(*this == g); }

  std::string to_string() const;

 private:
  Vector(ModulePtr module, std::vector<VTerm> sorted) : module_(std::move(module)), terms_(std::move(sorted)) {}
  friend Vector add_scaled(const Vector&, const Vector&, Coeff, const Monomial&);
  friend class Reducer;

  ModulePtr module_;
  std::vector<VTerm> terms_;
};

// f + c*m*g
Vector add_scaled(const Vector& f, const Vector& g, Coeff c, const Monomial& m);

}  // namespace mfres
