#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace mfres;
using namespace mfres::test;

namespace {

GroebnerBasis gb_of(const Ideal& i, BuchbergerStats* stats = nullptr) {
  ModulePresentation m = cyclic_module(i);
  return buchberger(m.free, m.relations, unlimited_budget(), stats);
}

std::vector<Monomial> leads(const GroebnerBasis& gb) {
  std::vector<Monomial> out;
  for (const auto& v : gb.elements) out.push_back(v.lead().mono);
  return out;
}

Vector vec(const ModulePtr& F, const Polynomial& f) {
  return Vector::from_components(F, std::vector<Polynomial>{f});
}

// Sum_k s_k * g_k inside the module of the basis elements.
Vector combine(const Vector& s, const std::vector<Vector>& gens) {
  Vector total(gens.front().module());
  for (int k = 0; k < static_cast<int>(gens.size()); ++k) {
    Polynomial c = s.component(k);
    if (!c.is_zero()) total = total + gens[static_cast<std::size_t>(k)].times(c);
  }
  return total;
}

Ideal random_binomial_ideal(const RingPtr& r, std::mt19937_64& g) {
  Ideal out{r, {}};
  std::uniform_int_distribution<int> deg(1, 3), count(1, 4), coin(0, 1);
  const int k = count(g);
  for (int j = 0; j < k; ++j) {
    const int d = deg(g);
    auto monos = r->monomials_of_degree(d);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    Polynomial f = Polynomial::monomial(r, monos[pick(g)]);
    if (coin(g)) f = f - Polynomial::monomial(r, monos[pick(g)], 1 + static_cast<Coeff>(pick(g)));
    if (!f.is_zero()) out.gens.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto r = ring({"x", "y"});
  auto gb = gb_of(ideal(r, {"x", "y"}));
  REQUIRE(gb.elements.size() == 2);
  CHECK(gb.elements[0].component(0) == poly(r, "x"));
  CHECK(gb.elements[1].component(0) == poly(r, "y"));

  gb = gb_of(ideal(r, {"x^2", "x*y"}));
  REQUIRE(gb.elements.size() == 2);
  CHECK(gb.elements[0].component(0) == poly(r, "x^2"));
  CHECK(gb.elements[1].component(0) == poly(r, "x*y"));

  gb = gb_of(ideal(r, {"x^2 - y^2", "x*y"}));
  auto lt = leads(gb);
  REQUIRE(lt.size() == 3);
  for (const char* m : {"x^2", "x*y", "y^3"}) {
    Monomial want = poly(r, m).lead().mono;
    CHECK(std::count(lt.begin(), lt.end(), want) == 1);
  }
}

TEST_CASE("empty input gives an empty basis") {
  auto r = ring({"x"});
  auto F = make_free_module(r, {0});
  CHECK(buchberger(F, std::vector<Vector>{}).elements.empty());
}

TEST_CASE("syzygy_basis examples") {
  auto r = ring({"x", "y"});
  auto syz = syzygy_basis(gb_of(ideal(r, {"x", "y"})));
  REQUIRE(syz.generators.size() == 1);
  CHECK(syz.generators[0].degree() == 2);
  Polynomial a = syz.generators[0].component(0), b = syz.generators[0].component(1);
  CHECK(((a == poly(r, "y") && b == poly(r, "-x")) || (a == poly(r, "-y") && b == poly(r, "x"))));

  syz = syzygy_basis(gb_of(ideal(r, {"x^2", "x*y", "y^2"})));
  REQUIRE(syz.generators.size() == 2);
  CHECK(syz.generators[0].degree() == 3);
  CHECK(syz.generators[1].degree() == 3);
  CHECK(syz.generators[0].lead().comp != syz.generators[1].lead().comp);

  syz = syzygy_basis(gb_of(ideal(r, {"x^3 + x*y^2 - 4*y^3"})));
  CHECK(syz.generators.empty());
}

TEST_CASE("submodule_membership examples") {
  auto r = ring({"x", "y"});
  auto gb = gb_of(ideal(r, {"x^2", "x*y"}));
  CHECK(submodule_membership(vec(gb.module, poly(r, "x^2*y")), gb));
  CHECK_FALSE(submodule_membership(vec(gb.module, poly(r, "y^2")), gb));
  CHECK(submodule_membership(Vector(gb.module), gb));
}

TEST_CASE("buchberger on a rank-two module") {
  auto r = ring({"x", "y"});
  auto F = make_free_module(r, {0, 1});
  std::vector<Vector> gens{
      Vector::from_components(F, std::vector<Polynomial>{poly(r, "x^2"), poly(r, "y")}),
      Vector::from_components(F, std::vector<Polynomial>{poly(r, "x*y"), poly(r, "x")}),
  };
  auto gb = buchberger(F, gens);
  // y*g1 - x*g2 = (0, y^2 - x^2) must be in the module
  Vector rel = gens[0].times(poly(r, "y")) - gens[1].times(poly(r, "x"));
  CHECK(submodule_membership(rel, gb));
  for (const auto& g : gens) CHECK(submodule_membership(g, gb));
  CHECK_FALSE(submodule_membership(Vector::basis_term(F, 0, poly(r, "x^2").lead().mono), gb));
}

TEST_CASE("divide records a complete trace") {
  auto r = ring({"x", "y", "z"});
  auto F = make_free_module(r, {0});
  std::mt19937_64 g(3);
  for (int k = 0; k < 40; ++k) {
    std::vector<Vector> divisors;
    for (int j = 0; j < 3; ++j) {
      Polynomial h = random_form(r, 1 + j % 2, g, 0.5);
      if (!h.is_zero()) divisors.push_back(vec(F, h));
    }
    Vector f = vec(F, random_form(r, 3, g, 0.8));
    Division d = divide(f, divisors);
    Vector rebuilt = d.remainder;
    for (const auto& q : d.quotients) rebuilt = add_scaled(rebuilt, divisors[static_cast<std::size_t>(q.divisor)], q.coeff, q.mono);
    CHECK(rebuilt == f);
    CHECK(normal_form(f, divisors) == d.remainder);
  }
}

TEST_CASE("property: S-pairs of random monomial and binomial bases reduce to zero") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::mt19937_64 g(seed);
    auto r = seed % 2 ? ring({"x", "y", "z"}) : ring({"x", "y", "z"}, 32003, MonomialOrder::Lex);
    Ideal i = random_binomial_ideal(r, g);
    if (i.gens.empty()) continue;
    BuchbergerStats stats;
    auto gb = gb_of(i, &stats);
    const auto& el = gb.elements;
    for (std::size_t a = 0; a < el.size(); ++a) {
      CHECK(el[a].lead().coeff == 1);
      CHECK(el[a].degree() >= i.min_degree());
      for (std::size_t b = a + 1; b < el.size(); ++b) {
        CHECK_FALSE(el[a].lead().mono.divides(el[b].lead().mono));
        CHECK_FALSE(el[b].lead().mono.divides(el[a].lead().mono));
        CHECK(normal_form(s_vector(el[a], el[b]), el).is_zero());
      }
    }
    for (const auto& f : i.gens) CHECK(submodule_membership(vec(gb.module, f), gb));
    CHECK(stats.pairs_created >= stats.pairs_discarded);
  }
}

TEST_CASE("property: syzygies are sound and contain the Koszul relations") {
  for (std::uint64_t seed = 100; seed < 150; ++seed) {
    std::mt19937_64 g(seed);
    auto r = ring({"x", "y", "z"});
    Ideal i = random_binomial_ideal(r, g);
    if (i.gens.empty()) continue;
    auto gb = gb_of(i);
    auto syz = syzygy_basis(gb);
    for (const auto& s : syz.generators) {
      CHECK(s.module() == syz.module);
      CHECK(combine(s, gb.elements).is_zero());
    }
    // g_b e_a - g_a e_b is a syzygy of degree deg g_a + deg g_b
    const int n = static_cast<int>(gb.elements.size());
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        Vector kz = Vector::basis_term(syz.module, a).times(gb.elements[static_cast<std::size_t>(b)].component(0)) -
                    Vector::basis_term(syz.module, b).times(gb.elements[static_cast<std::size_t>(a)].component(0));
        CHECK(normal_form(kz, syz.generators).is_zero());
      }
  }
}

TEST_CASE("property: syzygies of a syzygy module") {
  auto r = ring({"x", "y", "z"});
  auto gb = gb_of(ideal(r, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}));
  auto s1 = syzygy_basis(gb);
  GroebnerBasis g1{s1.module, s1.generators};
  auto s2 = syzygy_basis(g1);
  REQUIRE_FALSE(s2.generators.empty());
  for (const auto& s : s2.generators) CHECK(combine(s, s1.generators).is_zero());
  // Schreyer output is already a Groebner basis
  for (std::size_t a = 0; a < s1.generators.size(); ++a)
    for (std::size_t b = a + 1; b < s1.generators.size(); ++b)
      if (s1.generators[a].lead().comp == s1.generators[b].lead().comp)
        CHECK(normal_form(s_vector(s1.generators[a], s1.generators[b]), s1.generators).is_zero());
}
