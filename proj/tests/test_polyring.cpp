#include <doctest.h>

#include "mfres/errors.hpp"
#include "support.hpp"

using namespace mfres;
using namespace mfres::test;

TEST_CASE("field arithmetic") {
  PrimeField k(32003);
  CHECK(k.mul(k.inv(12345), 12345) == 1);
  CHECK(k.from_int(-1) == 32002);
  CHECK(k.to_signed(32002) == -1);
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
  CHECK_THROWS(PrimeField(32001));
}

TEST_CASE("ring construction is validated") {
  CHECK_THROWS(make_ring(4, {"x"}));
  CHECK_THROWS(make_ring(7, {"x", "x"}));
  CHECK_THROWS(make_ring(7, {}));
  CHECK_NOTHROW(make_ring(2, {"x", "y"}));
}

TEST_CASE("degrevlex breaks ties by the last variable") {
  auto r = ring({"x", "y", "z"});
  // xz > y^2 fails under degrevlex: y^2 has no z
  CHECK(r->compare(poly(r, "y^2").lead().mono, poly(r, "x*z").lead().mono) > 0);
  auto lex = ring({"x", "y", "z"}, 32003, MonomialOrder::Lex);
  CHECK(lex->compare(poly(lex, "x*z").lead().mono, poly(lex, "y^2").lead().mono) > 0);
  CHECK(r->monomials_of_degree(2).size() == 6);
}

TEST_CASE("poly_add examples") {
  auto r = ring({"x", "y"});
  Polynomial f = poly(r, "x^2 + x*y");
  CHECK(f + Polynomial(r) == f);
  CHECK(poly(r, "x + y") + poly(r, "32002*x") == poly(r, "y"));
  CHECK(poly(r, "x^2 + x*y") + poly(r, "x*y + y^2") == poly(r, "x^2 + 2*x*y + y^2"));
  CHECK_THROWS_AS(poly(r, "x") + poly(r, "x^2"), HomogeneityError);
}

TEST_CASE("poly_mul examples") {
  auto r = ring({"x", "y"});
  Polynomial f = poly(r, "x^2 - 3*x*y");
  CHECK(f * Polynomial::constant(r, 1) == f);
  Polynomial xy = poly(r, "x") * poly(r, "y");
  CHECK(xy == poly(r, "x*y"));
  CHECK(xy.degree() == 2);
  CHECK(poly(r, "x + y") * poly(r, "x + y") == poly(r, "x^2 + 2*x*y + y^2"));
}

TEST_CASE("normal_form examples") {
  auto r = ring({"x", "y"});
  std::vector<Polynomial> x{poly(r, "x")};
  CHECK(normal_form(poly(r, "x^2"), x).is_zero());
  CHECK(normal_form(poly(r, "x*y + y^2"), x) == poly(r, "y^2"));
  Polynomial f = poly(r, "x^3 + 5*y^3");
  CHECK(normal_form(f, std::vector<Polynomial>{}) == f);
}

TEST_CASE("parser") {
  auto r = ring({"x1", "x2", "y1", "y2"});
  CHECK(poly(r, "x1^2*x2^4 + 3*y1^3*y2^3").size() == 2);
  CHECK(poly(r, "x1*(x2 + y1)^2") == poly(r, "x1*x2^2 + 2*x1*x2*y1 + x1*y1^2"));
  CHECK(poly(r, "32005*x1") == poly(r, "2*x1"));
  CHECK(poly(r, "x1 - x1").is_zero());
  CHECK_THROWS_AS(poly(r, "x1 + x2^2"), ParseError);
  CHECK_THROWS_AS(poly(r, "x1 + q"), ParseError);
  try {
    parse_polynomial(r, "x1 + ", 4, 10);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() >= 10);
  }
}

TEST_CASE("to_string round-trips through the parser") {
  auto r = ring({"x", "y", "z"});
  std::mt19937_64 g(7);
  for (int k = 0; k < 50; ++k) {
    Polynomial f = random_form(r, 1 + k % 4, g);
    CHECK(poly(r, f.to_string()) == f);
  }
}

TEST_CASE("property: ring axioms and homogeneity closure") {
  for (auto order : {MonomialOrder::DegRevLex, MonomialOrder::DegLex, MonomialOrder::Lex}) {
    auto r = ring({"x", "y", "z"}, 101, order);
    std::mt19937_64 g(11);
    for (int k = 0; k < 100; ++k) {
      const int d1 = 1 + k % 3, d2 = 1 + (k / 3) % 3;
      Polynomial a = random_form(r, d1, g), b = random_form(r, d1, g), c = random_form(r, d2, g);
      CHECK((a + b) + a == a + (b + a));
      CHECK(a + b == b + a);
      CHECK(a * c == c * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a - a == Polynomial(r));
      Polynomial s = a + b, p = a * c;
      if (!s.is_zero()) CHECK(s.degree() == d1);
      if (!a.is_zero() && !c.is_zero()) CHECK(p.degree() == d1 + d2);
      // terms strictly descending, no zero coefficients
      for (std::size_t t = 1; t < p.size(); ++t) CHECK(r->compare(p.terms()[t - 1].mono, p.terms()[t].mono) > 0);
      for (const auto& t : p.terms()) CHECK(t.coeff != 0);
    }
  }
}

TEST_CASE("property: normal_form idempotent and sound") {
  auto r = ring({"x", "y", "z"});
  std::mt19937_64 g(5);
  for (int k = 0; k < 60; ++k) {
    Ideal i{r, {}};
    for (int j = 0; j < 3; ++j) {
      Polynomial h = random_form(r, 1 + (k + j) % 2, g, 0.4);
      if (!h.is_zero()) i.gens.push_back(h);
    }
    Polynomial f = random_form(r, 3, g, 0.7);
    Polynomial nf = normal_form(f, i.gens);
    CHECK(normal_form(nf, i.gens) == nf);
    // f - nf lies in I, so it reduces to zero against a Groebner basis
    std::vector<Polynomial> gb = gb_polys(i);
    CHECK(normal_form(f - nf, gb).is_zero());
    std::vector<Polynomial>& divisors = i.gens;
    for (const auto& t : nf.terms())
      for (const auto& d : divisors) CHECK_FALSE(d.lead().mono.divides(t.mono));
  }
}
