#include <random>

#include "doctest.h"
#include "gammakit/multipoly.hpp"

using namespace gammakit;

namespace {

const MultiPoly X = MultiPoly::var(Var::x);
const MultiPoly Y = MultiPoly::var(Var::y);
const MultiPoly S = MultiPoly::var(Var::s);
const MultiPoly Q = MultiPoly::var(Var::q);
const MultiPoly P = MultiPoly::var(Var::p);
const MultiPoly T = MultiPoly::var(Var::t);
const MultiPoly U = MultiPoly::var(Var::u);
const MultiPoly V = MultiPoly::var(Var::v);

MultiPoly random_poly(std::mt19937& rng, int max_terms = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> expo(0, 3);
  std::uniform_int_distribution<int> which(0, 3);
  const Var vars[4] = {Var::x, Var::y, Var::s, Var::q};
  MultiPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m;
    m.set_exp(vars[which(rng)], expo(rng));
    m.set_exp(vars[which(rng)], expo(rng));
    p += MultiPoly::term(m, coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("addition basics") {
  CHECK((X + Y) + MultiPoly(0) == X + Y);
  CHECK((S + Y) + (S + Y) == 2 * Rational(1) * (S + Y));
  // A_2 + y*A_1 = s + 2y
  CHECK((S + Y) + Y * MultiPoly(1) == S + 2 * Rational(1) * Y);
}

TEST_CASE("multiplication basics") {
  CHECK((X + Y) * (X + Y) == X.pow(2) + Rational(2) * X * Y + Y.pow(2));
  // (s+y)^2 + 2xy = A_3(x,y,s)
  MultiPoly a3 = (S + Y).pow(2) + Rational(2) * X * Y;
  CHECK(a3.coefficient(Monomial::var(Var::s, 2)) == 1);
  CHECK(a3.coefficient(Monomial::var(Var::x) * Monomial::var(Var::y)) == 2);
  // xy(x+y) = Phi_3
  CHECK(X * Y * (X + Y) == MultiPoly::term(Monomial::var(Var::x, 2) * Monomial::var(Var::y), 1) +
                               MultiPoly::term(Monomial::var(Var::x) * Monomial::var(Var::y, 2), 1));
}

TEST_CASE("substitute") {
  CHECK(U * V == (U * V));
  CHECK((U * V).substitute({{Var::u, X * Y}, {Var::v, X + Y}}) == X * Y * (X + Y));
  // A_3(x,y,s) at y=1, s=x gives the Eulerian polynomial 1+4x+x^2
  MultiPoly a3 = (S + Y).pow(2) + Rational(2) * X * Y;
  MultiPoly e3 = a3.substitute({{Var::y, MultiPoly(1)}, {Var::s, X}});
  CHECK(e3 == MultiPoly(1) + 4 * Rational(1) * X + X.pow(2));
  // t -> s + y leaves unrelated variables alone
  CHECK(T.substitute(Var::t, S + Y) == S + Y);
  CHECK((T * X).substitute(Var::t, S + Y) == (S + Y) * X);
}

TEST_CASE("substitute is a ring homomorphism") {
  std::mt19937 rng(20240817);
  std::map<Var, MultiPoly> bind{{Var::x, Y + S}, {Var::y, X * X - MultiPoly(2)}};
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly a = random_poly(rng), b = random_poly(rng);
    CHECK((a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind));
    CHECK((a + b).substitute(bind) == a.substitute(bind) + b.substitute(bind));
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK((a + (-a)).term_count() == 0);
  }
}

TEST_CASE("derivative") {
  CHECK((X.pow(2) * Y).derivative(Var::x) == 2 * Rational(1) * X * Y);
  CHECK((S + Y).derivative(Var::s) == MultiPoly(1));
  // (s+y)*A_2 + xy*(dx+dy+ds)A_2 = A_3
  MultiPoly a2 = S + Y;
  MultiPoly a3 = (S + Y) * a2 +
                 X * Y * (a2.derivative(Var::x) + a2.derivative(Var::y) + a2.derivative(Var::s));
  CHECK(a3 == (S + Y).pow(2) + 2 * Rational(1) * X * Y);
}

TEST_CASE("derivative satisfies the Leibniz rule") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly a = random_poly(rng), b = random_poly(rng);
    for (Var v : {Var::x, Var::y, Var::q}) {
      CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
      CHECK((a + b).derivative(v) == a.derivative(v) + b.derivative(v));
    }
  }
}

TEST_CASE("coefficient extraction") {
  MultiPoly p = X.pow(2) + 2 * Rational(1) * X * Y + Y.pow(2);
  CHECK(p.coefficient(Monomial::var(Var::x) * Monomial::var(Var::y)) == 2);
  CHECK(p.coefficient(Monomial::var(Var::x, 5)) == 0);
}

TEST_CASE("reciprocal_in") {
  MultiPoly p = MultiPoly(1) + 4 * Rational(1) * X + X.pow(2);
  CHECK(p.reciprocal_in(Var::x, 2) == p);  // palindromic fixed point
  MultiPoly d3 = X + X.pow(2);
  CHECK(d3.reciprocal_in(Var::x, 3) == d3);
  CHECK_THROWS_AS(d3.reciprocal_in(Var::x, 1), std::domain_error);
}

TEST_CASE("exact division") {
  MultiPoly p = (X + Y).pow(3) * (MultiPoly(1) + Q).pow(2);
  auto q = p.divided_exactly_by((MultiPoly(1) + Q).pow(2));
  REQUIRE(q.has_value());
  CHECK(*q == (X + Y).pow(3));
  CHECK(!(X + Y).divided_exactly_by(X - Y).has_value());
  auto half = X.divided_exactly_by(MultiPoly(2));
  REQUIRE(half.has_value());
  CHECK(*half == X * Rational(1, 2));
}

TEST_CASE("canonical rendering follows the contract example") {
  // B_2(x,y,s,t,p,q) = p^2 (s+qt)^2 + p (1+q)^2 xy
  MultiPoly b2 = P.pow(2) * (S + Q * T).pow(2) + P * (MultiPoly(1) + Q).pow(2) * X * Y;
  CHECK(b2.str() ==
        "p^2*q^2*t^2 + 2*p^2*q*s*t + p^2*s^2 + p*q^2*x*y + 2*p*q*x*y + p*x*y");
  CHECK((S + Y).str() == "s + y");
  CHECK(MultiPoly().str() == "0");
  CHECK((X - Y).str() == "x - y");
  CHECK((-(X * Y)).str() == "-x*y");
  CHECK((X * Rational(1, 2)).str() == "1/2*x");
  CHECK(((X + Y) * (X + Y)).str() == "x^2 + 2*x*y + y^2");
}

TEST_CASE("parse round-trips the canonical text") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    MultiPoly a = random_poly(rng, 7);
    CHECK(MultiPoly::parse(a.str()) == a);
  }
  CHECK(MultiPoly::parse("0") == MultiPoly());
  CHECK(MultiPoly::parse("1/2*x + y^3") == X * Rational(1, 2) + Y.pow(3));
  CHECK(MultiPoly::parse(" - x + 2") == MultiPoly(2) - X);
  CHECK_THROWS_AS(MultiPoly::parse("x +"), std::invalid_argument);
  CHECK_THROWS_AS(MultiPoly::parse("w"), std::invalid_argument);
}

TEST_CASE("slices and degrees") {
  MultiPoly p = (S + Q * T).pow(2) * X + Y;
  auto slices = p.slices_in(Var::x);
  CHECK(slices[1] == (S + Q * T).pow(2));
  CHECK(slices[0] == Y);
  CHECK(p.degree_in(Var::q) == 2);
  CHECK(p.total_degree() == 5);
}
