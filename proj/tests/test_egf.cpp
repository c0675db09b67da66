#include "doctest.h"
#include "gammakit/egf.hpp"
#include "gammakit/enumerate.hpp"

using namespace gammakit;

namespace {
const MultiPoly X = MultiPoly::var(Var::x);
const MultiPoly Y = MultiPoly::var(Var::y);
const MultiPoly S = MultiPoly::var(Var::s);
const MultiPoly Q = MultiPoly::var(Var::q);
}  // namespace

TEST_CASE("from_family and exp_linear basics") {
  auto ones = TruncatedEGF::from_family([](int) { return MultiPoly(1); }, 2);
  CHECK(ones.coeff(0) == MultiPoly(1));
  CHECK(ones.coeff(2) == MultiPoly(1));

  auto e0 = TruncatedEGF::exp_linear(MultiPoly(0), 4);
  CHECK(e0.coeff(0) == MultiPoly(1));
  CHECK(e0.coeff(3) == MultiPoly(0));

  auto eys = TruncatedEGF::exp_linear(Y + S, 2);
  CHECK(eys.coeff(1) == Y + S);
  CHECK(eys.coeff(2) == (Y + S).pow(2));

  auto eqx = TruncatedEGF::exp_linear((MultiPoly(1) + Q) * X, 2);
  CHECK(eqx.coeff(2) == (MultiPoly(1) + Q).pow(2) * X.pow(2));
}

TEST_CASE("binomial convolution multiplies exponentials") {
  const int N = 6;
  auto ex = TruncatedEGF::exp_linear(X, N);
  auto ey = TruncatedEGF::exp_linear(Y, N);
  CHECK(ex * ey == TruncatedEGF::exp_linear(X + Y, N));
  CHECK(ex * ey == ey * ex);
  auto es = TruncatedEGF::exp_linear(S, N);
  CHECK((ex * ey) * es == ex * (ey * es));
  CHECK_THROWS_AS(ex * TruncatedEGF::exp_linear(Y, N - 1), std::invalid_argument);
}

TEST_CASE("derangement EGF cross-multiplied") {
  // d(x;z) * (e^{xz} - x e^z) = 1 - x, with d_n from enumeration.
  const int N = 6;
  auto d = TruncatedEGF::from_family(
      [](int n) { return distribution(PermClass::Derangements, n, {{"exc", Var::x}}); }, N);
  auto den = TruncatedEGF::exp_linear(X, N) - TruncatedEGF::exp_linear(MultiPoly(1), N).scaled(X);
  auto num = TruncatedEGF::constant(MultiPoly(1) - X, N);
  CHECK(TruncatedEGF::verify_cross_multiplied(num, den, d));
  // and a perturbed series fails
  auto bad = d;
  CHECK_FALSE(TruncatedEGF::verify_cross_multiplied(num + TruncatedEGF::constant(X, N), den, bad));
}
