#include "doctest.h"
#include "gammakit/enumerate.hpp"
#include "gammakit/perm.hpp"

using namespace gammakit;

namespace {
const MultiPoly X = MultiPoly::var(Var::x);
const MultiPoly Y = MultiPoly::var(Var::y);
const MultiPoly S = MultiPoly::var(Var::s);
const MultiPoly Q = MultiPoly::var(Var::q);
const MultiPoly P = MultiPoly::var(Var::p);
const MultiPoly T = MultiPoly::var(Var::t);
}  // namespace

TEST_CASE("basic statistics on the identity") {
  Perm id = Perm::identity(3);
  CHECK(perm_stat(id, "suc") == 2);
  CHECK(perm_stat(id, "fix") == 3);
  CHECK(perm_stat(id, "des") == 0);
  CHECK(perm_stat(id, "cyc") == 3);
  CHECK_THROWS_AS(perm_stat(id, "nope"), std::invalid_argument);
}

TEST_CASE("peak and double-descent conventions") {
  Perm p({2, 1, 3});
  CHECK(perm_stat(p, "lpk") == 1);   // pi(0) = 0 < 2 > 1
  CHECK(perm_stat(p, "ipk") == 0);   // interior range {2} only
  CHECK(perm_stat(p, "dd") == 0);
  CHECK(perm_stat(Perm({2, 1}), "dd") == 1);  // 2 > 1 > pi(3) = 0
  CHECK(perm_stat(Perm({1, 3, 2}), "ipk") == 1);
  CHECK(perm_stat(Perm({3, 2, 1}), "lpk") == 1);  // position n is never a left peak
  CHECK(perm_stat(Perm({3, 2, 1}), "dd") == 2);
  CHECK(perm_stat(p, "basc") == 1);
  CHECK(perm_stat(p, "cda") == 0);
}

TEST_CASE("cda counts cycle double ascents") {
  // (1,3,4)(2): the value 3 is a cycle double ascent.
  Perm p = CycleForm::parse("(1,3,4)(2)").to_perm(4);
  CHECK(stat_cda(p) == 1);
  CHECK(stat_cda(Perm::identity(5)) == 0);
}

TEST_CASE("statistic identities over S_n") {
  for (int n = 0; n <= 6; ++n) {
    for_each_perm(n, [&](const Perm& p) {
      CHECK(stat_asc(p) == stat_basc(p) + stat_suc(p));
      if (n > 0) CHECK(stat_des(p) + stat_asc(p) == n - 1);
      CHECK(stat_exc(p) + stat_aexc(p) + stat_fix(p) == n);
    });
  }
}

TEST_CASE("des, asc and exc are equidistributed") {
  for (int n = 1; n <= 8; ++n) {
    auto by_des = distribution(PermClass::All, n, {{"des", Var::x}});
    auto by_asc = distribution(PermClass::All, n, {{"asc", Var::x}});
    auto by_exc = distribution(PermClass::All, n, {{"exc", Var::x}});
    CHECK(by_des == by_asc);
    CHECK(by_des == by_exc);
  }
}

TEST_CASE("signed statistics on the worked labeling example") {
  SignedPerm s = CycleForm::parse("(1,3,-2,6)(-4)(5)").to_signed(6);
  CHECK(signed_stat(s, "exc") == 2);
  CHECK(signed_stat(s, "aexc") == 2);
  CHECK(signed_stat(s, "fix") == 1);
  CHECK(signed_stat(s, "st") == 1);
  CHECK(signed_stat(s, "N") == 2);
  CHECK(signed_stat(s, "cyc") == 3);
  CHECK_THROWS_AS(signed_stat(s, "nope"), std::invalid_argument);

  SignedPerm id = SignedPerm::identity(4);
  CHECK(stat_fix(id) == 4);
  CHECK(stat_exc(id) == 0);
  CHECK(stat_st(id) == 0);
  CHECK(stat_cyc(id) == 4);
}

TEST_CASE("exc + aexc + fix + st = n and excB/waexc composites") {
  for (int n = 0; n <= 4; ++n) {
    for_each_signed(n, [&](const SignedPerm& s) {
      CHECK(stat_exc(s) + stat_aexc(s) + stat_fix(s) + stat_st(s) == n);
      CHECK(stat_excB(s) == stat_exc(s) + stat_st(s));
      CHECK(stat_waexc(s) == stat_aexc(s) + stat_st(s));
      CHECK(stat_wexc(s) == stat_exc(s) + stat_fix(s));
    });
  }
}

TEST_CASE("B_2 six-variable distribution matches the closed form") {
  auto dist = distribution(SignedClass::All, 2,
                           {{"exc", Var::x},
                            {"aexc", Var::y},
                            {"fix", Var::s},
                            {"st", Var::t},
                            {"cyc", Var::p},
                            {"N", Var::q}});
  MultiPoly expected = P.pow(2) * (S + Q * T).pow(2) + P * (MultiPoly(1) + Q).pow(2) * X * Y;
  CHECK(dist == expected);
}

TEST_CASE("desB and wexc are equidistributed over B_n") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(distribution(SignedClass::All, n, {{"desB", Var::x}}) ==
          distribution(SignedClass::All, n, {{"wexc", Var::x}}));
  }
}

TEST_CASE("cycle form round-trips") {
  for (int n = 1; n <= 6; ++n) {
    long long count = 0;
    for_each_signed(n, [&](const SignedPerm& s) {
      if (CycleForm::of(s).to_signed(n) == s) ++count;
    });
    CHECK(count == signed_class_count(SignedClass::All, n));
  }
  CHECK(CycleForm::parse("(1,4,3,-9,-8)(2,5)(-6)(-7)").str() == "(1,4,3,-9,-8)(2,5)(-6)(-7)");
}

TEST_CASE("colored statistics and excedances") {
  ColoredPerm all_zero(Perm({2, 1, 3}), {0, 0, 0}, 2);
  CHECK(stat_exc(all_zero) == stat_exc(Perm({2, 1, 3})));
  // Z_2 wr S_2 derangements: x^2 + 4x
  auto d22 = distribution(ColoredClass::Derangements, 2, 2, {{"exc", Var::x}});
  CHECK(d22 == X.pow(2) + 4 * Rational(1) * X);
  CHECK_THROWS_AS(colored_stat(all_zero, "nope"), std::invalid_argument);
}

TEST_CASE("simsun permutations") {
  for_each_perm(2, [&](const Perm& p) { CHECK(is_simsun(p)); });
  // S(3,i): 1 with no descent, 4 with one descent; forced by the expansion of
  // A_4(x) in the S(n,i) basis.
  auto t = triangle_S(3);
  CHECK(t.at(3, 0) == 1);
  CHECK(t.at(3, 1) == 4);
  CHECK(class_count(PermClass::Simsun, 3) == 5);
  CHECK_FALSE(is_simsun(Perm({3, 2, 1})));
}

TEST_CASE("simsun of the second kind") {
  CHECK_FALSE(is_simsun_second_kind(CycleForm::parse("(1,6,5,3,4)(2)").to_perm(6)));
  CHECK(is_simsun_second_kind(Perm::identity(5)));
  // gamma_{2,i,j} counts: identity has (fix, exc) = (2, 0), the transposition
  // (1,2) has (0, 1).
  int count_20 = 0, count_01 = 0, total = 0;
  for_each_in_class(PermClass::SimsunSecondKind, 2, [&](const Perm& p) {
    ++total;
    if (stat_fix(p) == 2 && stat_exc(p) == 0) ++count_20;
    if (stat_fix(p) == 0 && stat_exc(p) == 1) ++count_01;
  });
  CHECK(total == 2);
  CHECK(count_20 == 1);
  CHECK(count_01 == 1);
}

TEST_CASE("class cardinalities") {
  CHECK(class_count(PermClass::All, 4) == 24);
  CHECK(signed_class_count(SignedClass::All, 3) == 48);
  CHECK(class_count(PermClass::Derangements, 4) == 9);
  long long colored = 0;
  for_each_colored(2, 3, [&](const ColoredPerm&) { ++colored; });
  CHECK(colored == 18);
}

TEST_CASE("distribution over S_3 with three statistics") {
  auto a3 = distribution(PermClass::All, 3, {{"basc", Var::x}, {"des", Var::y}, {"suc", Var::s}});
  CHECK(a3 == (S + Y).pow(2) + 2 * Rational(1) * X * Y);
}

TEST_CASE("distribution is independent of the block partition") {
  auto seq = distribution(PermClass::All, 5, {{"des", Var::x}, {"exc", Var::y}}, 1);
  auto par = distribution(PermClass::All, 5, {{"des", Var::x}, {"exc", Var::y}}, 4);
  CHECK(seq == par);
  auto seq_b = distribution(SignedClass::Derangements, 4, {{"exc", Var::x}, {"N", Var::q}}, 1);
  auto par_b = distribution(SignedClass::Derangements, 4, {{"exc", Var::x}, {"N", Var::q}}, 3);
  CHECK(seq_b == par_b);
}

TEST_CASE("succession set vs fixed point set") {
  CHECK(fixed_set_vs_succession_set(1));
  CHECK(fixed_set_vs_succession_set(2));
  for (int n = 3; n <= 6; ++n) CHECK(fixed_set_vs_succession_set(n));
}

TEST_CASE("Roselle identities") {
  std::string why;
  bool ok = roselle_checks(6, &why);
  INFO(why);
  CHECK(ok);
}

TEST_CASE("NS_n descent polynomial equals d_n + d_{n-1}") {
  for (int n = 2; n <= 6; ++n) {
    auto lhs = distribution(PermClass::NoSuccession, n, {{"des", Var::x}});
    auto dn = distribution(PermClass::Derangements, n, {{"exc", Var::x}});
    auto dn1 = distribution(PermClass::Derangements, n - 1, {{"exc", Var::x}});
    CHECK(lhs == dn + dn1);
  }
}

TEST_CASE("simsun descent counts match simsun-second-kind excedance counts") {
  for (int n = 1; n <= 7; ++n) {
    auto rs = distribution(PermClass::Simsun, n, {{"des", Var::x}});
    auto ss = distribution(PermClass::SimsunSecondKind, n, {{"exc", Var::x}});
    CHECK(rs == ss);
  }
}

TEST_CASE("tilde-D classes and binomial reassembly of d_n^B(x,q)") {
  // sum_i C(n,i) * (exc polynomial over TildeD_{n,i}) * q^i equals the
  // (exc, N) distribution over all type B derangements.
  for (int n = 1; n <= 4; ++n) {
    MultiPoly assembled;
    for (int i = 0; i <= n; ++i) {
      MultiPoly slice;
      for_each_tilde_d(n, i, [&](const SignedPerm& s) {
        slice += MultiPoly::var(Var::x, 0) * MultiPoly::term(Monomial::var(Var::x, stat_exc(s)), 1);
      });
      assembled += Rational(binomial(n, i)) * slice * Q.pow(i);
    }
    CHECK(assembled == distribution(SignedClass::Derangements, n, {{"exc", Var::x}, {"N", Var::q}}));
  }
}

TEST_CASE("resource bounds reject oversized scans") {
  Bounds saved = global_bounds();
  global_bounds().max_n_symmetric = 4;
  CHECK_THROWS_AS(for_each_perm(5, [](const Perm&) {}), BoundExceeded);
  global_bounds() = saved;
  global_bounds().max_elements = 10;
  CHECK_THROWS_AS(for_each_perm(4, [](const Perm&) {}), BoundExceeded);
  global_bounds() = saved;
}
