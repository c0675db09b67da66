#include <map>
#include <set>

#include "doctest.h"
#include "gammakit/bijections.hpp"
#include "gammakit/enumerate.hpp"

using namespace gammakit;

TEST_CASE("phi1 on the smallest case and round trips") {
  SignedPerm s = CycleForm::parse("(1,2)(-3)").to_signed(3);
  CHECK(tilde_tag(s) == TildeTag::B1);
  CHECK(phi1(s) == CycleForm::parse("(1,2)").to_signed(2));
  CHECK(phi1_inverse(phi1(s)) == s);
  CHECK_THROWS_AS(phi1(CycleForm::parse("(1,2,-3)").to_signed(3)), std::domain_error);
}

TEST_CASE("phi3 reproduces the worked example") {
  SignedPerm s = CycleForm::parse("(1,4,3,-9,-8)(2,5)(-6)(-7)").to_signed(9);
  CHECK(tilde_tag(s) == TildeTag::B3);
  SignedPerm image = phi3(s, 4);
  CHECK(CycleForm::of(image).str() == "(1,2,5,4,-9)(3,6)(-7)(-8)");
  CHECK(image == CycleForm::parse("(2,5,4,-9,1)(3,6)(-7)(-8)").to_signed(9));
  CHECK(stat_exc(image) == stat_exc(s));
  CHECK(phi3_inverse(image, 4) == s);
}

TEST_CASE("the tags partition TildeD_{n,i}") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      long long total = 0, b1 = 0, b2 = 0, b3 = 0;
      for_each_tilde_d(n, i, [&](const SignedPerm& s) {
        ++total;
        switch (tilde_tag(s)) {
          case TildeTag::B1: ++b1; break;
          case TildeTag::B2: ++b2; break;
          case TildeTag::B3: ++b3; break;
        }
      });
      CHECK(total == b1 + b2 + b3);
      CHECK(total == signed_class_count(SignedClass::TildeD, n, i));
    }
  }
}

namespace {

MultiPoly exc_poly_tilde(int n, int i) {
  MultiPoly p;
  for_each_tilde_d(n, i, [&](const SignedPerm& s) {
    p += MultiPoly::var(Var::x, 0) * MultiPoly::term(Monomial::var(Var::x, stat_exc(s)), 1);
  });
  return p;
}

}  // namespace

TEST_CASE("phi1, phi2, phi3 are excedance-preserving bijections") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      std::set<std::vector<int>> image_b1, image_b2, image_b3;
      for_each_tilde_d(n, i, [&](const SignedPerm& s) {
        switch (tilde_tag(s)) {
          case TildeTag::B1: {
            SignedPerm t = phi1(s);
            CHECK(phi1_inverse(t) == s);
            CHECK(in_signed_class(SignedClass::TildeD, t, i - 1));
            image_b1.insert(t.images());
            break;
          }
          case TildeTag::B2: {
            SignedPerm t = phi2(s, i);
            CHECK(stat_exc(t) == stat_exc(s));
            CHECK(stat_st(t) == 0);
            CHECK(in_signed_class(SignedClass::TildeD, t, i - 1));
            CHECK(phi2_inverse(t, i) == s);
            image_b2.insert(t.images());
            break;
          }
          case TildeTag::B3: {
            SignedPerm t = phi3(s, i);
            CHECK(stat_exc(t) == stat_exc(s));
            CHECK(stat_st(t) > 0);
            CHECK(in_signed_class(SignedClass::TildeD, t, i - 1));
            CHECK(phi3_inverse(t, i) == s);
            image_b3.insert(t.images());
            break;
          }
        }
      });
      // phi1 is onto TildeD_{n-1,i-1}; phi2 onto its singleton-free part;
      // phi3 onto the complement of that part.
      CHECK((long long)image_b1.size() == signed_class_count(SignedClass::TildeD, n - 1, i - 1));
      long long st0 = 0, st_pos = 0;
      for_each_tilde_d(n, i - 1, [&](const SignedPerm& t) {
        if (stat_st(t) == 0)
          ++st0;
        else
          ++st_pos;
      });
      CHECK((long long)image_b2.size() == st0);
      CHECK((long long)image_b3.size() == st_pos);
    }
  }
}

TEST_CASE("excedance bookkeeping of the partition") {
  // d_{n,i}^B(x) = d_{n,i-1}^B(x) + d_{n-1,i-1}^B(x), both by enumeration and
  // as transported through the maps.
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      CHECK(exc_poly_tilde(n, i) == exc_poly_tilde(n, i - 1) + exc_poly_tilde(n - 1, i - 1));
}

TEST_CASE("negative-set slices of D_n^B share one excedance distribution") {
  // The binomial factor in d_n^B(x,q) presumes the distribution only depends
  // on how many values are negated, not which.
  for (int n = 1; n <= 4; ++n) {
    std::map<std::vector<bool>, MultiPoly> by_set;
    for_each_in_signed_class(SignedClass::Derangements, n, [&](const SignedPerm& s) {
      std::vector<bool> negs(n, false);
      for (int pos = 1; pos <= n; ++pos)
        if (s.at(pos) < 0) negs[std::abs(s.at(pos)) - 1] = true;
      by_set[negs] += MultiPoly::term(Monomial::var(Var::x, stat_exc(s)), 1);
    });
    for (const auto& [negs, poly] : by_set) {
      int i = static_cast<int>(std::count(negs.begin(), negs.end(), true));
      CHECK(poly == exc_poly_tilde(n, i));
    }
  }
}

TEST_CASE("cycle value classification") {
  Perm p = CycleForm::parse("(1,10,6,5,7,3,2,8)(4,9)").to_perm(10);
  CHECK(classify_cycle_value(p, 3) == CycleValueClass::CycleDoubleDescent);
  CHECK(classify_cycle_value(p, 6) == CycleValueClass::CycleDoubleDescent);
  CHECK(classify_cycle_value(p, 10) == CycleValueClass::CyclePeak);
  CHECK(classify_cycle_value(p, 5) == CycleValueClass::CycleValley);
  CHECK(classify_cycle_value(p, 1) == CycleValueClass::None);
  CHECK(classify_cycle_value(Perm::identity(3), 2) == CycleValueClass::None);
}

TEST_CASE("modified Foata-Strehl action on the worked example") {
  Perm p = CycleForm::parse("(1,10,6,5,7,3,2,8)(4,9)").to_perm(10);
  CHECK(mfs_action(p, 3) == CycleForm::parse("(1,3,10,6,5,7,2,8)(4,9)").to_perm(10));
  CHECK(mfs_action(p, 6) == CycleForm::parse("(1,6,10,5,7,3,2,8)(4,9)").to_perm(10));
  // peaks and valleys are fixed
  CHECK(mfs_action(p, 10) == p);
  CHECK(mfs_action(p, 5) == p);
}

TEST_CASE("the action is an involution on double ascents and descents") {
  for (int n = 1; n <= 6; ++n) {
    for_each_perm(n, [&](const Perm& p) {
      for (int x = 1; x <= n; ++x) {
        CycleValueClass cls = classify_cycle_value(p, x);
        Perm moved = mfs_action(p, x);
        if (cls == CycleValueClass::CycleDoubleAscent ||
            cls == CycleValueClass::CycleDoubleDescent) {
          CHECK(moved != p);
          CHECK(mfs_action(moved, x) == p);
        } else {
          CHECK(moved == p);
        }
      }
    });
  }
}

TEST_CASE("toggling one double descent maps the cda = 0 layer onto cda = 1") {
  // |{cda = 1, fix = i, exc = j+1, cyc = k}| = (n - i - 2j) |{cda = 0, fix = i, exc = j, cyc = k}|
  for (int n = 1; n <= 7; ++n) {
    std::map<std::array<int, 3>, std::map<int, long long>> layer0, layer1;
    for_each_perm(n, [&](const Perm& p) {
      int cda = stat_cda(p);
      if (cda > 1) return;
      auto& layer = cda == 0 ? layer0 : layer1;
      ++layer[{stat_fix(p), stat_exc(p), stat_cyc(p)}][cda];
    });
    for (const auto& [key, counts] : layer0) {
      auto [i, j, k] = std::tuple(key[0], key[1], key[2]);
      long long rhs = (n - i - 2 * j) * counts.at(0);
      auto it = layer1.find({i, j + 1, k});
      long long lhs = it == layer1.end() ? 0 : it->second.at(1);
      CHECK(lhs == rhs);
    }
  }
}
