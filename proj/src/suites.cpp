#include "gammakit/suites.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "json.hpp"

#include "gammakit/bijections.hpp"
#include "gammakit/egf.hpp"
#include "gammakit/enumerate.hpp"
#include "gammakit/families.hpp"
#include "gammakit/grammar.hpp"

namespace gammakit {

namespace {

const MultiPoly kX = MultiPoly::var(Var::x);
const MultiPoly kY = MultiPoly::var(Var::y);
const MultiPoly kS = MultiPoly::var(Var::s);
const MultiPoly kT = MultiPoly::var(Var::t);
const MultiPoly kU = MultiPoly::var(Var::u);
const MultiPoly kV = MultiPoly::var(Var::v);
const MultiPoly kP = MultiPoly::var(Var::p);
const MultiPoly kQ = MultiPoly::var(Var::q);
const MultiPoly kJ = MultiPoly::var(Var::J);
const MultiPoly kOne = MultiPoly(1);
const MultiPoly kOnePlusQ = kOne + kQ;

std::string mismatch(int n, const MultiPoly& lhs, const MultiPoly& rhs) {
  return "n=" + std::to_string(n) + ": " + lhs.str() + " != " + rhs.str();
}

MultiPoly substitute_x(const MultiPoly& p, const MultiPoly& value) {
  return p.substitute(Var::x, value);
}

// sum over the class of x^(stat), as a polynomial in x
MultiPoly x_distribution(PermClass cls, int n, const char* stat) {
  return distribution(cls, n, {{stat, Var::x}});
}

MultiPoly binom(int n, int k) { return MultiPoly(Rational(binomial(n, k))); }

MultiPoly power_of_two(int k) { return MultiPoly(Rational(Int(1) << k)); }

// --- enumeration-backed series ---

TruncatedEGF series_exc_fix(PermClass cls, int order) {
  // coefficient n: sum over the class in S_n of s^fix x^exc
  return TruncatedEGF::from_family(
      [&](int n) { return distribution(cls, n, {{"fix", Var::s}, {"exc", Var::x}}); }, order);
}

bool coeffwise_equal(const TruncatedEGF& a, const TruncatedEGF& b, std::string& why) {
  for (int n = 0; n <= a.order(); ++n) {
    if (a.coeff(n) != b.coeff(n)) {
      why = mismatch(n, a.coeff(n), b.coeff(n));
      return false;
    }
  }
  return true;
}

// --- suite runner plumbing ---

std::vector<CheckDef>& registry() {
  static std::vector<CheckDef> checks;
  return checks;
}

void add_check(std::string name, std::string suite, std::function<int(int)> effective_n,
               std::function<std::string(int)> body) {
  registry().push_back(CheckDef{std::move(name), std::move(suite), std::move(body),
                                std::move(effective_n)});
}

int cap7(int max_n) { return std::min(max_n, 7); }
int cap6(int max_n) { return std::min(max_n, 6); }
int cap5(int max_n) { return std::min(max_n, 5); }
int cap8(int max_n) { return std::min(max_n, 8); }

// ======================== egf suite ========================

void register_egf_checks() {
  add_check("egf-A-series", "egf", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    auto a = TruncatedEGF::from_family(
        [&](int n) {
          return distribution(PermClass::All, n + 1,
                              {{"basc", Var::x}, {"des", Var::y}, {"suc", Var::s}});
        },
        N);
    auto den = TruncatedEGF::exp_linear(kX, N).scaled(kY) -
               TruncatedEGF::exp_linear(kY, N).scaled(kX);
    auto num = TruncatedEGF::exp_linear(kY + kS, N).scaled((kY - kX).pow(2));
    if (!TruncatedEGF::verify_cross_multiplied(num, den * den, a))
      return "A(x,y,s;z) cross-multiplication fails";
    return "";
  });

  add_check("egf-dxys", "egf", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    auto d = TruncatedEGF::from_family(
        [&](int n) {
          return distribution(PermClass::All, n,
                              {{"exc", Var::x}, {"aexc", Var::y}, {"fix", Var::s}});
        },
        N);
    auto den = TruncatedEGF::exp_linear(kX, N).scaled(kY) -
               TruncatedEGF::exp_linear(kY, N).scaled(kX);
    auto num = TruncatedEGF::exp_linear(kS, N).scaled(kY - kX);
    return TruncatedEGF::verify_cross_multiplied(num, den, d)
               ? ""
               : "d(x,y,s;z) cross-multiplication fails";
  });

  add_check("egf-dnBxq", "egf", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    auto d = TruncatedEGF::from_family(
        [&](int n) {
          return distribution(SignedClass::Derangements, n, {{"exc", Var::x}, {"N", Var::q}});
        },
        N);
    auto den = TruncatedEGF::exp_linear(kOnePlusQ * kX, N) -
               TruncatedEGF::exp_linear(kOnePlusQ, N).scaled(kX);
    auto num = TruncatedEGF::exp_linear(kQ, N).scaled(kOne - kX);
    return TruncatedEGF::verify_cross_multiplied(num, den, d)
               ? ""
               : "d^B(x,q) EGF cross-multiplication fails";
  });

  for (int r = 1; r <= 3; ++r) {
    add_check("egf-colored-r" + std::to_string(r), "egf", cap6, [r](int max_n) -> std::string {
      int N = cap6(max_n);
      auto d = TruncatedEGF::from_family(
          [&](int n) {
            return distribution(ColoredClass::Derangements, n, r, {{"exc", Var::x}});
          },
          N);
      auto den = TruncatedEGF::exp_linear(MultiPoly(r) * kX, N) -
                 TruncatedEGF::exp_linear(MultiPoly(r), N).scaled(kX);
      auto num = TruncatedEGF::exp_linear(MultiPoly(r - 1) * kX, N).scaled(kOne - kX);
      return TruncatedEGF::verify_cross_multiplied(num, den, d)
                 ? ""
                 : "colored derangement EGF fails for r=" + std::to_string(r);
    });
  }

  for (int p = 1; p <= 3; ++p) {
    add_check("egf-B-p" + std::to_string(p), "egf", cap6, [p](int max_n) -> std::string {
      int N = cap6(max_n);
      auto b = TruncatedEGF::from_family(
          [&](int n) {
            return distribution(SignedClass::All, n,
                                {{"exc", Var::x},
                                 {"aexc", Var::y},
                                 {"fix", Var::s},
                                 {"st", Var::t},
                                 {"cyc", Var::p},
                                 {"N", Var::q}})
                .substitute(Var::p, MultiPoly(p));
          },
          N);
      auto den = TruncatedEGF::exp_linear(kOnePlusQ * kX, N).scaled(kY) -
                 TruncatedEGF::exp_linear(kOnePlusQ * kY, N).scaled(kX);
      auto num = TruncatedEGF::exp_linear(MultiPoly(p) * (kS + kQ * kT), N)
                     .scaled((kY - kX).pow(p));
      return TruncatedEGF::verify_cross_multiplied(num, den.pow(p), b)
                 ? ""
                 : "B EGF cross-multiplication fails at p=" + std::to_string(p);
    });
  }

  add_check("egf-Ax", "egf", cap8, [](int max_n) -> std::string {
    int N = cap8(max_n);
    auto eulerian = family_sequence(FamilyId::AX, N);
    auto a = TruncatedEGF(N, std::move(eulerian));
    auto den = TruncatedEGF::constant(kX, N) - TruncatedEGF::exp_linear(kX - kOne, N);
    auto num = TruncatedEGF::constant(kX - kOne, N);
    return TruncatedEGF::verify_cross_multiplied(num, den, a)
               ? ""
               : "Eulerian EGF cross-multiplication fails";
  });

  add_check("egf-Px", "egf", cap8, [](int max_n) -> std::string {
    int N = cap8(max_n);
    auto p_family = family_sequence(FamilyId::PX, N + 1);
    auto series = TruncatedEGF::from_family([&](int n) { return p_family[n + 1]; }, N);
    auto den = TruncatedEGF::exp_linear(kX, N) - TruncatedEGF::exp_linear(kOne, N).scaled(kX);
    auto num = TruncatedEGF::exp_linear(kOne, N).scaled((kOne - kX).pow(2));
    return TruncatedEGF::verify_cross_multiplied(num, den * den, series)
               ? ""
               : "A(x,1,0;z) cross-multiplication fails";
  });

  add_check("egf-A-square", "egf", cap8, [](int max_n) -> std::string {
    int N = cap8(max_n);
    auto a_xys = family_sequence(FamilyId::AXys, N + 1);
    auto basc_series = TruncatedEGF::from_family(
        [&](int n) {
          return a_xys[n + 1].substitute({{Var::y, kOne}, {Var::s, kOne}});
        },
        N);
    auto eulerian = TruncatedEGF(N, family_sequence(FamilyId::AX, N));
    std::string why;
    return coeffwise_equal(basc_series, eulerian * eulerian, why)
               ? ""
               : "A(x,1,1;z) != A(x;z)^2: " + why;
  });

  add_check("egf-Phi", "egf", cap8, [](int max_n) -> std::string {
    int N = cap8(max_n);
    auto phi = family_sequence(FamilyId::Phi, N);
    auto phi_series =
        TruncatedEGF::from_family([&](int n) { return phi[n] * kOnePlusQ.pow(n); }, N);
    auto lhs = (TruncatedEGF::constant(kOne, N) - phi_series).scaled(kY - kX);
    auto rhs = TruncatedEGF::exp_linear(kOnePlusQ * kX, N).scaled(kY) -
               TruncatedEGF::exp_linear(kOnePlusQ * kY, N).scaled(kX);
    std::string why;
    return coeffwise_equal(lhs, rhs, why) ? "" : "Phi series identity fails: " + why;
  });

  add_check("egf-Atilde", "egf", cap8, [](int max_n) -> std::string {
    int N = cap8(max_n);
    auto series = TruncatedEGF(N, family_sequence(FamilyId::ATildeXy, N));
    auto den = TruncatedEGF::exp_linear(kX, N).scaled(kY) -
               TruncatedEGF::exp_linear(kY, N).scaled(kX);
    auto num = TruncatedEGF::exp_linear(kY, N).scaled(kY - kX);
    return TruncatedEGF::verify_cross_multiplied(num, den, series)
               ? ""
               : "Atilde EGF cross-multiplication fails";
  });
}

// ======================== gamma suite ========================

void register_gamma_checks() {
  add_check("gamma-ss-counts", "gamma", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    GammaTable g = gamma_table(N);
    for (int n = 0; n <= N; ++n) {
      std::map<std::pair<int, int>, long long> counts;
      for_each_in_class(PermClass::SimsunSecondKind, n,
                        [&](const Perm& p) { ++counts[{stat_fix(p), stat_exc(p)}]; });
      for (int i = 0; i <= n; ++i)
        for (int j = 0; 2 * j <= n - i; ++j) {
          auto it = counts.find({i, j});
          Rational expected(it == counts.end() ? 0 : it->second);
          if (g.at(n, i, j).constant_value() != expected)
            return "gamma(" + std::to_string(n) + "," + std::to_string(i) + "," +
                   std::to_string(j) + ") = " + g.at(n, i, j).str() +
                   " but the simsun count is " + rational_str(expected);
        }
    }
    return "";
  });

  add_check("gamma-b-cda", "gamma", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    GammaTable b = b_table(N);
    for (int n = 0; n <= N; ++n) {
      std::map<std::pair<int, int>, MultiPoly> sums;
      for_each_in_class(PermClass::CdaFree, n, [&](const Perm& p) {
        sums[{stat_fix(p), stat_exc(p)}] += kP.pow(stat_cyc(p));
      });
      for (int i = 0; i <= n; ++i)
        for (int j = 0; 2 * j <= n - i; ++j) {
          auto it = sums.find({i, j});
          MultiPoly expected = it == sums.end() ? MultiPoly() : it->second;
          if (b.at(n, i, j) != expected)
            return "b(" + std::to_string(n) + "," + std::to_string(i) + "," + std::to_string(j) +
                   ")(p) = " + b.at(n, i, j).str() + " but the cda-free cycle sum is " +
                   expected.str();
        }
    }
    return "";
  });

  add_check("gamma-A-expansion", "gamma", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    GammaTable g = gamma_table(N);
    auto a = family_sequence(FamilyId::AXys, N + 1);
    for (int n = 0; n <= N; ++n) {
      auto expansion = expand_gamma_basis_A(a[n + 1], n);
      if (!expansion.in_span) return "A_{n+1} not in span at n=" + std::to_string(n) + ": " +
                                     expansion.error;
      for (const auto& [ij, coef] : expansion.coeffs)
        if (coef != g.at(n, ij.first, ij.second))
          return "A expansion coefficient (" + std::to_string(ij.first) + "," +
                 std::to_string(ij.second) + ") disagrees at n=" + std::to_string(n);
      MultiPoly rebuilt;
      for (const auto& [key, value] : g.entries) {
        if (key[0] != n) continue;
        rebuilt += value * power_of_two(key[2]) * (kS + kY).pow(key[1]) * (kX * kY).pow(key[2]) *
                   (kX + kY).pow(n - key[1] - 2 * key[2]);
      }
      if (rebuilt != a[n + 1]) return mismatch(n, rebuilt, a[n + 1]);
    }
    return "";
  });

  add_check("gamma-B-expansion", "gamma", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    GammaTable b = b_table(N);
    auto bs = family_sequence(FamilyId::BXystpq, N);
    for (int n = 0; n <= N; ++n) {
      auto expansion = expand_gamma_basis_B(bs[n], n);
      if (!expansion.in_span) return "B_n not in span at n=" + std::to_string(n) + ": " +
                                     expansion.error;
      std::map<std::pair<int, int>, MultiPoly> expected;
      for (const auto& [key, value] : b.entries)
        if (key[0] == n) expected[{key[1], key[2]}] = value;
      if (expansion.coeffs != expected) return "B expansion disagrees at n=" + std::to_string(n);
    }
    return "";
  });

  add_check("gamma-positivity", "gamma", [](int max_n) { return std::max(max_n, 10); },
            [](int max_n) -> std::string {
              int N = std::max(max_n, 10);
              GammaTable g = gamma_table(N);
              for (const auto& [key, value] : g.entries)
                if (!value.is_constant() || !is_nonnegative_integer(value.constant_value()))
                  return "gamma entry is not a nonnegative integer";
              GammaTable b = b_table(N);
              for (const auto& [key, value] : b.entries)
                if (!value.all_coefficients_nonnegative() || !value.all_coefficients_integer())
                  return "b entry has a negative or fractional coefficient";
              auto [fp, fm] = f_tables(N);
              for (const auto& [key, value] : fp.entries)
                if (!value.all_coefficients_nonnegative() || !value.all_coefficients_integer())
                  return "f+ entry has a negative or fractional coefficient";
              for (const auto& [key, value] : fm.entries)
                if (!value.all_coefficients_nonnegative() || !value.all_coefficients_integer())
                  return "f- entry has a negative or fractional coefficient";
              return "";
            });

  add_check("gamma-f-split", "gamma", cap8, [](int max_n) -> std::string {
    int N = cap8(max_n);
    auto dbxq = family_sequence(FamilyId::DBXq, N);
    auto fplus = family_sequence(FamilyId::FPlus, N);
    auto fminus = family_sequence(FamilyId::FMinus, N);
    for (int n = 1; n <= N; ++n) {
      auto [fp, fm] = f_pm_split(dbxq[n], n);
      if (fp != fplus[n] || fm != fminus[n])
        return "f_pm_split disagrees with the recurrence tables at n=" + std::to_string(n);
      if (fp.reciprocal_in(Var::x, n) != fp)
        return "f+ is not self-reciprocal at n=" + std::to_string(n);
      if (!fm.is_zero() && fm.reciprocal_in(Var::x, n - 1) != fm)
        return "f- is not self-reciprocal at n=" + std::to_string(n);
      if (fp.substitute(Var::q, MultiPoly(0)) != family(FamilyId::DX, n))
        return "f+(x,0) != d_n(x) at n=" + std::to_string(n);
      if (!fm.substitute(Var::q, MultiPoly(0)).is_zero())
        return "f-(x,0) != 0 at n=" + std::to_string(n);
    }
    return "";
  });

  add_check("gamma-f-gamma-vectors", "gamma", cap8, [](int max_n) -> std::string {
    int N = cap8(max_n);
    auto fplus = family_sequence(FamilyId::FPlus, N);
    auto fminus = family_sequence(FamilyId::FMinus, N);
    for (int n = 1; n <= N; ++n) {
      for (int qv = 0; qv <= 3; ++qv) {
        auto fp = fplus[n].substitute(Var::q, MultiPoly(qv));
        auto fm = fminus[n].substitute(Var::q, MultiPoly(qv));
        auto gp = gamma_vector(fp, Var::x, n);
        auto gm = gamma_vector(fm, Var::x, n - 1);
        if (!gp || !gm) return "f+- not in the gamma span at n=" + std::to_string(n);
        for (const auto& c : *gp)
          if (!c.all_coefficients_nonnegative())
            return "f+ gamma vector negative at n=" + std::to_string(n) +
                   ", q=" + std::to_string(qv);
        for (const auto& c : *gm)
          if (!c.all_coefficients_nonnegative())
            return "f- gamma vector negative at n=" + std::to_string(n) +
                   ", q=" + std::to_string(qv);
      }
    }
    return "";
  });

  add_check("gamma-zeng-b0", "gamma", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    GammaTable b = b_table(N);
    for (int n = 2; n <= N; ++n) {
      for (int k = 1; 2 * k <= n; ++k) {
        MultiPoly expected;
        for_each_in_class(PermClass::DerangementCdaFreeExc, n,
                          [&](const Perm& p) { expected += kQ.pow(stat_cyc(p)); }, k);
        if (b.at(n, 0, k).substitute(Var::p, kQ) != expected)
          return "b(n,0,k) cycle polynomial disagrees at n=" + std::to_string(n) +
                 ", k=" + std::to_string(k);
      }
    }
    return "";
  });
}

// ======================== grammar suite ========================

void register_grammar_checks() {
  add_check("grammar-derive-LM", "grammar", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    const Grammar& G = Grammar::builtin("G");
    const MultiPoly LM = MultiPoly::var(Var::L) * MultiPoly::var(Var::M);
    MultiPoly power = LM;
    for (int n = 0; n <= N; ++n) {
      if (n > 0) power = G.derive(power);
      MultiPoly expected =
          LM * distribution(PermClass::All, n + 1,
                            {{"basc", Var::x}, {"des", Var::y}, {"suc", Var::s}});
      if (power != expected) return mismatch(n, power, expected);
    }
    return "";
  });

  add_check("grammar-derive-Bn", "grammar", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    const Grammar& G2 = Grammar::builtin("G2");
    MultiPoly power = kJ;
    for (int n = 0; n <= N; ++n) {
      if (n > 0) power = G2.derive(power);
      MultiPoly expected = kJ * distribution(SignedClass::All, n,
                                             {{"exc", Var::x},
                                              {"aexc", Var::y},
                                              {"fix", Var::s},
                                              {"st", Var::t},
                                              {"cyc", Var::p},
                                              {"N", Var::q}});
      if (power != expected) return mismatch(n, power, expected);
    }
    return "";
  });

  add_check("grammar-dumont", "grammar", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    const Grammar& dumont = Grammar::builtin("dumont");
    MultiPoly power = kX;
    for (int n = 1; n <= N; ++n) {
      power = dumont.derive(power);
      MultiPoly expected;
      for_each_perm(n, [&](const Perm& p) {
        int e = stat_exc(p);
        expected += MultiPoly::var(Var::x, e + 1) * MultiPoly::var(Var::y, n - e);
      });
      if (power != expected) return mismatch(n, power, expected);
    }
    return "";
  });

  add_check("grammar-change-G-G1", "grammar", cap6, [](int max_n) -> std::string {
    const MultiPoly LM = MultiPoly::var(Var::L) * MultiPoly::var(Var::M);
    std::string why;
    bool ok = check_change_of_grammar(
        Grammar::builtin("G"), Grammar::builtin("G1"),
        {{Var::u, kX * kY}, {Var::v, kX + kY}, {Var::t, kS + kY}, {Var::I, LM}}, LM,
        MultiPoly::var(Var::I), cap6(max_n), &why);
    return ok ? "" : why;
  });

  add_check("grammar-change-G2-G3", "grammar", cap5, [](int max_n) -> std::string {
    std::string why;
    bool ok = check_change_of_grammar(
        Grammar::builtin("G2"), Grammar::builtin("G3"),
        {{Var::u, kX * kY}, {Var::v, kX + kY}, {Var::h, kS + kQ * kT}}, kJ, kJ, cap5(max_n),
        &why);
    return ok ? "" : why;
  });

  add_check("grammar-change-G6-G7", "grammar", cap5, [](int max_n) -> std::string {
    std::string why;
    bool ok = check_change_of_grammar(
        Grammar::builtin("G6"), Grammar::builtin("G7"),
        {{Var::H, kJ * kY}, {Var::u, kX * kY}, {Var::v, kX + kY}}, kJ, kJ, cap5(max_n), &why);
    return ok ? "" : why;
  });

  add_check("grammar-DG101", "grammar", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    GammaTable g = gamma_table(N);
    const Grammar& G1 = Grammar::builtin("G1");
    MultiPoly power = MultiPoly::var(Var::I);
    for (int n = 0; n <= N; ++n) {
      if (n > 0) power = G1.derive(power);
      MultiPoly expected;
      for (const auto& [key, value] : g.entries) {
        if (key[0] != n) continue;
        expected += value * power_of_two(key[2]) * MultiPoly::var(Var::I) *
                    kT.pow(key[1]) * kU.pow(key[2]) * kV.pow(n - key[1] - 2 * key[2]);
      }
      if (power != expected) return mismatch(n, power, expected);
    }
    return "";
  });

  add_check("grammar-DG7-f", "grammar", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    auto [fp, fm] = f_tables(N);
    const Grammar& G7 = Grammar::builtin("G7");
    MultiPoly power = kJ;
    for (int n = 0; n <= N; ++n) {
      if (n > 0) power = G7.derive(power);
      MultiPoly at_s0 = power.substitute(Var::s, MultiPoly(0));
      MultiPoly expected;
      for (int j = 0; 2 * j <= n; ++j)
        expected += fp.at(n, j) * kJ * kU.pow(j) * kV.pow(n - 2 * j);
      for (int j = 0; 2 * j <= n - 1; ++j)
        expected += fm.at(n, j) * MultiPoly::var(Var::H) * kU.pow(j) * kV.pow(n - 1 - 2 * j);
      if (at_s0 != expected) return mismatch(n, at_s0, expected);
    }
    return "";
  });

  add_check("grammar-G4-special", "grammar", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    const Grammar& G4 = Grammar::builtin("G4");
    const MultiPoly a = MultiPoly::var(Var::a);
    const MultiPoly I = MultiPoly::var(Var::I);
    const MultiPoly H = MultiPoly::var(Var::h);
    for (int n = 0; n <= N; ++n) {
      MultiPoly power = G4.derive_n(a, n);
      if (power.substitute({{Var::q, kOne}, {Var::a, I}}) !=
          Grammar::builtin("G1").derive_n(I, n))
        return "G4 at q=1 disagrees with G1 at n=" + std::to_string(n);
      if (power.substitute({{Var::q, MultiPoly(Rational(1, 2))},
                            {Var::a, kJ},
                            {Var::t, MultiPoly(2) * H}}) !=
          Grammar::builtin("G5").derive_n(kJ, n))
        return "G4 at q=1/2 disagrees with G5 at n=" + std::to_string(n);
    }
    return "";
  });

  add_check("grammar-G4-genM", "grammar", cap5, [](int max_n) -> std::string {
    int N = cap5(max_n);
    // Coefficient k of M(t/v, 2u/v^2; vz) cleared by v^k, from the
    // simsun-second-kind enumeration.
    auto mv = TruncatedEGF::from_family(
        [&](int k) {
          MultiPoly c;
          for_each_in_class(PermClass::SimsunSecondKind, k, [&](const Perm& p) {
            int i = stat_fix(p), j = stat_exc(p);
            c += power_of_two(j) * kT.pow(i) * kU.pow(j) * kV.pow(k - i - 2 * j);
          });
          return c;
        },
        N);
    const Grammar& G4 = Grammar::builtin("G4");
    const MultiPoly a = MultiPoly::var(Var::a);
    for (int qv = 1; qv <= 2; ++qv) {
      auto gen = G4.gen_series(a, N);
      auto rhs = mv.pow(qv).scaled(a);
      for (int n = 0; n <= N; ++n) {
        if (gen.coeff(n).substitute(Var::q, MultiPoly(qv)) != rhs.coeff(n))
          return "Gen(a;z) disagrees with a M^q at q=" + std::to_string(qv) +
                 ", n=" + std::to_string(n);
      }
    }
    return "";
  });

  add_check("grammar-gen-stqt", "grammar", cap5, [](int max_n) -> std::string {
    int N = cap5(max_n);
    auto gen = Grammar::builtin("G2").gen_series(kS + kQ * kT, N);
    auto den = TruncatedEGF::exp_linear(kOnePlusQ * kX, N).scaled(kY) -
               TruncatedEGF::exp_linear(kOnePlusQ * kY, N).scaled(kX);
    auto diff = TruncatedEGF::exp_linear(kOnePlusQ * kY, N) -
                TruncatedEGF::exp_linear(kOnePlusQ * kX, N);
    auto lhs = (gen - TruncatedEGF::constant(kS + kQ * kT, N)) * den;
    std::string why;
    return coeffwise_equal(lhs, diff.scaled(kOnePlusQ * kX * kY), why)
               ? ""
               : "Gen(s+qt;z) closed form fails: " + why;
  });

  add_check("grammar-G5-b", "grammar", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    GammaTable b = b_table(N);
    const Grammar& G5 = Grammar::builtin("G5");
    const MultiPoly h = MultiPoly::var(Var::h);
    MultiPoly power = kJ;
    for (int n = 0; n <= N; ++n) {
      if (n > 0) power = G5.derive(power);
      MultiPoly expected;
      for (const auto& [key, value] : b.entries) {
        if (key[0] != n) continue;
        expected += value.substitute(Var::p, kOne) * kJ * h.pow(key[1]) * kU.pow(key[2]) *
                    kV.pow(n - key[1] - 2 * key[2]);
      }
      if (power != expected) return mismatch(n, power, expected);
    }
    return "";
  });
}

// ======================== bijection suite ========================

MultiPoly exc_poly_tilde(int n, int i) {
  MultiPoly p;
  for_each_tilde_d(n, i, [&](const SignedPerm& s) {
    p += MultiPoly::term(Monomial::var(Var::x, stat_exc(s)), 1);
  });
  return p;
}

void register_bijection_checks() {
  add_check("bijection-partition", "bijection", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    for (int n = 1; n <= N; ++n)
      for (int i = 1; i <= n; ++i) {
        std::string error;
        for_each_tilde_d(n, i, [&](const SignedPerm& s) {
          if (!error.empty()) return;
          bool b1 = s.at(n) == -n;
          bool b2 = stat_st(s) == 0;
          bool b3 = stat_st(s) > 0 && s.at(n) != -n;
          if (int(b1) + int(b2) + int(b3) != 1)
            error = "subset predicates do not partition at " + CycleForm::of(s).str();
          TildeTag expected = b1 ? TildeTag::B1 : b2 ? TildeTag::B2 : TildeTag::B3;
          if (tilde_tag(s) != expected) error = "tag disagrees at " + CycleForm::of(s).str();
        });
        if (!error.empty())
          return error + " (n=" + std::to_string(n) + ", i=" + std::to_string(i) + ")";
      }
    return "";
  });

  add_check("bijection-phi1", "bijection", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    for (int n = 2; n <= N; ++n)
      for (int i = 1; i <= n; ++i) {
        std::set<std::vector<int>> image;
        long long b1 = 0;
        std::string error;
        for_each_tilde_d(n, i, [&](const SignedPerm& s) {
          if (!error.empty() || tilde_tag(s) != TildeTag::B1) return;
          ++b1;
          SignedPerm t = phi1(s);
          if (phi1_inverse(t) != s) error = "phi1 round trip fails";
          if (!in_signed_class(SignedClass::TildeD, t, i - 1)) error = "phi1 image out of class";
          image.insert(t.images());
        });
        if (!error.empty()) return error + " at n=" + std::to_string(n);
        long long target = signed_class_count(SignedClass::TildeD, n - 1, i - 1);
        if ((long long)image.size() != b1 || b1 != target)
          return "phi1 is not bijective at n=" + std::to_string(n) + ", i=" + std::to_string(i);
      }
    return "";
  });

  add_check("bijection-phi2", "bijection", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    for (int n = 2; n <= N; ++n)
      for (int i = 1; i <= n; ++i) {
        std::set<std::vector<int>> image;
        long long b2 = 0, target = 0;
        std::string error;
        for_each_tilde_d(n, i, [&](const SignedPerm& s) {
          if (!error.empty() || tilde_tag(s) != TildeTag::B2) return;
          ++b2;
          SignedPerm t = phi2(s, i);
          if (stat_exc(t) != stat_exc(s)) error = "phi2 changes exc";
          if (stat_st(t) != 0) error = "phi2 image has a singleton";
          if (!in_signed_class(SignedClass::TildeD, t, i - 1)) error = "phi2 image out of class";
          if (phi2_inverse(t, i) != s) error = "phi2 round trip fails";
          image.insert(t.images());
        });
        if (!error.empty()) return error + " at n=" + std::to_string(n);
        for_each_tilde_d(n, i - 1, [&](const SignedPerm& t) {
          if (stat_st(t) == 0) ++target;
        });
        if ((long long)image.size() != b2 || b2 != target)
          return "phi2 is not bijective at n=" + std::to_string(n) + ", i=" + std::to_string(i);
      }
    return "";
  });

  add_check("bijection-phi3", "bijection", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    for (int n = 2; n <= N; ++n)
      for (int i = 1; i <= n; ++i) {
        std::set<std::vector<int>> image;
        long long b3 = 0, target = 0;
        std::string error;
        for_each_tilde_d(n, i, [&](const SignedPerm& s) {
          if (!error.empty() || tilde_tag(s) != TildeTag::B3) return;
          ++b3;
          SignedPerm t = phi3(s, i);
          if (stat_exc(t) != stat_exc(s)) error = "phi3 changes exc";
          if (stat_st(t) == 0) error = "phi3 image has no singleton";
          if (!in_signed_class(SignedClass::TildeD, t, i - 1)) error = "phi3 image out of class";
          if (phi3_inverse(t, i) != s) error = "phi3 round trip fails";
          image.insert(t.images());
        });
        if (!error.empty()) return error + " at n=" + std::to_string(n);
        for_each_tilde_d(n, i - 1, [&](const SignedPerm& t) {
          if (stat_st(t) > 0) ++target;
        });
        if ((long long)image.size() != b3 || b3 != target)
          return "phi3 is not bijective at n=" + std::to_string(n) + ", i=" + std::to_string(i);
      }
    return "";
  });

  add_check("bijection-phi3-example", "bijection", [](int) { return 9; },
            [](int) -> std::string {
              SignedPerm s = CycleForm::parse("(1,4,3,-9,-8)(2,5)(-6)(-7)").to_signed(9);
              SignedPerm expected = CycleForm::parse("(2,5,4,-9,1)(3,6)(-7)(-8)").to_signed(9);
              if (phi3(s, 4) != expected)
                return "phi3 worked example mismatch: got " + CycleForm::of(phi3(s, 4)).str();
              return "";
            });

  add_check("bijection-dniBx", "bijection", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    for (int n = 2; n <= N; ++n)
      for (int i = 1; i <= n; ++i) {
        MultiPoly lhs = exc_poly_tilde(n, i);
        MultiPoly rhs = exc_poly_tilde(n, i - 1) + exc_poly_tilde(n - 1, i - 1);
        if (lhs != rhs)
          return "excedance recurrence fails at n=" + std::to_string(n) +
                 ", i=" + std::to_string(i) + ": " + mismatch(n, lhs, rhs);
      }
    return "";
  });

  add_check("bijection-mfs-example", "bijection", [](int) { return 10; },
            [](int) -> std::string {
              Perm p = CycleForm::parse("(1,10,6,5,7,3,2,8)(4,9)").to_perm(10);
              if (mfs_action(p, 3) != CycleForm::parse("(1,3,10,6,5,7,2,8)(4,9)").to_perm(10))
                return "mfs example at x=3 mismatch";
              if (mfs_action(p, 6) != CycleForm::parse("(1,6,10,5,7,3,2,8)(4,9)").to_perm(10))
                return "mfs example at x=6 mismatch";
              return "";
            });

  add_check("bijection-mfs-involution", "bijection", cap8, [](int max_n) -> std::string {
    int N = cap8(max_n);
    long long exceptions = 0;
    for (int n = 1; n <= N; ++n) {
      for_each_perm(n, [&](const Perm& p) {
        for (int x = 1; x <= n; ++x) {
          CycleValueClass cls = classify_cycle_value(p, x);
          if (cls == CycleValueClass::CycleDoubleAscent ||
              cls == CycleValueClass::CycleDoubleDescent) {
            if (mfs_action(mfs_action(p, x), x) != p) ++exceptions;
          } else if (mfs_action(p, x) != p) {
            ++exceptions;
          }
        }
      });
    }
    return exceptions == 0 ? ""
                           : std::to_string(exceptions) + " double-application exceptions found";
  });

  add_check("bijection-mfs-cardinality", "bijection", cap8, [](int max_n) -> std::string {
    int N = cap8(max_n);
    for (int n = 1; n <= N; ++n) {
      std::map<std::array<int, 3>, long long> layer0, layer1;
      for_each_perm(n, [&](const Perm& p) {
        int cda = stat_cda(p);
        if (cda == 0) ++layer0[{stat_fix(p), stat_exc(p), stat_cyc(p)}];
        if (cda == 1) ++layer1[{stat_fix(p), stat_exc(p), stat_cyc(p)}];
      });
      for (const auto& [key, count] : layer0) {
        auto [i, j, k] = std::tuple(key[0], key[1], key[2]);
        auto it = layer1.find({i, j + 1, k});
        long long lhs = it == layer1.end() ? 0 : it->second;
        if (lhs != (n - i - 2 * j) * count)
          return "mfs cardinality fails at n=" + std::to_string(n);
      }
    }
    return "";
  });

  add_check("bijection-thm03-slices", "bijection", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    auto d = family_sequence(FamilyId::DX, N);
    for (int n = 1; n <= N; ++n)
      for (int i = 0; i <= n; ++i) {
        MultiPoly expected;
        for (int j = 0; j <= i; ++j) expected += binom(i, j) * d[n - j];
        MultiPoly lhs = exc_poly_tilde(n, i);
        if (lhs != expected)
          return "d_{n,i}^B != sum_j C(i,j) d_{n-j} at n=" + std::to_string(n) +
                 ", i=" + std::to_string(i);
      }
    return "";
  });

  add_check("bijection-negset-uniform", "bijection", cap5, [](int max_n) -> std::string {
    int N = cap5(max_n);
    for (int n = 1; n <= N; ++n) {
      std::map<std::vector<bool>, MultiPoly> by_set;
      for_each_in_signed_class(SignedClass::Derangements, n, [&](const SignedPerm& s) {
        std::vector<bool> negs(n, false);
        for (int pos = 1; pos <= n; ++pos)
          if (s.at(pos) < 0) negs[std::abs(s.at(pos)) - 1] = true;
        by_set[negs] += MultiPoly::term(Monomial::var(Var::x, stat_exc(s)), 1);
      });
      for (const auto& [negs, poly] : by_set) {
        int i = static_cast<int>(std::count(negs.begin(), negs.end(), true));
        if (poly != exc_poly_tilde(n, i))
          return "negative-set slices diverge at n=" + std::to_string(n);
      }
    }
    return "";
  });
}

// ======================== identities suite ========================

void register_identity_checks() {
  add_check("identity-Anx-gamma", "identities", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    auto eulerian = family_sequence(FamilyId::AX, N);
    for (int n = 1; n <= N; ++n) {
      std::map<int, long long> gamma_counts;
      for_each_perm(n, [&](const Perm& p) {
        if (stat_dd(p) == 0) ++gamma_counts[stat_des(p)];
      });
      MultiPoly rhs;
      for (const auto& [j, c] : gamma_counts)
        rhs += MultiPoly(Rational(c)) * kX.pow(j) * (kOne + kX).pow(n - 1 - 2 * j);
      if (rhs != eulerian[n]) return mismatch(n, rhs, eulerian[n]);
    }
    return "";
  });

  add_check("identity-AnxWni", "identities", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    StatTriangle W = triangle_W(N);
    auto eulerian = family_sequence(FamilyId::AX, N);
    for (int n = 1; n <= N; ++n) {
      MultiPoly rhs;
      for (int i = 0; 2 * i <= n - 1; ++i)
        rhs += MultiPoly(Rational(W.at(n, i) * (Int(1) << (2 * i)))) * kX.pow(i) *
               (kOne + kX).pow(n - 1 - 2 * i);
      if (power_of_two(n - 1) * eulerian[n] != rhs)
        return mismatch(n, power_of_two(n - 1) * eulerian[n], rhs);
    }
    return "";
  });

  add_check("identity-An1x", "identities", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    StatTriangle S = triangle_S(N);
    auto eulerian = family_sequence(FamilyId::AX, N + 1);
    for (int n = 1; n <= N; ++n) {
      MultiPoly rhs;
      for (int i = 0; 2 * i <= n; ++i)
        rhs += MultiPoly(Rational(S.at(n, i))) * (MultiPoly(2) * kX).pow(i) *
               (kX + kOne).pow(n - 2 * i);
      if (eulerian[n + 1] != rhs) return mismatch(n, eulerian[n + 1], rhs);
    }
    return "";
  });

  add_check("identity-WnkSnk", "identities", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    StatTriangle W = triangle_W(N + 1);
    StatTriangle S = triangle_S(N);
    for (int n = 1; n <= N; ++n)
      for (int i = 0; 2 * i <= n; ++i)
        if (W.at(n + 1, i) != (Int(1) << (n - i)) * S.at(n, i))
          return "W(n+1,i) != 2^(n-i) S(n,i) at n=" + std::to_string(n) +
                 ", i=" + std::to_string(i);
    return "";
  });

  add_check("identity-Bnxgamma", "identities", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    StatTriangle Q = triangle_Q(N);
    auto b = family_sequence(FamilyId::BX, N);
    for (int n = 1; n <= N; ++n) {
      MultiPoly rhs;
      for (int i = 0; 2 * i <= n; ++i)
        rhs += MultiPoly(Rational(Q.at(n, i) * (Int(1) << (2 * i)))) * kX.pow(i) *
               (kOne + kX).pow(n - 2 * i);
      if (b[n] != rhs) return mismatch(n, b[n], rhs);
    }
    return "";
  });

  add_check("identity-Zeng", "identities", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    for (int n = 2; n <= N; ++n) {
      MultiPoly lhs = distribution(PermClass::Derangements, n, {{"exc", Var::x}, {"cyc", Var::q}});
      MultiPoly rhs;
      for (int k = 1; 2 * k <= n; ++k) {
        MultiPoly cycles;
        for_each_in_class(PermClass::DerangementCdaFreeExc, n,
                          [&](const Perm& p) { cycles += kQ.pow(stat_cyc(p)); }, k);
        rhs += cycles * kX.pow(k) * (kOne + kX).pow(n - 2 * k);
      }
      if (lhs != rhs) return mismatch(n, lhs, rhs);
    }
    return "";
  });

  add_check("identity-Roselle", "identities", cap7, [](int max_n) -> std::string {
    std::string why;
    return roselle_checks(cap7(max_n), &why) ? "" : why;
  });

  add_check("identity-Diaconis", "identities", cap7, [](int max_n) -> std::string {
    for (int n = 1; n <= cap7(max_n); ++n)
      if (!fixed_set_vs_succession_set(n))
        return "succession-set / fixed-set counts diverge at n=" + std::to_string(n);
    return "";
  });

  add_check("identity-conv-Atilde", "identities", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    auto atilde = TruncatedEGF(N, family_sequence(FamilyId::ATildeXy, N));
    auto dxys = TruncatedEGF(N, family_sequence(FamilyId::DXys, N));
    auto a = family_sequence(FamilyId::AXys, N + 1);
    auto product = atilde * dxys;
    for (int n = 0; n <= N; ++n)
      if (product.coeff(n) != a[n + 1]) return mismatch(n, product.coeff(n), a[n + 1]);
    return "";
  });

  add_check("identity-conv-B", "identities", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    auto bseq = family_sequence(FamilyId::BXystpq, N);
    std::map<Var, MultiPoly> specialize{{Var::t, kY}, {Var::p, kOne}, {Var::q, kOne}};
    for (auto& b : bseq) b = b.substitute(specialize);
    auto series = TruncatedEGF(N, std::move(bseq));
    auto a = family_sequence(FamilyId::AXys, N + 1);
    auto product = series * series;
    for (int n = 0; n <= N; ++n) {
      if (product.coeff(n) != power_of_two(n) * a[n + 1])
        return mismatch(n, product.coeff(n), power_of_two(n) * a[n + 1]);
    }
    return "";
  });

  add_check("identity-stellahedron", "identities", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    auto stella = family_sequence(FamilyId::BStella, N);
    GammaTable b = b_table(N);
    for (int n = 0; n <= N; ++n) {
      // route 1: the two-index sum over the b table
      MultiPoly from_table;
      for (const auto& [key, value] : b.entries)
        if (key[0] == n)
          from_table += value.substitute(Var::p, kOne) * kX.pow(key[2]) *
                        (kOne + kX).pow(n - 2 * key[2]);
      if (from_table != stella[n]) return mismatch(n, from_table, stella[n]);
      // route 2: the substituted C-series coefficient, straight from the
      // cda-free class with the (1+x)^n clearing applied
      MultiPoly from_class;
      for_each_in_class(PermClass::CdaFree, n, [&](const Perm& p) {
        from_class += kX.pow(stat_exc(p)) * (kOne + kX).pow(n - 2 * stat_exc(p));
      });
      if (from_class != stella[n]) return mismatch(n, from_class, stella[n]);
    }
    // flank identities: C(1, x/(1+x)^2; (1+x)z) and C(0, ...) after clearing
    int order = cap6(max_n);
    auto b_series = TruncatedEGF(order, family_sequence(FamilyId::BStella, order));
    auto den1 = TruncatedEGF::constant(kX, order) - TruncatedEGF::exp_linear(kX - kOne, order);
    auto num1 = TruncatedEGF::exp_linear(kX, order).scaled(kX - kOne);
    if (!TruncatedEGF::verify_cross_multiplied(num1, den1, b_series))
      return "C(1, x/(1+x)^2; (1+x)z) flank identity fails";
    auto d0 = TruncatedEGF::from_family(
        [&](int n) {
          MultiPoly c;
          for (const auto& [key, value] : b.entries)
            if (key[0] == n && key[1] == 0)
              c += value.substitute(Var::p, kOne) * kX.pow(key[2]) *
                   (kOne + kX).pow(n - 2 * key[2]);
          return c;
        },
        order);
    auto den0 = TruncatedEGF::exp_linear(kX, order) -
                TruncatedEGF::exp_linear(kOne, order).scaled(kX);
    auto num0 = TruncatedEGF::constant(kOne - kX, order);
    if (!TruncatedEGF::verify_cross_multiplied(num0, den0, d0))
      return "C(0, x/(1+x)^2; (1+x)z) flank identity fails";
    return "";
  });

  add_check("identity-coro-A", "identities", cap8, [](int max_n) -> std::string {
    int N = cap8(max_n);
    auto a = family_sequence(FamilyId::AX, N);
    for (int n = 2; n <= N; ++n) {
      MultiPoly rhs(1);
      for (int k = 0; k <= n - 2; ++k) {
        MultiPoly geometric;
        for (int j = 1; j <= n - 1 - k; ++j) geometric += kX.pow(j);
        rhs += binom(n, k) * a[k] * geometric;
      }
      if (a[n] != rhs) return mismatch(n, a[n], rhs);
    }
    return "";
  });

  add_check("identity-coro-d", "identities", cap8, [](int max_n) -> std::string {
    // The d_n(x) recurrence is the family's fast path, so validate the family
    // against its defining EGF instead.
    int N = cap8(max_n);
    auto d = TruncatedEGF(N, family_sequence(FamilyId::DX, N));
    auto den = TruncatedEGF::exp_linear(kX, N) - TruncatedEGF::exp_linear(kOne, N).scaled(kX);
    auto num = TruncatedEGF::constant(kOne - kX, N);
    return TruncatedEGF::verify_cross_multiplied(num, den, d) ? ""
                                                              : "d_n(x) EGF identity fails";
  });

  add_check("identity-coro-B", "identities", cap8, [](int max_n) -> std::string {
    int N = cap8(max_n);
    auto b = family_sequence(FamilyId::BX, N);
    for (int n = 2; n <= N; ++n) {
      MultiPoly rhs = (kOne + kX).pow(n);
      for (int k = 0; k <= n - 2; ++k) {
        MultiPoly geometric;
        for (int j = 1; j <= n - 1 - k; ++j) geometric += kX.pow(j);
        rhs += binom(n, k) * b[k] * geometric * power_of_two(n - k);
      }
      if (b[n] != rhs) return mismatch(n, b[n], rhs);
    }
    return "";
  });

  add_check("identity-coro-dB", "identities", cap8, [](int max_n) -> std::string {
    int N = cap8(max_n);
    auto d = family_sequence(FamilyId::DBX, N);
    for (int n = 2; n <= N; ++n) {
      MultiPoly rhs(1);
      for (int k = 0; k <= n - 2; ++k) {
        MultiPoly geometric;
        for (int j = 1; j <= n - 1 - k; ++j) geometric += kX.pow(j);
        rhs += binom(n, k) * d[k] * geometric * power_of_two(n - k);
      }
      if (d[n] != rhs) return mismatch(n, d[n], rhs);
    }
    return "";
  });

  add_check("identity-Dnbxq", "identities", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    GammaTable b = b_table(N);
    auto dbxq = family_sequence(FamilyId::DBXq, N);
    for (int n = 0; n <= N; ++n) {
      MultiPoly rhs;
      for (const auto& [key, value] : b.entries)
        if (key[0] == n)
          rhs += value.substitute(Var::p, kOne) * kQ.pow(key[1]) * kOnePlusQ.pow(n - key[1]) *
                 kX.pow(key[2]) * (kX + kOne).pow(n - key[1] - 2 * key[2]);
      if (rhs != dbxq[n]) return mismatch(n, rhs, dbxq[n]);
    }
    return "";
  });

  add_check("identity-propdnbx", "identities", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    auto dbxq = family_sequence(FamilyId::DBXq, N);
    for (int qv = 0; qv <= 2; ++qv) {
      auto colored = family_sequence(FamilyId::DnrX, N, qv + 1);
      for (int n = 0; n <= N; ++n) {
        MultiPoly lhs = dbxq[n].substitute(Var::q, MultiPoly(qv));
        if (lhs != colored[n].reciprocal_in(Var::x, n))
          return "d_n^B(x,q) != x^n d_{n,q+1}(1/x) at n=" + std::to_string(n) +
                 ", q=" + std::to_string(qv);
      }
    }
    return "";
  });

  add_check("identity-thm03", "identities", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    auto dbxq = family_sequence(FamilyId::DBXq, N);
    for (int n = 0; n <= N; ++n) {
      MultiPoly enumerated =
          distribution(SignedClass::Derangements, n, {{"exc", Var::x}, {"N", Var::q}});
      if (enumerated != dbxq[n]) return mismatch(n, enumerated, dbxq[n]);
    }
    return "";
  });

  add_check("identity-dniBx", "identities", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    for (int n = 2; n <= N; ++n)
      for (int i = 1; i <= n; ++i)
        if (exc_poly_tilde(n, i) != exc_poly_tilde(n, i - 1) + exc_poly_tilde(n - 1, i - 1))
          return "d_{n,i}^B recurrence fails at n=" + std::to_string(n) +
                 ", i=" + std::to_string(i);
    return "";
  });

  add_check("identity-NSn-des", "identities", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    auto d = family_sequence(FamilyId::DX, N);
    for (int n = 2; n <= N; ++n) {
      MultiPoly lhs = x_distribution(PermClass::NoSuccession, n, "des");
      if (lhs != d[n] + d[n - 1]) return mismatch(n, lhs, d[n] + d[n - 1]);
    }
    return "";
  });

  add_check("identity-desB-wexc", "identities", cap6, [](int max_n) -> std::string {
    for (int n = 1; n <= cap6(max_n); ++n) {
      MultiPoly by_desB = distribution(SignedClass::All, n, {{"desB", Var::x}});
      MultiPoly by_wexc = distribution(SignedClass::All, n, {{"wexc", Var::x}});
      if (by_desB != by_wexc) return mismatch(n, by_desB, by_wexc);
    }
    return "";
  });

  add_check("identity-chow-reciprocal", "identities", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    auto dbx = family_sequence(FamilyId::DBX, N);
    for (int n = 0; n <= N; ++n) {
      MultiPoly tilde = distribution(SignedClass::Derangements, n, {{"excB", Var::x}});
      if (dbx[n] != tilde.reciprocal_in(Var::x, n))
        return "d_n^B(x) != x^n dtilde_n^B(1/x) at n=" + std::to_string(n);
    }
    return "";
  });

  add_check("identity-chow-toufik", "identities", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    for (int r = 1; r <= 3; ++r) {
      auto fast = family_sequence(FamilyId::DnrX, N, r);
      for (int n = 0; n <= N; ++n) {
        MultiPoly enumerated = distribution(ColoredClass::Derangements, n, r, {{"exc", Var::x}});
        if (enumerated != fast[n])
          return "colored derangement polynomial mismatch at r=" + std::to_string(r) +
                 ", n=" + std::to_string(n);
      }
    }
    return "";
  });

  add_check("identity-C2-esM", "identities", cap7, [](int max_n) -> std::string {
    int N = cap7(max_n);
    auto c_series = series_exc_fix(PermClass::CdaFree, N);
    auto m_series = series_exc_fix(PermClass::SimsunSecondKind, N);
    auto m_2x = TruncatedEGF::from_family(
        [&](int n) { return m_series.coeff(n).substitute(Var::x, MultiPoly(2) * kX); }, N);
    auto lhs = c_series * c_series;
    auto rhs = TruncatedEGF::exp_linear(kS, N) * m_2x;
    std::string why;
    return coeffwise_equal(lhs, rhs, why) ? "" : "C^2 != e^{sz} M(s,2x;z): " + why;
  });

  add_check("identity-Chalf-b", "identities", cap8, [](int max_n) -> std::string {
    int N = cap8(max_n);
    for (int n = 0; n <= N; ++n) {
      MultiPoly lhs;
      for_each_in_class(PermClass::CdaFree, n, [&](const Perm& p) {
        lhs += power_of_two(n - stat_fix(p)) * kX.pow(stat_exc(p));
      });
      MultiPoly rhs = substitute_x(x_distribution(PermClass::All, n, "lpk"), MultiPoly(4) * kX);
      if (lhs != rhs) return mismatch(n, lhs, rhs);
    }
    return "";
  });
}

// ======================== master oracle checks ========================

struct OracleSpec {
  FamilyId id;
  std::string name;
  // Enumerated value for index n (already bound-checked by the enumerators).
  std::function<MultiPoly(int n, int r)> oracle;
  std::function<int(int max_n)> cap;
  int r = 0;  // only for the colored family
};

void register_oracle_checks() {
  std::vector<OracleSpec> specs;
  specs.push_back({FamilyId::AXys, "oracle-A_xys",
                   [](int n, int) {
                     return distribution(PermClass::All, n,
                                         {{"basc", Var::x}, {"des", Var::y}, {"suc", Var::s}});
                   },
                   cap7});
  specs.push_back({FamilyId::ATildeXy, "oracle-Atilde_xy",
                   [](int n, int) {
                     if (n == 0) return MultiPoly(1);
                     return kY * distribution(PermClass::All, n,
                                              {{"asc", Var::x}, {"des", Var::y}});
                   },
                   cap7});
  specs.push_back({FamilyId::AX, "oracle-A_x",
                   [](int n, int) { return x_distribution(PermClass::All, n, "des"); }, cap7});
  specs.push_back({FamilyId::BXystpq, "oracle-B_xystpq",
                   [](int n, int) {
                     return distribution(SignedClass::All, n,
                                         {{"exc", Var::x},
                                          {"aexc", Var::y},
                                          {"fix", Var::s},
                                          {"st", Var::t},
                                          {"cyc", Var::p},
                                          {"N", Var::q}});
                   },
                   cap6});
  specs.push_back({FamilyId::BX, "oracle-B_x",
                   [](int n, int) { return distribution(SignedClass::All, n, {{"wexc", Var::x}}); },
                   cap6});
  specs.push_back({FamilyId::DX, "oracle-d_x",
                   [](int n, int) { return x_distribution(PermClass::Derangements, n, "exc"); },
                   cap7});
  specs.push_back({FamilyId::DXy, "oracle-d_xy",
                   [](int n, int) {
                     return distribution(PermClass::Derangements, n,
                                         {{"exc", Var::x}, {"aexc", Var::y}});
                   },
                   cap7});
  specs.push_back({FamilyId::DXys, "oracle-d_xys",
                   [](int n, int) {
                     return distribution(PermClass::All, n,
                                         {{"exc", Var::x}, {"aexc", Var::y}, {"fix", Var::s}});
                   },
                   cap7});
  specs.push_back({FamilyId::DBXq, "oracle-dB_xq",
                   [](int n, int) {
                     return distribution(SignedClass::Derangements, n,
                                         {{"exc", Var::x}, {"N", Var::q}});
                   },
                   cap6});
  specs.push_back({FamilyId::DBX, "oracle-dB_x",
                   [](int n, int) {
                     return distribution(SignedClass::Derangements, n, {{"exc", Var::x}});
                   },
                   cap6});
  specs.push_back({FamilyId::DBTildeX, "oracle-dBtilde_x",
                   [](int n, int) {
                     return distribution(SignedClass::Derangements, n, {{"excB", Var::x}});
                   },
                   cap6});
  for (int r = 1; r <= 3; ++r) {
    specs.push_back({FamilyId::DnrX, "oracle-d_xr" + std::to_string(r),
                     [](int n, int rr) {
                       return distribution(ColoredClass::Derangements, n, rr, {{"exc", Var::x}});
                     },
                     r == 3 ? cap5 : (r == 2 ? cap6 : cap7), r});
  }
  specs.push_back({FamilyId::Phi, "oracle-Phi",
                   [](int n, int) {
                     if (n < 2) return MultiPoly();
                     // defining quotient, cleared: Phi_n (x-y) = xy (x^{n-1} - y^{n-1})
                     MultiPoly cleared = kX * kY * (kX.pow(n - 1) - kY.pow(n - 1));
                     auto quotient = cleared.divided_exactly_by(kX - kY);
                     return quotient ? *quotient : MultiPoly();
                   },
                   [](int max_n) { return std::min(max_n, 10); }});
  specs.push_back({FamilyId::BStella, "oracle-b_x",
                   [](int n, int) {
                     // coefficient n of C(1, x/(1+x)^2; (1+x)z), cleared by (1+x)^n
                     MultiPoly value;
                     for_each_in_class(PermClass::CdaFree, n, [&](const Perm& p) {
                       value += kX.pow(stat_exc(p)) * (kOne + kX).pow(n - 2 * stat_exc(p));
                     });
                     return value;
                   },
                   cap7});
  specs.push_back({FamilyId::SX, "oracle-S_x",
                   [](int n, int) { return x_distribution(PermClass::Simsun, n, "des"); }, cap7});
  specs.push_back({FamilyId::PX, "oracle-P_x",
                   [](int n, int) { return x_distribution(PermClass::NoSuccession, n, "asc"); },
                   cap7});
  specs.push_back({FamilyId::PStarX, "oracle-Pstar_x",
                   [](int n, int) {
                     if (n == 0) return MultiPoly(1);
                     // Roselle rises carry the conventional initial rise.
                     return kX * x_distribution(PermClass::NoSuccessionFirstNotOne, n, "asc");
                   },
                   cap7});

  for (const auto& spec : specs) {
    std::string name = spec.name;
    FamilyId id = spec.id;
    auto oracle = spec.oracle;
    auto cap = spec.cap;
    int r = spec.r;
    add_check(name, "identities", cap, [id, oracle, cap, r](int max_n) -> std::string {
      int N = cap(max_n);
      auto fast = family_sequence(id, N, r == 0 ? 2 : r);
      for (int n = 0; n <= N; ++n) {
        MultiPoly expected = oracle(n, r);
        if (fast[n] != expected) return mismatch(n, fast[n], expected);
      }
      return "";
    });
  }

  // The two f families are validated through the split of the enumerated
  // d_n^B(x,q).
  add_check("oracle-f_plus_minus", "identities", cap6, [](int max_n) -> std::string {
    int N = cap6(max_n);
    auto fplus = family_sequence(FamilyId::FPlus, N);
    auto fminus = family_sequence(FamilyId::FMinus, N);
    for (int n = 1; n <= N; ++n) {
      MultiPoly enumerated =
          distribution(SignedClass::Derangements, n, {{"exc", Var::x}, {"N", Var::q}});
      auto [fp, fm] = f_pm_split(enumerated, n);
      if (fp != fplus[n] || fm != fminus[n])
        return "f split of the enumerated d_n^B(x,q) disagrees at n=" + std::to_string(n);
    }
    return "";
  });
}

void register_all() {
  register_egf_checks();
  register_gamma_checks();
  register_grammar_checks();
  register_bijection_checks();
  register_identity_checks();
  register_oracle_checks();
}

std::once_flag registered;

}  // namespace

const std::vector<CheckDef>& all_checks() {
  std::call_once(registered, register_all);
  return registry();
}

std::vector<std::string> suite_names() {
  return {"egf", "gamma", "grammar", "bijection", "identities"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options) {
  std::vector<const CheckDef*> selected;
  for (const auto& check : all_checks())
    if (suite == "all" || check.suite == suite) selected.push_back(&check);

  std::vector<CheckResult> results(selected.size());
  auto run_one = [&](std::size_t idx) {
    const CheckDef& check = *selected[idx];
    CheckResult r;
    r.name = check.name;
    r.suite = check.suite;
    r.n_range = "n <= " + std::to_string(check.effective_n(options.max_n));
    try {
      std::string detail = check.body(options.max_n);
      r.status = detail.empty() ? "pass" : "fail";
      r.detail = detail;
    } catch (const BoundExceeded& e) {
      r.status = "skipped";
      r.detail = e.what();
    }
    results[idx] = std::move(r);
  };

  if (options.threads <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < selected.size(); i = next.fetch_add(1))
        run_one(i);
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(options.threads, static_cast<int>(selected.size()));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

std::vector<CheckResult> identity_suite(const std::string& filter, int max_n) {
  VerifyOptions options;
  options.max_n = max_n;
  auto results = run_suite("identities", options);
  if (filter.empty()) return results;
  std::vector<CheckResult> matched;
  for (auto& r : results)
    if (r.name.find(filter) != std::string::npos) matched.push_back(std::move(r));
  return matched;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status != "pass") return false;
  return true;
}

std::string report_to_json(const std::string& suite, int max_n,
                           const std::vector<CheckResult>& results) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = "1";
  doc["suite"] = suite;
  doc["max_n"] = max_n;
  doc["checks"] = nlohmann::ordered_json::array();
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& r : results) {
    nlohmann::ordered_json entry;
    entry["name"] = r.name;
    entry["suite"] = r.suite;
    entry["status"] = r.status;
    entry["n_range"] = r.n_range;
    if (!r.detail.empty()) entry["detail"] = r.detail;
    doc["checks"].push_back(std::move(entry));
    if (r.status == "pass") ++pass;
    if (r.status == "fail") ++fail;
    if (r.status == "skipped") ++skipped;
  }
  doc["summary"] = {{"pass", pass},
                    {"fail", fail},
                    {"skipped", skipped},
                    {"total", static_cast<int>(results.size())}};
  return doc.dump(2) + "\n";
}

std::string report_to_text(const std::vector<CheckResult>& results) {
  std::string out;
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& r : results) {
    std::string line;
    if (r.status == "pass") {
      ++pass;
      line = "PASS " + r.name + " (" + r.n_range + ")";
    } else if (r.status == "fail") {
      ++fail;
      line = "FAIL " + r.name + " (" + r.n_range + "): " + r.detail;
    } else {
      ++skipped;
      line = "SKIP " + r.name + ": " + r.detail;
    }
    out += line + "\n";
  }
  out += std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " +
         std::to_string(skipped) + " skipped\n";
  return out;
}

}  // namespace gammakit
