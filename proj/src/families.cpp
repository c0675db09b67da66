#include "gammakit/families.hpp"

#include <stdexcept>

#include "gammakit/enumerate.hpp"
#include "gammakit/grammar.hpp"

namespace gammakit {

namespace {

const MultiPoly kX = MultiPoly::var(Var::x);
const MultiPoly kY = MultiPoly::var(Var::y);
const MultiPoly kS = MultiPoly::var(Var::s);
const MultiPoly kT = MultiPoly::var(Var::t);
const MultiPoly kQ = MultiPoly::var(Var::q);
const MultiPoly kOnePlusQ = MultiPoly(1) + MultiPoly::var(Var::q);

std::vector<MultiPoly> seq_a_xys(int n_max) {
  std::vector<MultiPoly> a{MultiPoly(1)};
  if (n_max >= 1) a.push_back(MultiPoly(1));
  for (int k = 2; k <= n_max; ++k) {
    const MultiPoly& prev = a.back();
    a.push_back((kS + kY) * prev + kX * kY *
                    (prev.derivative(Var::x) + prev.derivative(Var::y) +
                     prev.derivative(Var::s)));
  }
  return a;
}

std::vector<MultiPoly> seq_eulerian(int n_max) {
  auto a = seq_a_xys(n_max);
  std::map<Var, MultiPoly> to_des{{Var::x, MultiPoly(1)}, {Var::y, kX}, {Var::s, MultiPoly(1)}};
  for (auto& p : a) p = p.substitute(to_des);
  return a;
}

std::vector<MultiPoly> seq_atilde(int n_max) {
  auto eulerian = seq_eulerian(n_max);
  std::vector<MultiPoly> result{MultiPoly(1)};
  for (int n = 1; n <= n_max; ++n) {
    MultiPoly t;
    for (const auto& [mono, coef] : eulerian[n].terms()) {
      int k = mono.exp(Var::x);  // number of descents
      Monomial m;
      m.set_exp(Var::x, n - 1 - k);
      m.set_exp(Var::y, k + 1);
      t += MultiPoly::term(m, coef);
    }
    result.push_back(t);
  }
  return result;
}

std::vector<MultiPoly> seq_b_six(int n_max) {
  // Grammar route: D_{G2}^n(J) = J B_n(x,y,s,t,p,q); the only p-symbolic path.
  auto powers = Grammar::builtin("G2").derive_powers(MultiPoly::var(Var::J), n_max);
  std::vector<MultiPoly> result;
  for (auto& p : powers) {
    auto slices = p.slices_in(Var::J);
    for (const auto& [deg, slice] : slices)
      if (deg != 1 && !slice.is_zero())
        throw std::logic_error("derivation of J is not linear in J");
    result.push_back(slices.count(1) ? slices.at(1) : MultiPoly());
  }
  return result;
}

std::vector<MultiPoly> seq_phi(int n_max) {
  std::vector<MultiPoly> phi{MultiPoly(), MultiPoly()};
  for (int n = 2; n <= n_max; ++n) {
    MultiPoly sum;
    for (int a = 0; a + 2 <= n; ++a)
      sum += MultiPoly::var(Var::x, a) * MultiPoly::var(Var::y, n - 2 - a);
    phi.push_back(kX * kY * sum);
  }
  phi.resize(n_max + 1);
  return phi;
}

// B_n(x,y,s,t,q) at p = 1 via the binomial recurrence with the Phi kernel.
std::vector<MultiPoly> seq_b_five(int n_max) {
  auto phi = seq_phi(n_max);
  std::vector<MultiPoly> b{MultiPoly(1)};
  if (n_max >= 1) b.push_back(kS + kQ * kT);
  for (int n = 2; n <= n_max; ++n) {
    MultiPoly value = (kS + kQ * kT).pow(n);
    for (int k = 0; k <= n - 2; ++k)
      value += Rational(binomial(n, k)) * b[k] * phi[n - k] * kOnePlusQ.pow(n - k);
    b.push_back(value);
  }
  return b;
}

std::vector<MultiPoly> seq_d(int n_max) {
  std::vector<MultiPoly> d{MultiPoly(1)};
  if (n_max >= 1) d.push_back(MultiPoly());
  for (int n = 2; n <= n_max; ++n) {
    MultiPoly value;
    for (int k = 0; k <= n - 2; ++k) {
      MultiPoly geometric;
      for (int j = 1; j <= n - 1 - k; ++j) geometric += MultiPoly::var(Var::x, j);
      value += Rational(binomial(n, k)) * d[k] * geometric;
    }
    d.push_back(value);
  }
  return d;
}

std::vector<MultiPoly> seq_d_xy(int n_max) {
  auto d = seq_d(n_max);
  for (int n = 0; n <= n_max; ++n) {
    MultiPoly h;
    for (const auto& [mono, coef] : d[n].terms()) {
      Monomial m;
      m.set_exp(Var::x, mono.exp(Var::x));
      m.set_exp(Var::y, n - mono.exp(Var::x));
      h += MultiPoly::term(m, coef);
    }
    d[n] = h;
  }
  return d;
}

std::vector<MultiPoly> seq_d_xys(int n_max) {
  auto dxy = seq_d_xy(n_max);
  std::vector<MultiPoly> result;
  for (int n = 0; n <= n_max; ++n) {
    MultiPoly value;
    for (int i = 0; i <= n; ++i)
      value += Rational(binomial(n, i)) * MultiPoly::var(Var::s, i) * dxy[n - i];
    result.push_back(value);
  }
  return result;
}

std::vector<MultiPoly> seq_db_xq(int n_max) {
  auto d = seq_d(n_max);
  std::vector<MultiPoly> result;
  for (int n = 0; n <= n_max; ++n) {
    MultiPoly value;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= i; ++j)
        value += Rational(binomial(n, i) * binomial(i, j)) * d[n - j] * kQ.pow(i);
    result.push_back(value);
  }
  return result;
}

std::vector<MultiPoly> seq_db_x(int n_max) {
  auto dbxq = seq_db_xq(n_max);
  for (auto& p : dbxq) p = p.substitute(Var::q, MultiPoly(1));
  return dbxq;
}

std::vector<MultiPoly> seq_db_tilde(int n_max) {
  auto dbx = seq_db_x(n_max);
  for (int n = 0; n <= n_max; ++n) dbx[n] = dbx[n].reciprocal_in(Var::x, n);
  return dbx;
}

std::vector<MultiPoly> seq_d_nr(int n_max, int r) {
  if (r < 1) throw std::invalid_argument("color count must be positive");
  // Chow-Toufik S_n-weighted sum; the r^n n! colored scan stays an oracle.
  std::vector<MultiPoly> result;
  for (int n = 0; n <= n_max; ++n) {
    check_symmetric_bound(n);
    MultiPoly value;
    for_each_perm(n, [&](const Perm& p) {
      int fix = stat_fix(p);
      Int weight = 1;
      for (int k = 0; k < fix; ++k) weight *= r - 1;
      for (int k = 0; k < n - fix; ++k) weight *= r;
      value += MultiPoly::term(Monomial::var(Var::x, stat_exc(p) + fix), Rational(weight));
    });
    result.push_back(value);
  }
  return result;
}

std::vector<MultiPoly> seq_f(int n_max, bool plus) {
  auto [fp, fm] = f_tables(n_max);
  const GammaTable& table = plus ? fp : fm;
  std::vector<MultiPoly> result;
  for (int n = 0; n <= n_max; ++n) {
    int top = plus ? n : n - 1;
    MultiPoly value;
    for (int j = 0; 2 * j <= top; ++j)
      value += table.at(n, j) * kX.pow(j) * (MultiPoly(1) + kX).pow(top - 2 * j);
    result.push_back(value);
  }
  return result;
}

std::vector<MultiPoly> seq_b_stella(int n_max) {
  auto eulerian = seq_eulerian(n_max);
  std::vector<MultiPoly> result;
  for (int n = 0; n <= n_max; ++n) {
    MultiPoly value;
    for (int i = 0; i <= n; ++i)
      value += Rational(binomial(n, i)) * eulerian[i] * kX.pow(n - i);
    result.push_back(value);
  }
  return result;
}

std::vector<MultiPoly> seq_s_x(int n_max) {
  // S(n, j) is the j-row-sum of the gamma table over the fixed-point index.
  GammaTable g = gamma_table(n_max);
  std::vector<MultiPoly> result(n_max + 1);
  std::vector<std::map<int, MultiPoly>> rows(n_max + 1);
  for (const auto& [key, value] : g.entries) rows[key[0]][key[2]] += value;
  for (int n = 0; n <= n_max; ++n) {
    MultiPoly value;
    for (const auto& [j, coef] : rows[n]) value += coef * kX.pow(j);
    result[n] = value;
  }
  return result;
}

std::vector<MultiPoly> seq_p_x(int n_max) {
  auto d = seq_d(n_max);
  std::vector<MultiPoly> result{MultiPoly(1)};
  for (int n = 1; n <= n_max; ++n) {
    auto quotient = (d[n] + kX * d[n - 1]).divided_exactly_by(kX);
    if (!quotient) throw std::logic_error("x P_n(x) is not divisible by x");
    result.push_back(*quotient);
  }
  return result;
}

}  // namespace

std::vector<MultiPoly> b_five_sequence(int n_max) { return seq_b_five(n_max); }

const std::vector<FamilyInfo>& family_registry() {
  static const std::vector<FamilyInfo> registry = {
      {FamilyId::AXys, "A_xys", "A_n(x,y,s): big ascents, descents, successions", false},
      {FamilyId::ATildeXy, "Atilde_xy", "sum over S_n of x^asc y^(des+1)", false},
      {FamilyId::AX, "A_x", "Eulerian polynomial A_n(x)", false},
      {FamilyId::BXystpq, "B_xystpq", "B_n(x,y,s,t,p,q) over B_n", false},
      {FamilyId::BX, "B_x", "type B Eulerian polynomial B_n(x)", false},
      {FamilyId::DX, "d_x", "derangement polynomial d_n(x)", false},
      {FamilyId::DXy, "d_xy", "d_n(x,y) over derangements", false},
      {FamilyId::DXys, "d_xys", "d_n(x,y,s) over S_n", false},
      {FamilyId::DBXq, "dB_xq", "type B q-derangement polynomial d_n^B(x,q)", false},
      {FamilyId::DBX, "dB_x", "type B derangement polynomial d_n^B(x)", false},
      {FamilyId::DBTildeX, "dBtilde_x", "type B derangements by excB", false},
      {FamilyId::DnrX, "d_xr", "r-colored derangement polynomial d_{n,r}(x)", true},
      {FamilyId::FPlus, "f_plus", "f_n^+(x,q)", false},
      {FamilyId::FMinus, "f_minus", "f_n^-(x,q)", false},
      {FamilyId::Phi, "Phi", "Phi_n(x,y)", false},
      {FamilyId::BStella, "b_x", "stellahedron h-polynomial b_n(x)", false},
      {FamilyId::SX, "S_x", "simsun descent polynomial S_n(x)", false},
      {FamilyId::PX, "P_x", "no-succession permutations by ascents", false},
      {FamilyId::PStarX, "Pstar_x", "Roselle's P*_n(x)", false},
  };
  return registry;
}

const FamilyInfo* find_family(std::string_view cli_name) {
  for (const auto& info : family_registry())
    if (cli_name == info.cli_name) return &info;
  return nullptr;
}

std::vector<MultiPoly> family_sequence(FamilyId id, int n_max, int r) {
  if (n_max < 0) throw std::invalid_argument("negative index");
  switch (id) {
    case FamilyId::AXys:
      return seq_a_xys(n_max);
    case FamilyId::ATildeXy:
      return seq_atilde(n_max);
    case FamilyId::AX:
      return seq_eulerian(n_max);
    case FamilyId::BXystpq:
      return seq_b_six(n_max);
    case FamilyId::BX: {
      auto b = seq_b_five(n_max);
      std::map<Var, MultiPoly> sub{{Var::y, MultiPoly(1)},
                                   {Var::s, kX},
                                   {Var::t, MultiPoly(1)},
                                   {Var::q, MultiPoly(1)}};
      for (auto& p : b) p = p.substitute(sub);
      return b;
    }
    case FamilyId::DX:
      return seq_d(n_max);
    case FamilyId::DXy:
      return seq_d_xy(n_max);
    case FamilyId::DXys:
      return seq_d_xys(n_max);
    case FamilyId::DBXq:
      return seq_db_xq(n_max);
    case FamilyId::DBX:
      return seq_db_x(n_max);
    case FamilyId::DBTildeX:
      return seq_db_tilde(n_max);
    case FamilyId::DnrX:
      return seq_d_nr(n_max, r);
    case FamilyId::FPlus:
      return seq_f(n_max, true);
    case FamilyId::FMinus:
      return seq_f(n_max, false);
    case FamilyId::Phi:
      return seq_phi(n_max);
    case FamilyId::BStella:
      return seq_b_stella(n_max);
    case FamilyId::SX:
      return seq_s_x(n_max);
    case FamilyId::PX:
      return seq_p_x(n_max);
    case FamilyId::PStarX:
      return seq_d(n_max);
  }
  throw std::logic_error("unreachable");
}

MultiPoly family(FamilyId id, int n, int r) { return family_sequence(id, n, r).back(); }

MultiPoly GammaTable::at(int n, int i, int j) const {
  auto it = entries.find({n, i, j});
  return it == entries.end() ? MultiPoly() : it->second;
}

void GammaTable::set(int n, int i, int j, MultiPoly value) {
  if (value.is_zero()) return;
  entries[{n, i, j}] = std::move(value);
}

GammaTable gamma_table(int n_max) {
  GammaTable t{"gamma", 3, {}};
  t.set(0, 0, 0, MultiPoly(1));
  for (int n = 0; n < n_max; ++n) {
    for (int i = 0; i <= n + 1; ++i) {
      for (int j = 0; 2 * j <= n + 1 - i; ++j) {
        MultiPoly value = t.at(n, i - 1, j) + Rational(1 + i) * t.at(n, i + 1, j - 1) +
                          Rational(j) * t.at(n, i, j) +
                          Rational(n - i - 2 * j + 2) * t.at(n, i, j - 1);
        t.set(n + 1, i, j, std::move(value));
      }
    }
  }
  return t;
}

GammaTable b_table(int n_max) {
  GammaTable t{"b_of_p", 3, {}};
  const MultiPoly p = MultiPoly::var(Var::p);
  t.set(0, 0, 0, MultiPoly(1));
  for (int n = 0; n < n_max; ++n) {
    for (int i = 0; i <= n + 1; ++i) {
      for (int j = 0; 2 * j <= n + 1 - i; ++j) {
        MultiPoly value = p * t.at(n, i - 1, j) + Rational(1 + i) * t.at(n, i + 1, j - 1) +
                          Rational(j) * t.at(n, i, j) +
                          Rational(2 * (n - i - 2 * j + 2)) * t.at(n, i, j - 1);
        t.set(n + 1, i, j, std::move(value));
      }
    }
  }
  return t;
}

std::pair<GammaTable, GammaTable> f_tables(int n_max) {
  GammaTable fp{"f_plus", 2, {}};
  GammaTable fm{"f_minus", 2, {}};
  fp.set(0, 0, 0, MultiPoly(1));
  auto fplus = [&](int n, int j) { return n < 0 || j < 0 ? MultiPoly() : fp.at(n, j); };
  auto fminus = [&](int n, int j) { return n < 0 || j < 0 ? MultiPoly() : fm.at(n, j); };
  for (int n = 0; n < n_max; ++n) {
    for (int j = 0; 2 * j <= n + 1; ++j) {
      MultiPoly plus = kOnePlusQ * Rational(n) * fplus(n - 1, j - 1) +
                       kOnePlusQ * Rational(j) * fplus(n, j) +
                       kOnePlusQ * Rational(2 * (n - 2 * j + 2)) * fplus(n, j - 1) +
                       fminus(n, j - 1);
      fp.set(n + 1, j, 0, std::move(plus));
      if (2 * j <= n) {
        MultiPoly minus = kQ * fplus(n, j) + kQ * fminus(n, j) +
                          kOnePlusQ * Rational(n) * fminus(n - 1, j - 1) +
                          kOnePlusQ * Rational(j) * fminus(n, j) +
                          kOnePlusQ * Rational(2 * (n - 2 * j + 1)) * fminus(n, j - 1);
        fm.set(n + 1, j, 0, std::move(minus));
      }
    }
  }
  return {std::move(fp), std::move(fm)};
}

namespace {

// Terms of p whose x- and y-exponents are exactly (a, b), with x and y
// stripped; coefficients may involve the remaining variables.
MultiPoly coefficient_in_xy(const MultiPoly& p, int a, int b) {
  MultiPoly r;
  for (const auto& [mono, coef] : p.terms()) {
    if (mono.exp(Var::x) != a || mono.exp(Var::y) != b) continue;
    Monomial rest = mono;
    rest.set_exp(Var::x, 0);
    rest.set_exp(Var::y, 0);
    r += MultiPoly::term(rest, coef);
  }
  return r;
}

// Peels a symmetric slice in the (xy, x+y) basis of total degree d:
// slice = sum_j c_j (xy)^j (x+y)^{d-2j}. Returns nullopt on remainder.
std::optional<std::map<int, MultiPoly>> peel_symmetric(const MultiPoly& slice, int d) {
  std::map<int, MultiPoly> out;
  MultiPoly remainder = slice;
  for (int j = 0; 2 * j <= d; ++j) {
    MultiPoly c = coefficient_in_xy(remainder, d - j, j);
    if (c.is_zero()) continue;
    remainder -= c * kX.pow(j) * kY.pow(j) * (kX + kY).pow(d - 2 * j);
    out[j] = std::move(c);
  }
  if (!remainder.is_zero()) return std::nullopt;
  return out;
}

}  // namespace

GammaExpansion expand_gamma_basis_A(const MultiPoly& poly, int n) {
  GammaExpansion result;
  MultiPoly sub = poly.substitute(Var::s, MultiPoly::var(Var::h) - kY);
  for (const auto& [i, slice] : sub.slices_in(Var::h)) {
    if (i > n) {
      result.error = "slice degree " + std::to_string(i) + " exceeds n";
      return result;
    }
    for (int v = 0; v < kNumVars; ++v) {
      Var var = static_cast<Var>(v);
      if (var != Var::x && var != Var::y && slice.contains_var(var)) {
        result.error = std::string("unexpected variable ") + var_name(var) + " in slice " +
                       std::to_string(i);
        return result;
      }
    }
    auto peeled = peel_symmetric(slice, n - i);
    if (!peeled) {
      result.error = "slice i=" + std::to_string(i) + " is not in the (xy, x+y) span: " +
                     slice.str();
      return result;
    }
    for (auto& [j, c] : *peeled) {
      // The 2^j scale of the A expansion is pulled out of the coefficient.
      result.coeffs[{i, j}] = c * Rational(Int(1), Int(1) << j);
    }
  }
  result.in_span = true;
  return result;
}

GammaExpansion expand_gamma_basis_B(const MultiPoly& poly, int n) {
  GammaExpansion result;
  MultiPoly sub = poly.substitute(Var::s, MultiPoly::var(Var::h) - kQ * kT);
  for (const auto& [i, slice] : sub.slices_in(Var::h)) {
    if (i > n) {
      result.error = "slice degree " + std::to_string(i) + " exceeds n";
      return result;
    }
    for (int v = 0; v < kNumVars; ++v) {
      Var var = static_cast<Var>(v);
      if (var != Var::x && var != Var::y && var != Var::p && var != Var::q &&
          slice.contains_var(var)) {
        result.error = std::string("unexpected variable ") + var_name(var) + " in slice " +
                       std::to_string(i);
        return result;
      }
    }
    // Coefficients live in Q[p,q]; peel (xy, x+y), then take out (1+q)^{n-i}.
    std::map<int, MultiPoly> peeled;
    MultiPoly remainder = slice;
    for (int j = 0; 2 * j <= n - i; ++j) {
      MultiPoly c;
      for (const auto& [mono, coef] : remainder.terms()) {
        if (mono.exp(Var::x) != n - i - j || mono.exp(Var::y) != j) continue;
        Monomial rest = mono;
        rest.set_exp(Var::x, 0);
        rest.set_exp(Var::y, 0);
        c += MultiPoly::term(rest, coef);
      }
      if (c.is_zero()) continue;
      remainder -= c * kX.pow(j) * kY.pow(j) * (kX + kY).pow(n - i - 2 * j);
      peeled[j] = std::move(c);
    }
    if (!remainder.is_zero()) {
      result.error = "slice i=" + std::to_string(i) + " is not in the (xy, x+y) span: " +
                     remainder.str();
      return result;
    }
    for (auto& [j, c] : peeled) {
      auto reduced = c.divided_exactly_by(kOnePlusQ.pow(n - i));
      if (!reduced) {
        result.error = "coefficient at (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                       ") is not divisible by (1+q)^" + std::to_string(n - i);
        return result;
      }
      result.coeffs[{i, j}] = *reduced;
    }
  }
  result.in_span = true;
  return result;
}

std::pair<MultiPoly, MultiPoly> f_pm_split(const MultiPoly& poly, int n) {
  if (poly.degree_in(Var::x) > n)
    throw std::domain_error("f_pm_split: degree in x exceeds n");
  MultiPoly reversed = poly.reciprocal_in(Var::x, n);
  auto minus = (reversed - poly).divided_exactly_by(kX - MultiPoly(1));
  if (!minus)
    throw std::domain_error(
        "f_pm_split: x^n P(1/x) - P is not divisible by x - 1; input violates the "
        "palindromic-pair structure");
  return {poly - *minus, *minus};
}

std::optional<std::vector<MultiPoly>> gamma_vector(const MultiPoly& poly, Var v, int m) {
  MultiPoly remainder = poly;
  std::vector<MultiPoly> gammas;
  const MultiPoly vp = MultiPoly::var(v);
  for (int k = 0; 2 * k <= m; ++k) {
    MultiPoly c;
    for (const auto& [mono, coef] : remainder.terms()) {
      if (mono.exp(v) != k) continue;
      Monomial rest = mono;
      rest.set_exp(v, 0);
      c += MultiPoly::term(rest, coef);
    }
    remainder -= c * vp.pow(k) * (MultiPoly(1) + vp).pow(m - 2 * k);
    gammas.push_back(std::move(c));
  }
  if (!remainder.is_zero()) return std::nullopt;
  return gammas;
}

}  // namespace gammakit
