#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammakit/multipoly.hpp"

namespace gammakit {

// Every registered polynomial family. The fast paths are recurrences,
// convolutions or grammar derivations; the enumeration oracles validating
// them live in the verification suites.
enum class FamilyId {
  AXys,      // A_n(x,y,s): big ascents, descents, successions
  ATildeXy,  // sum over S_n of x^asc y^(des+1)
  AX,        // Eulerian polynomial A_n(x)
  BXystpq,   // B_n(x,y,s,t,p,q) over the hyperoctahedral group
  BX,        // type B Eulerian polynomial B_n(x)
  DX,        // derangement polynomial d_n(x)
  DXy,       // d_n(x,y)
  DXys,      // d_n(x,y,s)
  DBXq,      // d_n^B(x,q)
  DBX,       // d_n^B(x)
  DBTildeX,  // type B derangements by excedances of type B
  DnrX,      // r-colored derangement polynomial d_{n,r}(x)
  FPlus,     // f_n^+(x,q)
  FMinus,    // f_n^-(x,q)
  Phi,       // Phi_n(x,y)
  BStella,   // h-polynomial of the stellahedron b_n(x)
  SX,        // simsun descent polynomial S_n(x)
  PX,        // no-succession permutations by ascents
  PStarX,    // Roselle's P*_n(x) (= d_n(x))
};

struct FamilyInfo {
  FamilyId id;
  const char* cli_name;
  const char* description;
  bool takes_r;
};

const std::vector<FamilyInfo>& family_registry();
const FamilyInfo* find_family(std::string_view cli_name);

MultiPoly family(FamilyId id, int n, int r = 2);
// Members 0..n_max; cheaper than repeated family() calls for recurrences.
std::vector<MultiPoly> family_sequence(FamilyId id, int n_max, int r = 2);

// B_n(x,y,s,t,q) = B_n(x,y,s,t,1,q) by the binomial recurrence with the Phi
// kernel; the p = 1 route behind the type B Eulerian specialization. The
// six-variable family goes through the grammar derivation instead, which is
// the only p-symbolic path.
std::vector<MultiPoly> b_five_sequence(int n_max);

// Three-index table of polynomial entries filled by a recurrence. Missing
// keys read as zero. arity 2 tables use the key (n, j, 0).
struct GammaTable {
  std::string name;
  int arity = 3;
  std::map<std::array<int, 3>, MultiPoly> entries;

  MultiPoly at(int n, int i, int j = 0) const;
  void set(int n, int i, int j, MultiPoly value);
};

GammaTable gamma_table(int n_max);  // gamma_{n,i,j}, nonnegative integers
GammaTable b_table(int n_max);      // b_{n,i,j}(p)
// f^+_{n,j}(q) and f^-_{n,j}(q) from the coefficient-level recurrence system.
std::pair<GammaTable, GammaTable> f_tables(int n_max);

struct GammaExpansion {
  bool in_span = false;
  std::string error;
  // (i, j) -> coefficient: gamma_{n,i,j} for the A basis, b_{n,i,j}(p) for
  // the B basis; zero coefficients omitted.
  std::map<std::pair<int, int>, MultiPoly> coeffs;
};

// P(x,y,s) = sum_i (s+y)^i sum_j 2^j c_{i,j} (xy)^j (x+y)^{n-i-2j}.
GammaExpansion expand_gamma_basis_A(const MultiPoly& poly, int n);
// P = sum_i (s+qt)^i (1+q)^{n-i} sum_j c_{i,j}(p) (xy)^j (x+y)^{n-i-2j}.
GammaExpansion expand_gamma_basis_B(const MultiPoly& poly, int n);

// Unique split P = f_plus + f_minus with x^n f_plus(1/x) = f_plus and
// x^(n-1) f_minus(1/x) = f_minus, computed as
// f_minus = (x^n P(1/x) - P)/(x - 1). Throws std::domain_error when the
// division leaves a remainder.
std::pair<MultiPoly, MultiPoly> f_pm_split(const MultiPoly& poly, int n);

// Coefficients g_k with P = sum_k g_k v^k (1+v)^(m-2k); nullopt when the
// peel leaves a remainder (P not in the span). Negative entries mean the
// polynomial is not gamma-positive.
std::optional<std::vector<MultiPoly>> gamma_vector(const MultiPoly& poly, Var v, int m);

}  // namespace gammakit
