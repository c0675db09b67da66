#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gammakit/multipoly.hpp"
#include "gammakit/perm.hpp"

namespace gammakit {

// Enumeration resource limits. The n-caps keep a full class scan around 1e6
// elements; GAMMAKIT_MAX_ELEMENTS (or a CLI override) caps the element count
// of any single scan on top of that.
struct Bounds {
  int max_n_symmetric = 9;
  int max_n_signed = 7;
  int max_n_colored = 6;  // Z_3 wr S_n and wider
  long long max_elements = 10'000'000;
};

Bounds& global_bounds();
// Reads GAMMAKIT_MAX_ELEMENTS into global_bounds(); called once by the CLI.
void apply_bounds_from_environment();

struct BoundExceeded : std::runtime_error {
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

void check_symmetric_bound(int n);
void check_signed_bound(int n);
void check_colored_bound(int n, int r);

using PermVisitor = std::function<void(const Perm&)>;
using SignedVisitor = std::function<void(const SignedPerm&)>;
using ColoredVisitor = std::function<void(const ColoredPerm&)>;

// Lexicographic enumeration of S_n; first > 0 restricts to pi(1) = first
// (the blocks used by the parallel reductions).
void for_each_perm(int n, const PermVisitor& f, int first = 0);
void for_each_signed(int n, const SignedVisitor& f, int first = 0);
void for_each_colored(int n, int r, const ColoredVisitor& f, int first = 0);

enum class PermClass {
  All,
  Derangements,          // D_n
  CdaFree,               // C_n
  Simsun,                // RS_n
  SimsunSecondKind,      // SS_n
  NoSuccession,          // NS_n
  NoSuccessionFirstNotOne,  // the P* class: suc = 0 and pi(1) > 1
  DerangementCdaFreeExc,    // D_{n,k}: derangements, cda-free, exc = k
};

bool in_class(PermClass cls, const Perm& p, int k = -1);
void for_each_in_class(PermClass cls, int n, const PermVisitor& f, int k = -1);
long long class_count(PermClass cls, int n, int k = -1);

enum class SignedClass {
  All,           // B_n
  Derangements,  // D_n^B
  TildeD,        // negatives exactly {-(n-i+1), ..., -n}; parameter i
};

bool in_signed_class(SignedClass cls, const SignedPerm& s, int i = -1);
void for_each_in_signed_class(SignedClass cls, int n, const SignedVisitor& f, int i = -1);
// Enumerates TildeD_{n,i} directly (n! window candidates instead of 2^n n!).
void for_each_tilde_d(int n, int i, const SignedVisitor& f);
long long signed_class_count(SignedClass cls, int n, int i = -1);

enum class ColoredClass { All, Derangements };

void for_each_in_colored_class(ColoredClass cls, int n, int r, const ColoredVisitor& f);

// Sum over the class of prod var^stat. Splitting the scan into first-entry
// blocks makes the reduction order fixed, so the result is identical for any
// thread count.
using StatVars = std::vector<std::pair<std::string, Var>>;
MultiPoly distribution(PermClass cls, int n, const StatVars& stats, int threads = 1, int k = -1);
MultiPoly distribution(SignedClass cls, int n, const StatVars& stats, int threads = 1, int i = -1);
MultiPoly distribution(ColoredClass cls, int n, int r, const StatVars& stats, int threads = 1);

// Count triangles used as ground-truth oracles. arity is 2 for (n, i) tables
// and 3 for (n, r, s).
struct StatTriangle {
  std::string name;
  int arity = 2;
  std::map<std::array<int, 3>, Int> entries;

  Int at(int n, int i, int j = 0) const;
};

StatTriangle triangle_W(int n_max);      // interior peaks over S_n
StatTriangle triangle_S(int n_max);      // descents over simsun permutations
StatTriangle triangle_Q(int n_max);      // left peaks over S_n
StatTriangle triangle_P(int n_max);      // P(n, r, s) = #{asc = r, suc = s}
StatTriangle triangle_Pstar(int n_max);  // P*(n, r): no successions, pi(1) > 1

// Succession-set / fixed-point-set equidistribution: for every I in [n-1],
// #{pi : {k : pi(k+1) = pi(k)+1} = I} = #{pi : {k in [n-1] : pi(k) = k} = I}.
bool fixed_set_vs_succession_set(int n);

// P(n,r,s) = C(n-1,s) P(n-s, r-s, 0) and x P_n(x) = P*_n(x) + x P*_{n-1}(x)
// for all n <= n_max.
bool roselle_checks(int n_max, std::string* failure = nullptr);

}  // namespace gammakit
