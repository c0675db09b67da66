#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gammakit/rational.hpp"

namespace gammakit {

// Permutation of [n] in one-line notation, 1-based: at(i) = pi(i).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> one_line);
  static Perm identity(int n);

  int size() const { return static_cast<int>(w_.size()); }
  int at(int i) const { return w_[i - 1]; }
  const std::vector<int>& one_line() const { return w_; }
  std::vector<int> inverse_table() const;  // inv[x-1] = pi^{-1}(x)

  bool operator==(const Perm&) const = default;
  std::string str() const;

 private:
  std::vector<int> w_;
};

// Signed permutation sigma in B_n, stored by its window sigma(1..n) with
// values in +-[n]; sigma(-i) = -sigma(i) is implicit.
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> images);
  static SignedPerm identity(int n);
  static SignedPerm from_perm(const Perm& p);

  int size() const { return static_cast<int>(img_.size()); }
  int at(int i) const { return img_[i - 1]; }
  const std::vector<int>& images() const { return img_; }
  // True when every image is positive; then to_perm() is valid.
  bool is_unsigned() const;
  Perm to_perm() const;

  bool operator==(const SignedPerm&) const = default;
  std::string str() const;

 private:
  std::vector<int> img_;
};

// r-colored permutation in Z_r wr S_n: a permutation with a color in
// [0, r-1] on each position.
struct ColoredPerm {
  Perm perm;
  std::vector<int> colors;  // colors[i-1] = color of position i
  int r = 1;

  ColoredPerm() = default;
  ColoredPerm(Perm p, std::vector<int> c, int colors_count);
  int size() const { return perm.size(); }
};

// Cycle form with signed entries in the standard presentation: each cycle
// starts at its smallest-in-absolute-value element and cycles are sorted by
// the absolute value of their first elements. Fixed points and singletons
// appear as explicit 1-cycles.
struct CycleForm {
  std::vector<std::vector<int>> cycles;

  static CycleForm of(const SignedPerm& s);
  static CycleForm of(const Perm& p);
  SignedPerm to_signed(int n) const;
  Perm to_perm(int n) const;
  CycleForm normalized() const;

  std::string str() const;
  // Parses "(1,4,3,-9,-8)(2,5)(-6)(-7)"; whitespace tolerated.
  static CycleForm parse(std::string_view text);
};

// --- statistics over S_n ---
int stat_des(const Perm& p);
int stat_asc(const Perm& p);
int stat_exc(const Perm& p);
int stat_aexc(const Perm& p);  // #{i in [n] : pi(i) < i}
int stat_fix(const Perm& p);
int stat_cyc(const Perm& p);
int stat_suc(const Perm& p);   // pi(k+1) = pi(k) + 1
int stat_basc(const Perm& p);  // pi(i+1) >= pi(i) + 2
int stat_lpk(const Perm& p);   // peaks at i in [n-1] with pi(0) = 0
int stat_ipk(const Perm& p);   // peaks at i in {2,...,n-1}
int stat_dd(const Perm& p);    // double descents with pi(0) = pi(n+1) = 0
int stat_cda(const Perm& p);   // values x with pi^{-1}(x) < x < pi(x)

// By-name evaluation; throws std::invalid_argument on unknown names.
int perm_stat(const Perm& p, std::string_view name);

// --- statistics over B_n ---
int stat_exc(const SignedPerm& s);    // sigma(|sigma(i)|) > sigma(i)
int stat_aexc(const SignedPerm& s);   // sigma(|sigma(i)|) < sigma(i)
int stat_fix(const SignedPerm& s);    // sigma(i) = i
int stat_st(const SignedPerm& s);     // singletons: sigma(i) = -i
int stat_neg(const SignedPerm& s);    // N: number of negative entries
int stat_cyc(const SignedPerm& s);
int stat_desB(const SignedPerm& s);   // descents of 0,sigma(1),...,sigma(n)
int stat_wexc(const SignedPerm& s);   // exc + fix
int stat_excB(const SignedPerm& s);   // exc + st
int stat_waexc(const SignedPerm& s);  // aexc + st

int signed_stat(const SignedPerm& s, std::string_view name);

// --- statistics over Z_r wr S_n ---
int stat_exc(const ColoredPerm& c);  // pi_i > i, or pi_i = i with positive color
int stat_fix(const ColoredPerm& c);  // pi_i = i and color 0

int colored_stat(const ColoredPerm& c, std::string_view name);

// --- permutation classes ---
bool is_derangement(const Perm& p);
bool is_cda_free(const Perm& p);
bool is_simsun(const Perm& p);
// Splice the largest k letters out of the cycle form for k = 0..n-1 and
// require every truncation to be cda-free (the k = 0 case is p itself).
bool is_simsun_second_kind(const Perm& p);
bool has_succession(const Perm& p);

bool is_derangement(const SignedPerm& s);  // no fixed points
bool is_derangement(const ColoredPerm& c);

// Restriction of p to [m]: values > m are spliced out of the cycles.
Perm restrict_to(const Perm& p, int m);

}  // namespace gammakit
