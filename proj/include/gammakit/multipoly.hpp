#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammakit/rational.hpp"

namespace gammakit {

// The variable alphabet is a fixed registry; its order is the precedence used
// by the canonical term order (lexicographic, descending exponents).
enum class Var : int { L, M, J, I, H, a, p, q, s, t, h, u, v, x, y };

inline constexpr int kNumVars = 15;

const char* var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

struct Monomial {
  std::array<std::uint16_t, kNumVars> exps{};

  int exp(Var v) const { return exps[static_cast<int>(v)]; }
  void set_exp(Var v, int e);
  int total_degree() const;
  bool is_constant() const;
  bool divides(const Monomial& other) const;

  static Monomial one() { return Monomial{}; }
  static Monomial var(Var v, int e = 1);

  Monomial operator*(const Monomial& o) const;
  // Quotient of exponent vectors; caller must ensure divisibility.
  Monomial operator/(const Monomial& o) const;

  auto operator<=>(const Monomial&) const = default;
};

// Map comparator putting the canonically-first term at begin(): larger
// exponent vector (registry-order lexicographic) prints first.
struct MonomialBefore {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.exps > b.exps; }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no zero coefficients stored, so the term map is canonical and
// equality is map equality. Values are immutable in spirit: every operation
// returns a fresh polynomial.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialBefore>;

  MultiPoly() = default;
  MultiPoly(long long c) : MultiPoly(Rational(c)) {}
  MultiPoly(const Rational& c);

  static MultiPoly var(Var v, int e = 1);
  static MultiPoly term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant value; zero polynomial reads as 0. Throws unless is_constant().
  Rational constant_value() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly operator*(const Rational& c) const;
  MultiPoly pow(int e) const;

  bool operator==(const MultiPoly& o) const = default;

  // Simultaneous substitution; unbound variables are left unchanged.
  MultiPoly substitute(const std::map<Var, MultiPoly>& bindings) const;
  MultiPoly substitute(Var v, const MultiPoly& value) const;

  MultiPoly derivative(Var v) const;

  Rational coefficient(const Monomial& m) const;
  int degree_in(Var v) const;
  int total_degree() const;
  bool contains_var(Var v) const;

  // Decompose as sum_k v^k * slice[k] with v eliminated from the slices.
  std::map<int, MultiPoly> slices_in(Var v) const;

  // var^n * p(var -> 1/var); throws std::domain_error if degree_in(var) > n.
  MultiPoly reciprocal_in(Var v, int n) const;

  // Exact division: returns the quotient when remainder-free, nullopt
  // otherwise. Uses the canonical term order for the reduction.
  std::optional<MultiPoly> divided_exactly_by(const MultiPoly& d) const;

  bool all_coefficients_nonnegative() const;
  bool all_coefficients_integer() const;

  // Canonical text. Terms in registry-lex order, coefficient first, '*'
  // between factors, '^' for exponents: "p^2*s^2 + 2*p*q*x*y".
  std::string str() const;

  // Inverse of str(); accepts the canonical syntax plus whitespace.
  static MultiPoly parse(std::string_view text);

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

}  // namespace gammakit
