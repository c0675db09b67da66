#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gammakit {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values reduced
// with a positive denominator, which is exactly the invariant we need for
// EGF coefficients (division by n!) and evaluations like q = 1/2.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

const Int& binomial(int n, int k);
Int factorial(int n);

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline bool is_nonnegative_integer(const Rational& r) {
  return is_integer(r) && numerator(r) >= 0;
}

std::string rational_str(const Rational& r);

}  // namespace gammakit
