#pragma once

#include <functional>
#include <vector>

#include "gammakit/multipoly.hpp"

namespace gammakit {

// Exponential generating function truncated at z^N. coeffs[n] multiplies
// z^n/n!, so multiplication is the binomial convolution and e^{m z} is simply
// the sequence of powers of m. Identities with rational-exponential closed
// forms are checked by cross-multiplication; no series division ever happens.
class TruncatedEGF {
 public:
  TruncatedEGF(int order, std::vector<MultiPoly> coeffs);

  static TruncatedEGF zero(int order);
  static TruncatedEGF constant(const MultiPoly& c, int order);
  static TruncatedEGF from_family(const std::function<MultiPoly(int)>& family, int order);
  // e^{m z}: coefficient of z^n/n! is m^n.
  static TruncatedEGF exp_linear(const MultiPoly& m, int order);

  int order() const { return order_; }
  const MultiPoly& coeff(int n) const;
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

  TruncatedEGF operator+(const TruncatedEGF& o) const;
  TruncatedEGF operator-(const TruncatedEGF& o) const;
  TruncatedEGF operator*(const TruncatedEGF& o) const;  // binomial convolution
  TruncatedEGF scaled(const MultiPoly& c) const;
  TruncatedEGF pow(int e) const;

  bool operator==(const TruncatedEGF& o) const;

  // True iff rhs * lhs_den == lhs_num coefficient-wise up to the common order,
  // i.e. the cleared form of "lhs_num / lhs_den == rhs".
  static bool verify_cross_multiplied(const TruncatedEGF& lhs_num, const TruncatedEGF& lhs_den,
                                      const TruncatedEGF& rhs);

 private:
  int order_;
  std::vector<MultiPoly> coeffs_;
};

}  // namespace gammakit
