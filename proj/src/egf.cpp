#include "gammakit/egf.hpp"

#include <stdexcept>

namespace gammakit {

namespace {
void require_same_order(const TruncatedEGF& a, const TruncatedEGF& b) {
  if (a.order() != b.order()) throw std::invalid_argument("truncation order mismatch");
}
}  // namespace

TruncatedEGF::TruncatedEGF(int order, std::vector<MultiPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order_ < 0) throw std::invalid_argument("negative truncation order");
  if (coeffs_.size() != static_cast<std::size_t>(order_) + 1)
    throw std::invalid_argument("coefficient count does not match order");
}

TruncatedEGF TruncatedEGF::zero(int order) {
  return TruncatedEGF(order, std::vector<MultiPoly>(order + 1));
}

TruncatedEGF TruncatedEGF::constant(const MultiPoly& c, int order) {
  auto s = zero(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedEGF TruncatedEGF::from_family(const std::function<MultiPoly(int)>& family, int order) {
  std::vector<MultiPoly> coeffs(order + 1);
  for (int n = 0; n <= order; ++n) coeffs[n] = family(n);
  return TruncatedEGF(order, std::move(coeffs));
}

TruncatedEGF TruncatedEGF::exp_linear(const MultiPoly& m, int order) {
  std::vector<MultiPoly> coeffs(order + 1);
  coeffs[0] = MultiPoly(1);
  for (int n = 1; n <= order; ++n) coeffs[n] = coeffs[n - 1] * m;
  return TruncatedEGF(order, std::move(coeffs));
}

const MultiPoly& TruncatedEGF::coeff(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("coefficient index beyond truncation order");
  return coeffs_[n];
}

TruncatedEGF TruncatedEGF::operator+(const TruncatedEGF& o) const {
  require_same_order(*this, o);
  auto r = *this;
  for (int n = 0; n <= order_; ++n) r.coeffs_[n] += o.coeffs_[n];
  return r;
}

TruncatedEGF TruncatedEGF::operator-(const TruncatedEGF& o) const {
  require_same_order(*this, o);
  auto r = *this;
  for (int n = 0; n <= order_; ++n) r.coeffs_[n] -= o.coeffs_[n];
  return r;
}

TruncatedEGF TruncatedEGF::operator*(const TruncatedEGF& o) const {
  require_same_order(*this, o);
  auto r = zero(order_);
  for (int n = 0; n <= order_; ++n) {
    MultiPoly c;
    for (int k = 0; k <= n; ++k)
      c += coeffs_[k] * o.coeffs_[n - k] * Rational(binomial(n, k));
    r.coeffs_[n] = c;
  }
  return r;
}

TruncatedEGF TruncatedEGF::scaled(const MultiPoly& c) const {
  auto r = *this;
  for (auto& p : r.coeffs_) p *= c;
  return r;
}

TruncatedEGF TruncatedEGF::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative series power");
  auto r = constant(MultiPoly(1), order_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool TruncatedEGF::operator==(const TruncatedEGF& o) const {
  return order_ == o.order_ && coeffs_ == o.coeffs_;
}

bool TruncatedEGF::verify_cross_multiplied(const TruncatedEGF& lhs_num,
                                           const TruncatedEGF& lhs_den,
                                           const TruncatedEGF& rhs) {
  require_same_order(lhs_num, lhs_den);
  require_same_order(lhs_num, rhs);
  return rhs * lhs_den == lhs_num;
}

}  // namespace gammakit
