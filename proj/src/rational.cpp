#include "gammakit/rational.hpp"

#include <mutex>
#include <vector>

namespace gammakit {

namespace {
std::vector<std::vector<Int>>& pascal_rows() {
  static std::vector<std::vector<Int>> rows{{Int(1)}};
  return rows;
}
std::mutex pascal_mutex;
const Int kZero = 0;
}  // namespace

const Int& binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return kZero;
  std::lock_guard<std::mutex> lock(pascal_mutex);
  auto& rows = pascal_rows();
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<Int> row(prev.size() + 1, Int(1));
    for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace gammakit
