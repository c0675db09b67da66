#include "gammakit/bijections.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace gammakit {

namespace {

std::set<int> singleton_values(const SignedPerm& s) {
  std::set<int> st;
  for (int i = 1; i <= s.size(); ++i)
    if (s.at(i) == -i) st.insert(-i);
  return st;
}

void require_tilde_d(const SignedPerm& s, int i) {
  int n = s.size();
  if (i < 0 || i > n) throw std::domain_error("negative-entry count out of range");
  for (int pos = 1; pos <= n; ++pos) {
    int v = s.at(pos);
    if (v == pos) throw std::domain_error("input has a fixed point");
    if ((v < 0) != (std::abs(v) > n - i))
      throw std::domain_error("negative entries are not the top values");
  }
}

// Relabels every cycle entry through an order-preserving value map, keeping
// the cycle structure; singleton cycles are handled by the map as well.
SignedPerm transport(const SignedPerm& s, const std::map<int, int>& value_map, int n_out) {
  CycleForm cf = CycleForm::of(s);
  for (auto& cycle : cf.cycles)
    for (int& v : cycle) v = value_map.at(v);
  return cf.normalized().to_signed(n_out);
}

std::map<int, int> order_preserving_map(const std::vector<int>& from, const std::vector<int>& to) {
  if (from.size() != to.size()) throw std::logic_error("value set size mismatch");
  std::map<int, int> m;
  for (std::size_t k = 0; k < from.size(); ++k) m[from[k]] = to[k];
  return m;
}

}  // namespace

TildeTag tilde_tag(const SignedPerm& sigma) {
  int n = sigma.size();
  auto st = singleton_values(sigma);
  if (st.count(-n)) return TildeTag::B1;
  if (st.empty()) return TildeTag::B2;
  return TildeTag::B3;
}

SignedPerm phi1(const SignedPerm& sigma) {
  int n = sigma.size();
  if (n < 1 || sigma.at(n) != -n) throw std::domain_error("-n is not a singleton");
  std::vector<int> img(sigma.images().begin(), sigma.images().end() - 1);
  return SignedPerm(std::move(img));
}

SignedPerm phi1_inverse(const SignedPerm& sigma) {
  std::vector<int> img = sigma.images();
  img.push_back(-(sigma.size() + 1));
  return SignedPerm(std::move(img));
}

SignedPerm phi2(const SignedPerm& sigma, int i) {
  int n = sigma.size();
  require_tilde_d(sigma, i);
  if (stat_st(sigma) != 0) throw std::domain_error("phi2 requires a singleton-free input");
  std::map<int, int> m;
  for (int v = 1; v <= n - i; ++v) m[v] = v + 1;
  m[-(n - i + 1)] = 1;
  for (int v = n - i + 2; v <= n; ++v) m[-v] = -v;
  return transport(sigma, m, n);
}

SignedPerm phi2_inverse(const SignedPerm& sigma, int i) {
  int n = sigma.size();
  require_tilde_d(sigma, i - 1);
  if (stat_st(sigma) != 0) throw std::domain_error("phi2 inverse requires a singleton-free input");
  std::map<int, int> m;
  for (int v = 2; v <= n - i + 1; ++v) m[v] = v - 1;
  m[1] = -(n - i + 1);
  for (int v = n - i + 2; v <= n; ++v) m[-v] = -v;
  return transport(sigma, m, n);
}

SignedPerm phi3(const SignedPerm& sigma, int i) {
  int n = sigma.size();
  require_tilde_d(sigma, i);
  auto st = singleton_values(sigma);
  if (st.empty() || st.count(-n))
    throw std::domain_error("phi3 requires singletons with -n not among them");

  std::vector<int> from, to;
  for (int v = n; v >= n - i + 1; --v)
    if (!st.count(-v)) from.push_back(-v);
  for (int v = 1; v <= n - i; ++v) from.push_back(v);
  std::set<int> st_image;
  for (int v : st) st_image.insert(v - 1);  // (-k) becomes -(k+1)
  for (int v = n; v >= n - i + 2; --v)
    if (!st_image.count(-v)) to.push_back(-v);
  for (int v = 1; v <= n - i + 1; ++v) to.push_back(v);

  auto m = order_preserving_map(from, to);
  for (int v : st) m[v] = v - 1;
  return transport(sigma, m, n);
}

SignedPerm phi3_inverse(const SignedPerm& sigma, int i) {
  int n = sigma.size();
  require_tilde_d(sigma, i - 1);
  auto st_image = singleton_values(sigma);
  if (st_image.empty()) throw std::domain_error("phi3 inverse requires a singleton");

  std::set<int> st;
  for (int v : st_image) st.insert(v + 1);
  std::vector<int> from, to;
  for (int v = n; v >= n - i + 2; --v)
    if (!st_image.count(-v)) from.push_back(-v);
  for (int v = 1; v <= n - i + 1; ++v) from.push_back(v);
  for (int v = n; v >= n - i + 1; --v)
    if (!st.count(-v)) to.push_back(-v);
  for (int v = 1; v <= n - i; ++v) to.push_back(v);

  auto m = order_preserving_map(from, to);
  for (int v : st_image) m[v] = v + 1;
  return transport(sigma, m, n);
}

CycleValueClass classify_cycle_value(const Perm& p, int x) {
  if (x < 1 || x > p.size()) throw std::domain_error("value out of range");
  CycleForm cf = CycleForm::of(p);
  for (const auto& cycle : cf.cycles) {
    auto it = std::find(cycle.begin(), cycle.end(), x);
    if (it == cycle.end()) continue;
    int len = static_cast<int>(cycle.size());
    int k = static_cast<int>(it - cycle.begin());
    if (len == 1 || k == 0) return CycleValueClass::None;
    int prev = cycle[k - 1];
    int next = cycle[(k + 1) % len];
    if (prev < x && x < next) return CycleValueClass::CycleDoubleAscent;
    if (prev > x && x > next) return CycleValueClass::CycleDoubleDescent;
    if (prev < x && x > next) return CycleValueClass::CyclePeak;
    return CycleValueClass::CycleValley;
  }
  throw std::logic_error("value not found in any cycle");
}

Perm mfs_action(const Perm& p, int x) {
  CycleValueClass cls = classify_cycle_value(p, x);
  if (cls != CycleValueClass::CycleDoubleAscent && cls != CycleValueClass::CycleDoubleDescent)
    return p;

  CycleForm cf = CycleForm::of(p);
  for (auto& cycle : cf.cycles) {
    auto it = std::find(cycle.begin(), cycle.end(), x);
    if (it == cycle.end()) continue;
    int len = static_cast<int>(cycle.size());
    int k = static_cast<int>(it - cycle.begin());
    auto at = [&](int idx) { return cycle[idx % len]; };  // c_{len} wraps to c_0
    int slot = -1;
    if (cls == CycleValueClass::CycleDoubleAscent) {
      for (int j = k + 1; j < len; ++j)
        if (at(j) > x && x > at(j + 1)) {
          slot = j;
          break;
        }
    } else {
      for (int j = k - 1; j >= 0; --j)
        if (at(j) < x && x < at(j + 1)) {
          slot = j;
          break;
        }
    }
    if (slot < 0) throw std::logic_error("relocation slot not found");
    // Remove x, then insert it right after the original c_slot.
    cycle.erase(cycle.begin() + k);
    int insert_pos = slot < k ? slot + 1 : slot;  // indices above k shifted down
    cycle.insert(cycle.begin() + insert_pos, x);
    break;
  }
  return cf.normalized().to_perm(p.size());
}

}  // namespace gammakit
