#include "gammakit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace gammakit {

namespace {

void validate_one_line(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : w) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of [n]");
    seen[v] = true;
  }
}

void validate_signed(const std::vector<int>& img) {
  int n = static_cast<int>(img.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : img) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[a]) throw std::invalid_argument("not a signed permutation");
    seen[a] = true;
  }
}

}  // namespace

Perm::Perm(std::vector<int> one_line) : w_(std::move(one_line)) { validate_one_line(w_); }

Perm Perm::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Perm(std::move(w));
}

std::vector<int> Perm::inverse_table() const {
  std::vector<int> inv(w_.size());
  for (int i = 1; i <= size(); ++i) inv[w_[i - 1] - 1] = i;
  return inv;
}

std::string Perm::str() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += " ";
    s += std::to_string(w_[i]);
  }
  return s;
}

SignedPerm::SignedPerm(std::vector<int> images) : img_(std::move(images)) {
  validate_signed(img_);
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return SignedPerm(std::move(img));
}

SignedPerm SignedPerm::from_perm(const Perm& p) { return SignedPerm(p.one_line()); }

bool SignedPerm::is_unsigned() const {
  return std::all_of(img_.begin(), img_.end(), [](int v) { return v > 0; });
}

Perm SignedPerm::to_perm() const {
  if (!is_unsigned()) throw std::domain_error("signed permutation has negative entries");
  return Perm(img_);
}

std::string SignedPerm::str() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += " ";
    s += std::to_string(img_[i]);
  }
  return s;
}

ColoredPerm::ColoredPerm(Perm p, std::vector<int> c, int colors_count)
    : perm(std::move(p)), colors(std::move(c)), r(colors_count) {
  if (static_cast<int>(colors.size()) != perm.size())
    throw std::invalid_argument("color vector length mismatch");
  for (int ci : colors)
    if (ci < 0 || ci >= r) throw std::invalid_argument("color out of range");
}

CycleForm CycleForm::of(const SignedPerm& s) {
  int n = s.size();
  // value_at_abs[k] = the unique entry with absolute value k.
  std::vector<int> value_at_abs(n + 1, 0);
  for (int i = 1; i <= n; ++i) value_at_abs[std::abs(s.at(i))] = s.at(i);
  std::vector<bool> visited(n + 1, false);
  CycleForm cf;
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    std::vector<int> cycle;
    int pos = start;
    do {
      visited[pos] = true;
      cycle.push_back(value_at_abs[pos]);
      pos = std::abs(s.at(pos));
    } while (pos != start);
    // start is the smallest position of the orbit, so the first entry
    // already has the smallest absolute value and cycles come out sorted.
    cf.cycles.push_back(std::move(cycle));
  }
  return cf;
}

CycleForm CycleForm::of(const Perm& p) { return of(SignedPerm::from_perm(p)); }

SignedPerm CycleForm::to_signed(int n) const {
  std::vector<int> img(n, 0);
  std::vector<bool> seen(n + 1, false);
  for (const auto& cycle : cycles) {
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      int from = std::abs(cycle[j]);
      int to = cycle[(j + 1) % cycle.size()];
      if (from < 1 || from > n || seen[from])
        throw std::invalid_argument("cycle entries do not form a permutation");
      seen[from] = true;
      img[from - 1] = to;
    }
  }
  for (int k = 1; k <= n; ++k)
    if (!seen[k]) throw std::invalid_argument("cycle form does not cover [n]");
  return SignedPerm(std::move(img));
}

Perm CycleForm::to_perm(int n) const { return to_signed(n).to_perm(); }

CycleForm CycleForm::normalized() const {
  CycleForm cf = *this;
  for (auto& cycle : cf.cycles) {
    auto lead = std::min_element(cycle.begin(), cycle.end(), [](int a, int b) {
      return std::abs(a) < std::abs(b);
    });
    std::rotate(cycle.begin(), lead, cycle.end());
  }
  std::sort(cf.cycles.begin(), cf.cycles.end(), [](const auto& a, const auto& b) {
    return std::abs(a.front()) < std::abs(b.front());
  });
  return cf;
}

std::string CycleForm::str() const {
  std::string s;
  for (const auto& cycle : cycles) {
    s += "(";
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(cycle[j]);
    }
    s += ")";
  }
  return s;
}

CycleForm CycleForm::parse(std::string_view text) {
  CycleForm cf;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle form");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      bool neg = false;
      if (pos < text.size() && text[pos] == '-') {
        neg = true;
        ++pos;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected a number in cycle form");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      cycle.push_back(neg ? -v : v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw std::invalid_argument("expected ',' or ')' in cycle form");
    }
    cf.cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return cf;
}

// --- S_n statistics ---

int stat_des(const Perm& p) {
  int c = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p.at(i) > p.at(i + 1)) ++c;
  return c;
}

int stat_asc(const Perm& p) {
  int c = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p.at(i) < p.at(i + 1)) ++c;
  return c;
}

int stat_exc(const Perm& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i)
    if (p.at(i) > i) ++c;
  return c;
}

int stat_aexc(const Perm& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i)
    if (p.at(i) < i) ++c;
  return c;
}

int stat_fix(const Perm& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i)
    if (p.at(i) == i) ++c;
  return c;
}

int stat_cyc(const Perm& p) {
  int n = p.size();
  std::vector<bool> visited(n + 1, false);
  int c = 0;
  for (int i = 1; i <= n; ++i) {
    if (visited[i]) continue;
    ++c;
    for (int j = i; !visited[j]; j = p.at(j)) visited[j] = true;
  }
  return c;
}

int stat_suc(const Perm& p) {
  int c = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p.at(i + 1) == p.at(i) + 1) ++c;
  return c;
}

int stat_basc(const Perm& p) {
  int c = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p.at(i + 1) >= p.at(i) + 2) ++c;
  return c;
}

int stat_lpk(const Perm& p) {
  int c = 0;
  for (int i = 1; i < p.size(); ++i) {
    int prev = i == 1 ? 0 : p.at(i - 1);
    if (prev < p.at(i) && p.at(i) > p.at(i + 1)) ++c;
  }
  return c;
}

int stat_ipk(const Perm& p) {
  int c = 0;
  for (int i = 2; i < p.size(); ++i)
    if (p.at(i - 1) < p.at(i) && p.at(i) > p.at(i + 1)) ++c;
  return c;
}

int stat_dd(const Perm& p) {
  int n = p.size();
  int c = 0;
  for (int i = 1; i <= n; ++i) {
    int prev = i == 1 ? 0 : p.at(i - 1);
    int next = i == n ? 0 : p.at(i + 1);
    if (prev > p.at(i) && p.at(i) > next) ++c;
  }
  return c;
}

int stat_cda(const Perm& p) {
  auto inv = p.inverse_table();
  int c = 0;
  for (int x = 1; x <= p.size(); ++x)
    if (inv[x - 1] < x && x < p.at(x)) ++c;
  return c;
}

int perm_stat(const Perm& p, std::string_view name) {
  if (name == "des") return stat_des(p);
  if (name == "asc") return stat_asc(p);
  if (name == "exc") return stat_exc(p);
  if (name == "aexc") return stat_aexc(p);
  if (name == "fix") return stat_fix(p);
  if (name == "cyc") return stat_cyc(p);
  if (name == "suc") return stat_suc(p);
  if (name == "basc") return stat_basc(p);
  if (name == "lpk") return stat_lpk(p);
  if (name == "ipk") return stat_ipk(p);
  if (name == "dd") return stat_dd(p);
  if (name == "cda") return stat_cda(p);
  throw std::invalid_argument("unknown permutation statistic: " + std::string(name));
}

// --- B_n statistics ---

int stat_exc(const SignedPerm& s) {
  int c = 0;
  for (int i = 1; i <= s.size(); ++i) {
    int v = s.at(i);
    if (s.at(std::abs(v)) > v) ++c;
  }
  return c;
}

int stat_aexc(const SignedPerm& s) {
  int c = 0;
  for (int i = 1; i <= s.size(); ++i) {
    int v = s.at(i);
    if (s.at(std::abs(v)) < v) ++c;
  }
  return c;
}

int stat_fix(const SignedPerm& s) {
  int c = 0;
  for (int i = 1; i <= s.size(); ++i)
    if (s.at(i) == i) ++c;
  return c;
}

int stat_st(const SignedPerm& s) {
  int c = 0;
  for (int i = 1; i <= s.size(); ++i)
    if (s.at(i) == -i) ++c;
  return c;
}

int stat_neg(const SignedPerm& s) {
  int c = 0;
  for (int i = 1; i <= s.size(); ++i)
    if (s.at(i) < 0) ++c;
  return c;
}

int stat_cyc(const SignedPerm& s) {
  int n = s.size();
  std::vector<bool> visited(n + 1, false);
  int c = 0;
  for (int i = 1; i <= n; ++i) {
    if (visited[i]) continue;
    ++c;
    for (int j = i; !visited[j]; j = std::abs(s.at(j))) visited[j] = true;
  }
  return c;
}

int stat_desB(const SignedPerm& s) {
  int c = 0;
  int prev = 0;
  for (int i = 1; i <= s.size(); ++i) {
    if (prev > s.at(i)) ++c;
    prev = s.at(i);
  }
  return c;
}

int stat_wexc(const SignedPerm& s) { return stat_exc(s) + stat_fix(s); }
int stat_excB(const SignedPerm& s) { return stat_exc(s) + stat_st(s); }
int stat_waexc(const SignedPerm& s) { return stat_aexc(s) + stat_st(s); }

int signed_stat(const SignedPerm& s, std::string_view name) {
  if (name == "exc") return stat_exc(s);
  if (name == "aexc") return stat_aexc(s);
  if (name == "fix") return stat_fix(s);
  if (name == "st") return stat_st(s);
  if (name == "N") return stat_neg(s);
  if (name == "cyc") return stat_cyc(s);
  if (name == "desB") return stat_desB(s);
  if (name == "wexc") return stat_wexc(s);
  if (name == "excB") return stat_excB(s);
  if (name == "waexc") return stat_waexc(s);
  throw std::invalid_argument("unknown signed statistic: " + std::string(name));
}

// --- colored statistics ---

int stat_exc(const ColoredPerm& c) {
  int count = 0;
  for (int i = 1; i <= c.size(); ++i) {
    int v = c.perm.at(i);
    if (v > i || (v == i && c.colors[i - 1] > 0)) ++count;
  }
  return count;
}

int stat_fix(const ColoredPerm& c) {
  int count = 0;
  for (int i = 1; i <= c.size(); ++i)
    if (c.perm.at(i) == i && c.colors[i - 1] == 0) ++count;
  return count;
}

int colored_stat(const ColoredPerm& c, std::string_view name) {
  if (name == "exc") return stat_exc(c);
  if (name == "fix") return stat_fix(c);
  throw std::invalid_argument("unknown colored statistic: " + std::string(name));
}

// --- classes ---

bool is_derangement(const Perm& p) { return stat_fix(p) == 0; }
bool is_cda_free(const Perm& p) { return stat_cda(p) == 0; }

bool is_simsun(const Perm& p) {
  int n = p.size();
  // Subword of values <= k, in order of appearance, must avoid proper double
  // descents for every k.
  std::vector<int> sub;
  sub.reserve(n);
  for (int k = 1; k <= n; ++k) {
    sub.clear();
    for (int i = 1; i <= n; ++i)
      if (p.at(i) <= k) sub.push_back(p.at(i));
    for (std::size_t i = 0; i + 2 < sub.size(); ++i)
      if (sub[i] > sub[i + 1] && sub[i + 1] > sub[i + 2]) return false;
  }
  return true;
}

Perm restrict_to(const Perm& p, int m) {
  std::vector<int> w(m);
  for (int i = 1; i <= m; ++i) {
    int v = p.at(i);
    while (v > m) v = p.at(v);
    w[i - 1] = v;
  }
  return Perm(std::move(w));
}

bool is_simsun_second_kind(const Perm& p) {
  for (int m = p.size(); m >= 1; --m)
    if (!is_cda_free(restrict_to(p, m))) return false;
  return true;
}

bool has_succession(const Perm& p) { return stat_suc(p) > 0; }

bool is_derangement(const SignedPerm& s) { return stat_fix(s) == 0; }
bool is_derangement(const ColoredPerm& c) { return stat_fix(c) == 0; }

}  // namespace gammakit
