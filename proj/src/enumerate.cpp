#include "gammakit/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace gammakit {

Bounds& global_bounds() {
  static Bounds bounds;
  return bounds;
}

void apply_bounds_from_environment() {
  if (const char* env = std::getenv("GAMMAKIT_MAX_ELEMENTS")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) global_bounds().max_elements = v;
  }
}

namespace {

long long pow_ll(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (1LL << 62) / std::max(base, 1LL)) return 1LL << 62;
    r *= base;
  }
  return r;
}

long long factorial_ll(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;  // n <= 20 in practice
  return r;
}

void check_elements(long long count, const std::string& what) {
  if (count > global_bounds().max_elements)
    throw BoundExceeded(what + " exceeds the configured element cap of " +
                        std::to_string(global_bounds().max_elements));
}

}  // namespace

void check_symmetric_bound(int n) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (n > global_bounds().max_n_symmetric)
    throw BoundExceeded("S_" + std::to_string(n) + " is beyond the configured cap n <= " +
                        std::to_string(global_bounds().max_n_symmetric));
  check_elements(factorial_ll(n), "S_" + std::to_string(n));
}

void check_signed_bound(int n) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (n > global_bounds().max_n_signed)
    throw BoundExceeded("B_" + std::to_string(n) + " is beyond the configured cap n <= " +
                        std::to_string(global_bounds().max_n_signed));
  check_elements(pow_ll(2, n) * factorial_ll(n), "B_" + std::to_string(n));
}

void check_colored_bound(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("invalid colored group parameters");
  if (r >= 3 && n > global_bounds().max_n_colored)
    throw BoundExceeded("Z_" + std::to_string(r) + " wr S_" + std::to_string(n) +
                        " is beyond the configured cap n <= " +
                        std::to_string(global_bounds().max_n_colored));
  if (r < 3) check_signed_bound(n);
  check_elements(pow_ll(r, n) * factorial_ll(n), "colored group");
}

void for_each_perm(int n, const PermVisitor& f, int first) {
  check_symmetric_bound(n);
  if (n == 0) {
    if (first == 0) f(Perm{});
    return;
  }
  std::vector<int> w(n);
  if (first == 0) {
    std::iota(w.begin(), w.end(), 1);
    do {
      f(Perm(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return;
  }
  w[0] = first;
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (v != first) rest.push_back(v);
  do {
    std::copy(rest.begin(), rest.end(), w.begin() + 1);
    f(Perm(w));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

void for_each_signed(int n, const SignedVisitor& f, int first) {
  check_signed_bound(n);
  if (n == 0) {
    if (first == 0) f(SignedPerm{});
    return;
  }
  for_each_perm(n, [&](const Perm& p) {
    std::vector<int> img(p.one_line());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      for (int i = 0; i < n; ++i) img[i] = (mask >> i) & 1 ? -p.at(i + 1) : p.at(i + 1);
      f(SignedPerm(img));
    }
  }, first);
}

void for_each_colored(int n, int r, const ColoredVisitor& f, int first) {
  check_colored_bound(n, r);
  if (n == 0) {
    if (first == 0) f(ColoredPerm(Perm{}, {}, r));
    return;
  }
  std::vector<int> colors(n, 0);
  for_each_perm(n, [&](const Perm& p) {
    std::fill(colors.begin(), colors.end(), 0);
    while (true) {
      f(ColoredPerm(p, colors, r));
      int i = 0;
      while (i < n && colors[i] == r - 1) colors[i++] = 0;
      if (i == n) break;
      ++colors[i];
    }
  }, first);
}

bool in_class(PermClass cls, const Perm& p, int k) {
  switch (cls) {
    case PermClass::All:
      return true;
    case PermClass::Derangements:
      return is_derangement(p);
    case PermClass::CdaFree:
      return is_cda_free(p);
    case PermClass::Simsun:
      return is_simsun(p);
    case PermClass::SimsunSecondKind:
      return is_simsun_second_kind(p);
    case PermClass::NoSuccession:
      return !has_succession(p);
    case PermClass::NoSuccessionFirstNotOne:
      return !has_succession(p) && p.size() > 0 && p.at(1) > 1;
    case PermClass::DerangementCdaFreeExc:
      return is_derangement(p) && is_cda_free(p) && stat_exc(p) == k;
  }
  throw std::logic_error("unreachable");
}

void for_each_in_class(PermClass cls, int n, const PermVisitor& f, int k) {
  for_each_perm(n, [&](const Perm& p) {
    if (in_class(cls, p, k)) f(p);
  });
}

long long class_count(PermClass cls, int n, int k) {
  long long c = 0;
  for_each_in_class(cls, n, [&](const Perm&) { ++c; }, k);
  return c;
}

bool in_signed_class(SignedClass cls, const SignedPerm& s, int i) {
  switch (cls) {
    case SignedClass::All:
      return true;
    case SignedClass::Derangements:
      return is_derangement(s);
    case SignedClass::TildeD: {
      if (!is_derangement(s)) return false;
      int n = s.size();
      for (int pos = 1; pos <= n; ++pos) {
        int v = s.at(pos);
        bool should_be_negative = std::abs(v) > n - i;
        if ((v < 0) != should_be_negative) return false;
      }
      return true;
    }
  }
  throw std::logic_error("unreachable");
}

void for_each_in_signed_class(SignedClass cls, int n, const SignedVisitor& f, int i) {
  if (cls == SignedClass::TildeD) {
    for_each_tilde_d(n, i, f);
    return;
  }
  for_each_signed(n, [&](const SignedPerm& s) {
    if (in_signed_class(cls, s, i)) f(s);
  });
}

void for_each_tilde_d(int n, int i, const SignedVisitor& f) {
  if (i < 0 || i > n) throw std::invalid_argument("invalid negative-entry count");
  check_symmetric_bound(n);
  // The window of sigma is a permutation of [n] with values > n-i negated.
  for_each_perm(n, [&](const Perm& p) {
    std::vector<int> img(n);
    for (int pos = 1; pos <= n; ++pos) {
      int v = p.at(pos);
      img[pos - 1] = v > n - i ? -v : v;
    }
    SignedPerm s(std::move(img));
    if (is_derangement(s)) f(s);
  });
}

long long signed_class_count(SignedClass cls, int n, int i) {
  long long c = 0;
  for_each_in_signed_class(cls, n, [&](const SignedPerm&) { ++c; }, i);
  return c;
}

void for_each_in_colored_class(ColoredClass cls, int n, int r, const ColoredVisitor& f) {
  for_each_colored(n, r, [&](const ColoredPerm& c) {
    if (cls == ColoredClass::All || is_derangement(c)) f(c);
  });
}

namespace {

// Runs one closure per first-entry block and folds the results in block
// order, so the value is independent of the thread count.
MultiPoly blockwise_sum(int n, int threads,
                        const std::function<MultiPoly(int /*first*/)>& block) {
  int nblocks = std::max(n, 1);
  std::vector<MultiPoly> partial(nblocks);
  if (threads <= 1 || nblocks == 1) {
    for (int b = 0; b < nblocks; ++b) partial[b] = block(n == 0 ? 0 : b + 1);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int b = next.fetch_add(1); b < nblocks; b = next.fetch_add(1))
        partial[b] = block(b + 1);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(threads, nblocks); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  MultiPoly total;
  for (const auto& p : partial) total += p;
  return total;
}

Monomial stat_monomial(const std::vector<int>& values, const std::vector<Var>& vars) {
  Monomial m;
  for (std::size_t s = 0; s < vars.size(); ++s)
    m.set_exp(vars[s], m.exp(vars[s]) + values[s]);
  return m;
}

}  // namespace

MultiPoly distribution(PermClass cls, int n, const StatVars& stats, int threads, int k) {
  check_symmetric_bound(n);
  std::vector<Var> vars;
  for (const auto& [name, var] : stats) {
    perm_stat(Perm::identity(1), name);  // validates the statistic name
    vars.push_back(var);
  }
  return blockwise_sum(n, threads, [&](int first) {
    MultiPoly sum;
    std::vector<int> values(stats.size());
    for_each_perm(n, [&](const Perm& p) {
      if (!in_class(cls, p, k)) return;
      for (std::size_t s = 0; s < stats.size(); ++s) values[s] = perm_stat(p, stats[s].first);
      sum += MultiPoly::term(stat_monomial(values, vars), 1);
    }, first);
    return sum;
  });
}

MultiPoly distribution(SignedClass cls, int n, const StatVars& stats, int threads, int i) {
  check_signed_bound(n);
  std::vector<Var> vars;
  for (const auto& [name, var] : stats) {
    signed_stat(SignedPerm::identity(1), name);
    vars.push_back(var);
  }
  return blockwise_sum(n, threads, [&](int first) {
    MultiPoly sum;
    std::vector<int> values(stats.size());
    auto visit = [&](const SignedPerm& s) {
      if (!in_signed_class(cls, s, i)) return;
      for (std::size_t k2 = 0; k2 < stats.size(); ++k2)
        values[k2] = signed_stat(s, stats[k2].first);
      sum += MultiPoly::term(stat_monomial(values, vars), 1);
    };
    for_each_signed(n, visit, first);
    return sum;
  });
}

MultiPoly distribution(ColoredClass cls, int n, int r, const StatVars& stats, int threads) {
  check_colored_bound(n, r);
  std::vector<Var> vars;
  for (const auto& [name, var] : stats) {
    colored_stat(ColoredPerm(Perm::identity(1), {0}, 1), name);
    vars.push_back(var);
  }
  return blockwise_sum(n, threads, [&](int first) {
    MultiPoly sum;
    std::vector<int> values(stats.size());
    for_each_colored(n, r, [&](const ColoredPerm& c) {
      if (cls == ColoredClass::Derangements && !is_derangement(c)) return;
      for (std::size_t s = 0; s < stats.size(); ++s) values[s] = colored_stat(c, stats[s].first);
      sum += MultiPoly::term(stat_monomial(values, vars), 1);
    }, first);
    return sum;
  });
}

Int StatTriangle::at(int n, int i, int j) const {
  auto it = entries.find({n, i, j});
  return it == entries.end() ? Int(0) : it->second;
}

namespace {
StatTriangle count_triangle(const std::string& name, int n_max, int (*stat)(const Perm&),
                            PermClass cls = PermClass::All) {
  StatTriangle t{name, 2, {}};
  for (int n = 1; n <= n_max; ++n)
    for_each_in_class(cls, n, [&](const Perm& p) { t.entries[{n, stat(p), 0}] += 1; });
  return t;
}
}  // namespace

StatTriangle triangle_W(int n_max) { return count_triangle("W", n_max, stat_ipk); }
StatTriangle triangle_S(int n_max) {
  return count_triangle("S", n_max, stat_des, PermClass::Simsun);
}
StatTriangle triangle_Q(int n_max) { return count_triangle("Q", n_max, stat_lpk); }

StatTriangle triangle_P(int n_max) {
  StatTriangle t{"P", 3, {}};
  for (int n = 1; n <= n_max; ++n)
    for_each_perm(n, [&](const Perm& p) { t.entries[{n, stat_asc(p), stat_suc(p)}] += 1; });
  return t;
}

StatTriangle triangle_Pstar(int n_max) {
  // Roselle counts rises with the conventional initial rise, so the entry for
  // r collects asc = r - 1; this is the reading under which
  // sum_r P*(n,r) x^r equals the derangement polynomial.
  StatTriangle t{"Pstar", 2, {}};
  for (int n = 1; n <= n_max; ++n)
    for_each_in_class(PermClass::NoSuccessionFirstNotOne, n,
                      [&](const Perm& p) { t.entries[{n, stat_asc(p) + 1, 0}] += 1; });
  return t;
}

bool fixed_set_vs_succession_set(int n) {
  if (n < 1) return true;
  std::map<unsigned long long, long long> by_succession, by_fixed;
  for_each_perm(n, [&](const Perm& p) {
    unsigned long long succ = 0, fixed = 0;
    for (int k = 1; k < n; ++k) {
      if (p.at(k + 1) == p.at(k) + 1) succ |= 1ull << k;
      if (p.at(k) == k) fixed |= 1ull << k;
    }
    ++by_succession[succ];
    ++by_fixed[fixed];
  });
  return by_succession == by_fixed;
}

bool roselle_checks(int n_max, std::string* failure) {
  StatTriangle P = triangle_P(n_max);
  for (int n = 1; n <= n_max; ++n) {
    for (int s = 0; s < n; ++s) {
      for (int r = 0; r < n; ++r) {
        Int lhs = P.at(n, r, s);
        Int rhs = r - s >= 0 ? binomial(n - 1, s) * P.at(n - s, r - s, 0) : Int(0);
        if (lhs != rhs) {
          if (failure)
            *failure = "P(" + std::to_string(n) + "," + std::to_string(r) + "," +
                       std::to_string(s) + ") = " + lhs.str() + " but binomial form gives " +
                       rhs.str();
          return false;
        }
      }
    }
  }
  // x P_n(x) = P*_n(x) + x P*_{n-1}(x), coefficient-wise at x^m:
  // P(n, m-1, 0) = P*(n, m) + P*(n-1, m-1), with P*_0(x) = 1.
  StatTriangle Pstar = triangle_Pstar(n_max);
  auto pstar = [&](int n, int r) {
    if (n == 0) return Int(r == 0 ? 1 : 0);
    return Pstar.at(n, r);
  };
  for (int n = 1; n <= n_max; ++n) {
    if (pstar(n, 0) != 0) {
      if (failure) *failure = "P*(" + std::to_string(n) + ",0) is nonzero";
      return false;
    }
    for (int m = 1; m <= n; ++m) {
      Int lhs = P.at(n, m - 1, 0);
      Int rhs = pstar(n, m) + pstar(n - 1, m - 1);
      if (lhs != rhs) {
        if (failure)
          *failure = "x*P_" + std::to_string(n) + " vs P* recurrence fails at x^" +
                     std::to_string(m) + ": " + lhs.str() + " != " + rhs.str();
        return false;
      }
    }
  }
  return true;
}

}  // namespace gammakit
