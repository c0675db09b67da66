#include "gammakit/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gammakit {

namespace {
constexpr const char* kVarNames[kNumVars] = {"L", "M", "J", "I", "H", "a", "p", "q",
                                             "s", "t", "h", "u", "v", "x", "y"};
}

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

void Monomial::set_exp(Var v, int e) {
  if (e < 0) throw std::domain_error("negative exponent");
  exps[static_cast<int>(v)] = static_cast<std::uint16_t>(e);
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool Monomial::is_constant() const {
  return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kNumVars; ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Monomial Monomial::var(Var v, int e) {
  Monomial m;
  m.set_exp(v, e);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exps[i] = static_cast<std::uint16_t>(exps[i] + o.exps[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) {
    if (exps[i] < o.exps[i]) throw std::domain_error("monomial quotient is not a monomial");
    r.exps[i] = static_cast<std::uint16_t>(exps[i] - o.exps[i]);
  }
  return r;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial::one(), c);
}

MultiPoly MultiPoly::var(Var v, int e) { return term(Monomial::var(v, e), 1); }

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::domain_error("polynomial is not constant");
  return terms_.begin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  if (c == 0) return MultiPoly();
  MultiPoly r = *this;
  for (auto& [m, coef] : r.terms_) coef *= c;
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative power");
  MultiPoly r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

MultiPoly MultiPoly::substitute(const std::map<Var, MultiPoly>& bindings) const {
  // Power cache per bound variable; exponents in this codebase stay small.
  std::map<Var, std::vector<MultiPoly>> powers;
  MultiPoly result;
  for (const auto& [m, c] : terms_) {
    MultiPoly t(c);
    Monomial untouched;
    for (int i = 0; i < kNumVars; ++i) {
      int e = m.exps[i];
      if (e == 0) continue;
      Var v = static_cast<Var>(i);
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        untouched.set_exp(v, e);
        continue;
      }
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(MultiPoly(1));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * it->second);
      t *= pw[e];
    }
    result += t * MultiPoly::term(untouched, 1);
  }
  return result;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  return substitute(std::map<Var, MultiPoly>{{v, value}});
}

MultiPoly MultiPoly::derivative(Var v) const {
  MultiPoly r;
  int vi = static_cast<int>(v);
  for (const auto& [m, c] : terms_) {
    int e = m.exps[vi];
    if (e == 0) continue;
    Monomial d = m;
    d.exps[vi] = static_cast<std::uint16_t>(e - 1);
    r.add_term(d, c * e);
  }
  return r;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree_in(Var v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp(v));
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool MultiPoly::contains_var(Var v) const {
  for (const auto& [m, c] : terms_)
    if (m.exp(v) > 0) return true;
  return false;
}

std::map<int, MultiPoly> MultiPoly::slices_in(Var v) const {
  std::map<int, MultiPoly> slices;
  int vi = static_cast<int>(v);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int e = rest.exps[vi];
    rest.exps[vi] = 0;
    slices[e].add_term(rest, c);
  }
  return slices;
}

MultiPoly MultiPoly::reciprocal_in(Var v, int n) const {
  if (degree_in(v) > n)
    throw std::domain_error("reciprocal_in: degree in variable exceeds requested order");
  MultiPoly r;
  int vi = static_cast<int>(v);
  for (const auto& [m, c] : terms_) {
    Monomial flipped = m;
    flipped.exps[vi] = static_cast<std::uint16_t>(n - m.exps[vi]);
    r.add_term(flipped, c);
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::divided_exactly_by(const MultiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  MultiPoly q;
  MultiPoly r = *this;
  const auto& [lead_m, lead_c] = *d.terms_.begin();
  while (!r.is_zero()) {
    const auto& [rm, rc] = *r.terms_.begin();
    if (!lead_m.divides(rm)) return std::nullopt;
    MultiPoly t = MultiPoly::term(rm / lead_m, rc / lead_c);
    q += t;
    r -= t * d;
  }
  return q;
}

bool MultiPoly::all_coefficients_nonnegative() const {
  for (const auto& [m, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool MultiPoly::all_coefficients_integer() const {
  for (const auto& [m, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string factors;
    for (int i = 0; i < kNumVars; ++i) {
      int e = m.exps[i];
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += kVarNames[i];
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += rational_str(mag);
    } else {
      if (mag != 1) out += rational_str(mag) + "*";
      out += factors;
    }
  }
  return out;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                ": " + what);
  }

  Int parse_natural() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    Int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      ++pos;
    }
    return value;
  }

  int parse_small_natural() {
    Int v = parse_natural();
    if (v > 1 << 14) fail("exponent too large");
    return static_cast<int>(v);
  }

  // Factor := number ['/' number] | var ['^' number]
  MultiPoly parse_factor() {
    skip_ws();
    if (pos >= text.size()) fail("expected a factor");
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = parse_natural();
      if (consume('/')) {
        Int den = parse_natural();
        if (den == 0) fail("zero denominator");
        return MultiPoly(Rational(num, den));
      }
      return MultiPoly(Rational(num));
    }
    auto v = var_from_name(text.substr(pos, 1));
    if (!v) fail(std::string("unknown variable '") + c + "'");
    ++pos;
    int e = 1;
    if (consume('^')) e = parse_small_natural();
    return MultiPoly::var(*v, e);
  }

  MultiPoly parse_term() {
    MultiPoly t = parse_factor();
    while (consume('*')) t *= parse_factor();
    return t;
  }

  MultiPoly parse_sum() {
    MultiPoly total;
    bool negative = false;
    if (consume('-'))
      negative = true;
    else
      consume('+');
    while (true) {
      MultiPoly t = parse_term();
      total += negative ? -t : t;
      if (consume('+'))
        negative = false;
      else if (consume('-'))
        negative = true;
      else
        break;
    }
    if (!eof()) fail("trailing input");
    return total;
  }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
  Parser parser{text};
  if (parser.eof()) throw std::invalid_argument("polynomial parse error: empty input");
  return parser.parse_sum();
}

}  // namespace gammakit
