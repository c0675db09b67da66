#include "gammakit/grammar.hpp"

#include <stdexcept>

namespace gammakit {

Grammar Grammar::parse(std::string_view text) {
  std::map<Var, MultiPoly> rules;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view rule = text.substr(pos, end - pos);
    pos = end + 1;
    std::size_t arrow = rule.find("->");
    if (arrow == std::string_view::npos) {
      bool blank = rule.find_first_not_of(" \t\n") == std::string_view::npos;
      if (blank) continue;
      throw std::invalid_argument("grammar rule missing '->'");
    }
    std::string_view lhs = rule.substr(0, arrow);
    std::size_t a = lhs.find_first_not_of(" \t\n");
    std::size_t b = lhs.find_last_not_of(" \t\n");
    if (a == std::string_view::npos) throw std::invalid_argument("grammar rule missing variable");
    auto v = var_from_name(lhs.substr(a, b - a + 1));
    if (!v) throw std::invalid_argument("unknown variable on rule left side");
    if (rules.count(*v)) throw std::invalid_argument("duplicate rule for a variable");
    rules.emplace(*v, MultiPoly::parse(rule.substr(arrow + 2)));
  }
  return Grammar(std::move(rules));
}

const Grammar& Grammar::builtin(std::string_view name) {
  static const std::map<std::string, Grammar, std::less<>> grammars = [] {
    std::map<std::string, Grammar, std::less<>> g;
    g.emplace("G", parse("L -> L*y; M -> M*s; s -> x*y; x -> x*y; y -> x*y"));
    g.emplace("G1", parse("I -> I*t; t -> 2*u; u -> u*v; v -> 2*u"));
    g.emplace("G2", parse("J -> p*J*s + p*q*J*t; s -> x*y + q*x*y; t -> x*y + q*x*y;"
                          "x -> x*y + q*x*y; y -> x*y + q*x*y"));
    g.emplace("G3", parse("J -> p*J*h; h -> u + 2*q*u + q^2*u; u -> u*v + q*u*v;"
                          "v -> 2*u + 2*q*u"));
    g.emplace("G4", parse("a -> q*a*t; t -> 2*u; u -> u*v; v -> 2*u"));
    g.emplace("G5", parse("J -> J*h; h -> u; u -> u*v; v -> 2*u"));
    g.emplace("G6", parse("J -> J*s + q*J*y; s -> x*y + q*x*y; x -> x*y + q*x*y;"
                          "y -> x*y + q*x*y"));
    g.emplace("G7", parse("J -> J*s + q*H; s -> u + q*u; H -> H*s + q*H*v + J*u;"
                          "u -> u*v + q*u*v; v -> 2*u + 2*q*u"));
    g.emplace("dumont", parse("x -> x*y; y -> x*y"));
    return g;
  }();
  auto it = grammars.find(name);
  if (it == grammars.end())
    throw std::invalid_argument("unknown built-in grammar: " + std::string(name));
  return it->second;
}

std::vector<std::string> Grammar::builtin_names() {
  return {"G", "G1", "G2", "G3", "G4", "G5", "G6", "G7", "dumont"};
}

MultiPoly Grammar::derive(const MultiPoly& w) const {
  MultiPoly result;
  for (const auto& [mono, coef] : w.terms()) {
    for (const auto& [v, rule] : rules_) {
      int e = mono.exp(v);
      if (e == 0) continue;
      Monomial reduced = mono;
      reduced.set_exp(v, e - 1);
      result += MultiPoly::term(reduced, coef * e) * rule;
    }
  }
  return result;
}

MultiPoly Grammar::derive_n(const MultiPoly& w, int n) const {
  if (n < 0) throw std::invalid_argument("negative derivation count");
  MultiPoly r = w;
  for (int i = 0; i < n; ++i) r = derive(r);
  return r;
}

std::vector<MultiPoly> Grammar::derive_powers(const MultiPoly& w, int n) const {
  std::vector<MultiPoly> powers{w};
  for (int i = 1; i <= n; ++i) powers.push_back(derive(powers.back()));
  return powers;
}

TruncatedEGF Grammar::gen_series(const MultiPoly& w, int order) const {
  return TruncatedEGF(order, derive_powers(w, order));
}

bool check_change_of_grammar(const Grammar& g, const Grammar& h,
                             const std::map<Var, MultiPoly>& bindings, const MultiPoly& seed_g,
                             const MultiPoly& seed_h, int n_max, std::string* failure) {
  MultiPoly dg = seed_g;
  MultiPoly dh = seed_h;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) {
      dg = g.derive(dg);
      dh = h.derive(dh);
    }
    MultiPoly mapped = dh.substitute(bindings);
    if (mapped != dg) {
      if (failure)
        *failure = "change of grammar fails at n = " + std::to_string(n) + ": " + mapped.str() +
                   " != " + dg.str();
      return false;
    }
  }
  return true;
}

}  // namespace gammakit
