#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gammakit/egf.hpp"
#include "gammakit/multipoly.hpp"

namespace gammakit {

// A context-free grammar in Chen's sense: substitution rules var -> polynomial
// inducing a formal derivative D that is linear, satisfies the Leibniz rule,
// and kills constants. Variables without a rule derive to 0, which is how the
// inert parameters p and q are carried through.
class Grammar {
 public:
  Grammar() = default;
  explicit Grammar(std::map<Var, MultiPoly> rules) : rules_(std::move(rules)) {}

  // Text form "L -> L*y; M -> M*s; s -> x*y" in the canonical syntax.
  static Grammar parse(std::string_view text);

  // The grammars used throughout: G, G1..G7 and dumont.
  static const Grammar& builtin(std::string_view name);
  static std::vector<std::string> builtin_names();

  const std::map<Var, MultiPoly>& rules() const { return rules_; }

  MultiPoly derive(const MultiPoly& w) const;
  MultiPoly derive_n(const MultiPoly& w, int n) const;
  // All powers D^0(w) .. D^n(w).
  std::vector<MultiPoly> derive_powers(const MultiPoly& w, int n) const;
  TruncatedEGF gen_series(const MultiPoly& w, int order) const;

 private:
  std::map<Var, MultiPoly> rules_;
};

// True iff substituting `bindings` into D_h^n(seed_h) gives D_g^n(seed_g) for
// every n <= n_max: the change-of-grammar consistency condition.
bool check_change_of_grammar(const Grammar& g, const Grammar& h,
                             const std::map<Var, MultiPoly>& bindings, const MultiPoly& seed_g,
                             const MultiPoly& seed_h, int n_max, std::string* failure = nullptr);

}  // namespace gammakit
