#pragma once

#include "nct/modular/modular_function.hpp"

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nct::symbol {

/// k^n, n != 0.
struct KPow {
  int exponent = 1;
};

/// δ₁^{d1} δ₂^{d2}(k), (d1, d2) != (0, 0).
struct DerivK {
  int d1 = 0;
  int d2 = 0;
};

/// b₀^p with b₀ = (k²|ξ|² + 1)⁻¹, p ≥ 1.
struct Resolvent {
  int power = 1;
};

struct ModAppliedData;

/// F(Δ)(arg); only produced by the reduction stage.
struct ModApplied {
  std::shared_ptr<const ModAppliedData> data;
};

using Atom = std::variant<KPow, DerivK, Resolvent, ModApplied>;
using Word = std::vector<Atom>;

struct ModAppliedData {
  modular::ModularFunctionExpr fn;
  Word arg;
};

Atom make_kpow(int n);
Atom make_deriv(int d1, int d2);
Atom make_resolvent(int p);
Atom make_mod_applied(modular::ModularFunctionExpr fn, Word arg);

/// k-powers and resolvent powers commute with each other (b₀ is a function of k).
inline bool is_commuting(const Atom& a) {
  return std::holds_alternative<KPow>(a) || std::holds_alternative<Resolvent>(a);
}

/// Fixed total order: KPow < DerivK (graded, then lexicographic) < Resolvent < ModApplied.
std::strong_ordering compare(const Atom& a, const Atom& b);
std::strong_ordering compare(const Word& a, const Word& b);

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return compare(a, b) < 0; }
};

inline bool same_word(const Word& a, const Word& b) { return compare(a, b) == 0; }

/// Canonical form of a word: every maximal run of commuting atoms becomes
/// [k^n][b₀^p] (zero exponents dropped); ModApplied arguments canonicalized.
Word canonical_word(const Word& w);

/// Total resolvent power in a word.
int resolvent_degree(const Word& w);

/// "k^n", "d(i1,i2)k", "b0^p", "F[<fn>](<word>)"
std::string to_string(const Atom& a);
std::string to_string(const Word& w);

/// Inverse of to_string for the k, δ(k) and b₀ atoms.
Atom parse_atom(std::string_view text);

}  // namespace nct::symbol
