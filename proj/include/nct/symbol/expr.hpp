#pragma once

#include "nct/rational.hpp"
#include "nct/symbol/atom.hpp"

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace nct::symbol {

/// ξ-phase terms carry ξ₁^a ξ₂^b; r-phase terms carry r^p after angular averaging.
enum class Phase { xi, radial };

/// Commuting scalar part of a term. `lambda` counts factors of −λ (set to 1),
/// which contribute order 2 each but no value.
struct Monomial {
  int xi1 = 0;
  int xi2 = 0;
  int r = 0;
  int lambda = 0;

  auto operator<=>(const Monomial&) const = default;

  [[nodiscard]] int degree() const { return xi1 + xi2 + r; }
};

Monomial operator*(const Monomial& a, const Monomial& b);

struct SymbolTerm {
  Rational coeff;
  Monomial mono;
  Word word;
};

/// Symbol order: ξ-degree + 2·λ-count − 2·(total b₀ power).
int order(const Monomial& m, const Word& w);
inline int order(const SymbolTerm& t) { return order(t.mono, t.word); }

/// Finite sum of terms, stored in canonical form: words canonical, identical
/// (monomial, word) pairs merged, zero coefficients removed.
class SymbolExpr {
public:
  explicit SymbolExpr(Phase phase = Phase::xi) : phase_(phase) {}

  static SymbolExpr one(Phase phase = Phase::xi);
  static SymbolExpr scalar(const Rational& c, Monomial mono = {}, Phase phase = Phase::xi);
  static SymbolExpr word(Word w, Phase phase = Phase::xi);
  static SymbolExpr from_terms(const std::vector<SymbolTerm>& terms, Phase phase);

  void add(const Monomial& mono, const Word& word, const Rational& c);
  void add(const SymbolTerm& t) { add(t.mono, t.word, t.coeff); }

  [[nodiscard]] Phase phase() const { return phase_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] std::vector<SymbolTerm> terms() const;
  [[nodiscard]] Rational coefficient(const Monomial& mono, const Word& word) const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [key, c] : terms_) fn(c, key.first, key.second);
  }

  /// Terms whose symbol order equals `ord`.
  [[nodiscard]] SymbolExpr component(int ord) const;
  /// Terms of order ≥ `min_order`.
  [[nodiscard]] SymbolExpr truncated(int min_order) const;

  SymbolExpr& operator+=(const SymbolExpr& o);
  SymbolExpr& operator-=(const SymbolExpr& o);
  SymbolExpr& operator*=(const Rational& c);

  friend SymbolExpr operator+(SymbolExpr a, const SymbolExpr& b) { return a += b; }
  friend SymbolExpr operator-(SymbolExpr a, const SymbolExpr& b) { return a -= b; }
  friend SymbolExpr operator-(SymbolExpr a) { return a *= Rational(-1); }
  friend SymbolExpr operator*(SymbolExpr a, const Rational& c) { return a *= c; }
  friend SymbolExpr operator*(const Rational& c, SymbolExpr a) { return a *= c; }
  /// Noncommutative product (word concatenation, monomials multiplied).
  friend SymbolExpr operator*(const SymbolExpr& a, const SymbolExpr& b);

  friend bool operator==(const SymbolExpr& a, const SymbolExpr& b);

private:
  struct KeyLess {
    bool operator()(const std::pair<Monomial, Word>& a, const std::pair<Monomial, Word>& b) const {
      if (auto c = a.first <=> b.first; c != 0) return c < 0;
      return compare(a.second, b.second) < 0;
    }
  };

  void check_phase(const Monomial& m) const;

  Phase phase_;
  std::map<std::pair<Monomial, Word>, Rational, KeyLess> terms_;
};

}  // namespace nct::symbol
