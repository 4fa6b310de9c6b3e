#include "nct/symbol/expr.hpp"

namespace nct::symbol {

Monomial operator*(const Monomial& a, const Monomial& b) {
  return {a.xi1 + b.xi1, a.xi2 + b.xi2, a.r + b.r, a.lambda + b.lambda};
}

int order(const Monomial& m, const Word& w) { return m.degree() + 2 * m.lambda - 2 * resolvent_degree(w); }

SymbolExpr SymbolExpr::one(Phase phase) { return scalar(Rational(1), {}, phase); }

SymbolExpr SymbolExpr::scalar(const Rational& c, Monomial mono, Phase phase) {
  SymbolExpr e(phase);
  e.add(mono, {}, c);
  return e;
}

SymbolExpr SymbolExpr::word(Word w, Phase phase) {
  SymbolExpr e(phase);
  e.add({}, w, Rational(1));
  return e;
}

SymbolExpr SymbolExpr::from_terms(const std::vector<SymbolTerm>& terms, Phase phase) {
  SymbolExpr e(phase);
  for (const auto& t : terms) e.add(t);
  return e;
}

void SymbolExpr::check_phase(const Monomial& m) const {
  if (phase_ == Phase::xi && m.r != 0) throw Error("r-monomial in a xi-phase expression");
  if (phase_ == Phase::radial && (m.xi1 != 0 || m.xi2 != 0)) throw Error("xi-monomial in an r-phase expression");
  if (m.xi1 < 0 || m.xi2 < 0 || m.r < 0 || m.lambda < 0) throw Error("negative monomial exponent");
}

void SymbolExpr::add(const Monomial& mono, const Word& word, const Rational& c) {
  if (c == 0) return;
  check_phase(mono);
  auto key = std::make_pair(mono, canonical_word(word));
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<SymbolTerm> SymbolExpr::terms() const {
  std::vector<SymbolTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({c, key.first, key.second});
  return out;
}

Rational SymbolExpr::coefficient(const Monomial& mono, const Word& word) const {
  auto it = terms_.find(std::make_pair(mono, canonical_word(word)));
  return it == terms_.end() ? Rational(0) : it->second;
}

SymbolExpr SymbolExpr::component(int ord) const {
  SymbolExpr out(phase_);
  for (const auto& [key, c] : terms_) {
    if (order(key.first, key.second) == ord) out.terms_.emplace(key, c);
  }
  return out;
}

SymbolExpr SymbolExpr::truncated(int min_order) const {
  SymbolExpr out(phase_);
  for (const auto& [key, c] : terms_) {
    if (order(key.first, key.second) >= min_order) out.terms_.emplace(key, c);
  }
  return out;
}

SymbolExpr& SymbolExpr::operator+=(const SymbolExpr& o) {
  if (o.phase_ != phase_ && !o.is_zero()) throw Error("phase mismatch in symbol addition");
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

SymbolExpr& SymbolExpr::operator-=(const SymbolExpr& o) {
  if (o.phase_ != phase_ && !o.is_zero()) throw Error("phase mismatch in symbol subtraction");
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, -c);
  return *this;
}

SymbolExpr& SymbolExpr::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

SymbolExpr operator*(const SymbolExpr& a, const SymbolExpr& b) {
  if (a.phase_ != b.phase_ && !a.is_zero() && !b.is_zero()) throw Error("phase mismatch in symbol product");
  SymbolExpr out(a.phase_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Word w = ka.second;
      w.insert(w.end(), kb.second.begin(), kb.second.end());
      out.add(ka.first * kb.first, w, ca * cb);
    }
  }
  return out;
}

bool operator==(const SymbolExpr& a, const SymbolExpr& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.is_zero()) return true;
  if (a.phase_ != b.phase_) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first.first != ib->first.first || !same_word(ia->first.second, ib->first.second)) return false;
    if (ia->second != ib->second) return false;
  }
  return true;
}

}  // namespace nct::symbol
