#pragma once

#include "nct/rational.hpp"

#include <compare>
#include <map>
#include <string>

namespace nct::modular {

/// One basis element Δ^{s/2}·𝓛_m(Δ); m == 0 means no modified-logarithm factor.
struct ModularBasis {
  int half_power = 0;  // s in Δ^{s/2}
  int log_order = 0;   // m in 𝓛_m, 0 for none

  auto operator<=>(const ModularBasis&) const = default;
};

/// Formal linear combination Σ c·Δ^{s/2}·𝓛_m(Δ) with exact rational c.
class ModularFunctionExpr {
public:
  ModularFunctionExpr() = default;

  static ModularFunctionExpr constant(const Rational& c);
  /// Δ^{s/2}
  static ModularFunctionExpr delta_power(int half_power);
  /// 𝓛_m(Δ), m in 1..3
  static ModularFunctionExpr modified_log(int m);

  void add_term(ModularBasis basis, const Rational& c);

  ModularFunctionExpr& operator+=(const ModularFunctionExpr& other);
  ModularFunctionExpr& operator-=(const ModularFunctionExpr& other);
  ModularFunctionExpr& operator*=(const Rational& c);

  friend ModularFunctionExpr operator+(ModularFunctionExpr a, const ModularFunctionExpr& b) { return a += b; }
  friend ModularFunctionExpr operator-(ModularFunctionExpr a, const ModularFunctionExpr& b) { return a -= b; }
  friend ModularFunctionExpr operator*(ModularFunctionExpr a, const Rational& c) { return a *= c; }
  friend ModularFunctionExpr operator*(const Rational& c, ModularFunctionExpr a) { return a *= c; }

  /// Product; at most one factor per basis pair may carry an 𝓛_m.
  friend ModularFunctionExpr operator*(const ModularFunctionExpr& a, const ModularFunctionExpr& b);

  /// Composition with Δ^{s/2} (commutes with every function of Δ).
  [[nodiscard]] ModularFunctionExpr times_delta_power(int half_power) const;

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(ModularBasis basis) const;
  [[nodiscard]] const std::map<ModularBasis, Rational>& terms() const { return terms_; }

  /// Human/serialization form, e.g. "1/6*D^(-1/2) - 1/3 + L1 - 2*D^(1/2)*L2".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ModularFunctionExpr& a, const ModularFunctionExpr& b) { return a.terms_ == b.terms_; }
  friend std::strong_ordering operator<=>(const ModularFunctionExpr& a, const ModularFunctionExpr& b);

private:
  std::map<ModularBasis, Rational> terms_;
};

}  // namespace nct::modular
