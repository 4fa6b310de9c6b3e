#pragma once

#include "nct/modular/modular_function.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nct::modular {

/// Laurent polynomial in two commuting indeterminates x and w with exact
/// coefficients; w stands for e^{x/2} but is kept independent.
class LaurentXW {
public:
  using Exponent = std::pair<int, int>;  // (power of x, power of w)

  LaurentXW() = default;
  static LaurentXW constant(const Rational& c);
  static LaurentXW monomial(const Rational& c, int x_power, int w_power);
  static LaurentXW x() { return monomial(Rational(1), 1, 0); }
  static LaurentXW w() { return monomial(Rational(1), 0, 1); }

  void add_term(Exponent e, const Rational& c);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Exponent, Rational>& terms() const { return terms_; }
  [[nodiscard]] Rational coefficient(int x_power, int w_power) const;

  LaurentXW& operator+=(const LaurentXW& o);
  LaurentXW& operator-=(const LaurentXW& o);
  LaurentXW& operator*=(const Rational& c);
  friend LaurentXW operator+(LaurentXW a, const LaurentXW& b) { return a += b; }
  friend LaurentXW operator-(LaurentXW a, const LaurentXW& b) { return a -= b; }
  friend LaurentXW operator-(LaurentXW a) { return a *= Rational(-1); }
  friend LaurentXW operator*(LaurentXW a, const Rational& c) { return a *= c; }
  friend LaurentXW operator*(const Rational& c, LaurentXW a) { return a *= c; }
  friend LaurentXW operator*(const LaurentXW& a, const LaurentXW& b);
  friend bool operator==(const LaurentXW& a, const LaurentXW& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] LaurentXW pow(int n) const;
  /// Multiplies by x^i w^j.
  [[nodiscard]] LaurentXW shifted(int x_power, int w_power) const;
  /// x ↦ −x, w ↦ w⁻¹.
  [[nodiscard]] LaurentXW reflected() const;
  /// Exact quotient by (w − root), root = ±1, or nullopt when it does not divide.
  [[nodiscard]] std::optional<LaurentXW> divide_by_w_minus(int root) const;
  /// Smallest x and w exponents over all terms; (0, 0) for zero.
  [[nodiscard]] Exponent min_exponents() const;

  /// Coefficients c₀..c_order of the x-power series (w = e^{x/2}), shifted by
  /// the lowest x exponent: returns {valuation shift, coefficients}.
  [[nodiscard]] std::pair<int, std::vector<Rational>> series(int order) const;

  [[nodiscard]] long double evaluate(long double x) const;
  [[nodiscard]] std::string to_string() const;

private:
  std::map<Exponent, Rational> terms_;
};

/// Exact rational function num/den in (x, w), den ≠ 0.
class ClosedForm {
public:
  ClosedForm() : num_(), den_(LaurentXW::constant(Rational(1))) {}
  ClosedForm(LaurentXW num);  // NOLINT(google-explicit-constructor)
  ClosedForm(LaurentXW num, LaurentXW den);

  [[nodiscard]] const LaurentXW& numerator() const { return num_; }
  [[nodiscard]] const LaurentXW& denominator() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

  ClosedForm& operator+=(const ClosedForm& o);
  ClosedForm& operator-=(const ClosedForm& o);
  ClosedForm& operator*=(const ClosedForm& o);
  ClosedForm& operator/=(const ClosedForm& o);
  friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
  friend ClosedForm operator-(ClosedForm a, const ClosedForm& b) { return a -= b; }
  friend ClosedForm operator-(ClosedForm a) { return ClosedForm(-a.num_, a.den_); }
  friend ClosedForm operator*(ClosedForm a, const ClosedForm& b) { return a *= b; }
  friend ClosedForm operator/(ClosedForm a, const ClosedForm& b) { return a /= b; }

  /// Equality as rational functions (cross multiplication).
  friend bool operator==(const ClosedForm& a, const ClosedForm& b);

  /// Cancels common factors (w ∓ 1) and common monomials.
  [[nodiscard]] ClosedForm simplified() const;
  /// F(x) ↦ F(−x).
  [[nodiscard]] ClosedForm reflected() const;

  /// Taylor coefficients a₀..a_order at x = 0; throws if there is a pole.
  [[nodiscard]] std::vector<Rational> taylor(int order) const;

  /// Direct evaluation with w = e^{x/2}; inaccurate near removable singularities.
  [[nodiscard]] long double evaluate_direct(long double x) const;
  [[nodiscard]] std::string to_string() const;

private:
  LaurentXW num_;
  LaurentXW den_;
};

/// 𝓛_m(e^x) = (−1)^m (x − Σ_{j≤m} (−1)^{j+1}(w²−1)^j/j) / (w²−1)^{m+1}.
ClosedForm modified_log_closed_form(int m);

/// Δ^{s/2} ↦ w^s, 𝓛_m(Δ) ↦ modified_log_closed_form(m).
ClosedForm to_closed_form(const ModularFunctionExpr& f);

}  // namespace nct::modular
