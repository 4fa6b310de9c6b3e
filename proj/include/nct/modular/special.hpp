#pragma once

#include "nct/modular/closed_form.hpp"

#include <string>
#include <vector>

namespace nct::modular {

/// 𝓛_m(u) for m ∈ {1,2,3}, u > 0: power series in u − 1 when |u − 1| < 0.1,
/// closed form otherwise.
long double eval_L(int m, long double u);
/// Degree-20 expansion (−1)^m Σ_{j=m+1}^{m+20} (−1)^{j+1}(u−1)^{j−m−1}/j.
long double eval_L_series(int m, long double u);
/// (−1)^m (log u − Σ_{j≤m} (−1)^{j+1}(u−1)^j/j) / (u−1)^{m+1}.
long double eval_L_closed(int m, long double u);

/// Σ c·u^{s/2}·𝓛_m(u) evaluated numerically.
long double eval_modular(const ModularFunctionExpr& f, long double u);

/// (1/6)u^{−1/2} − 1/3 + 𝓛₁ − 2(1+u^{1/2})𝓛₂ + (1+u^{1/2})²𝓛₃.
ModularFunctionExpr f_expression();
/// f(e^x) as a closed form in (x, w = e^{x/2}).
ClosedForm f_closed_form();
/// −w⁻¹(−1 + 3w + 3w² + 6w³x − 3w⁴ − 3w⁵ + w⁶) / (6(w−1)⁴(w+1)²).
ClosedForm h_reference();
/// −(x − sh(x/2) − sh(x) + sh(3x/2)/3) / (x² sh(x/2)²), sh written in w.
ClosedForm K_reference();

/// f(e^x), checked against h_reference(); throws with the difference otherwise.
ClosedForm h_from_f();
/// 4(w−1)²x⁻²·h, checked against K_reference().
ClosedForm K_from_h();

/// Taylor coefficients of h at 0 up to x^order, order ≤ 12.
std::vector<Rational> taylor_h(int order);

/// F(x) + F(−x) ≡ 0 as rational functions in (x, w).
bool is_odd(const ClosedForm& f);

/// Double-precision evaluator: Taylor polynomial inside |x| < radius (where the
/// direct formula cancels badly), direct formula outside.
class NumericFunction {
public:
  explicit NumericFunction(const ClosedForm& f, int taylor_order = 40, long double radius = 1.0L);
  long double operator()(long double x) const;

private:
  ClosedForm f_;
  std::vector<long double> taylor_;
  long double radius_;
};

struct Sample {
  double x;
  double value;
};

std::vector<Sample> sample(const ClosedForm& f, const std::vector<double>& grid);
/// "x,value" rows with 15 significant digits, header line first.
std::string to_csv(const std::vector<Sample>& samples, const std::string& value_name = "value");

}  // namespace nct::modular
