#include "nct/modular/special.hpp"

#include <cmath>
#include <cstdio>

namespace nct::modular {

namespace {

void check_args(int m, long double u) {
  if (m < 1 || m > 3) throw Error("modified logarithm order must be 1..3, got " + std::to_string(m));
  if (!(u > 0)) throw Error("modified logarithm needs u > 0, got " + std::to_string(static_cast<double>(u)));
}

constexpr long double series_radius = 0.1L;
constexpr int series_terms = 20;

}  // namespace

long double eval_L_series(int m, long double u) {
  check_args(m, u);
  const long double t = u - 1;
  long double sum = 0;
  for (int j = m + series_terms; j >= m + 1; --j) {
    sum = sum * t + ((j % 2 == 1) ? 1.0L : -1.0L) / j;
  }
  return m % 2 == 0 ? sum : -sum;
}

long double eval_L_closed(int m, long double u) {
  check_args(m, u);
  const long double t = u - 1;
  long double poly = 0;
  long double tj = 1;
  for (int j = 1; j <= m; ++j) {
    tj *= t;
    poly += ((j % 2 == 1) ? tj : -tj) / j;
  }
  const long double value = (std::log1p(t) - poly) / std::pow(t, m + 1);
  return m % 2 == 0 ? value : -value;
}

long double eval_L(int m, long double u) {
  check_args(m, u);
  return std::fabs(u - 1) < series_radius ? eval_L_series(m, u) : eval_L_closed(m, u);
}

long double eval_modular(const ModularFunctionExpr& f, long double u) {
  if (!(u > 0)) throw Error("modular functions need u > 0");
  long double sum = 0;
  for (const auto& [basis, c] : f.terms()) {
    long double term = static_cast<long double>(c.get_d()) * std::pow(u, basis.half_power / 2.0L);
    if (basis.log_order != 0) term *= eval_L(basis.log_order, u);
    sum += term;
  }
  return sum;
}

ModularFunctionExpr f_expression() {
  ModularFunctionExpr f;
  f.add_term({-1, 0}, Rational(1, 6));
  f.add_term({0, 0}, Rational(-1, 3));
  f.add_term({0, 1}, Rational(1));
  f.add_term({0, 2}, Rational(-2));
  f.add_term({1, 2}, Rational(-2));
  f.add_term({0, 3}, Rational(1));
  f.add_term({1, 3}, Rational(2));
  f.add_term({2, 3}, Rational(1));
  return f;
}

ClosedForm f_closed_form() { return to_closed_form(f_expression()); }

ClosedForm h_reference() {
  LaurentXW inner;
  inner.add_term({0, 0}, Rational(-1));
  inner.add_term({0, 1}, Rational(3));
  inner.add_term({0, 2}, Rational(3));
  inner.add_term({1, 3}, Rational(6));
  inner.add_term({0, 4}, Rational(-3));
  inner.add_term({0, 5}, Rational(-3));
  inner.add_term({0, 6}, Rational(1));
  const LaurentXW one = LaurentXW::constant(Rational(1));
  const LaurentXW w = LaurentXW::w();
  const LaurentXW den = Rational(6) * (w - one).pow(4) * (w + one).pow(2);
  return ClosedForm(-inner.shifted(0, -1), den);
}

ClosedForm K_reference() {
  // sh(jx/2) = (w^j − w^{−j})/2
  auto sh = [](int j) {
    LaurentXW s;
    s.add_term({0, j}, Rational(1, 2));
    s.add_term({0, -j}, Rational(-1, 2));
    return s;
  };
  const LaurentXW num = LaurentXW::x() - sh(1) - sh(2) + sh(3) * Rational(1, 3);
  const LaurentXW den = LaurentXW::monomial(Rational(1), 2, 0) * sh(1).pow(2);
  return ClosedForm(-num, den);
}

ClosedForm h_from_f() {
  const ClosedForm h = f_closed_form();
  if (!(h == h_reference()))
    throw Error("f(e^x) differs from the reference h by " + (h - h_reference()).simplified().to_string());
  return h.simplified();
}

ClosedForm K_from_h() {
  const LaurentXW w_minus_1 = LaurentXW::w() - LaurentXW::constant(Rational(1));
  const ClosedForm factor(Rational(4) * w_minus_1.pow(2), LaurentXW::monomial(Rational(1), 2, 0));
  const ClosedForm k = factor * h_from_f();
  if (!(k == K_reference()))
    throw Error("4(w-1)^2 x^-2 h differs from the reference K by " + (k - K_reference()).simplified().to_string());
  return k.simplified();
}

std::vector<Rational> taylor_h(int order) {
  if (order < 0 || order > 12) throw Error("taylor_h supports orders 0..12, got " + std::to_string(order));
  return h_reference().taylor(order);
}

bool is_odd(const ClosedForm& f) { return (f + f.reflected()).is_zero(); }

NumericFunction::NumericFunction(const ClosedForm& f, int taylor_order, long double radius)
    : f_(f), radius_(radius) {
  try {
    for (const Rational& c : f.taylor(taylor_order)) taylor_.push_back(static_cast<long double>(c.get_d()));
  } catch (const Error&) {
    radius_ = 0;  // pole at 0: direct evaluation only
  }
}

long double NumericFunction::operator()(long double x) const {
  if (std::fabs(x) < radius_) {
    long double sum = 0;
    for (auto it = taylor_.rbegin(); it != taylor_.rend(); ++it) sum = sum * x + *it;
    return sum;
  }
  return f_.evaluate_direct(x);
}

std::vector<Sample> sample(const ClosedForm& f, const std::vector<double>& grid) {
  const NumericFunction fn(f);
  std::vector<Sample> out;
  out.reserve(grid.size());
  for (double x : grid) out.push_back({x, static_cast<double>(fn(x))});
  return out;
}

std::string to_csv(const std::vector<Sample>& samples, const std::string& value_name) {
  std::string out = "x," + value_name + "\n";
  char line[96];
  for (const Sample& s : samples) {
    // avoid "-0" rows for exact zeros
    const double v = s.value == 0 ? 0.0 : s.value;
    std::snprintf(line, sizeof line, "%.15g,%.15g\n", s.x, v);
    out += line;
  }
  return out;
}

}  // namespace nct::modular
