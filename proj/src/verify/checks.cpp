#include "nct/verify/checks.hpp"

#include "nct/modular/special.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <limits>

namespace nct::verify {

namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr double quad_tolerance = 1e-12;
constexpr unsigned quad_depth = 15;

/// (e^{a·l} − 1)/l with its limit a at l = 0.
double expm1_ratio(double a, double l) {
  if (std::fabs(l) < 1e-8) return a + a * a * l / 2;
  return std::expm1(a * l) / l;
}

const modular::NumericFunction& k_function() {
  static const modular::NumericFunction k(modular::K_reference());
  return k;
}

double relative(const Matrix& got, const Matrix& want) { return frobenius(got - want) / std::max(frobenius(want), 1e-300); }

}  // namespace

double quadrature_L(int m, double u, double* error_estimate) {
  if (m < 1 || m > 3) throw Error("quadrature_L: order must be 1..3");
  if (!(u > 0)) throw Error("quadrature_L: u must be positive");
  double err = 0;
  const double value = gauss_kronrod<double, 31>::integrate(
      [&](double t) { return std::pow(t, m) / (1 - t + t * u); }, 0.0, 1.0, quad_depth, quad_tolerance, &err);
  if (error_estimate) *error_estimate = err;
  return value;
}

double check_move_lemma(const MatrixAlgebraInstance& inst, const Matrix& rho, int m) {
  if (m < 1 || m > 3) throw Error("check_move_lemma: order must be 1..3");
  const int d = inst.dim();
  const Eigen::VectorXd& lam = inst.eigenvalues();
  const Matrix r = inst.eigenvectors().adjoint() * rho * inst.eigenvectors();
  Matrix lhs(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double a = lam(i) * lam(i);
      const double b = lam(j) * lam(j);
      double err = 0;
      const double value = gauss_kronrod<double, 61>::integrate(
          [&](double u) {
            return std::pow(a, m + 1) * std::pow(u, m) / std::pow(a * u + 1, m + 1) / (b * u + 1);
          },
          0.0, std::numeric_limits<double>::infinity(), quad_depth, quad_tolerance, &err);
      if (!(err <= 1e-9 * std::fabs(value)))
        throw Error("move-lemma quadrature did not converge: achieved relative error " + std::to_string(err / std::fabs(value)));
      lhs(i, j) = value * r(i, j);
    }
  }
  const Matrix lhs_std = inst.eigenvectors() * lhs * inst.eigenvectors().adjoint();
  const Matrix rhs = inst.apply(modular::ModularFunctionExpr::modified_log(m), rho);
  return relative(lhs_std, rhs);
}

double check_byparts(const MatrixAlgebraInstance& inst, const Matrix& a, const Matrix& b,
                     const std::function<double(double)>& f_of_log) {
  const std::complex<double> left = tau(a * inst.apply(f_of_log, b));
  const std::complex<double> right = tau(inst.apply([&](double l) { return f_of_log(-l); }, a) * b);
  return std::abs(left - right);
}

double check_byparts(const MatrixAlgebraInstance& inst, const Matrix& a, const Matrix& b,
                     const modular::ModularFunctionExpr& f) {
  return check_byparts(inst, a, b, [&](double l) {
    return static_cast<double>(modular::eval_modular(f, std::exp(static_cast<long double>(l))));
  });
}

double check_trace_vanish(const MatrixAlgebraInstance& inst, const Matrix& x) {
  const auto& k = k_function();
  return std::abs(tau(inst.apply([&](double l) { return static_cast<double>(k(l)); }, x) * x));
}

Matrix frechet_exp(const Matrix& psi, const Matrix& c) {
  const Eigen::Index d = psi.rows();
  Matrix block = Matrix::Zero(2 * d, 2 * d);
  block.topLeftCorner(d, d) = psi;
  block.bottomRightCorner(d, d) = psi;
  block.topRightCorner(d, d) = c;
  const Matrix e = block.exp();
  return e.topRightCorner(d, d);
}

FrechetErrors check_frechet_identities(const Matrix& psi, const Matrix& c) {
  const MatrixAlgebraInstance inst = MatrixAlgebraInstance::from_log(psi);
  const Matrix& k = inst.k();
  const Matrix k_inv = inst.k_power(-1);
  const Matrix k2 = inst.k_power(2);
  const Matrix dk = frechet_exp(psi, c);
  FrechetErrors out;
  out.left = relative(k_inv * dk, inst.apply([](double l) { return 2 * expm1_ratio(0.5, l); }, c));
  out.right = relative(dk * k_inv, inst.apply([](double l) { return -2 * expm1_ratio(-0.5, l); }, c));
  out.half_power = relative(k * c * k, k2 * inst.apply([](double l) { return std::exp(l / 2); }, c));
  out.full_power = relative(c * k2, k2 * inst.apply([](double l) { return std::exp(l); }, c));
  return out;
}

double check_f_K_consistency(const Matrix& psi, const Matrix& c) {
  const MatrixAlgebraInstance inst = MatrixAlgebraInstance::from_log(psi);
  const Matrix dk = frechet_exp(psi, c);
  const std::complex<double> f_form = tau(inst.apply(modular::f_expression(), dk) * dk * inst.k_power(-2));
  const auto& k = k_function();
  const std::complex<double> k_form = tau(inst.apply([&](double l) { return static_cast<double>(k(l)); }, c) * c);
  return std::abs(f_form - k_form);
}

}  // namespace nct::verify
