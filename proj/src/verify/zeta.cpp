#include "nct/verify/zeta.hpp"

#include "nct/kernels/kernels.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>

namespace nct::verify {

ZetaEstimate fit_heat_trace(const Eigen::VectorXd& spectrum, const FitWindow& window, double max_condition) {
  if (spectrum.size() == 0) throw Error("heat-trace fit: empty spectrum");
  if (window.points < 3 || !(window.lo > 0) || !(window.hi > window.lo))
    throw Error("heat-trace fit: window needs lo > 0, hi > lo and at least 3 points");
  ZetaEstimate est;
  est.dim = static_cast<int>(spectrum.size());
  est.lambda_max = spectrum.maxCoeff();
  if (!(est.lambda_max > 0)) throw Error("heat-trace fit: spectrum has no positive eigenvalue");
  const double cutoff = 1e-8 * est.lambda_max;
  std::vector<double> positive;
  for (double l : spectrum) {
    if (l > cutoff) {
      positive.push_back(l);
    } else {
      ++est.kernel_dim;
    }
  }
  est.t_lo = window.lo / est.lambda_max;
  est.t_hi = window.hi / est.lambda_max;
  const int n = window.points;
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    const double t = est.t_lo * std::pow(est.t_hi / est.t_lo, double(i) / (n - 1));
    a(i, 0) = 1 / t;
    a(i, 1) = 1;
    a(i, 2) = t;
    y(i) = kernels::sum_exp_neg(t, positive);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  est.condition = sv(0) / sv(sv.size() - 1);
  if (!(est.condition <= max_condition))
    throw Error("heat-trace fit is ill-conditioned: condition number " + std::to_string(est.condition));
  const Eigen::Vector3d c = svd.solve(y);
  est.c_minus1 = c(0);
  est.c0 = c(1);
  est.c1 = c(2);
  est.max_residual = (a * c - y).cwiseAbs().maxCoeff();
  return est;
}

Eigen::VectorXd lattice_spectrum(const LatticeModel& model) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(model.operator_matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error("lattice eigenvalue computation did not converge");
  return es.eigenvalues();
}

ZetaEstimate zeta0_estimate(const LatticeModel& model, const FitWindow& window) {
  return fit_heat_trace(lattice_spectrum(model), window);
}

std::vector<NamedWeyl> standard_weyl_factors(double theta) {
  return {
      {"h = 0", {}},
      {"h = 0.3(U + U*)", self_adjoint_completion(theta, {{1, 0, 0.3}})},
      {"h = 0.3(V + V*) + 0.2(U + U*)", self_adjoint_completion(theta, {{0, 1, 0.3}, {1, 0, 0.2}})},
      {"h = 0.15(UV + (UV)*)", self_adjoint_completion(theta, {{1, 1, 0.15}})},
  };
}

}  // namespace nct::verify
