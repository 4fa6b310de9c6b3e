#include "nct/verify/instance.hpp"

#include "nct/kernels/kernels.hpp"
#include "nct/modular/special.hpp"

#include <cmath>
#include <random>

namespace nct::verify {

Matrix random_matrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = {g(rng), g(rng)};
  }
  return m;
}

Matrix random_hermitian(int d, std::uint64_t seed, double scale) {
  const Matrix z = random_matrix(d, d, seed);
  return (z + z.adjoint()) * (scale / 2);
}

MatrixAlgebraInstance MatrixAlgebraInstance::from_spectrum(const Matrix& unitary, const Eigen::VectorXd& eigenvalues) {
  if (unitary.rows() != unitary.cols() || unitary.rows() != eigenvalues.size())
    throw Error("instance: eigenvector/eigenvalue size mismatch");
  if ((eigenvalues.array() <= 0).any()) throw Error("instance: k must be positive");
  MatrixAlgebraInstance inst;
  inst.v_ = unitary;
  inst.eigenvalues_ = eigenvalues;
  inst.k_ = unitary * eigenvalues.cast<std::complex<double>>().asDiagonal() * unitary.adjoint();
  return inst;
}

MatrixAlgebraInstance MatrixAlgebraInstance::random(int d, std::uint64_t seed, double eps) {
  if (d < 1) throw Error("instance dimension must be positive");
  if (!(eps > 0 && eps <= 1)) throw Error("instance spectrum bound must lie in (0, 1]");
  const Matrix z = random_matrix(d, d, seed);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> logu(std::log(eps), -std::log(eps));
  Eigen::VectorXd lambda(d);
  for (int i = 0; i < d; ++i) lambda(i) = std::exp(logu(rng));
  return from_spectrum(q, lambda);
}

MatrixAlgebraInstance MatrixAlgebraInstance::from_log(const Matrix& psi) {
  if ((psi - psi.adjoint()).norm() > 1e-12 * (1 + psi.norm())) throw Error("instance: log k must be self-adjoint");
  Eigen::SelfAdjointEigenSolver<Matrix> es(psi);
  return from_spectrum(es.eigenvectors(), es.eigenvalues().array().exp().matrix());
}

Matrix MatrixAlgebraInstance::k_power(double p) const {
  const Eigen::VectorXd lp = eigenvalues_.array().pow(p).matrix();
  return v_ * lp.cast<std::complex<double>>().asDiagonal() * v_.adjoint();
}

double MatrixAlgebraInstance::log_modular(int i, int j) const {
  return 2 * (std::log(eigenvalues_(j)) - std::log(eigenvalues_(i)));
}

Matrix MatrixAlgebraInstance::apply(const std::function<double(double)>& f_of_log, const Matrix& x) const {
  const int d = dim();
  if (x.rows() != d || x.cols() != d) throw Error("apply: matrix size does not match the instance");
  Matrix y = v_.adjoint() * x * v_;
  std::vector<double> weights(static_cast<std::size_t>(d) * d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) weights[static_cast<std::size_t>(j) * d + i] = f_of_log(log_modular(i, j));
  }
  kernels::hadamard_scale({y.data(), static_cast<std::size_t>(y.size())}, weights);
  return v_ * y * v_.adjoint();
}

Matrix MatrixAlgebraInstance::apply(const modular::ModularFunctionExpr& f, const Matrix& x) const {
  return apply([&](double l) { return static_cast<double>(modular::eval_modular(f, std::exp(static_cast<long double>(l)))); }, x);
}

std::complex<double> tau(const Matrix& x) { return x.trace() / static_cast<double>(x.rows()); }

double frobenius(const Matrix& x) {
  return std::sqrt(kernels::sum_abs2({x.data(), static_cast<std::size_t>(x.size())}));
}

}  // namespace nct::verify
