#pragma once

#include "nct/modular/modular_function.hpp"
#include "nct/rational.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>

namespace nct::verify {

using Matrix = Eigen::MatrixXcd;

/// Finite-dimensional stand-in for the torus algebra: a positive invertible k
/// in M_d(ℂ) with τ = normalized trace and Δ(x) = k⁻²xk².
class MatrixAlgebraInstance {
public:
  /// k = V diag(λ) V* with λ log-uniform in [eps, 1/eps] and V Haar-random.
  static MatrixAlgebraInstance random(int d, std::uint64_t seed, double eps = 0.1);
  /// k = exp(ψ) for self-adjoint ψ.
  static MatrixAlgebraInstance from_log(const Matrix& psi);
  static MatrixAlgebraInstance from_spectrum(const Matrix& unitary, const Eigen::VectorXd& eigenvalues);

  [[nodiscard]] int dim() const { return static_cast<int>(eigenvalues_.size()); }
  [[nodiscard]] const Matrix& k() const { return k_; }
  [[nodiscard]] const Matrix& eigenvectors() const { return v_; }
  [[nodiscard]] const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  [[nodiscard]] Matrix k_power(double p) const;

  /// log of the eigenvalue of Δ on the eigenbasis matrix unit E_ij: 2(log λ_j − log λ_i).
  [[nodiscard]] double log_modular(int i, int j) const;

  /// F(log Δ)(x), computed as a Hadamard product in the eigenbasis of k.
  [[nodiscard]] Matrix apply(const std::function<double(double)>& f_of_log, const Matrix& x) const;
  /// F(Δ)(x) for a formal modular function.
  [[nodiscard]] Matrix apply(const modular::ModularFunctionExpr& f, const Matrix& x) const;

private:
  Matrix k_;
  Matrix v_;
  Eigen::VectorXd eigenvalues_;
};

/// Normalized trace.
std::complex<double> tau(const Matrix& x);
/// Frobenius norm through the dispatched kernel.
double frobenius(const Matrix& x);
/// Complex Gaussian matrix (entries with unit variance).
Matrix random_matrix(int rows, int cols, std::uint64_t seed);
/// Random self-adjoint matrix with entries of size ~scale.
Matrix random_hermitian(int d, std::uint64_t seed, double scale);

}  // namespace nct::verify
