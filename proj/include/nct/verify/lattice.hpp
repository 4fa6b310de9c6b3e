#pragma once

#include "nct/verify/instance.hpp"

#include <Eigen/Sparse>

#include <complex>
#include <istream>
#include <string>
#include <vector>

namespace nct::verify {

using SparseMatrix = Eigen::SparseMatrix<std::complex<double>>;

/// One Fourier coefficient c·U^a V^b of the Weyl log h.
struct WeylTerm {
  int a = 0;
  int b = 0;
  std::complex<double> c;
};

/// Modes e_{n,m} with |n|, |m| ≤ N, indexed (n+N)·(2N+1) + (m+N).
class LatticeModel {
public:
  LatticeModel(double theta, int truncation, std::vector<WeylTerm> h);

  [[nodiscard]] double theta() const { return theta_; }
  [[nodiscard]] int truncation() const { return n_; }
  [[nodiscard]] int dim() const { return (2 * n_ + 1) * (2 * n_ + 1); }
  [[nodiscard]] const std::vector<WeylTerm>& weyl() const { return h_; }

  [[nodiscard]] int index(int n, int m) const { return (n + n_) * (2 * n_ + 1) + (m + n_); }
  [[nodiscard]] bool inside(int n, int m) const { return std::abs(n) <= n_ && std::abs(m) <= n_; }

  /// Left multiplication by U^a V^b: e_{n,m} ↦ q^{bn} e_{n+a,m+b}, q = e^{2πiθ}, dropped outside.
  [[nodiscard]] SparseMatrix left_monomial(int a, int b) const;
  [[nodiscard]] SparseMatrix left_U() const { return left_monomial(1, 0); }
  [[nodiscard]] SparseMatrix left_V() const { return left_monomial(0, 1); }
  /// Σ c·L_{U^a V^b}
  [[nodiscard]] SparseMatrix left_h() const;

  /// n² + m² per mode.
  [[nodiscard]] Eigen::VectorXd laplacian_diagonal() const;

  /// exp(½ L_h) of the truncated operator.
  [[nodiscard]] Matrix weyl_factor() const;
  /// k △ k as a dense Hermitian matrix.
  [[nodiscard]] Matrix operator_matrix() const;

private:
  double theta_;
  int n_;
  std::vector<WeylTerm> h_;
};

/// Validates and builds. Errors: θ outside (0,1), N < 1, h not self-adjoint
/// (c_{−a,−b} must equal q^{ab}·conj(c_{a,b})), h support above N/4.
LatticeModel build_lattice(double theta, int truncation, const std::vector<WeylTerm>& h);

/// Adds the partner c_{−a,−b} = q^{ab}·conj(c_{a,b}) of every listed term.
std::vector<WeylTerm> self_adjoint_completion(double theta, const std::vector<WeylTerm>& half);

/// Lines "a b re im"; blank lines and '#' comments ignored.
std::vector<WeylTerm> parse_weyl(std::istream& in);
std::vector<WeylTerm> load_weyl(const std::string& path);

double golden_theta();

}  // namespace nct::verify
