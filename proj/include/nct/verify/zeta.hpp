#pragma once

#include "nct/verify/lattice.hpp"

#include <string>
#include <vector>

namespace nct::verify {

/// t runs over `points` geometric values in [lo/λ_max, hi/λ_max].
struct FitWindow {
  double lo = 80;
  double hi = 800;
  int points = 12;
};

struct ZetaEstimate {
  double c_minus1 = 0;
  double c0 = 0;  // the ζ(0) estimate
  double c1 = 0;
  double condition = 0;
  double max_residual = 0;
  int kernel_dim = 0;
  int dim = 0;
  double lambda_max = 0;
  double t_lo = 0;
  double t_hi = 0;
};

/// Fit of Σ' e^{−tλ} (nonzero λ only) by c₋₁/t + c₀ + c₁t. `spectrum` in any order.
/// Throws when the least-squares matrix has condition number above `max_condition`.
ZetaEstimate fit_heat_trace(const Eigen::VectorXd& spectrum, const FitWindow& window = {},
                            double max_condition = 1e8);

/// Eigenvalues of k△k, ascending.
Eigen::VectorXd lattice_spectrum(const LatticeModel& model);

ZetaEstimate zeta0_estimate(const LatticeModel& model, const FitWindow& window = {});

struct NamedWeyl {
  std::string name;
  std::vector<WeylTerm> h;
};

/// The Weyl factors used for the k-independence check, h = 0 first.
std::vector<NamedWeyl> standard_weyl_factors(double theta);

}  // namespace nct::verify
