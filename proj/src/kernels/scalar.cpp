#include "nct/kernels/kernels.hpp"

#include <cmath>

namespace nct::kernels::scalar {

void hadamard_scale(std::span<std::complex<double>> data, std::span<const double> weights) {
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= weights[i];
}

double sum_exp_neg(double t, std::span<const double> values) {
  double sum = 0;
  for (double v : values) sum += std::exp(-t * v);
  return sum;
}

double sum_abs2(std::span<const std::complex<double>> data) {
  double sum = 0;
  for (const auto& z : data) sum += std::norm(z);
  return sum;
}

}  // namespace nct::kernels::scalar
