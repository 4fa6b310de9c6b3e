#pragma once

#include <complex>
#include <span>

namespace nct::kernels {

/// Data-parallel loops of the numeric oracle. Each has a scalar reference and
/// an AVX2/FMA variant; the dispatcher picks AVX2 when the CPU supports it.
enum class Isa { scalar, avx2 };

bool avx2_available();
Isa active_isa();
/// Forces an implementation (tests); throws nct::Error if AVX2 is unavailable.
void set_isa(Isa isa);
const char* isa_name(Isa isa);

/// data[i] *= weights[i]
void hadamard_scale(std::span<std::complex<double>> data, std::span<const double> weights);
/// Σ exp(−t·values[i])
double sum_exp_neg(double t, std::span<const double> values);
/// Σ |data[i]|²
double sum_abs2(std::span<const std::complex<double>> data);

namespace scalar {
void hadamard_scale(std::span<std::complex<double>> data, std::span<const double> weights);
double sum_exp_neg(double t, std::span<const double> values);
double sum_abs2(std::span<const std::complex<double>> data);
}  // namespace scalar

namespace avx2 {
void hadamard_scale(std::span<std::complex<double>> data, std::span<const double> weights);
double sum_exp_neg(double t, std::span<const double> values);
double sum_abs2(std::span<const std::complex<double>> data);
}  // namespace avx2

}  // namespace nct::kernels
