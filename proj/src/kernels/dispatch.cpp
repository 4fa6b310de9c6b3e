#include "nct/kernels/kernels.hpp"

#include "nct/rational.hpp"

#include <atomic>

namespace nct::kernels {

namespace {

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{avx2_available() ? Isa::avx2 : Isa::scalar};
  return isa;
}

}  // namespace

bool avx2_available() {
  static const bool available = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return available;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (isa == Isa::avx2 && !avx2_available()) throw Error("AVX2/FMA not supported on this CPU");
  current().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void hadamard_scale(std::span<std::complex<double>> data, std::span<const double> weights) {
  if (data.size() != weights.size()) throw Error("hadamard_scale: size mismatch");
  if (active_isa() == Isa::avx2) {
    avx2::hadamard_scale(data, weights);
  } else {
    scalar::hadamard_scale(data, weights);
  }
}

double sum_exp_neg(double t, std::span<const double> values) {
  return active_isa() == Isa::avx2 ? avx2::sum_exp_neg(t, values) : scalar::sum_exp_neg(t, values);
}

double sum_abs2(std::span<const std::complex<double>> data) {
  return active_isa() == Isa::avx2 ? avx2::sum_abs2(data) : scalar::sum_abs2(data);
}

}  // namespace nct::kernels
