#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nct/kernels/kernels.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace nct::kernels;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

}  // namespace

TEST_CASE("AVX2 kernels match the scalar reference") {
  if (!avx2_available()) {
    MESSAGE("AVX2 unavailable, only the scalar path is exercised");
    return;
  }
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2, 2), pos(0, 500);
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 64u, 1681u}) {
    std::vector<std::complex<double>> a(n);
    std::vector<double> wts(n), vals(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = {u(rng), u(rng)};
      wts[i] = u(rng);
      vals[i] = pos(rng);
    }
    auto b = a;
    scalar::hadamard_scale(a, wts);
    avx2::hadamard_scale(b, wts);
    for (std::size_t i = 0; i < n; ++i) CHECK(a[i] == b[i]);
    CHECK(rel(avx2::sum_abs2(a), scalar::sum_abs2(a)) < 1e-13);
    for (double t : {0.0, 1e-3, 0.05, 1.0, 10.0}) {
      const double s = scalar::sum_exp_neg(t, vals);
      const double v = avx2::sum_exp_neg(t, vals);
      if (n == 0) {
        CHECK(v == 0.0);
      } else {
        CHECK(rel(v, s) < 1e-14);
      }
    }
  }
}

TEST_CASE("vector exp handles the range ends") {
  if (!avx2_available()) return;
  const std::vector<double> vals = {0.0, 1e-300, 700.0, 708.5, 800.0, -700.0, 0.5, 3.0};
  for (double v : vals) {
    const std::vector<double> one(4, v);
    const double expected = 4 * std::exp(-v);
    const double got = avx2::sum_exp_neg(1.0, one);
    if (expected < 1e-300) {
      CHECK(got < 1e-300);
    } else {
      CHECK(rel(got, expected) < 1e-14);
    }
  }
}

TEST_CASE("dispatch") {
  const Isa saved = active_isa();
  set_isa(Isa::scalar);
  CHECK(active_isa() == Isa::scalar);
  std::vector<double> vals = {1, 2, 3, 4, 5};
  const double s = sum_exp_neg(0.5, vals);
  if (avx2_available()) {
    set_isa(Isa::avx2);
    CHECK(rel(sum_exp_neg(0.5, vals), s) < 1e-14);
  } else {
    CHECK_THROWS(set_isa(Isa::avx2));
  }
  std::vector<std::complex<double>> d(3);
  std::vector<double> w(2);
  CHECK_THROWS(hadamard_scale(d, w));
  set_isa(saved);
}
