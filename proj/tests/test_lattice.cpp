#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nct/verify/zeta.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

using namespace nct::verify;

namespace {

Eigen::VectorXcd unit(const LatticeModel& m, int n, int k) {
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(m.dim());
  e(m.index(n, k)) = 1;
  return e;
}

}  // namespace

TEST_CASE("flat lattice: k = 1 and the Laplacian spectrum is n^2 + m^2") {
  const auto model = build_lattice(golden_theta(), 5, {});
  CHECK(model.dim() == 121);
  CHECK((model.weyl_factor() - Matrix::Identity(121, 121)).norm() == 0.0);
  std::vector<double> want;
  for (int n = -5; n <= 5; ++n) {
    for (int m = -5; m <= 5; ++m) want.push_back(n * n + m * m);
  }
  std::sort(want.begin(), want.end());
  const Eigen::VectorXd got = lattice_spectrum(model);
  for (int i = 0; i < model.dim(); ++i) CHECK(got(i) == doctest::Approx(want[static_cast<std::size_t>(i)]).epsilon(1e-12));
  CHECK(model.laplacian_diagonal()(model.index(1, 0)) == 1.0);
}

TEST_CASE("left multiplications satisfy VU = qUV on the interior") {
  const double theta = golden_theta();
  const auto model = build_lattice(theta, 4, {});
  const SparseMatrix u = model.left_U(), v = model.left_V();
  const Eigen::VectorXcd e00 = unit(model, 0, 0);
  const Eigen::VectorXcd vu = v * (u * e00);
  const Eigen::VectorXcd uv = u * (v * e00);
  const std::complex<double> q = std::polar(1.0, 2 * std::numbers::pi * theta);
  CHECK((vu - q * uv).norm() < 1e-15);
  CHECK(std::abs(vu(model.index(1, 1)) - q) < 1e-15);
  // U^a V^b agrees with the product of generators
  const SparseMatrix uv_direct = model.left_monomial(1, 1);
  CHECK((Matrix(uv_direct) - Matrix(u * v)).norm() < 1e-14);
}

TEST_CASE("interior columns of L_U and L_V are orthonormal") {
  const auto model = build_lattice(golden_theta(), 6, {});
  for (const SparseMatrix& op : {model.left_U(), model.left_V(), model.left_monomial(-2, 1)}) {
    const Matrix dense(op);
    for (int n = -3; n <= 3; ++n) {
      for (int m = -3; m <= 3; ++m) {
        const int i = model.index(n, m);
        CHECK(std::abs(dense.col(i).norm() - 1) < 1e-15);
        for (int n2 = -3; n2 <= 3; ++n2) {
          const int j = model.index(n2, m);
          if (j != i) CHECK(std::abs(dense.col(i).dot(dense.col(j))) < 1e-15);
        }
      }
    }
  }
}

TEST_CASE("Weyl coefficients are validated") {
  const double theta = golden_theta();
  CHECK_THROWS_AS(build_lattice(theta, 8, {{1, 0, 0.3}}), nct::Error);
  CHECK_THROWS_AS(build_lattice(theta, 8, {{0, 0, {0.1, 0.2}}}), nct::Error);
  CHECK_THROWS_AS(build_lattice(theta, 8, self_adjoint_completion(theta, {{3, 0, 0.1}})), nct::Error);
  CHECK_THROWS_AS(build_lattice(1.5, 8, {}), nct::Error);
  CHECK_THROWS_AS(build_lattice(theta, 3, {}), nct::Error);
  // the UV partner carries the phase q
  const auto h = self_adjoint_completion(theta, {{1, 1, 0.15}});
  CHECK(h.size() == 2);
  CHECK(std::abs(h[1].c - std::polar(0.15, 2 * std::numbers::pi * theta)) < 1e-15);
  CHECK_NOTHROW(build_lattice(theta, 8, h));
  const Matrix lh(build_lattice(theta, 8, h).left_h());
  CHECK((lh - lh.adjoint()).norm() < 1e-14);
}

TEST_CASE("Weyl coefficient files") {
  std::istringstream good("# h = 0.3(U + U*)\n1 0 0.3 0\n\n-1 0 0.3 0  # partner\n");
  const auto h = parse_weyl(good);
  REQUIRE(h.size() == 2);
  CHECK(h[1].a == -1);
  CHECK(h[1].c == std::complex<double>(0.3, 0));
  std::istringstream short_line("1 0 0.3\n");
  CHECK_THROWS_AS(parse_weyl(short_line), nct::Error);
  std::istringstream junk("x 0 0.3 0\n");
  CHECK_THROWS_AS(parse_weyl(junk), nct::Error);
  CHECK_THROWS_AS(load_weyl("/nonexistent/weyl.txt"), nct::Error);
}

TEST_CASE("Weyl factor is the exponential of the truncated operator") {
  const double theta = golden_theta();
  for (double s : {0.3, 2.0}) {  // the larger one goes through scaling and squaring
    const auto model = build_lattice(theta, 5, self_adjoint_completion(theta, {{1, 0, s}, {0, 1, s / 2}}));
    const Matrix half = Matrix(model.left_h()) * 0.5;
    const Matrix want = half.exp();
    CHECK((model.weyl_factor() - want).norm() / want.norm() < 1e-13);
  }
}

TEST_CASE("k Laplacian k is positive semidefinite with a one-dimensional kernel") {
  const double theta = golden_theta();
  for (const auto& w : standard_weyl_factors(theta)) {
    const auto model = build_lattice(theta, 6, w.h);
    const Eigen::VectorXd spectrum = lattice_spectrum(model);
    INFO(w.name);
    CHECK(spectrum.minCoeff() >= -1e-10);
    CHECK(fit_heat_trace(spectrum).kernel_dim == 1);
  }
}

TEST_CASE("heat-trace fit recovers the flat torus coefficients") {
  // the untruncated flat spectrum through radius 60 (heat trace π/t − 1 up to e^{−π²/t})
  std::vector<double> spectrum;
  for (int n = -60; n <= 60; ++n) {
    for (int m = -60; m <= 60; ++m) spectrum.push_back(n * n + m * m);
  }
  const Eigen::VectorXd v = Eigen::Map<Eigen::VectorXd>(spectrum.data(), static_cast<Eigen::Index>(spectrum.size()));
  const ZetaEstimate e = fit_heat_trace(v, {720, 7200, 12});  // t in [0.1, 1]
  CHECK(e.kernel_dim == 1);
  CHECK(e.c0 == doctest::Approx(-1).epsilon(1e-3));
  CHECK(e.c_minus1 == doctest::Approx(std::numbers::pi).epsilon(1e-3));
  CHECK(e.condition < 1e3);
  CHECK_THROWS_AS(fit_heat_trace(v, {100, 100 * (1 + 1e-12), 12}), nct::Error);
  CHECK_THROWS_AS(fit_heat_trace(v, {100, 1000, 2}), nct::Error);
}

TEST_CASE("estimate on a small lattice improves with N") {
  const auto coarse = zeta0_estimate(build_lattice(golden_theta(), 5, {}));
  const auto fine = zeta0_estimate(build_lattice(golden_theta(), 10, {}));
  CHECK(std::fabs(fine.c0 + 1) < std::fabs(coarse.c0 + 1));
  CHECK(std::fabs(fine.c0 + 1) < 0.25);
}
