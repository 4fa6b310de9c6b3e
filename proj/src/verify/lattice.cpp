#include "nct/verify/lattice.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

namespace nct::verify {

namespace {

std::complex<double> q_power(double theta, long long e) {
  // reduce θ·e mod 1 before the exponential to keep the phase accurate
  const double frac = std::fmod(theta * static_cast<double>(e), 1.0);
  return std::polar(1.0, 2 * std::numbers::pi * frac);
}

}  // namespace

double golden_theta() { return (std::sqrt(5.0) - 1) / 2; }

LatticeModel::LatticeModel(double theta, int truncation, std::vector<WeylTerm> h)
    : theta_(theta), n_(truncation), h_(std::move(h)) {}

SparseMatrix LatticeModel::left_monomial(int a, int b) const {
  std::vector<Eigen::Triplet<std::complex<double>>> entries;
  for (int n = -n_; n <= n_; ++n) {
    for (int m = -n_; m <= n_; ++m) {
      if (!inside(n + a, m + b)) continue;
      entries.emplace_back(index(n + a, m + b), index(n, m), q_power(theta_, static_cast<long long>(b) * n));
    }
  }
  SparseMatrix s(dim(), dim());
  s.setFromTriplets(entries.begin(), entries.end());
  return s;
}

SparseMatrix LatticeModel::left_h() const {
  SparseMatrix s(dim(), dim());
  for (const WeylTerm& t : h_) s += t.c * left_monomial(t.a, t.b);
  return s;
}

Eigen::VectorXd LatticeModel::laplacian_diagonal() const {
  Eigen::VectorXd d(dim());
  for (int n = -n_; n <= n_; ++n) {
    for (int m = -n_; m <= n_; ++m) d(index(n, m)) = n * n + m * m;
  }
  return d;
}

Matrix LatticeModel::weyl_factor() const {
  const SparseMatrix half = SparseMatrix(left_h() * std::complex<double>(0.5));
  double norm = 0;  // the 1-norm bounds the spectral radius
  for (int j = 0; j < half.outerSize(); ++j) {
    double col = 0;
    for (SparseMatrix::InnerIterator it(half, j); it; ++it) col += std::abs(it.value());
    norm = std::max(norm, col);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  // Taylor series of exp(scale·half) with sparse-times-dense products
  Matrix sum = Matrix::Identity(dim(), dim());
  Matrix term = sum;
  for (int j = 1; j < 60; ++j) {
    term = (half * term) * std::complex<double>(scale / j);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return (sum + sum.adjoint()) / 2.0;
}

Matrix LatticeModel::operator_matrix() const {
  const Matrix k = weyl_factor();
  const Eigen::VectorXd lap = laplacian_diagonal();
  const Matrix dk = lap.cast<std::complex<double>>().asDiagonal() * k;
  Matrix h = k * dk;
  return (h + h.adjoint()) / 2.0;
}

LatticeModel build_lattice(double theta, int truncation, const std::vector<WeylTerm>& h) {
  if (!(theta > 0 && theta < 1)) throw Error("lattice: theta must lie in (0, 1)");
  if (truncation < 4) throw Error("lattice: truncation must be at least 4");
  std::map<std::pair<int, int>, std::complex<double>> coeff;
  for (const WeylTerm& t : h) {
    if (std::max(std::abs(t.a), std::abs(t.b)) * 4 > truncation)
      throw Error("lattice: Weyl term U^" + std::to_string(t.a) + "V^" + std::to_string(t.b) +
                  " exceeds the support limit N/4 for N = " + std::to_string(truncation));
    coeff[{t.a, t.b}] += t.c;
  }
  for (const auto& [ab, c] : coeff) {
    const auto [a, b] = ab;
    auto it = coeff.find({-a, -b});
    const std::complex<double> partner = it == coeff.end() ? 0.0 : it->second;
    const std::complex<double> want = q_power(theta, static_cast<long long>(a) * b) * std::conj(c);
    if (std::abs(partner - want) > 1e-12 * (1 + std::abs(c))) {
      std::ostringstream msg;
      msg << "lattice: h is not self-adjoint, coefficient of U^" << -a << "V^" << -b << " is " << partner
          << " but must be " << want;
      throw Error(msg.str());
    }
  }
  std::vector<WeylTerm> merged;
  for (const auto& [ab, c] : coeff) {
    if (c != 0.0) merged.push_back({ab.first, ab.second, c});
  }
  return LatticeModel(theta, truncation, std::move(merged));
}

std::vector<WeylTerm> self_adjoint_completion(double theta, const std::vector<WeylTerm>& half) {
  std::vector<WeylTerm> out;
  for (const WeylTerm& t : half) {
    if (t.a == 0 && t.b == 0) {
      out.push_back({0, 0, t.c.real()});
      continue;
    }
    out.push_back(t);
    out.push_back({-t.a, -t.b, q_power(theta, static_cast<long long>(t.a) * t.b) * std::conj(t.c)});
  }
  return out;
}

std::vector<WeylTerm> parse_weyl(std::istream& in) {
  std::vector<WeylTerm> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    WeylTerm t;
    double re = 0, im = 0;
    std::string extra;
    if (!(fields >> t.a >> t.b >> re >> im) || (fields >> extra))
      throw Error("weyl file line " + std::to_string(lineno) + ": expected 'a b re im'");
    t.c = {re, im};
    out.push_back(t);
  }
  return out;
}

std::vector<WeylTerm> load_weyl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open Weyl coefficient file " + path);
  return parse_weyl(in);
}

}  // namespace nct::verify
