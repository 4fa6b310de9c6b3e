#pragma once

#include "nct/verify/instance.hpp"

namespace nct::verify {

/// 𝓛_m(u) = ∫₀^∞ x^m/(x+1)^{m+1} · 1/(xu+1) dx by adaptive Gauss–Kronrod after
/// x = t/(1−t), which leaves ∫₀¹ t^m/(1−t+tu) dt.
double quadrature_L(int m, double u, double* error_estimate = nullptr);

/// ∫₀^∞ k^{2m+2}u^m/(k²u+1)^{m+1} ρ 1/(k²u+1) du by entrywise quadrature in the
/// eigenbasis of k, against 𝓛_m(Δ)(ρ) by functional calculus. Returns the
/// relative Frobenius error; throws if a quadrature does not converge.
double check_move_lemma(const MatrixAlgebraInstance& inst, const Matrix& rho, int m);

/// |τ(a F(log Δ)(b)) − τ(F(−log Δ)(a) b)|
double check_byparts(const MatrixAlgebraInstance& inst, const Matrix& a, const Matrix& b,
                     const modular::ModularFunctionExpr& f);
double check_byparts(const MatrixAlgebraInstance& inst, const Matrix& a, const Matrix& b,
                     const std::function<double(double)>& f_of_log);

/// |τ(K(log Δ)(x)·x)| for the odd function K.
double check_trace_vanish(const MatrixAlgebraInstance& inst, const Matrix& x);

/// δ(k) for k = e^ψ along the direction c: ∫₀¹ e^{sψ} c e^{(1−s)ψ} ds, read off
/// the upper-right block of exp([[ψ, c], [0, ψ]]).
Matrix frechet_exp(const Matrix& psi, const Matrix& c);

struct FrechetErrors {
  double left = 0;        // k⁻¹δ(k) vs 2(Δ^{1/2}−1)/log Δ (c)
  double right = 0;       // δ(k)k⁻¹ vs −2(Δ^{−1/2}−1)/log Δ (c)
  double half_power = 0;  // kck vs k²Δ^{1/2}(c)
  double full_power = 0;  // ck² vs k²Δ(c)
};

/// Relative Frobenius errors of the exponential-derivative and modular-rewrite identities.
FrechetErrors check_frechet_identities(const Matrix& psi, const Matrix& c);

/// |τ(f(Δ)(δk)·δk·k⁻²) − τ(K(log Δ)(c)·c)| with δk = frechet_exp(ψ, c): the f-form
/// and the K-form of the same quantity.
double check_f_K_consistency(const Matrix& psi, const Matrix& c);

}  // namespace nct::verify
