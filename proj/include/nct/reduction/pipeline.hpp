#pragma once

#include "nct/modular/modular_function.hpp"
#include "nct/reduction/trace.hpp"

#include <vector>

namespace nct::reduction {

using modular::ModularFunctionExpr;

/// (1/2π)∫₀^{2π} cos^{2a}θ sin^{2b}θ dθ = (2a)!(2b)! / (4^{a+b} a! b! (a+b)!).
Rational angular_weight(int a, int b);

/// ξ₁^{2a}ξ₂^{2b} ↦ angular_weight(a, b)·r^{2(a+b)}; the overall 2π is left out.
/// Rejects ξ-odd terms.
SymbolExpr angular_average(const SymbolExpr& e);

/// Raises the resolvent power of each word's leading commuting block by one
/// (right multiplication by b₀ moved around the trace).
SymbolExpr cyclic_left_b0(const SymbolExpr& e);

/// Terms grouped by how b₀ occurs once the word is read cyclically.
struct ResolventSplit {
  SymbolExpr all_left{symbol::Phase::radial};     // one commuting block holds every b₀
  SymbolExpr b0sq_middle{symbol::Phase::radial};  // a second block with b₀²
  SymbolExpr b0_middle{symbol::Phase::radial};    // a second block with b₀¹
};
ResolventSplit split_by_resolvent_blocks(const SymbolExpr& e);

/// ∫₀^∞ r^{2p} k^n b₀^q x r dr = ½ k^{n−2(p+1)} p!(q−p−2)!/(q−1)! x, with the
/// overall sign flip of the λ = −1 convention. Output words are cyclic
/// representatives with no monomial.
SymbolExpr radial_integrate_allleft(const SymbolExpr& e);

/// Integration by parts in r against ∂_r b₀ = −2k²r b₀²: each
/// r^{2n}[k^a b₀^j] x [k^c b₀²] y becomes
/// n r^{2n−2}[k^a b₀^j] x [k^{c−2} b₀] y − j r^{2n}[k^{a+2} b₀^{j+1}] x [k^{c−2} b₀] y.
SymbolExpr integrate_by_parts_r(const SymbolExpr& e);

/// τ(x δᵢ²(k)) = −τ(δᵢ(x) δᵢ(k)) for words holding one second-order derivative.
SymbolExpr integrate_by_parts_delta(const SymbolExpr& e);

/// r^{2m}[k^α b₀^{m+1}] ρ [k^β b₀] σ  ↦  −½ k^{α−2m−2} 𝓛_m(Δ)(ρ) k^β σ, m ∈ {1,2,3}.
SymbolExpr apply_move_lemma(const SymbolExpr& e);

/// τ(c · F(Δ)(δᵢk) · δᵢk · k⁻²), summed over i.
struct ReducedTerm {
  Rational coeff;
  ModularFunctionExpr fn;
  int direction = 1;
};

/// Rewrites each trace word k^a M k^b δᵢ(k), with M = δᵢ(k) or F(Δ)(δᵢ(k)) and
/// a + b = −2, as τ(k⁻² (F·Δ^{b/2})(δᵢk) δᵢk).
std::vector<ReducedTerm> modular_normalize(const SymbolExpr& e);

/// Sum of the reduced terms of one direction as a single function.
ModularFunctionExpr collect(const std::vector<ReducedTerm>& terms, int direction);

/// (1/6)u^{−1/2} − 1/3 + 𝓛₁ − 2(1+u^{1/2})𝓛₂ + (1+u^{1/2})²𝓛₃.
ModularFunctionExpr reference_f();

/// Sums the reduced terms; both directions must agree. Throws with the
/// difference when the sum differs from reference_f().
ModularFunctionExpr assemble_f(const std::vector<ReducedTerm>& terms);

}  // namespace nct::reduction
