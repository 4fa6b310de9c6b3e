#pragma once

#include "nct/symbol/expr.hpp"

namespace nct::symbol {

/// Parts of σ(k△k): a₂ = k²ξᵢξᵢ, a₁ = 2ξᵢ k δᵢ(k), a₀ = k δᵢδᵢ(k).
struct LaplacianSymbol {
  SymbolExpr a2;
  SymbolExpr a1;
  SymbolExpr a0;

  [[nodiscard]] SymbolExpr total() const { return a2 + a1 + a0; }
};

LaplacianSymbol laplacian_parts();
SymbolExpr laplacian_symbol();

/// ∂/∂ξᵢ, i ∈ {1, 2}. Rejects r-phase input.
SymbolExpr xi_derivative(const SymbolExpr& e, int i);
/// δᵢ extended as a derivation on words, i ∈ {1, 2}.
SymbolExpr delta_derivative(const SymbolExpr& e, int i);

/// σ(PQ) ~ Σ 1/(ℓ₁!ℓ₂!) ∂₁^ℓ₁∂₂^ℓ₂(a) δ₁^ℓ₁δ₂^ℓ₂(b), keeping orders ≥ min_order.
SymbolExpr symbol_product(const SymbolExpr& a, const SymbolExpr& b, int min_order);

/// Involution: words reversed, (δ^j k)* = (−1)^{|j|} δ^j k, k and b₀ self-adjoint.
SymbolExpr star(const SymbolExpr& e);
/// σ(P*) ~ Σ 1/(ℓ₁!ℓ₂!) ∂^ℓ δ^ℓ (σ(P)*), keeping orders ≥ min_order.
SymbolExpr adjoint_symbol(const SymbolExpr& e, int min_order);

SymbolExpr compute_b0();
SymbolExpr compute_b1();
/// b₂ with its trailing right factor b₀ omitted.
SymbolExpr compute_b2_before_right_b0();
SymbolExpr compute_b2();

/// Drops every term with an odd ξ₁ or ξ₂ exponent.
SymbolExpr discard_xi_odd(const SymbolExpr& e);

/// Sets δ(k) ≡ 0: drops every term containing a derivative atom.
SymbolExpr drop_derivative_terms(const SymbolExpr& e);

/// Rewrites with the resolvent identity (k²|ξ|² + 1)·b₀ = 1 applied to the last
/// commuting block of each word until no term has ξ₁² (resp. r²) next to a
/// trailing b₀. The result is a unique normal form modulo that relation.
SymbolExpr reduce_trailing_resolvent(const SymbolExpr& e);

/// Residual of (b₀+b₁+b₂)·σ(k△k + 1) − 1 through order `cutoff` (normally −2),
/// after trailing-resolvent reduction. Zero when the parametrix is correct.
SymbolExpr verify_parametrix(int cutoff = -2);

}  // namespace nct::symbol
