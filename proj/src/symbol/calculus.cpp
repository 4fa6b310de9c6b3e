#include "nct/symbol/calculus.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace nct::symbol {

namespace {

struct Piece {
  Rational coeff;
  Monomial mono;
  Word word;
};

using AtomRule = std::function<std::vector<Piece>(const Atom&)>;

Monomial xi_unit(int i, int power = 1) {
  Monomial m;
  (i == 1 ? m.xi1 : m.xi2) = power;
  return m;
}

void check_direction(int i) {
  if (i != 1 && i != 2) throw Error("direction must be 1 or 2, got " + std::to_string(i));
}

/// Applies a derivation given by its action on atoms, Leibniz over each word.
void leibniz(const Monomial& mono, const Word& word, const Rational& c, const AtomRule& rule, SymbolExpr& out) {
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    for (const Piece& p : rule(word[pos])) {
      Word w(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pos));
      w.insert(w.end(), p.word.begin(), p.word.end());
      w.insert(w.end(), word.begin() + static_cast<std::ptrdiff_t>(pos) + 1, word.end());
      out.add(mono * p.mono, w, c * p.coeff);
    }
  }
}

/// δᵢ(k^n) for n > 0 as a sum of words.
std::vector<Piece> delta_kpow_positive(int n, int i) {
  std::vector<Piece> out;
  const Atom d = i == 1 ? make_deriv(1, 0) : make_deriv(0, 1);
  for (int s = 0; s < n; ++s) {
    Word w;
    if (s > 0) w.push_back(KPow{s});
    w.push_back(d);
    if (n - 1 - s > 0) w.push_back(KPow{n - 1 - s});
    out.push_back({Rational(1), {}, std::move(w)});
  }
  return out;
}

std::vector<Piece> expand_power(int p, const std::vector<Piece>& single) {
  // d(b^p) = Σ_s b^s d(b) b^{p-1-s}
  std::vector<Piece> out;
  for (int s = 0; s < p; ++s) {
    for (const Piece& d : single) {
      Word w;
      if (s > 0) w.push_back(Resolvent{s});
      w.insert(w.end(), d.word.begin(), d.word.end());
      if (p - 1 - s > 0) w.push_back(Resolvent{p - 1 - s});
      out.push_back({d.coeff, d.mono, std::move(w)});
    }
  }
  return out;
}

}  // namespace

LaplacianSymbol laplacian_parts() {
  LaplacianSymbol s;
  const Atom k = make_kpow(1);
  const Atom k2 = make_kpow(2);
  for (int i = 1; i <= 2; ++i) {
    const Atom d = i == 1 ? make_deriv(1, 0) : make_deriv(0, 1);
    const Atom dd = i == 1 ? make_deriv(2, 0) : make_deriv(0, 2);
    s.a2.add(xi_unit(i, 2), {k2}, Rational(1));
    s.a1.add(xi_unit(i), {k, d}, Rational(2));
    s.a0.add({}, {k, dd}, Rational(1));
  }
  return s;
}

SymbolExpr laplacian_symbol() { return laplacian_parts().total(); }

SymbolExpr xi_derivative(const SymbolExpr& e, int i) {
  check_direction(i);
  if (e.phase() != Phase::xi) throw Error("xi_derivative requires a xi-phase expression");
  SymbolExpr out(Phase::xi);
  const AtomRule rule = [i](const Atom& a) -> std::vector<Piece> {
    if (const auto* r = std::get_if<Resolvent>(&a)) {
      // ∂ᵢ b₀ = −2ξᵢ b₀ k² b₀
      std::vector<Piece> single{{Rational(-2), xi_unit(i), Word{Resolvent{1}, KPow{2}, Resolvent{1}}}};
      return expand_power(r->power, single);
    }
    if (const auto* m = std::get_if<ModApplied>(&a)) {
      if (resolvent_degree(m->data->arg) != 0) throw Error("xi_derivative of a resolvent-valued modular argument");
    }
    return {};
  };
  e.for_each([&](const Rational& c, const Monomial& mono, const Word& word) {
    const int a = i == 1 ? mono.xi1 : mono.xi2;
    if (a > 0) {
      Monomial lowered = mono;
      (i == 1 ? lowered.xi1 : lowered.xi2) -= 1;
      out.add(lowered, word, c * a);
    }
    leibniz(mono, word, c, rule, out);
  });
  return out;
}

SymbolExpr delta_derivative(const SymbolExpr& e, int i) {
  check_direction(i);
  const Phase phase = e.phase();
  SymbolExpr out(phase);
  const AtomRule rule = [i, phase](const Atom& a) -> std::vector<Piece> {
    if (const auto* k = std::get_if<KPow>(&a)) {
      if (k->exponent > 0) return delta_kpow_positive(k->exponent, i);
      // δ(k^{-m}) = −k^{-m} δ(k^m) k^{-m}
      std::vector<Piece> out;
      for (Piece p : delta_kpow_positive(-k->exponent, i)) {
        Word w{KPow{k->exponent}};
        w.insert(w.end(), p.word.begin(), p.word.end());
        w.push_back(KPow{k->exponent});
        out.push_back({-p.coeff, p.mono, std::move(w)});
      }
      return out;
    }
    if (const auto* d = std::get_if<DerivK>(&a)) {
      return {{Rational(1), {}, Word{DerivK{d->d1 + (i == 1), d->d2 + (i == 2)}}}};
    }
    if (const auto* r = std::get_if<Resolvent>(&a)) {
      // δ(b₀) = −|ξ|² b₀ (δ(k)k + kδ(k)) b₀
      std::vector<Piece> single;
      const Atom d = i == 1 ? make_deriv(1, 0) : make_deriv(0, 1);
      std::vector<Monomial> norms;
      if (phase == Phase::xi) {
        norms = {xi_unit(1, 2), xi_unit(2, 2)};
      } else {
        Monomial r2;
        r2.r = 2;
        norms = {r2};
      }
      for (const Monomial& m : norms) {
        single.push_back({Rational(-1), m, Word{Resolvent{1}, d, KPow{1}, Resolvent{1}}});
        single.push_back({Rational(-1), m, Word{Resolvent{1}, KPow{1}, d, Resolvent{1}}});
      }
      return expand_power(r->power, single);
    }
    throw Error("delta_derivative is not defined on modular-applied atoms");
  };
  e.for_each([&](const Rational& c, const Monomial& mono, const Word& word) { leibniz(mono, word, c, rule, out); });
  return out;
}

namespace {

int max_order(const SymbolExpr& e) {
  int best = std::numeric_limits<int>::min();
  e.for_each([&](const Rational&, const Monomial& m, const Word& w) { best = std::max(best, order(m, w)); });
  return best;
}

/// Σ_{ℓ} 1/(ℓ₁!ℓ₂!) ∂^ℓ(a) · δ^ℓ(b) with a pluggable "left" derivative source.
SymbolExpr expand_product(const SymbolExpr& a, const SymbolExpr& b, int min_order) {
  SymbolExpr out(a.phase());
  if (a.is_zero() || b.is_zero()) return out;
  const int top = max_order(a) + max_order(b);
  // xi_derivs[l1][l2] = ∂₁^l1 ∂₂^l2 a, delta_derivs likewise for b
  std::vector<std::vector<SymbolExpr>> da{{a}};
  std::vector<std::vector<SymbolExpr>> db{{b}};
  for (int total = 0; top - total >= min_order; ++total) {
    bool any = false;
    for (int l1 = 0; l1 <= total; ++l1) {
      const int l2 = total - l1;
      if (static_cast<int>(da.size()) <= l1) {
        da.emplace_back();
        db.emplace_back();
      }
      while (static_cast<int>(da[l1].size()) <= l2) {
        if (da[l1].empty()) {
          da[l1].push_back(xi_derivative(da[l1 - 1][0], 1));
          db[l1].push_back(delta_derivative(db[l1 - 1][0], 1));
        } else {
          da[l1].push_back(xi_derivative(da[l1].back(), 2));
          db[l1].push_back(delta_derivative(db[l1].back(), 2));
        }
      }
      const SymbolExpr& left = da[l1][l2];
      if (left.is_zero()) continue;
      any = true;
      const Rational weight = Rational(1) / (factorial(l1) * factorial(l2));
      out += ((left * db[l1][l2]) * weight).truncated(min_order);
    }
    if (!any) break;
  }
  return out;
}

}  // namespace

SymbolExpr symbol_product(const SymbolExpr& a, const SymbolExpr& b, int min_order) {
  if (a.phase() != Phase::xi || b.phase() != Phase::xi) throw Error("symbol_product requires xi-phase operands");
  return expand_product(a, b, min_order);
}

SymbolExpr star(const SymbolExpr& e) {
  SymbolExpr out(e.phase());
  e.for_each([&](const Rational& c, const Monomial& mono, const Word& word) {
    Word w(word.rbegin(), word.rend());
    int sign = 1;
    for (const Atom& a : w) {
      if (const auto* d = std::get_if<DerivK>(&a)) {
        if ((d->d1 + d->d2) % 2 != 0) sign = -sign;
      } else if (std::holds_alternative<ModApplied>(a)) {
        throw Error("adjoint of modular-applied atoms is not supported");
      }
    }
    out.add(mono, w, c * sign);
  });
  return out;
}

SymbolExpr adjoint_symbol(const SymbolExpr& e, int min_order) {
  if (e.phase() != Phase::xi) throw Error("adjoint_symbol requires a xi-phase expression");
  const SymbolExpr s = star(e);
  SymbolExpr out(Phase::xi);
  const int top = max_order(s);
  for (int total = 0; top - total >= min_order; ++total) {
    for (int l1 = 0; l1 <= total; ++l1) {
      const int l2 = total - l1;
      SymbolExpr t = s;
      for (int n = 0; n < l1; ++n) t = xi_derivative(delta_derivative(t, 1), 1);
      for (int n = 0; n < l2; ++n) t = xi_derivative(delta_derivative(t, 2), 2);
      out += (t * (Rational(1) / (factorial(l1) * factorial(l2)))).truncated(min_order);
    }
  }
  return out;
}

SymbolExpr compute_b0() { return SymbolExpr::word({make_resolvent(1)}); }

SymbolExpr compute_b1() {
  const auto a = laplacian_parts();
  const SymbolExpr b0 = compute_b0();
  SymbolExpr s = b0 * a.a1 * b0;
  for (int i = 1; i <= 2; ++i) s += xi_derivative(b0, i) * delta_derivative(a.a2, i) * b0;
  return -s;
}

SymbolExpr compute_b2_before_right_b0() {
  const auto a = laplacian_parts();
  const SymbolExpr b0 = compute_b0();
  const SymbolExpr b1 = compute_b1();
  SymbolExpr s = b0 * a.a0 + b1 * a.a1;
  for (int i = 1; i <= 2; ++i) {
    s += xi_derivative(b0, i) * delta_derivative(a.a1, i);
    s += xi_derivative(b1, i) * delta_derivative(a.a2, i);
  }
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      s += (xi_derivative(xi_derivative(b0, i), j) * delta_derivative(delta_derivative(a.a2, i), j)) *
           Rational(1, 2);
    }
  }
  return -s;
}

SymbolExpr compute_b2() { return compute_b2_before_right_b0() * compute_b0(); }

SymbolExpr discard_xi_odd(const SymbolExpr& e) {
  if (e.phase() != Phase::xi) throw Error("discard_xi_odd requires a xi-phase expression");
  SymbolExpr out(Phase::xi);
  e.for_each([&](const Rational& c, const Monomial& m, const Word& w) {
    if (m.xi1 % 2 == 0 && m.xi2 % 2 == 0) out.add(m, w, c);
  });
  return out;
}

SymbolExpr drop_derivative_terms(const SymbolExpr& e) {
  SymbolExpr out(e.phase());
  e.for_each([&](const Rational& c, const Monomial& m, const Word& w) {
    const bool has_deriv = std::any_of(w.begin(), w.end(), [](const Atom& a) {
      return std::holds_alternative<DerivK>(a) || std::holds_alternative<ModApplied>(a);
    });
    if (!has_deriv) out.add(m, w, c);
  });
  return out;
}

SymbolExpr reduce_trailing_resolvent(const SymbolExpr& e) {
  const Phase phase = e.phase();
  SymbolExpr current = e;
  for (;;) {
    SymbolExpr next(phase);
    bool changed = false;
    current.for_each([&](const Rational& c, const Monomial& m, const Word& w) {
      // canonical words end with [k^n][b0^p] when the trailing run holds a resolvent
      const auto* last = w.empty() ? nullptr : std::get_if<Resolvent>(&w.back());
      const int lead = phase == Phase::xi ? m.xi1 : m.r;
      if (last == nullptr || lead < 2) {
        next.add(m, w, c);
        return;
      }
      changed = true;
      const int p = last->power;
      int n = 0;
      Word prefix(w.begin(), w.end() - 1);
      if (!prefix.empty()) {
        if (const auto* k = std::get_if<KPow>(&prefix.back())) {
          n = k->exponent;
          prefix.pop_back();
        }
      }
      auto block = [&](int kp, int rp) {
        Word out = prefix;
        if (kp != 0) out.push_back(KPow{kp});
        if (rp != 0) out.push_back(Resolvent{rp});
        return out;
      };
      Monomial lowered = m;
      (phase == Phase::xi ? lowered.xi1 : lowered.r) -= 2;
      Monomial with_lambda = lowered;
      with_lambda.lambda += 1;
      // ξ₁² k^n b₀^p = k^{n-2} b₀^{p-1} − λ k^{n-2} b₀^p − ξ₂² k^n b₀^p
      next.add(lowered, block(n - 2, p - 1), c);
      next.add(with_lambda, block(n - 2, p), -c);
      if (phase == Phase::xi) {
        Monomial swapped = lowered;
        swapped.xi2 += 2;
        next.add(swapped, block(n, p), -c);
      }
    });
    current = std::move(next);
    if (!changed) return current;
  }
}

SymbolExpr verify_parametrix(int cutoff) {
  SymbolExpr parametrix = compute_b0() + compute_b1() + compute_b2();
  SymbolExpr op = laplacian_symbol();
  Monomial lam;
  lam.lambda = 1;
  op += SymbolExpr::scalar(Rational(1), lam);
  SymbolExpr residual = symbol_product(parametrix, op, cutoff) - SymbolExpr::one();
  return reduce_trailing_resolvent(residual).truncated(cutoff);
}

}  // namespace nct::symbol
