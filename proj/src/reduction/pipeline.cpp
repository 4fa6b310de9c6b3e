#include "nct/reduction/pipeline.hpp"

#include "nct/modular/special.hpp"
#include "nct/symbol/calculus.hpp"

#include <algorithm>

namespace nct::reduction {

using symbol::Atom;
using symbol::DerivK;
using symbol::KPow;
using symbol::ModApplied;
using symbol::Phase;
using symbol::Resolvent;
using symbol::to_string;

namespace {

struct Block {
  int k = 0;
  int b0 = 0;
};

Block read_block(const Word& w, const Segment& s) {
  Block b;
  for (std::size_t i = s.begin; i < s.end; ++i) {
    if (const auto* k = std::get_if<KPow>(&w[i])) b.k += k->exponent;
    if (const auto* r = std::get_if<Resolvent>(&w[i])) b.b0 += r->power;
  }
  return b;
}

void push_block(Word& w, int k, int b0) {
  if (k != 0) w.push_back(KPow{k});
  if (b0 != 0) w.push_back(Resolvent{b0});
}

void append(Word& w, const Word& src, std::size_t begin, std::size_t end) {
  w.insert(w.end(), src.begin() + static_cast<std::ptrdiff_t>(begin), src.begin() + static_cast<std::ptrdiff_t>(end));
}

/// The word rotated to start at `start`.
Word rotate_to(const Word& w, std::size_t start) {
  Word out;
  append(out, w, start, w.size());
  append(out, w, 0, start);
  return out;
}

std::string describe(const Rational& c, const Monomial& m, const Word& w) {
  return nct::to_string(c) + " r^" + std::to_string(m.r) + " [" + to_string(w) + "]";
}

/// Cyclic view of a word: the merged word and its resolvent-carrying blocks.
struct CyclicView {
  Word word;
  std::vector<Segment> segments;
  std::vector<std::size_t> resolvent_blocks;  // indices into segments
};

CyclicView cyclic_view(const Word& w) {
  CyclicView v;
  v.word = cyclic_merge(w);
  v.segments = cyclic_segments(v.word);
  for (std::size_t s = 0; s < v.segments.size(); ++s) {
    if (v.segments[s].commuting && read_block(v.word, v.segments[s]).b0 > 0) v.resolvent_blocks.push_back(s);
  }
  return v;
}

/// Words with two resolvent blocks, rotated to start at `first`:
/// [first block] middle [second block] tail.
struct TwoBlockWord {
  Block first;
  Word middle;
  Block second;
  Word tail;
};

TwoBlockWord split_two_blocks(const CyclicView& v, std::size_t first_index) {
  const Segment& a = v.segments[v.resolvent_blocks[first_index]];
  const Segment& b = v.segments[v.resolvent_blocks[1 - first_index]];
  const Word rot = rotate_to(v.word, a.begin);
  const std::size_t n = v.word.size();
  const std::size_t a_len = a.end - a.begin;
  const std::size_t b_begin = (b.begin + n - a.begin) % n;
  const std::size_t b_end = b_begin + (b.end - b.begin);
  TwoBlockWord out;
  out.first = read_block(v.word, a);
  out.second = read_block(v.word, b);
  append(out.middle, rot, a_len, b_begin);
  append(out.tail, rot, b_end, n);
  return out;
}

void require_plain(const Monomial& m, const char* stage) {
  if (m.lambda != 0) throw Error(std::string(stage) + ": unexpected λ factor");
  if (m.r % 2 != 0) throw Error(std::string(stage) + ": odd power of r");
}

}  // namespace

Rational angular_weight(int a, int b) {
  if (a < 0 || b < 0) throw Error("angular_weight needs nonnegative exponents");
  Rational den = factorial(static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(b)) *
                 factorial(static_cast<unsigned>(a + b));
  mpz_class four;
  mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(a + b));
  den *= Rational(four);
  return factorial(static_cast<unsigned>(2 * a)) * factorial(static_cast<unsigned>(2 * b)) / den;
}

SymbolExpr angular_average(const SymbolExpr& e) {
  if (e.phase() != Phase::xi) throw Error("angular_average requires a xi-phase expression");
  SymbolExpr out(Phase::radial);
  e.for_each([&](const Rational& c, const Monomial& m, const Word& w) {
    if (m.xi1 % 2 != 0 || m.xi2 % 2 != 0)
      throw Error("angular_average: xi-odd term, discard odd terms first: " + nct::to_string(c) + " [" +
                  to_string(w) + "]");
    Monomial radial;
    radial.r = m.xi1 + m.xi2;
    radial.lambda = m.lambda;
    out.add(radial, w, c * angular_weight(m.xi1 / 2, m.xi2 / 2));
  });
  return out;
}

SymbolExpr cyclic_left_b0(const SymbolExpr& e) {
  SymbolExpr out(e.phase());
  e.for_each([&](const Rational& c, const Monomial& m, const Word& word) {
    Word w = symbol::canonical_word(word);
    bool bumped = false;
    for (std::size_t i = 0; i < w.size() && symbol::is_commuting(w[i]); ++i) {
      if (auto* r = std::get_if<Resolvent>(&w[i])) {
        ++r->power;
        bumped = true;
        break;
      }
    }
    if (!bumped) throw Error("cyclic_left_b0: word does not begin with b0: [" + to_string(word) + "]");
    out.add(m, w, c);
  });
  return out;
}

ResolventSplit split_by_resolvent_blocks(const SymbolExpr& e) {
  ResolventSplit out;
  out.all_left = out.b0sq_middle = out.b0_middle = SymbolExpr(e.phase());
  e.for_each([&](const Rational& c, const Monomial& m, const Word& w) {
    const CyclicView v = cyclic_view(w);
    if (v.resolvent_blocks.size() == 1) {
      out.all_left.add(m, w, c);
      return;
    }
    if (v.resolvent_blocks.size() == 2) {
      const int second = read_block(v.word, v.segments[v.resolvent_blocks[1]]).b0;
      if (second == 1) {
        out.b0_middle.add(m, w, c);
        return;
      }
      if (second == 2) {
        out.b0sq_middle.add(m, w, c);
        return;
      }
    }
    throw Error("split_by_resolvent_blocks: unexpected resolvent pattern in " + describe(c, m, w));
  });
  return out;
}

SymbolExpr radial_integrate_allleft(const SymbolExpr& e) {
  SymbolExpr out(Phase::radial);
  e.for_each([&](const Rational& c, const Monomial& m, const Word& w) {
    require_plain(m, "radial_integrate_allleft");
    const CyclicView v = cyclic_view(w);
    if (v.resolvent_blocks.size() != 1)
      throw Error("radial_integrate_allleft: b0 not confined to one block in " + describe(c, m, w));
    const Segment& s = v.segments[v.resolvent_blocks[0]];
    const Block block = read_block(v.word, s);
    const int p = m.r / 2;
    const int q = block.b0;
    if (q - p - 2 < 0) throw Error("radial_integrate_allleft: divergent radial integral in " + describe(c, m, w));
    const Rational weight = Rational(-1, 2) * factorial(static_cast<unsigned>(p)) *
                            factorial(static_cast<unsigned>(q - p - 2)) / factorial(static_cast<unsigned>(q - 1));
    const Word rot = rotate_to(v.word, s.begin);
    Word result;
    push_block(result, block.k - 2 * (p + 1), 0);
    append(result, rot, s.end - s.begin, rot.size());
    out.add({}, cyclic_canonical(result), c * weight);
  });
  return out;
}

SymbolExpr integrate_by_parts_r(const SymbolExpr& e) {
  SymbolExpr out(Phase::radial);
  e.for_each([&](const Rational& c, const Monomial& m, const Word& w) {
    require_plain(m, "integrate_by_parts_r");
    const CyclicView v = cyclic_view(w);
    if (v.resolvent_blocks.size() != 2 || v.resolvent_blocks[0] != 0)
      throw Error("integrate_by_parts_r: expected a leading b0 block and one more in " + describe(c, m, w));
    const TwoBlockWord t = split_two_blocks(v, 0);
    if (t.second.b0 != 2) throw Error("integrate_by_parts_r: middle block is not b0^2 in " + describe(c, m, w));
    const int n = m.r / 2;
    if (n < 1) throw Error("integrate_by_parts_r: boundary term at r = 0 does not vanish in " + describe(c, m, w));
    auto build = [&](int k_left, int b0_left) {
      Word out_word;
      push_block(out_word, k_left, b0_left);
      out_word.insert(out_word.end(), t.middle.begin(), t.middle.end());
      push_block(out_word, t.second.k - 2, 1);
      out_word.insert(out_word.end(), t.tail.begin(), t.tail.end());
      return out_word;
    };
    Monomial lowered = m;
    lowered.r -= 2;
    out.add(lowered, build(t.first.k, t.first.b0), c * n);
    out.add(m, build(t.first.k + 2, t.first.b0 + 1), -c * t.first.b0);
  });
  return out;
}

SymbolExpr integrate_by_parts_delta(const SymbolExpr& e) {
  SymbolExpr out(e.phase());
  e.for_each([&](const Rational& c, const Monomial& m, const Word& w) {
    const Word merged = cyclic_merge(w);
    std::vector<std::size_t> second_order;
    for (std::size_t i = 0; i < merged.size(); ++i) {
      if (const auto* d = std::get_if<DerivK>(&merged[i]); d && d->d1 + d->d2 == 2) second_order.push_back(i);
    }
    if (second_order.empty()) {
      out.add(m, w, c);
      return;
    }
    const auto* d = std::get_if<DerivK>(&merged[second_order[0]]);
    if (second_order.size() > 1 || (d->d1 != 0 && d->d2 != 0))
      throw Error("integrate_by_parts_delta: unsupported second-order pattern in " + describe(c, m, w));
    const int i = d->d1 == 2 ? 1 : 2;
    Word rot = rotate_to(merged, second_order[0] + 1);
    rot.pop_back();
    SymbolExpr dx = symbol::delta_derivative(SymbolExpr::word(rot, e.phase()), i);
    const Atom first = i == 1 ? symbol::make_deriv(1, 0) : symbol::make_deriv(0, 1);
    dx.for_each([&](const Rational& c2, const Monomial& m2, const Word& w2) {
      Word result = w2;
      result.push_back(first);
      out.add(m * m2, result, -c * c2);
    });
  });
  return out;
}

SymbolExpr apply_move_lemma(const SymbolExpr& e) {
  SymbolExpr out(Phase::radial);
  e.for_each([&](const Rational& c, const Monomial& m, const Word& w) {
    require_plain(m, "apply_move_lemma");
    const int order = m.r / 2;
    if (order < 1 || order > 3) throw Error("apply_move_lemma: no rule for r^" + std::to_string(m.r) + " in " + describe(c, m, w));
    const CyclicView v = cyclic_view(w);
    if (v.resolvent_blocks.size() != 2)
      throw Error("apply_move_lemma: expected two b0 blocks in " + describe(c, m, w));
    std::size_t lead = 2;
    for (std::size_t i = 0; i < 2; ++i) {
      const Block a = read_block(v.word, v.segments[v.resolvent_blocks[i]]);
      const Block b = read_block(v.word, v.segments[v.resolvent_blocks[1 - i]]);
      if (a.b0 == order + 1 && b.b0 == 1) lead = i;
    }
    if (lead == 2) throw Error("apply_move_lemma: term does not match the move lemma: " + describe(c, m, w));
    const TwoBlockWord t = split_two_blocks(v, lead);
    if (t.middle.empty()) throw Error("apply_move_lemma: empty middle factor in " + describe(c, m, w));
    Word result;
    push_block(result, t.first.k - 2 * order - 2, 0);
    result.push_back(symbol::make_mod_applied(ModularFunctionExpr::modified_log(order), t.middle));
    push_block(result, t.second.k, 0);
    result.insert(result.end(), t.tail.begin(), t.tail.end());
    out.add({}, cyclic_canonical(result), c * Rational(-1, 2));
  });
  return out;
}

std::vector<ReducedTerm> modular_normalize(const SymbolExpr& e) {
  std::vector<ReducedTerm> out;
  e.for_each([&](const Rational& c, const Monomial& m, const Word& w) {
    if (m.degree() != 0 || m.lambda != 0) throw Error("modular_normalize: monomial left in " + describe(c, m, w));
    const Word canon = cyclic_canonical(w);
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < canon.size(); ++i) {
      if (!symbol::is_commuting(canon[i])) slots.push_back(i);
    }
    if (slots.size() != 2) throw Error("modular_normalize: expected two non-commuting factors in " + describe(c, m, w));
    std::size_t lead = slots[0];
    if (std::holds_alternative<ModApplied>(canon[slots[1]])) lead = slots[1];
    Word rot = rotate_to(canon, lead);
    // rot = M [k^b] D [k^a]
    auto direction_of = [&](const Atom& a) -> int {
      const auto* d = std::get_if<DerivK>(&a);
      if (d && d->d1 + d->d2 == 1) return d->d1 == 1 ? 1 : 2;
      return 0;
    };
    ModularFunctionExpr fn = ModularFunctionExpr::constant(1);
    int dir = direction_of(rot[0]);
    if (const auto* f = std::get_if<ModApplied>(&rot[0])) {
      const Word& arg = f->data->arg;
      if (arg.size() == 1) dir = direction_of(arg[0]);
      fn = f->data->fn;
    }
    int a = 0;
    int b = 0;
    std::size_t i = 1;
    for (; i < rot.size() && symbol::is_commuting(rot[i]); ++i) {
      const auto* k = std::get_if<KPow>(&rot[i]);
      if (!k) throw Error("modular_normalize: resolvent left in " + describe(c, m, w));
      b += k->exponent;
    }
    if (i >= rot.size() || dir == 0 || direction_of(rot[i]) != dir)
      throw Error("modular_normalize: factors are not δ_i(k) pairs in " + describe(c, m, w));
    for (++i; i < rot.size(); ++i) {
      const auto* k = std::get_if<KPow>(&rot[i]);
      if (!k) throw Error("modular_normalize: resolvent left in " + describe(c, m, w));
      a += k->exponent;
    }
    if (a + b != -2) throw Error("modular_normalize: total k power is not -2 in " + describe(c, m, w));
    out.push_back({c, fn.times_delta_power(b), dir});
  });
  return out;
}

ModularFunctionExpr collect(const std::vector<ReducedTerm>& terms, int direction) {
  ModularFunctionExpr f;
  for (const ReducedTerm& t : terms) {
    if (t.direction == direction) f += t.fn * t.coeff;
  }
  return f;
}

ModularFunctionExpr reference_f() { return modular::f_expression(); }

ModularFunctionExpr assemble_f(const std::vector<ReducedTerm>& terms) {
  const ModularFunctionExpr f1 = collect(terms, 1);
  const ModularFunctionExpr f2 = collect(terms, 2);
  if (f1 != f2)
    throw Error("assemble_f: directions disagree: δ₁ gives " + f1.to_string() + ", δ₂ gives " + f2.to_string());
  const ModularFunctionExpr diff = f1 - reference_f();
  if (!diff.is_zero())
    throw Error("assemble_f: assembled F = " + f1.to_string() + " differs from the reference by " + diff.to_string());
  return f1;
}

}  // namespace nct::reduction
