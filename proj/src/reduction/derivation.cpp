#include "nct/reduction/derivation.hpp"

#include "nct/symbol/calculus.hpp"

namespace nct::reduction {

using symbol::Phase;

const StageRecord& Derivation::stage(std::string_view name) const {
  for (const StageRecord& s : stages) {
    if (s.name == name) return s;
  }
  throw Error("no derivation stage named '" + std::string(name) + "'");
}

namespace {

SymbolExpr by_radial_power(const SymbolExpr& e, int r) {
  SymbolExpr out(e.phase());
  e.for_each([&](const Rational& c, const Monomial& m, const symbol::Word& w) {
    if (m.r == r) out.add(m, w, c);
  });
  return out;
}

SymbolExpr reduced_as_expr(const std::vector<ReducedTerm>& terms) {
  SymbolExpr out(Phase::radial);
  for (const ReducedTerm& t : terms) {
    const symbol::Atom d = t.direction == 1 ? symbol::make_deriv(1, 0) : symbol::make_deriv(0, 1);
    out.add({}, {symbol::make_kpow(-2), symbol::make_mod_applied(t.fn, {d}), d}, t.coeff);
  }
  return out;
}

}  // namespace

Derivation derive(const std::optional<Perturbation>& perturbation) {
  Derivation d;
  auto record = [&](std::string name, std::string anchor, std::size_t input, SymbolExpr terms,
                    std::string fixture = {}, Comparison cmp = Comparison::exact) -> const SymbolExpr& {
    if (perturbation && perturbation->stage == name && !terms.is_zero()) {
      const auto first = terms.terms().front();
      terms.add(first.mono, first.word, perturbation->delta);
    }
    d.stages.push_back({std::move(name), std::move(anchor), input, std::move(terms), std::move(fixture), cmp});
    return d.stages.back().terms;
  };

  const SymbolExpr& b0 = record("b0", "resolvent of the leading symbol", 0, symbol::compute_b0());
  const SymbolExpr& b1 = record("b1", "order -3 parametrix term", b0.size(), symbol::compute_b1());
  const SymbolExpr& b2_pre =
      record("b2_pre", "order -4 parametrix term before its right b0 factor", b1.size(),
             symbol::compute_b2_before_right_b0());
  const SymbolExpr& even = record("b2_even", "xi-even part of b2 before the right b0 factor", b2_pre.size(),
                                  symbol::discard_xi_odd(b2_pre), "b2_even_pre_b0");
  const SymbolExpr& angular =
      record("angular", "left b0 under the trace, then angular average (overall factor 2*pi)", even.size(),
             angular_average(cyclic_left_b0(even)), "angular");

  const ResolventSplit split = split_by_resolvent_blocks(angular);
  const SymbolExpr& all_left =
      record("all_left", "terms with every b0 in one block", angular.size(), split.all_left, "allleft");
  const SymbolExpr& b0sq =
      record("b0sq_middle", "terms with b0^2 in a second block", angular.size(), split.b0sq_middle, "middle_b0sq");
  const SymbolExpr& b0mid =
      record("b0_middle", "terms with b0 in a second block", angular.size(), split.b0_middle, "middle_b0");

  const SymbolExpr& res = record("radial_all_left", "radial integral of the all-left block", all_left.size(),
                                 radial_integrate_allleft(all_left), "res1", Comparison::trace);

  const SymbolExpr& t = record("by_parts_r", "integration by parts in r, combined with the b0-middle terms",
                               b0sq.size() + b0mid.size(), integrate_by_parts_r(b0sq) + b0mid, "T",
                               Comparison::trace);
  const char* block_names[3] = {"T1", "T2", "T3"};
  for (int m = 1; m <= 3; ++m) {
    const SymbolExpr& block = record(block_names[m - 1], "block of T with r^" + std::to_string(2 * m), t.size(),
                                     by_radial_power(t, 2 * m), block_names[m - 1], Comparison::trace);
    const SymbolExpr moved = apply_move_lemma(block);
    const std::vector<ReducedTerm> reduced = modular_normalize(moved);
    d.move_blocks[m - 1] = collect(reduced, 1);
    record("move_lemma_" + std::to_string(m), "move lemma with L" + std::to_string(m), block.size(),
           reduced_as_expr(reduced));
    d.reduced.insert(d.reduced.end(), reduced.begin(), reduced.end());
  }

  const SymbolExpr& res_ibp =
      record("delta_by_parts", "tau(x d_i^2 k) = -tau(d_i(x) d_i k) on the all-left result", res.size(),
             integrate_by_parts_delta(res));
  const std::vector<ReducedTerm> res_reduced = modular_normalize(res_ibp);
  record("modular_all_left", "all-left terms as tau(k^-2 F(Delta)(d_i k) d_i k)", res_ibp.size(),
         reduced_as_expr(res_reduced));
  d.reduced.insert(d.reduced.end(), res_reduced.begin(), res_reduced.end());

  d.f_direction1 = collect(d.reduced, 1);
  d.f_direction2 = collect(d.reduced, 2);
  return d;
}

ModularFunctionExpr expected_move_block(int m) {
  ModularFunctionExpr f;
  switch (m) {
    case 1:
      f.add_term({0, 1}, Rational(1));
      break;
    case 2:
      f.add_term({1, 2}, Rational(-2));
      f.add_term({0, 2}, Rational(-2));
      break;
    case 3:
      f.add_term({0, 3}, Rational(1));
      f.add_term({1, 3}, Rational(2));
      f.add_term({2, 3}, Rational(1));
      break;
    default:
      throw Error("no move-lemma block for m = " + std::to_string(m));
  }
  return f;
}

std::vector<FixtureCheck> check_fixtures(const Derivation& d, const std::filesystem::path& dir) {
  std::vector<FixtureCheck> out;
  for (const StageRecord& s : d.stages) {
    if (s.fixture.empty()) continue;
    FixtureCheck c{s.name, s.fixture, false, {}};
    try {
      const SymbolExpr expected = symbol::load_fixture(dir / (s.fixture + ".json"));
      const SymbolExpr computed = s.comparison == Comparison::trace ? trace_normalize(s.terms) : s.terms;
      const SymbolExpr target = s.comparison == Comparison::trace ? trace_normalize(expected) : expected;
      c.pass = computed == target;
      if (!c.pass) c.difference = symbol::to_string(computed - target);
    } catch (const Error& e) {
      c.difference = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

nlohmann::json trace_json(const Derivation& d) {
  nlohmann::json out = nlohmann::json::array();
  for (const StageRecord& s : d.stages) {
    out.push_back({{"stage", s.name},
                   {"anchor", s.anchor},
                   {"input", s.input_count},
                   {"output", s.terms.size()},
                   {"phase", symbol::phase_name(s.terms.phase())},
                   {"terms", symbol::to_json(s.terms)}});
  }
  return out;
}

}  // namespace nct::reduction
