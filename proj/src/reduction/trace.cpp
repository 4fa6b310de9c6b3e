#include "nct/reduction/trace.hpp"

namespace nct::reduction {

using symbol::Atom;
using symbol::canonical_word;
using symbol::compare;
using symbol::is_commuting;

Word cyclic_merge(const Word& w) {
  Word c = canonical_word(w);
  if (c.size() < 2 || !is_commuting(c.back()) || !is_commuting(c.front())) return c;
  std::size_t tail = c.size();
  while (tail > 0 && is_commuting(c[tail - 1])) --tail;
  if (tail == 0) return c;
  Word rotated(c.begin() + static_cast<std::ptrdiff_t>(tail), c.end());
  rotated.insert(rotated.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(tail));
  return canonical_word(rotated);
}

std::vector<Segment> cyclic_segments(const Word& merged) {
  std::vector<Segment> out;
  std::size_t i = 0;
  while (i < merged.size()) {
    if (is_commuting(merged[i])) {
      std::size_t j = i;
      while (j < merged.size() && is_commuting(merged[j])) ++j;
      out.push_back({i, j, true});
      i = j;
    } else {
      out.push_back({i, i + 1, false});
      ++i;
    }
  }
  return out;
}

Word cyclic_canonical(const Word& w) {
  const Word merged = cyclic_merge(w);
  const auto segments = cyclic_segments(merged);
  Word best = merged;
  for (const Segment& s : segments) {
    Word rot(merged.begin() + static_cast<std::ptrdiff_t>(s.begin), merged.end());
    rot.insert(rot.end(), merged.begin(), merged.begin() + static_cast<std::ptrdiff_t>(s.begin));
    if (compare(rot, best) < 0) best = std::move(rot);
  }
  return best;
}

SymbolExpr trace_normalize(const SymbolExpr& e) {
  SymbolExpr out(e.phase());
  e.for_each([&](const Rational& c, const Monomial& m, const Word& w) { out.add(m, cyclic_canonical(w), c); });
  return out;
}

bool trace_equal(const SymbolExpr& a, const SymbolExpr& b) { return trace_normalize(a) == trace_normalize(b); }

}  // namespace nct::reduction
