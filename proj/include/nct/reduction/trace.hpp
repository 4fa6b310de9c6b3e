#pragma once

#include "nct/symbol/expr.hpp"

namespace nct::reduction {

using symbol::Monomial;
using symbol::SymbolExpr;
using symbol::Word;

/// Representative of a word up to cyclic rotation: the leading and trailing
/// commuting runs are merged, then the lexicographically smallest rotation
/// starting at a segment boundary is taken (a segment is a commuting block or
/// a single non-commuting atom).
Word cyclic_canonical(const Word& w);

/// Half-open atom range [begin, end) of a word.
struct Segment {
  std::size_t begin;
  std::size_t end;
  bool commuting;
};
/// Segments of a cyclically merged word (first and last commuting runs joined).
std::vector<Segment> cyclic_segments(const Word& merged);
/// Merges the trailing commuting run into the leading one.
Word cyclic_merge(const Word& w);

/// Re-expresses every word by its cyclic representative, so that two
/// expressions equal under the trace compare equal.
SymbolExpr trace_normalize(const SymbolExpr& e);
bool trace_equal(const SymbolExpr& a, const SymbolExpr& b);

}  // namespace nct::reduction
