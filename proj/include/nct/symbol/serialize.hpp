#pragma once

#include "nct/symbol/expr.hpp"

#include <json.hpp>

#include <filesystem>

namespace nct::symbol {

/// {"coeff":"p/q","xi":[a,b],"word":[...]} or {"coeff":..,"r":p,"word":[...]};
/// "lam" is present only when the λ-count is nonzero.
nlohmann::json term_to_json(const SymbolTerm& t, Phase phase);
SymbolTerm term_from_json(const nlohmann::json& j, Phase phase);

/// Array of terms in canonical order.
nlohmann::json to_json(const SymbolExpr& e);
/// Parses an array of terms; phase is inferred from the first term ("xi" or "r").
SymbolExpr from_json_terms(const nlohmann::json& terms, Phase phase);

/// Fixture file: {"phase": "xi"|"r", "terms": [...]}.
SymbolExpr load_fixture(const std::filesystem::path& path);
void save_fixture(const SymbolExpr& e, const std::filesystem::path& path);

std::string phase_name(Phase p);
Phase parse_phase(std::string_view name);

/// One line per term, human-readable.
std::string to_string(const SymbolExpr& e);

}  // namespace nct::symbol
