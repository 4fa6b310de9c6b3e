#pragma once

#include "nct/reduction/pipeline.hpp"
#include "nct/symbol/serialize.hpp"

#include <deque>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace nct::reduction {

enum class Comparison { exact, trace };

struct StageRecord {
  std::string name;
  std::string anchor;  // which identity or term list the stage reproduces
  std::size_t input_count = 0;
  SymbolExpr terms;
  std::string fixture;  // file stem under the fixture directory, empty if none
  Comparison comparison = Comparison::exact;
};

/// Test hook: adds `delta` to the first coefficient of the named stage's output.
struct Perturbation {
  std::string stage;
  Rational delta;
};

struct Derivation {
  std::deque<StageRecord> stages;  // stable references while stages are appended
  /// Collected F of the move-lemma output for the r², r⁴, r⁶ blocks.
  ModularFunctionExpr move_blocks[3];
  std::vector<ReducedTerm> reduced;
  ModularFunctionExpr f_direction1;
  ModularFunctionExpr f_direction2;

  [[nodiscard]] const StageRecord& stage(std::string_view name) const;
};

/// Runs b₀ → b₁ → b₂ → angular → cyclic split → radial integrals → move lemma →
/// modular normalization. Never throws on a wrong result; see check_* below.
Derivation derive(const std::optional<Perturbation>& perturbation = std::nullopt);

/// Expected F of each move-lemma block for one direction.
ModularFunctionExpr expected_move_block(int m);

struct FixtureCheck {
  std::string stage;
  std::string fixture;
  bool pass = false;
  std::string difference;  // empty on pass
};

/// Compares every stage that names a fixture against `<dir>/<fixture>.json`.
std::vector<FixtureCheck> check_fixtures(const Derivation& d, const std::filesystem::path& dir);

/// JSON trace: one record per stage {stage, anchor, input, output, terms}.
nlohmann::json trace_json(const Derivation& d);

}  // namespace nct::reduction
