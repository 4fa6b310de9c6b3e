#include "nct/symbol/serialize.hpp"

#include <fstream>
#include <sstream>

namespace nct::symbol {

std::string phase_name(Phase p) { return p == Phase::xi ? "xi" : "r"; }

Phase parse_phase(std::string_view name) {
  if (name == "xi") return Phase::xi;
  if (name == "r") return Phase::radial;
  throw Error("unknown phase '" + std::string(name) + "'");
}

nlohmann::json term_to_json(const SymbolTerm& t, Phase phase) {
  nlohmann::json j;
  j["coeff"] = nct::to_string(t.coeff);
  if (phase == Phase::xi) {
    j["xi"] = {t.mono.xi1, t.mono.xi2};
  } else {
    j["r"] = t.mono.r;
  }
  if (t.mono.lambda != 0) j["lam"] = t.mono.lambda;
  nlohmann::json word = nlohmann::json::array();
  for (const Atom& a : t.word) word.push_back(to_string(a));
  j["word"] = std::move(word);
  return j;
}

SymbolTerm term_from_json(const nlohmann::json& j, Phase phase) {
  SymbolTerm t;
  t.coeff = parse_rational(j.at("coeff").get<std::string>());
  if (phase == Phase::xi) {
    const auto& xi = j.at("xi");
    if (!xi.is_array() || xi.size() != 2) throw Error("\"xi\" must be a pair of exponents");
    t.mono.xi1 = xi[0].get<int>();
    t.mono.xi2 = xi[1].get<int>();
  } else {
    t.mono.r = j.at("r").get<int>();
  }
  if (j.contains("lam")) t.mono.lambda = j["lam"].get<int>();
  for (const auto& a : j.at("word")) t.word.push_back(parse_atom(a.get<std::string>()));
  return t;
}

nlohmann::json to_json(const SymbolExpr& e) {
  nlohmann::json out = nlohmann::json::array();
  for (const SymbolTerm& t : e.terms()) out.push_back(term_to_json(t, e.phase()));
  return out;
}

SymbolExpr from_json_terms(const nlohmann::json& terms, Phase phase) {
  SymbolExpr e(phase);
  for (const auto& j : terms) e.add(term_from_json(j, phase));
  return e;
}

SymbolExpr load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open fixture " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error("malformed fixture " + path.string() + ": " + ex.what());
  }
  return from_json_terms(j.at("terms"), parse_phase(j.at("phase").get<std::string>()));
}

void save_fixture(const SymbolExpr& e, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << "{\"phase\": \"" << phase_name(e.phase()) << "\", \"terms\": [\n";
  const auto terms = e.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out << "  " << term_to_json(terms[i], e.phase()).dump() << (i + 1 < terms.size() ? ",\n" : "\n");
  }
  out << "]}\n";
}

std::string to_string(const SymbolExpr& e) {
  std::ostringstream os;
  e.for_each([&](const Rational& c, const Monomial& m, const Word& w) {
    os << nct::to_string(c);
    if (e.phase() == Phase::xi) {
      if (m.xi1) os << " xi1^" << m.xi1;
      if (m.xi2) os << " xi2^" << m.xi2;
    } else if (m.r) {
      os << " r^" << m.r;
    }
    if (m.lambda) os << " lam^" << m.lambda;
    os << " [" << to_string(w) << "]\n";
  });
  return os.str();
}

}  // namespace nct::symbol
