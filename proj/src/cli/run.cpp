#include "nct/cli/run.hpp"

#include "nct/modular/special.hpp"
#include "nct/verify/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>

namespace nct::cli {

using nlohmann::json;

Command parse_command(const std::string& name) {
  if (name == "derive") return Command::derive;
  if (name == "verify") return Command::verify;
  if (name == "zeta") return Command::zeta;
  if (name == "plot") return Command::plot;
  throw Error("unknown command '" + name + "' (expected derive, verify, zeta or plot)");
}

Grid parse_grid(const std::string& text) {
  Grid g;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &g.lo, &g.hi, &g.step, &extra) != 3)
    throw Error("grid must be lo:hi:step, got '" + text + "'");
  if (!(g.step > 0) || !(g.hi >= g.lo)) throw Error("grid needs hi >= lo and step > 0");
  return g;
}

std::vector<double> grid_points(const Grid& g) {
  const long count = std::lround(std::floor((g.hi - g.lo) / g.step + 1e-9)) + 1;
  // on a grid through 0 use integer multiples of step so that 0 is hit exactly
  const double first = g.lo / g.step;
  const bool aligned = std::fabs(first - std::round(first)) < 1e-9;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    out.push_back(aligned ? (std::round(first) + static_cast<double>(i)) * g.step : g.lo + static_cast<double>(i) * g.step);
  }
  return out;
}

reduction::Perturbation parse_perturbation(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0) throw Error("perturbation must be stage:p/q, got '" + text + "'");
  return {text.substr(0, colon), parse_rational(text.substr(colon + 1))};
}

namespace {

/// Routes records to cfg.out when set.
class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

private:
  std::ofstream file_;
  std::ostream* stream_;
};

void line(std::ostream& os, const json& j) { os << j.dump() << '\n'; }

}  // namespace

int run_derive(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  if (cfg.fixtures.empty()) throw Error("derive: no fixture directory configured");
  Sink sink(cfg.out, out);
  const reduction::Derivation d = reduction::derive(cfg.perturb);
  const auto checks = reduction::check_fixtures(d, cfg.fixtures);

  bool ok = true;
  for (const reduction::StageRecord& s : d.stages) {
    json rec{{"stage", s.name}, {"anchor", s.anchor}, {"input", s.input_count}, {"output", s.terms.size()}};
    if (!s.fixture.empty()) {
      for (const auto& c : checks) {
        if (c.stage != s.name) continue;
        rec["fixture"] = c.fixture;
        rec["comparison"] = s.comparison == reduction::Comparison::exact ? "exact" : "modulo trace";
        rec["match"] = c.pass;
        if (!c.pass) {
          ok = false;
          rec["difference"] = c.difference;
          log << "fixture mismatch at stage " << s.name << " (" << c.fixture << "):\n" << c.difference << '\n';
        }
      }
    }
    if (cfg.verbosity >= 2) rec["terms"] = symbol::to_json(s.terms);
    line(*sink, rec);
  }

  json result{{"stage", "assemble"}};
  try {
    const modular::ModularFunctionExpr f = reduction::assemble_f(d.reduced);
    const modular::ClosedForm h = modular::h_from_f();
    const modular::ClosedForm k = modular::K_from_h();
    const bool k_odd = modular::is_odd(k);
    const bool h_odd = modular::is_odd(h);
    result["F"] = f.to_string();
    result["h"] = h.to_string();
    result["K"] = k.to_string();
    result["K_odd"] = k_odd;
    result["h_odd"] = h_odd;
    if (!k_odd) {
      ok = false;
      log << "K is not odd\n";
    }
    result["statement"] = "zeta(0)+1 = 2pi*phi(F(Delta)(delta_j k) delta_j k), F = " + f.to_string() +
                          "; K odd => zeta(0) = -1 independent of k";
  } catch (const Error& e) {
    ok = false;
    result["error"] = e.what();
    log << "assembly failed: " << e.what() << '\n';
  }
  line(*sink, result);
  if (cfg.verbosity >= 1 && ok) log << result["statement"].get<std::string>() << '\n';
  return ok ? 0 : 1;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  Sink sink(cfg.out, out);
  verify::VerifyConfig vc;
  vc.seeds = cfg.seeds;
  vc.tolerance_scale = cfg.tolerance_scale;
  const auto records = verify::run_checks(vc);
  bool ok = true;
  for (const auto& r : records) {
    line(*sink, verify::to_json(r));
    if (!r.pass) {
      ok = false;
      log << "FAILED " << r.check << " [" << r.anchor << "] dim " << r.dim << " seed " << r.seed << ": error "
          << r.error << " >= " << r.threshold << '\n';
    }
  }
  if (cfg.verbosity >= 1) {
    for (const auto& s : verify::summarize(records)) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-18s %4d runs  %d failed  worst %.3e  threshold %.1e", s.check.c_str(), s.count,
                    s.failures, s.worst_error, s.threshold);
      log << buf << '\n';
    }
  }
  return ok ? 0 : 1;
}

int run_zeta(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  Sink sink(cfg.out, out);
  std::vector<verify::NamedWeyl> factors;
  if (cfg.weyl.empty()) {
    factors = verify::standard_weyl_factors(cfg.theta);
  } else {
    factors = {{"h = 0", {}}, {cfg.weyl, verify::load_weyl(cfg.weyl)}};
  }
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& w : factors) {
    const auto model = verify::build_lattice(cfg.theta, cfg.truncation, w.h);
    const verify::ZetaEstimate e = verify::zeta0_estimate(model, cfg.window);
    lo = std::min(lo, e.c0);
    hi = std::max(hi, e.c0);
    line(*sink, {{"weyl", w.name},
                 {"theta", cfg.theta},
                 {"truncation", cfg.truncation},
                 {"zeta0", e.c0},
                 {"c_minus1", e.c_minus1},
                 {"c1", e.c1},
                 {"kernel_dim", e.kernel_dim},
                 {"lambda_max", e.lambda_max},
                 {"t_range", {e.t_lo, e.t_hi}},
                 {"condition", e.condition},
                 {"max_residual", e.max_residual}});
    if (cfg.verbosity >= 1) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-34s zeta(0) ~ %+.5f  (kernel %d, cond %.0f)", w.name.c_str(), e.c0,
                    e.kernel_dim, e.condition);
      log << buf << '\n';
    }
  }
  line(*sink, {{"spread", hi - lo}, {"factors", factors.size()}});
  return 0;
}

int run_plot(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Sink sink(cfg.out, out);
  const std::vector<double> grid = grid_points(cfg.grid);
  const auto h = modular::sample(modular::h_reference(), grid);
  const auto k = modular::sample(modular::K_reference(), grid);
  *sink << "x,h,K\n";
  char buf[96];
  for (std::size_t i = 0; i < grid.size(); ++i) {
    // no "-0" rows
    auto clean = [](double v) { return v == 0 ? 0.0 : v; };
    std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g\n", clean(grid[i]), clean(h[i].value), clean(k[i].value));
    *sink << buf;
  }
  return 0;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  switch (cfg.command) {
    case Command::derive:
      return run_derive(cfg, out, log);
    case Command::verify:
      return run_verify(cfg, out, log);
    case Command::zeta:
      return run_zeta(cfg, out, log);
    case Command::plot:
      return run_plot(cfg, out, log);
  }
  throw Error("unhandled command");
}

}  // namespace nct::cli
