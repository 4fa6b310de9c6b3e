#pragma once

#include "nct/reduction/derivation.hpp"
#include "nct/verify/zeta.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace nct::cli {

enum class Command { derive, verify, zeta, plot };

Command parse_command(const std::string& name);

/// Uniform plot grid lo, lo + step, ..., hi.
struct Grid {
  double lo = -6;
  double hi = 6;
  double step = 0.05;
};

/// "lo:hi:step"
Grid parse_grid(const std::string& text);
std::vector<double> grid_points(const Grid& g);

/// Defaults reproduce the acceptance suite.
struct RunConfig {
  Command command = Command::derive;
  std::string out;  // empty writes to the output stream passed to run()
  int verbosity = 1;  // 0 quiet, 1 summary on the log stream, 2 full term lists in the derive trace
  int seeds = 100;
  double theta = verify::golden_theta();
  int truncation = 20;
  std::string weyl;  // coefficient file; empty runs the built-in Weyl factors
  verify::FitWindow window;
  Grid grid;
  double tolerance_scale = 1.0;
  std::string fixtures;
  std::optional<reduction::Perturbation> perturb;  // negative-control hook
};

/// "stage:p/q"
reduction::Perturbation parse_perturbation(const std::string& text);

/// Exit status: 0 success, 1 a check or fixture failed. Records go to `out`
/// (or cfg.out), human-readable summaries and failures to `log`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& log);

int run_derive(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int run_zeta(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int run_plot(const RunConfig& cfg, std::ostream& out, std::ostream& log);

}  // namespace nct::cli
