#include "nct/cli/run.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  nct::cli::RunConfig cfg;
  std::string command = "derive";
  std::string grid = "-6:6:0.05";
  std::string perturb;
  cfg.fixtures = NCT_FIXTURE_DIR;

  CLI::App app{"Gauss-Bonnet computation for the noncommutative two-torus: symbolic derivation, matrix checks, "
               "lattice zeta(0) estimate and plot data"};
  app.add_option("--command", command, "derive | verify | zeta | plot")
      ->check(CLI::IsMember({"derive", "verify", "zeta", "plot"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "write records to this file instead of stdout");
  app.add_option("-v,--verbosity", cfg.verbosity, "0 quiet, 1 summary, 2 full derive trace")->capture_default_str();
  app.add_option("--seeds", cfg.seeds, "random instances for verify")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--theta", cfg.theta, "rotation parameter in (0, 1)")->capture_default_str();
  app.add_option("--truncation", cfg.truncation, "lattice radius N")->check(CLI::Range(4, 64))->capture_default_str();
  app.add_option("--weyl", cfg.weyl, "Weyl coefficient file, lines 'a b re im'")->check(CLI::ExistingFile);
  app.add_option("--fit-lo", cfg.window.lo, "fit window start, in units of 1/lambda_max")->capture_default_str();
  app.add_option("--fit-hi", cfg.window.hi, "fit window end, in units of 1/lambda_max")->capture_default_str();
  app.add_option("--fit-points", cfg.window.points, "geometric fit points")->capture_default_str();
  app.add_option("--grid", grid, "plot grid lo:hi:step")->capture_default_str();
  app.add_option("--tolerance-scale", cfg.tolerance_scale, "multiplies every verify threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--fixtures", cfg.fixtures, "fixture directory")->capture_default_str();
  app.add_option("--perturb", perturb, "stage:p/q, adds p/q to one coefficient (negative control)")->group("");
  CLI11_PARSE(app, argc, argv);

  try {
    cfg.command = nct::cli::parse_command(command);
    cfg.grid = nct::cli::parse_grid(grid);
    if (!perturb.empty()) cfg.perturb = nct::cli::parse_perturbation(perturb);
    return nct::cli::run(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
