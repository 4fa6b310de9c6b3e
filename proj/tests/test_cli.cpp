#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nct/cli/run.hpp"

#include <json.hpp>

#include <sstream>

using namespace nct::cli;

namespace {

RunConfig config(Command c) {
  RunConfig cfg;
  cfg.command = c;
  cfg.fixtures = NCT_FIXTURE_DIR;
  return cfg;
}

std::vector<nlohmann::json> records(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("argument parsing") {
  CHECK(parse_command("zeta") == Command::zeta);
  CHECK_THROWS_AS(parse_command("prove"), nct::Error);
  const Grid g = parse_grid("-1:1:0.5");
  CHECK(grid_points(g) == std::vector<double>{-1, -0.5, 0, 0.5, 1});
  CHECK(grid_points(parse_grid("-6:6:0.05")).size() == 241);
  CHECK_THROWS_AS(parse_grid("0:1"), nct::Error);
  CHECK_THROWS_AS(parse_grid("1:0:0.1"), nct::Error);
  const auto p = parse_perturbation("angular:-1/7");
  CHECK(p.stage == "angular");
  CHECK(p.delta == nct::Rational(-1, 7));
  CHECK_THROWS_AS(parse_perturbation("angular"), nct::Error);
}

TEST_CASE("derive reproduces every fixture and the final statement") {
  std::ostringstream out, log;
  REQUIRE(run(config(Command::derive), out, log) == 0);
  const auto recs = records(out.str());
  bool saw_angular = false;
  for (const auto& r : recs) {
    if (r.contains("match")) CHECK(r["match"] == true);
    if (r["stage"] == "angular") saw_angular = r["match"] == true;
  }
  CHECK(saw_angular);
  const auto& last = recs.back();
  CHECK(last["stage"] == "assemble");
  CHECK(last["K_odd"] == true);
  CHECK(last["statement"].get<std::string>().find("independent of k") != std::string::npos);
}

TEST_CASE("derive with a perturbed coefficient fails and shows the difference") {
  RunConfig cfg = config(Command::derive);
  cfg.perturb = parse_perturbation("angular:1/7");
  std::ostringstream out, log;
  CHECK(run(cfg, out, log) == 1);
  CHECK(log.str().find("fixture mismatch at stage angular") != std::string::npos);
  CHECK(log.str().find("1/7") != std::string::npos);
}

TEST_CASE("verify is deterministic and names anchors") {
  RunConfig cfg = config(Command::verify);
  cfg.seeds = 6;
  std::ostringstream a, b, log;
  CHECK(run(cfg, a, log) == 0);
  CHECK(run(cfg, b, log) == 0);
  CHECK(a.str() == b.str());
  const auto recs = records(a.str());
  CHECK(recs.size() == 60);
  for (const auto& r : recs) CHECK(!r["anchor"].get<std::string>().empty());
  // an impossible tolerance makes it fail
  cfg.tolerance_scale = 1e-30;
  std::ostringstream c, log2;
  CHECK(run(cfg, c, log2) == 1);
  CHECK(log2.str().find("FAILED") != std::string::npos);
}

TEST_CASE("zeta on a small lattice") {
  RunConfig cfg = config(Command::zeta);
  cfg.truncation = 8;
  std::ostringstream a, b, log;
  CHECK(run(cfg, a, log) == 0);
  CHECK(run(cfg, b, log) == 0);
  CHECK(a.str() == b.str());
  const auto recs = records(a.str());
  REQUIRE(recs.size() == 5);
  CHECK(recs[0]["weyl"] == "h = 0");
  CHECK(recs[0]["kernel_dim"] == 1);
  CHECK(recs.back().contains("spread"));
}

TEST_CASE("plot rows are exact at zero") {
  std::ostringstream out, log;
  CHECK(run(config(Command::plot), out, log) == 0);
  const std::string csv = out.str();
  CHECK(csv.rfind("x,h,K\n", 0) == 0);
  CHECK(csv.find("\n0,0,0\n") != std::string::npos);
  CHECK(csv.find("-0,") == std::string::npos);
  std::size_t rows = 0;
  for (char ch : csv) rows += ch == '\n';
  CHECK(rows == 242);
}
