#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chemo/config.hpp"
#include "chemo/runner.hpp"

using namespace chemo;
namespace fs = std::filesystem;

namespace {

const char* kMinimal = R"({
  "diffusion": {"kind": "inverse_u"},
  "initial_condition": {"kind": "constant", "mass": 1},
  "t_end": 1
})";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("chemo1d_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

RunManifest small_run(const std::string& name, double p, const fs::path& out) {
  RunManifest m;
  m.scenario = name;
  m.problem.variant = Variant::JaegerLuckhaus;
  m.problem.diffusion = DiffusionSpec::power_one_plus_u(p);
  m.problem.initial_condition = CosineBumpIC{2.0, 0.3, 2.0};
  m.problem.t_end = 0.01;
  m.n_cells = 32;
  m.output_dir = out / name;
  return m;
}

}  // namespace

TEST_CASE("minimal document picks up the defaults") {
  const RunManifest m = parse_config(kMinimal);
  CHECK(m.n_cells == 128);
  CHECK(m.solver.cfl_diff == 0.4);
  CHECK(m.solver.cfl_adv == 0.9);
  CHECK(m.solver.blowup_threshold == 1e6);
  CHECK(m.solver.dt_min == 1e-12);
  CHECK(m.solver.record_every == 10);
  CHECK(m.problem.variant == Variant::Standard);
  CHECK(m.problem.mass() == 1.0);
  CHECK(m.scenario == "unnamed");
  CHECK(m.output_dir == fs::path("out") / "unnamed");
  CHECK(m.snapshot_times.empty());
}

TEST_CASE("p = -1 under power_one_plus_u is accepted as critical") {
  const RunManifest m = parse_config(R"({
    // comments are allowed
    "variant": "jaeger_luckhaus",
    "diffusion": {"kind": "power_one_plus_u", "p": -1},
    "initial_condition": {"kind": "gaussian_bump", "mass": 10, "center": 0.5, "width": 0.05, "floor": 0.1},
    "t_end": 10,
    "grid": {"n_cells": 64},
    "solver": {"blowup_threshold": 1000, "record_every": 5},
    "output": {"directory": "elsewhere", "snapshot_times": [0, 1, 10]}
  })");
  CHECK(m.problem.diffusion.criticality() == Criticality::Critical);
  CHECK(m.problem.variant == Variant::JaegerLuckhaus);
  CHECK(m.n_cells == 64);
  CHECK(m.solver.record_every == 5);
  CHECK(m.output_dir == fs::path("elsewhere"));
  CHECK(m.snapshot_times == std::vector<double>{0, 1, 10});
}

TEST_CASE("validation errors name the problem") {
  CHECK(error_of(R"({"diffusion": {"kind": "inverse_u"},
    "initial_condition": {"kind": "gaussian_bump", "mass": 1, "center": 0.5, "width": 0.1, "floor": 0},
    "t_end": 1})")
            .find("floor") != std::string::npos);
  CHECK(error_of(R"({"diffusion": {"kind": "inverse_u"}, "initial_condition": {"kind": "constant", "mass": 1},
    "t_end": 1, "colour": "red"})")
            .find("unknown key 'colour'") != std::string::npos);
  CHECK(error_of(R"({"diffusion": {"kind": "inverse_u"}, "initial_condition": {"kind": "constant", "mass": 1},
    "t_end": 1, "solver": {"cfl": 0.1}})")
            .find("solver: unknown key 'cfl'") != std::string::npos);
  CHECK(error_of(R"({"diffusion": {"kind": "inverse_u"}, "initial_condition": {"kind": "constant", "mass": 1},
    "t_end": 1, "output": {"snapshot_times": [0.5, 0.2]}})")
            .find("sorted") != std::string::npos);
  CHECK(error_of(R"({"diffusion": {"kind": "inverse_u"}, "initial_condition": {"kind": "constant", "mass": 1},
    "t_end": 1, "output": {"snapshot_times": [2]}})")
            .find("[0, t_end]") != std::string::npos);
  CHECK(error_of(R"({"diffusion": {"kind": "inverse_u"}, "initial_condition": {"kind": "constant", "mass": 5},
    "t_end": 1, "solver": {"blowup_threshold": 2}})")
            .find("blowup_threshold") != std::string::npos);
  CHECK(error_of(R"({"diffusion": {"kind": "power_u"}, "initial_condition": {"kind": "constant", "mass": 1},
    "t_end": 1})")
            .find("'p'") != std::string::npos);
}

TEST_CASE("syntax errors report the line") {
  const std::string msg = error_of("{\n  \"t_end\": 1,\n  \"grid\": {\"n_cells\": }\n}");
  CHECK(msg.rfind("parse error", 0) == 0);
  CHECK(msg.find("line 3") != std::string::npos);
}

TEST_CASE("load_config names the file and defaults the scenario to its stem") {
  const fs::path dir = scratch("load");
  const fs::path file = dir / "my_case.json";
  std::ofstream(file) << kMinimal;
  CHECK(load_config(file).scenario == "my_case");
  CHECK_THROWS_WITH_AS(load_config(dir / "missing.json"), doctest::Contains("missing.json"), ConfigError);
  std::ofstream(dir / "bad.json") << "{";
  CHECK_THROWS_WITH_AS(load_config(dir / "bad.json"), doctest::Contains("bad.json"), ConfigError);
}

TEST_CASE("exit codes") {
  CHECK(exit_code(Status::Finished) == 0);
  CHECK(exit_code(Status::BlowupSuspected) == 2);
  CHECK(exit_code(Status::DtCollapse) == 3);
}

TEST_CASE("run_scenario writes its outputs and is reproducible") {
  const fs::path dir = scratch("run");
  RunManifest m = parse_config(R"({
    "scenario": "flat",
    "diffusion": {"kind": "inverse_u"},
    "initial_condition": {"kind": "constant", "mass": 2},
    "t_end": 0.05,
    "grid": {"n_cells": 16},
    "output": {"snapshot_times": [0, 0.025, 0.05]}
  })");
  m.output_dir = dir / "a";
  const RunSummary s = run_scenario(m);
  CHECK(s.status == Status::Finished);
  CHECK(s.t_final == 0.05);
  CHECK(s.max_abs_energy_residual <= 1e-12);
  CHECK(s.max_relative_mass_drift <= 1e-14);
  for (const char* f : {"timeseries.csv", "summary.json", "profile_t0.csv", "profile_t0.025.csv",
                        "profile_t0.05.csv"})
    CHECK(fs::exists(m.output_dir / f));
  const std::string series = slurp(m.output_dir / "timeseries.csv");
  CHECK(series.rfind(monitor_csv_header() + "\n", 0) == 0);
  CHECK(slurp(m.output_dir / "profile_t0.csv").rfind("x,u,v\n", 0) == 0);
  CHECK(slurp(m.output_dir / "summary.json").find("\"status\": \"Finished\"") != std::string::npos);

  m.output_dir = dir / "b";
  run_scenario(m);
  CHECK(slurp(dir / "a" / "timeseries.csv") == slurp(dir / "b" / "timeseries.csv"));
  CHECK(slurp(dir / "a" / "profile_t0.05.csv") == slurp(dir / "b" / "profile_t0.05.csv"));
}

TEST_CASE("compare_suite") {
  const fs::path dir = scratch("suite");
  CHECK_THROWS_WITH(compare_suite({small_run("one", -1.0, dir)}, dir), doctest::Contains("2"));
  CHECK_THROWS_WITH(compare_suite({small_run("same", -1.0, dir), small_run("same", -2.0, dir)}, dir),
                    doctest::Contains("same"));

  const auto rows = compare_suite({small_run("pa", -0.5, dir), small_run("pb", -1.0, dir)}, dir);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].scenario == "pa");
  CHECK(rows[1].p == -1.0);
  CHECK(rows[0].status == Status::Finished);
  const std::string table = slurp(dir / "comparison.csv");
  CHECK(table.rfind("scenario,p,M,variant,status,max_u_linf,t_final\n", 0) == 0);
  CHECK(table == comparison_csv(rows));
  CHECK(fs::exists(dir / "pa" / "summary.json"));
}
