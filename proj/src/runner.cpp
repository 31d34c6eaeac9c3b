#include "chemo/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <set>

#include "json.hpp"

namespace chemo {

namespace {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

void write_profile(const std::filesystem::path& path, const SimState& state, const Grid& grid) {
  std::ofstream out = open_output(path);
  out << "x,u,v\n";
  for (int i = 0; i < grid.n_cells(); ++i) {
    out << format_number(grid.x(i)) << ',' << format_number(state.u[i]) << ',' << format_number(state.v[i])
        << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

int exit_code(Status status) {
  switch (status) {
    case Status::Finished: return 0;
    case Status::BlowupSuspected: return 2;
    case Status::DtCollapse: return 3;
    case Status::Running: return 4;
  }
  return 4;
}

std::string profile_filename(double t) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "profile_t%g.csv", t);
  return buf;
}

RunSummary run_scenario(const RunManifest& manifest) {
  manifest.validate();
  const auto started = std::chrono::steady_clock::now();
  const auto& dir = manifest.output_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());

  const Grid grid(manifest.n_cells);
  RunSummary summary;
  summary.scenario = manifest.scenario;

  const auto series_path = dir / "timeseries.csv";
  std::ofstream series = open_output(series_path);
  series << monitor_csv_header() << '\n';

  bool first = true;
  auto sink = [&](const MonitorRecord& r) {
    series << to_csv_row(r) << '\n';
    if (first) {
      summary.mass_initial = r.mass;
      first = false;
    }
    summary.max_relative_mass_drift =
        std::max(summary.max_relative_mass_drift, std::abs(r.mass - summary.mass_initial) / summary.mass_initial);
    summary.max_u_linf = std::max(summary.max_u_linf, r.u_linf);
    if (r.energy_residual) {
      summary.max_abs_energy_residual = std::max(summary.max_abs_energy_residual, std::abs(*r.energy_residual));
    }
    if (r.regest1_slack) {
      summary.min_regest1_slack = std::min(summary.min_regest1_slack.value_or(*r.regest1_slack), *r.regest1_slack);
      summary.min_regest2_slack = std::min(summary.min_regest2_slack.value_or(*r.regest2_slack), *r.regest2_slack);
    }
    summary.final_record = r;
  };

  RunHooks hooks;
  hooks.stop_times = manifest.snapshot_times;
  hooks.on_stop_time = [&](const SimState& s) { write_profile(dir / profile_filename(s.t), s, grid); };

  const SimState final_state = run(manifest.problem, manifest.solver, grid, sink, hooks);
  series.flush();
  if (!series) throw std::runtime_error("write failed: " + series_path.string());

  summary.status = final_state.status;
  summary.t_final = final_state.t;
  summary.steps = final_state.step;
  summary.rejected_steps = final_state.rejected;
  summary.mass_final = quadrature(final_state.u, grid);
  summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  const auto summary_path = dir / "summary.json";
  std::ofstream out = open_output(summary_path);
  out << summary_json(summary) << '\n';
  if (!out) throw std::runtime_error("write failed: " + summary_path.string());
  return summary;
}

std::string summary_json(const RunSummary& s) {
  nlohmann::ordered_json j;
  j["scenario"] = s.scenario;
  j["status"] = to_string(s.status);
  j["exit_code"] = exit_code(s.status);
  j["t_final"] = s.t_final;
  j["steps"] = s.steps;
  j["rejected_steps"] = s.rejected_steps;
  j["mass_initial"] = s.mass_initial;
  j["mass_final"] = s.mass_final;
  j["max_relative_mass_drift"] = s.max_relative_mass_drift;
  j["max_u_linf"] = s.max_u_linf;
  const MonitorRecord& r = s.final_record;
  j["final"] = {{"F", r.F},           {"D", r.D},
                {"source", r.source}, {"entropy", r.entropy},
                {"grad_seminorm", r.grad_seminorm}, {"u_linf", r.u_linf},
                {"u_l3", r.u_l3},     {"v_lp", r.v_lp}};
  j["max_abs_energy_residual"] = s.max_abs_energy_residual;
  j["min_regest1_slack"] = s.min_regest1_slack ? nlohmann::ordered_json(*s.min_regest1_slack) : nullptr;
  j["min_regest2_slack"] = s.min_regest2_slack ? nlohmann::ordered_json(*s.min_regest2_slack) : nullptr;
  j["wall_seconds"] = s.wall_seconds;
  return j.dump(2);
}

std::vector<SuiteRow> compare_suite(std::vector<RunManifest> manifests, const std::filesystem::path& out_dir) {
  if (manifests.size() < 2) throw std::invalid_argument("suite needs at least 2 manifests, got " + std::to_string(manifests.size()));
  std::set<std::string> names;
  for (const auto& m : manifests) {
    if (!names.insert(m.scenario).second) {
      throw std::invalid_argument("duplicate scenario name '" + m.scenario + "' in suite");
    }
  }
  for (auto& m : manifests) m.output_dir = out_dir / m.scenario;

  std::vector<std::future<RunSummary>> jobs;
  jobs.reserve(manifests.size());
  for (const auto& m : manifests) {
    jobs.push_back(std::async(std::launch::async, [&m] { return run_scenario(m); }));
  }
  std::vector<SuiteRow> rows;
  for (std::size_t k = 0; k < manifests.size(); ++k) {
    const RunSummary s = jobs[k].get();
    const auto& m = manifests[k];
    rows.push_back({m.scenario, m.problem.diffusion.exponent(), m.problem.mass(), m.problem.variant, s.status,
                    s.max_u_linf, s.t_final});
  }
  std::filesystem::create_directories(out_dir);
  const auto table_path = out_dir / "comparison.csv";
  std::ofstream out = open_output(table_path);
  out << comparison_csv(rows);
  if (!out) throw std::runtime_error("write failed: " + table_path.string());
  return rows;
}

std::string comparison_csv(const std::vector<SuiteRow>& rows) {
  std::string out = "scenario,p,M,variant,status,max_u_linf,t_final\n";
  for (const auto& r : rows) {
    out += r.scenario + ',' + format_number(r.p) + ',' + format_number(r.mass) + ',' + to_string(r.variant) + ',' +
           to_string(r.status) + ',' + format_number(r.max_u_linf) + ',' + format_number(r.t_final) + '\n';
  }
  return out;
}

std::vector<RunManifest> load_suite(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw ConfigError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<RunManifest> out;
  for (const auto& f : files) out.push_back(load_config(f));
  return out;
}

}  // namespace chemo
