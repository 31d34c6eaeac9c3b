#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "chemo/config.hpp"
#include "chemo/stepper.hpp"

namespace chemo {

/// Process exit code for a final status: Finished 0, BlowupSuspected 2, DtCollapse 3.
int exit_code(Status status);

struct RunSummary {
  std::string scenario;
  Status status = Status::Running;
  double t_final = 0.0;
  long steps = 0;
  long rejected_steps = 0;
  double mass_initial = 0.0;
  double mass_final = 0.0;
  double max_relative_mass_drift = 0.0;
  double max_u_linf = 0.0;
  MonitorRecord final_record;
  double max_abs_energy_residual = 0.0;
  std::optional<double> min_regest1_slack;
  std::optional<double> min_regest2_slack;
  double wall_seconds = 0.0;
};

/// Runs one manifest and writes timeseries.csv, profile_t<time>.csv and
/// summary.json into manifest.output_dir. Throws std::runtime_error with the
/// offending path on I/O failure.
RunSummary run_scenario(const RunManifest& manifest);

std::string summary_json(const RunSummary& summary);

/// Profile file name for a snapshot time, e.g. profile_t0.5.csv.
std::string profile_filename(double t);

struct SuiteRow {
  std::string scenario;
  double p = 0.0;
  double mass = 0.0;
  Variant variant = Variant::Standard;
  Status status = Status::Running;
  double max_u_linf = 0.0;
  double t_final = 0.0;
};

/// Runs every manifest (in parallel, one trajectory per worker), each into
/// out_dir/<scenario>, then writes out_dir/comparison.csv. Needs at least two
/// manifests with distinct scenario names.
std::vector<SuiteRow> compare_suite(std::vector<RunManifest> manifests, const std::filesystem::path& out_dir);

std::string comparison_csv(const std::vector<SuiteRow>& rows);

/// All *.json files of a directory, sorted by file name.
std::vector<RunManifest> load_suite(const std::filesystem::path& dir);

}  // namespace chemo
