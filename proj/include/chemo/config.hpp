#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "chemo/core.hpp"

namespace chemo {

/// Malformed document or a violated invariant; the message names the field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunManifest {
  std::string scenario = "unnamed";
  ProblemConfig problem;
  SolverConfig solver;
  int n_cells = 128;
  std::filesystem::path output_dir;
  std::vector<double> snapshot_times;

  /// Re-checks every invariant (used after command-line overrides).
  void validate() const;
};

/// Parses a JSON run document. Unknown keys are rejected.
///
///   {
///     "scenario": "critical_m4",
///     "variant": "standard" | "jaeger_luckhaus",
///     "diffusion": {"kind": "inverse_u" | "inverse_one_plus_u" | "power_one_plus_u" | "power_u",
///                   "p": -2},
///     "initial_condition": {"kind": "constant", "mass": 1}
///                        | {"kind": "cosine_bump", "mass", "amplitude", "frequency"}
///                        | {"kind": "gaussian_bump", "mass", "center", "width", "floor"},
///     "t_end": 10,
///     "grid": {"n_cells": 128},
///     "solver": {"cfl_diff": 0.4, "cfl_adv": 0.9, "dt_min": 1e-12,
///                "blowup_threshold": 1e6, "record_every": 10, "v_norm_exponent": 2},
///     "output": {"directory": "out/critical_m4", "snapshot_times": [0, 1, 10]}
///   }
RunManifest parse_config(const std::string& text);

/// Reads and parses a file; the scenario name defaults to the file stem.
RunManifest load_config(const std::filesystem::path& path);

}  // namespace chemo
