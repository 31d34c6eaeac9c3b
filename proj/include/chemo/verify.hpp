#pragma once

#include <random>
#include <string>
#include <vector>

#include "chemo/core.hpp"

namespace chemo {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      // measured quantity
  double threshold = 0.0;  // what it was compared against
  std::string detail;
};

/// exp of a random cosine/sine series with up to 4 modes, rescaled to mass M.
Field random_smooth_field(std::mt19937_64& rng, const Grid& grid, double mass);

/// Observed order log2(e_coarse / e_fine) for each consecutive pair.
std::vector<double> observed_orders(const std::vector<double>& errors);

/// Identity and oracle self-checks behind `chemo1d verify`.
std::vector<CheckResult> run_self_checks();

std::string format_check_table(const std::vector<CheckResult>& checks);

}  // namespace chemo
