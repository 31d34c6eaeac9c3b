// chemo1d: run Keller-Segel scenarios from JSON configs.
//
//   chemo1d simulate <config.json> [--out DIR] [--n-cells N] [--t-end T]
//   chemo1d suite <dir-of-configs> --out DIR
//   chemo1d verify
//
// simulate exits 0 for Finished, 2 for BlowupSuspected, 3 for DtCollapse and
// 1 on configuration or I/O errors.

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "chemo/config.hpp"
#include "chemo/runner.hpp"
#include "chemo/verify.hpp"

namespace {

void print_summary(const chemo::RunSummary& s) {
  std::printf("%-28s %-16s t=%-10.6g steps=%-9ld max|u|=%-11.5g mass drift=%.2e  max|energy residual|=%.3e\n",
              s.scenario.c_str(), chemo::to_string(s.status).c_str(), s.t_final, s.steps, s.max_u_linf,
              s.max_relative_mass_drift, s.max_abs_energy_residual);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D parabolic-elliptic Keller-Segel simulator with energy-identity monitors"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  int n_cells = 0;
  double t_end = 0.0;
  auto* simulate = app.add_subcommand("simulate", "Run one scenario");
  simulate->add_option("config", config_path, "JSON run document")->required()->check(CLI::ExistingFile);
  simulate->add_option("--out", out_dir, "Output directory (overrides the document)");
  simulate->add_option("--n-cells", n_cells, "Number of cells (overrides the document)")->check(CLI::PositiveNumber);
  simulate->add_option("--t-end", t_end, "Final time (overrides the document)")->check(CLI::PositiveNumber);

  std::string suite_dir;
  std::string suite_out;
  auto* suite = app.add_subcommand("suite", "Run every *.json in a directory and tabulate the outcomes");
  suite->add_option("dir", suite_dir, "Directory of run documents")->required()->check(CLI::ExistingDirectory);
  suite->add_option("--out", suite_out, "Output directory")->required();

  auto* verify = app.add_subcommand("verify", "Run the identity and oracle self-checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) {
      chemo::RunManifest m = chemo::load_config(config_path);
      if (!out_dir.empty()) m.output_dir = out_dir;
      if (n_cells > 0) m.n_cells = n_cells;
      if (t_end > 0.0) m.problem.t_end = t_end;
      m.validate();
      const chemo::RunSummary s = chemo::run_scenario(m);
      print_summary(s);
      std::printf("outputs written to %s\n", m.output_dir.string().c_str());
      return chemo::exit_code(s.status);
    }
    if (*suite) {
      const auto rows = chemo::compare_suite(chemo::load_suite(suite_dir), suite_out);
      std::cout << chemo::comparison_csv(rows);
      return 0;
    }
    if (*verify) {
      const auto checks = chemo::run_self_checks();
      std::cout << chemo::format_check_table(checks);
      const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
