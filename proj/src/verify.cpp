#include "chemo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "chemo/elliptic.hpp"
#include "chemo/functionals.hpp"
#include "chemo/stepper.hpp"

namespace chemo {

namespace {
constexpr double pi = std::numbers::pi;

double max_error(const Field& numeric, const Grid& grid, double (*exact)(double)) {
  double e = 0.0;
  for (int i = 0; i < grid.n_cells(); ++i) e = std::max(e, std::abs(numeric[i] - exact(grid.x(i))));
  return e;
}

CheckResult min_order_check(std::string name, const std::vector<double>& errors, double required) {
  const auto orders = observed_orders(errors);
  const double worst = *std::min_element(orders.begin(), orders.end());
  std::string detail;
  for (double e : errors) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.3e", detail.empty() ? "" : " ", e);
    detail += buf;
  }
  return {std::move(name), worst >= required, worst, required, "errors: " + detail};
}
}  // namespace

Field random_smooth_field(std::mt19937_64& rng, const Grid& grid, double mass) {
  std::uniform_int_distribution<int> n_modes(1, 4);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  const int modes = n_modes(rng);
  std::vector<double> c(modes + 1), s(modes + 1);
  for (int k = 1; k <= modes; ++k) {
    c[k] = coeff(rng) / k;
    s[k] = coeff(rng) / k;
  }
  Field u = sample(grid, [&](double x) {
    double z = 0.0;
    for (int k = 1; k <= modes; ++k) z += c[k] * std::cos(k * pi * x) + s[k] * std::sin(k * pi * x);
    return std::exp(z);
  });
  const double scale = mass / quadrature(u, grid);
  for (double& x : u) x *= scale;
  return u;
}

std::vector<double> observed_orders(const std::vector<double>& errors) {
  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) out.push_back(std::log2(errors[k] / errors[k + 1]));
  return out;
}

std::vector<CheckResult> run_self_checks() {
  std::vector<CheckResult> checks;

  {
    const Grid grid(64);
    const auto spec = DiffusionSpec::inverse_u();
    const Field u(64, 2.0);
    const Field v = solve_standard(u, grid);
    const double D = eval_D(u, v, spec, grid);
    const double S = eval_source(u, v, spec, grid);
    const double err = std::max(std::abs(D - 1.0), std::abs(S - 1.0));
    checks.push_back({"steady state D = source = 1 (a=1/u, M=2)", err <= 1e-12, err, 1e-12, ""});
  }

  for (const auto& spec : {DiffusionSpec::inverse_u(), DiffusionSpec::inverse_one_plus_u(),
                           DiffusionSpec::power_one_plus_u(-2.0)}) {
    std::vector<double> residuals;
    for (int n : {64, 128, 256, 512}) {
      residuals.push_back(key_identity_residual([](double x) { return 2.0 + std::cos(pi * x); }, spec, Grid(n)));
    }
    double worst_ratio = 1e300;
    for (std::size_t k = 0; k + 1 < residuals.size(); ++k) worst_ratio = std::min(worst_ratio, residuals[k] / residuals[k + 1]);
    checks.push_back({"key identity refinement ratio (" + spec.kind_name() + ")", worst_ratio >= 1.8, worst_ratio, 1.8, ""});
  }

  {
    std::vector<double> errors;
    for (int n : {32, 64, 128, 256}) {
      const Grid grid(n);
      const Field u = sample(grid, [](double x) { return (1.0 + pi * pi) * std::cos(pi * x); });
      errors.push_back(max_error(solve_standard(u, grid), grid, [](double x) { return std::cos(pi * x); }));
    }
    checks.push_back(min_order_check("standard elliptic order (v = cos pi x)", errors, 1.9));
  }
  {
    std::vector<double> errors;
    const double M = 3.0;
    for (int n : {32, 64, 128, 256}) {
      const Grid grid(n);
      // Cell averages of cos(2 pi x) so the discrete mass is exactly M.
      const Field u = sample(grid, [&](double x) { return M + std::cos(2.0 * pi * x); });
      const Field shifted = [&] {
        Field f = u;
        const double mean = quadrature(u, grid) - M;
        for (double& x : f) x -= mean;
        return f;
      }();
      errors.push_back(max_error(solve_jl(shifted, grid, M), grid,
                                 [](double x) { return std::cos(2.0 * pi * x) / (4.0 * pi * pi); }));
    }
    checks.push_back(min_order_check("JL elliptic order (v = cos 2 pi x / 4 pi^2)", errors, 1.9));
  }

  {
    const double step = 1e-6;
    double worst = 0.0;
    for (const auto& spec : {DiffusionSpec::inverse_u(), DiffusionSpec::inverse_one_plus_u(),
                             DiffusionSpec::power_one_plus_u(-2.0), DiffusionSpec::power_one_plus_u(-0.5),
                             DiffusionSpec::power_u(-1.5)}) {
      for (double u : {0.05, 0.3, 1.0, 2.5, 17.0}) {
        const double h = step * u;
        const double fd_a = (a(spec, u + h) - a(spec, u - h)) / (2 * h);
        const double fd_A = (A(spec, u + h) - A(spec, u - h)) / (2 * h);
        const double fd_At = (A_tilde(spec, u + h) - A_tilde(spec, u - h)) / (2 * h);
        worst = std::max({worst, std::abs(fd_a - a_prime(spec, u)) / std::abs(a_prime(spec, u)),
                          std::abs(fd_A - a(spec, u)) / a(spec, u),
                          std::abs(fd_At - a(spec, u) / u) / (a(spec, u) / u)});
      }
    }
    checks.push_back({"diffusion derivatives vs centered differences", worst <= 1e-6, worst, 1e-6, ""});
  }

  {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> mass_dist(0.5, 10.0);
    const Grid grid(128);
    double worst = 1e300;
    for (int k = 0; k < 200; ++k) {
      const double M = mass_dist(rng);
      const Field u = random_smooth_field(rng, grid, M);
      for (const auto& spec : {DiffusionSpec::inverse_u(), DiffusionSpec::inverse_one_plus_u()}) {
        const auto s = check_regest(u, spec, grid, M);
        const double tol = 1e-8 * (1.0 + std::abs(eval_F(u, spec, grid)));
        worst = std::min({worst, s.slack1 + tol, s.slack2 + tol});
      }
    }
    checks.push_back({"estimate slacks on 200 random fields (min slack + tol)", worst >= 0.0, worst, 0.0, ""});
  }

  {
    ProblemConfig problem;
    problem.diffusion = DiffusionSpec::inverse_u();
    problem.initial_condition = CosineBumpIC{4.0, 0.5, 1.0};
    problem.t_end = 0.05;
    SolverConfig solver;
    solver.record_every = 100;
    double m0 = -1.0, drift = 0.0;
    const SimState s = run(problem, solver, Grid(64), [&](const MonitorRecord& r) {
      if (m0 < 0) m0 = r.mass;
      drift = std::max(drift, std::abs(r.mass - m0) / m0);
    });
    checks.push_back({"mass drift over a short critical run", drift <= 1e-10 && s.status == Status::Finished, drift,
                      1e-10, to_string(s.status)});
  }

  return checks;
}

std::string format_check_table(const std::vector<CheckResult>& checks) {
  std::string out;
  char buf[256];
  for (const auto& c : checks) {
    std::snprintf(buf, sizeof buf, "%-4s  %-58s value=%-12.4g threshold=%-10.3g %s\n", c.passed ? "PASS" : "FAIL",
                  c.name.c_str(), c.value, c.threshold, c.detail.c_str());
    out += buf;
  }
  return out;
}

}  // namespace chemo
