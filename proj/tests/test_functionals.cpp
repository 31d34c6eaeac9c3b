#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "chemo/elliptic.hpp"
#include "chemo/functionals.hpp"
#include "chemo/verify.hpp"

using namespace chemo;
using std::numbers::pi;

namespace {

Field smooth_u(const Grid& g) {
  return sample(g, [](double x) { return 2.0 + std::cos(pi * x); });
}
Field smooth_v(const Grid& g) {
  return sample(g, [](double x) { return 3.0 + 0.5 * std::cos(pi * x); });
}

// Continuum values for u = 2 + cos(pi x), v = 3 + cos(pi x)/2, M = 2,
// computed once with 50-digit adaptive quadrature.
struct Oracle {
  DiffusionSpec spec;
  double G, F, D, S, F0, D0, entropy;
};

const Oracle kOracles[] = {
    {DiffusionSpec::inverse_u(), 0.9497031262940094, -1.0407190620138608, 12.356023752839635,
     2.28125, 0.95928093798613919, 9.6044897599228421, 1.5155706251608655},
    {DiffusionSpec::inverse_one_plus_u(), 0.35250422580502972, -0.74822638818968591,
     6.8567793964440486, 1.5198762177912835, 0.43395785994764357, 4.331403846176342,
     2.3107728622120914},
};

}  // namespace

TEST_CASE("constant states: closed forms") {
  const Grid g(32);
  for (double M : {1.0, 2.0, 7.5}) {
    const Field u(32, M);
    CHECK(eval_F(u, DiffusionSpec::inverse_u(), g) == doctest::Approx(-M * std::log(M)).epsilon(1e-13));
    CHECK(eval_F(u, DiffusionSpec::inverse_one_plus_u(), g) ==
          doctest::Approx(-M * std::log((1 + M) / 2)).epsilon(1e-13));
    CHECK(eval_F0(u, DiffusionSpec::inverse_u(), g, M) ==
          doctest::Approx(-M * std::log(M) + M * M - M).epsilon(1e-13));
    CHECK(eval_D0(u, Field(32, 0.0), DiffusionSpec::inverse_u(), g) == 0.0);
    CHECK(eval_source(u, Field(32, 0.0), DiffusionSpec::inverse_one_plus_u(), g) == 0.0);
  }
  CHECK(eval_F(Field(32, 1.0), DiffusionSpec::inverse_u(), g) == 0.0);
}

TEST_CASE("steady state: D equals source equals int(b(u)) M^2/4") {
  const Grid g(64);
  for (const auto& spec : {DiffusionSpec::inverse_u(), DiffusionSpec::inverse_one_plus_u(),
                           DiffusionSpec::power_one_plus_u(-0.5), DiffusionSpec::power_u(0.5)}) {
    const double M = 2.0;
    const Field u(64, M);
    const Field v = solve_standard(u, g);
    const double expected = b(spec, M) * M * M / 4.0;
    CHECK(std::abs(eval_D(u, v, spec, g) - expected) <= 1e-12);
    CHECK(std::abs(eval_source(u, v, spec, g) - expected) <= 1e-12);
  }
  const Field u(64, 2.0);
  CHECK(eval_D(u, solve_standard(u, g), DiffusionSpec::inverse_u(), g) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("functionals converge to the continuum oracle") {
  for (const auto& o : kOracles) {
    CAPTURE(o.spec.kind_name());
    double prev_err = INFINITY;
    for (int n : {256, 512, 1024}) {
      const Grid g(n);
      const Field u = smooth_u(g), v = smooth_v(g);
      const double err = std::max({std::abs(gradient_term(u, o.spec, g) - o.G),
                                   std::abs(eval_F(u, o.spec, g) - o.F),
                                   std::abs(eval_D(u, v, o.spec, g) - o.D) / 10.0,
                                   std::abs(eval_source(u, v, o.spec, g) - o.S),
                                   std::abs(eval_F0(u, o.spec, g, 2.0) - o.F0),
                                   std::abs(eval_D0(u, v, o.spec, g) - o.D0) / 10.0,
                                   std::abs(norms(u, v, o.spec, g, 2.0).entropy - o.entropy)});
      CHECK(err < prev_err);
      CHECK(err <= 20.0 / n);
      prev_err = err;
    }
  }
}

TEST_CASE("norms: constants and spec-independent oracles") {
  const Grid g(32);
  const Norms one = norms(Field(32, 1.0), Field(32, 1.0), DiffusionSpec::inverse_u(), g, 2.0);
  CHECK(one.entropy == 0.0);
  CHECK(one.grad_seminorm == 0.0);
  CHECK(one.u_cubic == doctest::Approx(1.0));
  const Field uM(32, 3.0);
  CHECK(norms(uM, solve_standard(uM, g), DiffusionSpec::inverse_u(), g, 2.0).v_lp ==
        doctest::Approx(3.0).epsilon(1e-12));

  const Grid fine(1024);
  const Norms n = norms(smooth_u(fine), smooth_v(fine), DiffusionSpec::inverse_u(), fine, 2.0);
  CHECK(n.u_cubic == doctest::Approx(11.0).epsilon(1e-5));
  CHECK(n.v_lp == doctest::Approx(3.020761493398643).epsilon(1e-5));
  CHECK(n.u_linf == doctest::Approx(3.0).epsilon(1e-5));
}

TEST_CASE("D and source are non-negative on random states") {
  std::mt19937_64 rng(5);
  const Grid g(96);
  for (int k = 0; k < 50; ++k) {
    const Field u = random_smooth_field(rng, g, 0.5 + 0.2 * k);
    const Field v = solve_standard(u, g);
    for (const auto& spec : {DiffusionSpec::inverse_u(), DiffusionSpec::power_one_plus_u(-2.0)}) {
      CHECK(eval_D(u, v, spec, g) >= 0.0);
      CHECK(eval_source(u, v, spec, g) >= 0.0);
      CHECK(eval_D0(u, v, spec, g) >= 0.0);
    }
  }
}

TEST_CASE("check_regest: constant examples and rejection of other kinds") {
  const Grid g(16);
  const RegularitySlacks s = check_regest(Field(16, 1.0), DiffusionSpec::inverse_u(), g, 1.0);
  CHECK(s.slack1 == doctest::Approx(1.0));
  CHECK(s.slack2 == doctest::Approx(2.0));
  CHECK_THROWS_AS(check_regest(Field(16, 1.0), DiffusionSpec::power_one_plus_u(-2.0), g, 1.0),
                  std::invalid_argument);
}

TEST_CASE("check_regest holds on random fields of mass 4") {
  std::mt19937_64 rng(17);
  const Grid g(128);
  for (int k = 0; k < 100; ++k) {
    const Field u = random_smooth_field(rng, g, 4.0);
    for (const auto& spec : {DiffusionSpec::inverse_u(), DiffusionSpec::inverse_one_plus_u()}) {
      const RegularitySlacks s = check_regest(u, spec, g, 4.0);
      CHECK(s.slack1 >= 0.0);
      CHECK(s.slack2 >= 0.0);
    }
  }
}

TEST_CASE("key identity residual") {
  const Grid g(64);
  CHECK(key_identity_residual([](double) { return 2.5; }, DiffusionSpec::inverse_u(), g) == 0.0);
  auto phi = [](double x) { return 2.0 + std::cos(pi * x); };
  for (const auto& spec : {DiffusionSpec::inverse_u(), DiffusionSpec::inverse_one_plus_u(),
                           DiffusionSpec::power_one_plus_u(-2.0)}) {
    CAPTURE(spec.kind_name());
    const double r128 = key_identity_residual(phi, spec, Grid(128));
    const double r256 = key_identity_residual(phi, spec, Grid(256));
    CHECK(r128 / r256 >= 1.8);
  }
}

TEST_CASE("CSV columns and row formatting") {
  const std::vector<std::string> expected = {
      "t", "mass", "F", "D", "source", "F0", "D0", "entropy", "grad_seminorm", "u_linf", "u_l3",
      "v_lp", "energy_residual", "regest1_slack", "regest2_slack"};
  CHECK(monitor_csv_columns() == expected);
  CHECK(monitor_csv_header() ==
        "t,mass,F,D,source,F0,D0,entropy,grad_seminorm,u_linf,u_l3,v_lp,energy_residual,regest1_slack,"
        "regest2_slack");
  MonitorRecord r;
  r.t = 0.5;
  r.mass = 1.0;
  const std::string row = to_csv_row(r);
  CHECK(std::count(row.begin(), row.end(), ',') == 14);
  CHECK(row.rfind("0.5,1,", 0) == 0);
  CHECK(row.find(",,") != std::string::npos);
}

TEST_CASE("audit_energy") {
  MonitorRecord a, b;
  a.t = 0.0;
  a.F = 1.0;
  a.D = 2.0;
  a.source = 1.0;
  b = a;
  b.t = 0.5;
  b.F = 0.5;
  b.D = 4.0;
  b.source = 1.0;
  // (0.5 - 1)/0.5 + 3 - 1 = 1
  const EnergyAudit audit = audit_energy({a, b}, AuditMode::Standard);
  REQUIRE(audit.residuals.size() == 1);
  CHECK(audit.residuals[0] == doctest::Approx(1.0));
  CHECK(audit.max_abs == doctest::Approx(1.0));
  CHECK_THROWS_AS(audit_energy({a, b}, AuditMode::JL), std::invalid_argument);
  CHECK(audit_mode(Variant::JaegerLuckhaus) == AuditMode::JL);
}

TEST_CASE("MonitorRecorder fills mode-specific fields") {
  const Grid g(32);
  const Field u(32, 2.0);
  MonitorRecorder standard(Model{g, DiffusionSpec::inverse_u(), Variant::Standard, 2.0}, 2.0);
  MonitorRecord r0 = standard.observe(0.0, u, solve_standard(u, g));
  CHECK_FALSE(r0.F0.has_value());
  CHECK(r0.regest1_slack.has_value());
  CHECK_FALSE(r0.energy_residual.has_value());
  MonitorRecord r1 = standard.observe(0.1, u, solve_standard(u, g));
  REQUIRE(r1.energy_residual.has_value());
  CHECK(std::abs(*r1.energy_residual) <= 1e-12);

  MonitorRecorder jl(Model{g, DiffusionSpec::power_one_plus_u(-2.0), Variant::JaegerLuckhaus, 2.0}, 2.0);
  MonitorRecord j = jl.observe(0.0, u, solve_jl(u, g, 2.0));
  CHECK(j.F0.has_value());
  CHECK(j.D0.has_value());
  CHECK_FALSE(j.regest1_slack.has_value());
}
