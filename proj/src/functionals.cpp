#include "chemo/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "chemo/elliptic.hpp"

namespace chemo {

namespace {

// ((a(u)/u) u_x) at faces, zero on the boundary.
FaceArray inner_flux(const Field& u, const DiffusionSpec& spec, const Grid& grid) {
  const int n = grid.n_cells();
  FaceArray g(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 1; i < n; ++i) {
    const double du = u[i] - u[i - 1];
    if (du == 0.0) continue;
    const double uf = 0.5 * (u[i] + u[i - 1]);
    g[i] = a(spec, uf) / uf * du / grid.h();
  }
  return g;
}

Field divergence(const FaceArray& g, const Grid& grid) {
  Field out(static_cast<std::size_t>(grid.n_cells()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (g[i + 1] - g[i]) / grid.h();
  return out;
}

template <typename F>
double integrate_cells(const Field& u, const Grid& grid, F&& integrand) {
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += integrand(i);
  return grid.h() * sum;
}

double entropy(const Field& u, const DiffusionSpec& spec, const Grid& grid) {
  switch (spec.kind) {
    case DiffusionKind::InverseU:
      return integrate_cells(u, grid, [&](std::size_t i) { return u[i] * std::abs(std::log(u[i])); });
    case DiffusionKind::InverseOnePlusU:
      return integrate_cells(u, grid, [&](std::size_t i) { return u[i] * std::log1p(u[i]); });
    default:
      return integrate_cells(u, grid, [&](std::size_t i) { return u[i] * std::abs(A(spec, u[i])); });
  }
}

void append_number(std::string& out, double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void append_optional(std::string& out, const std::optional<double>& x) {
  if (x) append_number(out, *x);
}

}  // namespace

double gradient_term(const Field& u, const DiffusionSpec& spec, const Grid& grid) {
  double sum = 0.0;
  for (int i = 1; i < grid.n_cells(); ++i) {
    const double du = u[i] - u[i - 1];
    if (du == 0.0) continue;
    const double uf = 0.5 * (u[i] + u[i - 1]);
    const double af = a(spec, uf);
    const double grad = du / grid.h();
    sum += af * af / uf * grad * grad;
  }
  return grid.h() * sum;
}

double eval_F(const Field& u, const DiffusionSpec& spec, const Grid& grid) {
  const double potential = integrate_cells(u, grid, [&](std::size_t i) { return u[i] * A(spec, u[i]); });
  return 0.5 * gradient_term(u, spec, grid) - potential;
}

double eval_D(const Field& u, const Field& v, const DiffusionSpec& spec, const Grid& grid) {
  const Field div = divergence(inner_flux(u, spec, grid), grid);
  const Field lap = laplacian(v, grid);
  return integrate_cells(u, grid, [&](std::size_t i) {
    const double r = div[i] - lap[i] + 0.5 * v[i];
    return b(spec, u[i]) * r * r;
  });
}

double eval_source(const Field& u, const Field& v, const DiffusionSpec& spec, const Grid& grid) {
  return integrate_cells(u, grid, [&](std::size_t i) { return b(spec, u[i]) * v[i] * v[i] / 4.0; });
}

double eval_F0(const Field& u, const DiffusionSpec& spec, const Grid& grid, double mass) {
  const double potential = integrate_cells(u, grid, [&](std::size_t i) {
    return (-A(spec, u[i]) + mass * A_tilde(spec, u[i])) * u[i];
  });
  return 0.5 * gradient_term(u, spec, grid) + potential;
}

double eval_D0(const Field& u, const Field& v, const DiffusionSpec& spec, const Grid& grid) {
  const Field div = divergence(inner_flux(u, spec, grid), grid);
  const Field lap = laplacian(v, grid);
  return integrate_cells(u, grid, [&](std::size_t i) {
    const double r = div[i] - lap[i];
    return b(spec, u[i]) * r * r;
  });
}

RegularitySlacks check_regest(const Field& u, const DiffusionSpec& spec, const Grid& grid,
                              double mass) {
  const double G = gradient_term(u, spec, grid);
  const double F = eval_F(u, spec, grid);
  const double M = mass;
  const double M3 = M * M * M;
  switch (spec.kind) {
    case DiffusionKind::InverseU: {
      const double lower = 0.25 * G - M * std::log(M) - M3;
      const double upper = 2.0 + M * std::log(M) + std::pow(M, 1.5) * std::sqrt(G);
      return {F - lower, upper - entropy(u, spec, grid)};
    }
    case DiffusionKind::InverseOnePlusU: {
      const double lower = 0.25 * G - M * std::log1p(M) - M3;
      const double upper = M3 + M * std::log1p(M) + 0.25 * std::sqrt(G);
      return {F - lower, upper - entropy(u, spec, grid)};
    }
    default:
      throw std::invalid_argument("check_regest: only defined for inverse_u and inverse_one_plus_u, got " +
                                  spec.kind_name());
  }
}

Norms norms(const Field& u, const Field& v, const DiffusionSpec& spec, const Grid& grid, double p) {
  Norms out{};
  out.u_linf = u.max();
  out.u_cubic = integrate_cells(u, grid, [&](std::size_t i) { return u[i] * u[i] * u[i]; });
  out.v_lp = std::pow(integrate_cells(v, grid, [&](std::size_t i) { return std::pow(std::abs(v[i]), p); }),
                      1.0 / p);
  out.entropy = entropy(u, spec, grid);
  out.grad_seminorm = gradient_term(u, spec, grid);
  return out;
}

double key_identity_residual(const Field& phi, const DiffusionSpec& spec, const Grid& grid) {
  const int n = grid.n_cells();
  const double h = grid.h();
  // Left side: phi * d/dx M(phi), central differences throughout.
  std::vector<double> m(static_cast<std::size_t>(n), 0.0);
  for (int i = 1; i < n - 1; ++i) {
    const double f = phi[i];
    const double d1 = (phi[i + 1] - phi[i - 1]) / (2.0 * h);
    const double d2 = (phi[i + 1] - 2.0 * f + phi[i - 1]) / (h * h);
    const double af = a(spec, f);
    m[i] = af * a_prime(spec, f) / f * d1 * d1 - af * af / (2.0 * f * f) * d1 * d1 + af * af / f * d2;
  }
  // Right side: flux form through the faces, then a central difference.
  const Field div = divergence(inner_flux(phi, spec, grid), grid);
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = phi[i] * a(spec, phi[i]) * div[i];

  double worst = 0.0;
  for (int i = 2; i < n - 2; ++i) {
    const double lhs = phi[i] * (m[i + 1] - m[i - 1]) / (2.0 * h);
    const double rhs = (w[i + 1] - w[i - 1]) / (2.0 * h);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double key_identity_residual(const std::function<double(double)>& phi, const DiffusionSpec& spec,
                             const Grid& grid) {
  return key_identity_residual(sample(grid, phi), spec, grid);
}

const std::vector<std::string>& monitor_csv_columns() {
  static const std::vector<std::string> columns = {
      "t",       "mass",          "F",      "D",    "source", "F0",  "D0",
      "entropy", "grad_seminorm", "u_linf", "u_l3", "v_lp",   "energy_residual",
      "regest1_slack", "regest2_slack"};
  return columns;
}

std::string monitor_csv_header() {
  std::string out;
  for (const auto& c : monitor_csv_columns()) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

std::string to_csv_row(const MonitorRecord& r) {
  std::string out;
  out.reserve(256);
  const double fixed[] = {r.t, r.mass, r.F, r.D, r.source};
  for (double x : fixed) {
    append_number(out, x);
    out += ',';
  }
  append_optional(out, r.F0);
  out += ',';
  append_optional(out, r.D0);
  for (double x : {r.entropy, r.grad_seminorm, r.u_linf, r.u_l3, r.v_lp}) {
    out += ',';
    append_number(out, x);
  }
  out += ',';
  append_optional(out, r.energy_residual);
  out += ',';
  append_optional(out, r.regest1_slack);
  out += ',';
  append_optional(out, r.regest2_slack);
  return out;
}

AuditMode audit_mode(Variant variant) {
  return variant == Variant::Standard ? AuditMode::Standard : AuditMode::JL;
}

namespace {
double energy_residual(const MonitorRecord& r0, const MonitorRecord& r1, AuditMode mode) {
  const double dt = r1.t - r0.t;
  if (mode == AuditMode::JL) {
    if (!r0.F0 || !r1.F0 || !r0.D0 || !r1.D0) {
      throw std::invalid_argument("audit_energy: JL mode needs F0 and D0 in every record");
    }
    return (*r1.F0 - *r0.F0) / dt + 0.5 * (*r0.D0 + *r1.D0);
  }
  return (r1.F - r0.F) / dt + 0.5 * (r0.D + r1.D) - 0.5 * (r0.source + r1.source);
}
}  // namespace

EnergyAudit audit_energy(const std::vector<MonitorRecord>& records, AuditMode mode) {
  EnergyAudit audit;
  for (std::size_t k = 0; k + 1 < records.size(); ++k) {
    if (!(records[k + 1].t > records[k].t)) continue;
    const double r = energy_residual(records[k], records[k + 1], mode);
    audit.residuals.push_back(r);
    audit.max_abs = std::max(audit.max_abs, std::abs(r));
  }
  return audit;
}

MonitorRecorder::MonitorRecorder(Model model, double v_norm_exponent)
    : model_(std::move(model)), p_(v_norm_exponent) {}

MonitorRecord MonitorRecorder::observe(double t, const Field& u, const Field& v) {
  const auto& spec = model_.diffusion;
  const auto& grid = model_.grid;
  MonitorRecord r;
  r.t = t;
  r.mass = quadrature(u, grid);
  r.F = eval_F(u, spec, grid);
  r.D = eval_D(u, v, spec, grid);
  r.source = eval_source(u, v, spec, grid);
  if (model_.variant == Variant::JaegerLuckhaus) {
    r.F0 = eval_F0(u, spec, grid, model_.mass);
    r.D0 = eval_D0(u, v, spec, grid);
  }
  const Norms nm = norms(u, v, spec, grid, p_);
  r.entropy = nm.entropy;
  r.grad_seminorm = nm.grad_seminorm;
  r.u_linf = nm.u_linf;
  r.u_l3 = nm.u_cubic;
  r.v_lp = nm.v_lp;
  if (spec.is_critical_kind()) {
    const RegularitySlacks s = check_regest(u, spec, grid, model_.mass);
    r.regest1_slack = s.slack1;
    r.regest2_slack = s.slack2;
  }
  if (last_ && t > last_->t) r.energy_residual = energy_residual(*last_, r, audit_mode(model_.variant));
  last_ = r;
  return r;
}

}  // namespace chemo
