#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chemo/core.hpp"

namespace chemo {

// Discretization conventions shared by every evaluator below:
//  * face values of u are arithmetic means of the two adjacent cells,
//  * face gradients are (u_i - u_{i-1})/h with zero boundary faces,
//  * second derivatives of v use the elliptic solver's stencil (laplacian()),
//  * integrals use the midpoint rule.

/// G(u) = int a(u)^2/u |u_x|^2, summed over interior faces.
double gradient_term(const Field& u, const DiffusionSpec& spec, const Grid& grid);

/// F(u) = 1/2 G(u) - int u A(u).
double eval_F(const Field& u, const DiffusionSpec& spec, const Grid& grid);

/// D(u, v) = int u a(u) |((a(u)/u) u_x)_x - v_xx + v/2|^2.
double eval_D(const Field& u, const Field& v, const DiffusionSpec& spec, const Grid& grid);

/// int b(u) v^2 / 4 with b(u) = u a(u).
double eval_source(const Field& u, const Field& v, const DiffusionSpec& spec, const Grid& grid);

/// F0(u) = 1/2 G(u) + int (-A(u) + M A_tilde(u)) u. Requires u > 0.
double eval_F0(const Field& u, const DiffusionSpec& spec, const Grid& grid, double mass);

/// D0(u, v) = int u a(u) |((a(u)/u) u_x)_x - v_xx|^2.
double eval_D0(const Field& u, const Field& v, const DiffusionSpec& spec, const Grid& grid);

struct RegularitySlacks {
  double slack1;  // F(u) minus its lower bound
  double slack2;  // entropy upper bound minus entropy
};

/// Lower bound on F and upper bound on the entropy, for the two critical kinds.
///
/// a = 1/u:      F >= G/4 - M log M - M^3,
///               int u|log u| <= 2 + M log M + M^{3/2} G^{1/2}
/// a = 1/(1+u):  F >= G/4 - M log(1+M) - M^3,
///               int u log(1+u) <= M^3 + M log(1+M) + G^{1/2}/4
///
/// Throws std::invalid_argument for any other kind.
RegularitySlacks check_regest(const Field& u, const DiffusionSpec& spec, const Grid& grid,
                              double mass);

struct Norms {
  double u_linf;
  double u_cubic;  // int u^3
  double v_lp;
  double entropy;
  double grad_seminorm;
};

/// entropy is int u|log u| for a = 1/u, int u log(1+u) for a = 1/(1+u) and
/// int u |A(u)| otherwise; grad_seminorm is G(u).
Norms norms(const Field& u, const Field& v, const DiffusionSpec& spec, const Grid& grid,
            double p);

/// Max over cells 2..n-3 of |phi (M(phi))_x - (phi a(phi) ((a(phi)/phi) phi_x)_x)_x| with
/// M(phi) = (a a'/phi) phi_x^2 - (a^2/(2 phi^2)) phi_x^2 + (a^2/phi) phi_xx.
/// Both sides use second-order stencils, so the value is pure truncation error.
double key_identity_residual(const Field& phi, const DiffusionSpec& spec, const Grid& grid);
double key_identity_residual(const std::function<double(double)>& phi, const DiffusionSpec& spec,
                             const Grid& grid);

// ---------------------------------------------------------------------------
// Time series

struct MonitorRecord {
  double t = 0.0;
  double mass = 0.0;
  double F = 0.0;
  double D = 0.0;
  double source = 0.0;
  std::optional<double> F0;
  std::optional<double> D0;
  double entropy = 0.0;
  double grad_seminorm = 0.0;
  double u_linf = 0.0;
  double u_l3 = 0.0;  // int u^3
  double v_lp = 0.0;
  std::optional<double> energy_residual;
  std::optional<double> regest1_slack;
  std::optional<double> regest2_slack;
};

/// Column order of the time-series CSV.
const std::vector<std::string>& monitor_csv_columns();
std::string monitor_csv_header();
/// One LF-free CSV row; absent optionals are empty cells.
std::string to_csv_row(const MonitorRecord& record);

enum class AuditMode { Standard, JL };

struct EnergyAudit {
  std::vector<double> residuals;
  double max_abs = 0.0;
};

/// residual_n = (F_{n+1} - F_n)/dt + (D_n + D_{n+1})/2 - (S_n + S_{n+1})/2.
/// JL mode uses F0, D0 and a zero source.
EnergyAudit audit_energy(const std::vector<MonitorRecord>& records, AuditMode mode);

AuditMode audit_mode(Variant variant);

/// Builds MonitorRecords for one trajectory, filling energy_residual against
/// the previously observed record.
class MonitorRecorder {
 public:
  MonitorRecorder(Model model, double v_norm_exponent);

  MonitorRecord observe(double t, const Field& u, const Field& v);
  const std::optional<MonitorRecord>& last() const { return last_; }

 private:
  Model model_;
  double p_;
  std::optional<MonitorRecord> last_;
};

}  // namespace chemo
