#pragma once

#include <stdexcept>
#include <string>

namespace chemo {

/// Raised when a nonlinearity is evaluated outside its admissible range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class DiffusionKind { InverseU, InverseOnePlusU, PowerOnePlusU, PowerU };

/// Position of the diffusion relative to the 1D critical exponent p = -1.
enum class Criticality { Subcritical, Critical, Supercritical };

std::string to_string(Criticality c);

/// The diffusion nonlinearity a(u) of u_t = (a(u) u_x - u v_x)_x.
///
/// Kinds:
///   InverseU        a(u) = 1/u
///   InverseOnePlusU a(u) = 1/(1+u)
///   PowerOnePlusU   a(u) = (1+u)^p
///   PowerU          a(u) = u^p
///
/// Primitives are normalized at u = 1: A(1) = 0 and A_tilde(1) = 0.
struct DiffusionSpec {
  DiffusionKind kind = DiffusionKind::InverseU;
  double p = -1.0;

  static DiffusionSpec inverse_u() { return {DiffusionKind::InverseU, -1.0}; }
  static DiffusionSpec inverse_one_plus_u() { return {DiffusionKind::InverseOnePlusU, -1.0}; }
  static DiffusionSpec power_one_plus_u(double p) { return {DiffusionKind::PowerOnePlusU, p}; }
  static DiffusionSpec power_u(double p) { return {DiffusionKind::PowerU, p}; }

  /// True when a(u) blows up as u -> 0, so states must stay strictly positive.
  bool singular_at_zero() const;
  /// True for 1/u and 1/(1+u), the two kinds the estimate checks cover.
  bool is_critical_kind() const;
  /// Effective exponent: -1 for the two inverse kinds.
  double exponent() const;
  Criticality criticality() const;

  /// Config-file name: inverse_u, inverse_one_plus_u, power_one_plus_u, power_u.
  std::string kind_name() const;
  static DiffusionSpec from_name(const std::string& kind, double p);

  bool admissible(double u) const;
};

double a(const DiffusionSpec& spec, double u);
double a_prime(const DiffusionSpec& spec, double u);
/// A(u) = int_1^u a(r) dr.
double A(const DiffusionSpec& spec, double u);
/// A_tilde(u) = int_1^u a(r)/r dr. Requires u > 0 for every kind.
double A_tilde(const DiffusionSpec& spec, double u);
/// b(u) = u a(u); equals 1 for a = 1/u and u/(1+u) for a = 1/(1+u).
double b(const DiffusionSpec& spec, double u);

}  // namespace chemo
