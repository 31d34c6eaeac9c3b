#include "chemo/diffusion.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

namespace chemo {

namespace {

void require_admissible(const DiffusionSpec& spec, double u) {
  if (!spec.admissible(u)) {
    std::ostringstream msg;
    msg << "diffusion " << spec.kind_name() << ": u = " << u << " outside admissible range ("
        << (spec.singular_at_zero() ? "u > 0" : "u >= 0") << ")";
    throw DomainError(msg.str());
  }
}

// int_1^u (1+r)^p / r dr after r = e^s, which turns the interval into [0, ln u]
// with a smooth bounded integrand.
double power_one_plus_u_tilde(double p, double u) {
  auto integrand = [p](double s) { return std::pow(1.0 + std::exp(s), p); };
  const double upper = std::log(u);
  if (upper == 0.0) return 0.0;
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, upper, 8,
                                                                        1e-12, &err);
}

}  // namespace

std::string to_string(Criticality c) {
  switch (c) {
    case Criticality::Subcritical: return "subcritical";
    case Criticality::Critical: return "critical";
    case Criticality::Supercritical: return "supercritical";
  }
  return "unknown";
}

bool DiffusionSpec::singular_at_zero() const {
  switch (kind) {
    case DiffusionKind::InverseU: return true;
    case DiffusionKind::PowerU: return p < 0.0;
    default: return false;
  }
}

bool DiffusionSpec::is_critical_kind() const {
  return kind == DiffusionKind::InverseU || kind == DiffusionKind::InverseOnePlusU;
}

double DiffusionSpec::exponent() const {
  return is_critical_kind() ? -1.0 : p;
}

Criticality DiffusionSpec::criticality() const {
  const double q = exponent();
  if (q > -1.0) return Criticality::Subcritical;
  if (q < -1.0) return Criticality::Supercritical;
  return Criticality::Critical;
}

std::string DiffusionSpec::kind_name() const {
  switch (kind) {
    case DiffusionKind::InverseU: return "inverse_u";
    case DiffusionKind::InverseOnePlusU: return "inverse_one_plus_u";
    case DiffusionKind::PowerOnePlusU: return "power_one_plus_u";
    case DiffusionKind::PowerU: return "power_u";
  }
  return "unknown";
}

DiffusionSpec DiffusionSpec::from_name(const std::string& kind, double p) {
  if (kind == "inverse_u") return inverse_u();
  if (kind == "inverse_one_plus_u") return inverse_one_plus_u();
  if (kind == "power_one_plus_u") return power_one_plus_u(p);
  if (kind == "power_u") return power_u(p);
  throw std::invalid_argument("unknown diffusion kind '" + kind + "'");
}

bool DiffusionSpec::admissible(double u) const {
  if (!std::isfinite(u)) return false;
  return singular_at_zero() ? u > 0.0 : u >= 0.0;
}

double a(const DiffusionSpec& spec, double u) {
  require_admissible(spec, u);
  switch (spec.kind) {
    case DiffusionKind::InverseU: return 1.0 / u;
    case DiffusionKind::InverseOnePlusU: return 1.0 / (1.0 + u);
    case DiffusionKind::PowerOnePlusU: return std::pow(1.0 + u, spec.p);
    case DiffusionKind::PowerU: return std::pow(u, spec.p);
  }
  return 0.0;
}

double a_prime(const DiffusionSpec& spec, double u) {
  require_admissible(spec, u);
  switch (spec.kind) {
    case DiffusionKind::InverseU: return -1.0 / (u * u);
    case DiffusionKind::InverseOnePlusU: return -1.0 / ((1.0 + u) * (1.0 + u));
    case DiffusionKind::PowerOnePlusU: return spec.p * std::pow(1.0 + u, spec.p - 1.0);
    case DiffusionKind::PowerU:
      return spec.p == 0.0 ? 0.0 : spec.p * std::pow(u, spec.p - 1.0);
  }
  return 0.0;
}

double A(const DiffusionSpec& spec, double u) {
  require_admissible(spec, u);
  switch (spec.kind) {
    case DiffusionKind::InverseU: return std::log(u);
    case DiffusionKind::InverseOnePlusU: return std::log1p(u) - std::log(2.0);
    case DiffusionKind::PowerOnePlusU: {
      const double q = spec.p + 1.0;
      if (q == 0.0) return std::log1p(u) - std::log(2.0);
      return (std::pow(1.0 + u, q) - std::pow(2.0, q)) / q;
    }
    case DiffusionKind::PowerU: {
      const double q = spec.p + 1.0;
      if (q == 0.0) return std::log(u);
      return (std::pow(u, q) - 1.0) / q;
    }
  }
  return 0.0;
}

double A_tilde(const DiffusionSpec& spec, double u) {
  require_admissible(spec, u);
  if (u <= 0.0) throw DomainError("A_tilde requires u > 0");
  switch (spec.kind) {
    case DiffusionKind::InverseU: return 1.0 - 1.0 / u;
    case DiffusionKind::InverseOnePlusU: return std::log(2.0 * u / (1.0 + u));
    case DiffusionKind::PowerOnePlusU:
      if (spec.p == 0.0) return std::log(u);
      if (spec.p == -1.0) return std::log(2.0 * u / (1.0 + u));
      if (spec.p == -2.0) {
        return std::log(2.0 * u / (1.0 + u)) + 1.0 / (1.0 + u) - 0.5;
      }
      return power_one_plus_u_tilde(spec.p, u);
    case DiffusionKind::PowerU:
      if (spec.p == 0.0) return std::log(u);
      return (std::pow(u, spec.p) - 1.0) / spec.p;
  }
  return 0.0;
}

double b(const DiffusionSpec& spec, double u) {
  if (spec.kind == DiffusionKind::InverseU) {
    require_admissible(spec, u);
    return 1.0;
  }
  return u * a(spec, u);
}

}  // namespace chemo
