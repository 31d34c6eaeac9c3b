#include "chemo/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace chemo {

namespace {
constexpr double kMinPivot = 1e-14;
constexpr double kCompatibilityTol = 1e-8;

TridiagonalSystem neumann_laplacian_system(const Grid& grid, double shift) {
  const auto n = static_cast<std::size_t>(grid.n_cells());
  const double inv_h2 = 1.0 / (grid.h() * grid.h());
  TridiagonalSystem sys{std::vector<double>(n, inv_h2), std::vector<double>(n, -2.0 * inv_h2 - shift),
                        std::vector<double>(n, inv_h2), std::vector<double>(n, 0.0)};
  sys.lower[0] = 0.0;
  sys.upper[n - 1] = 0.0;
  sys.main[0] = -inv_h2 - shift;
  sys.main[n - 1] = -inv_h2 - shift;
  return sys;
}
}  // namespace

Field solve_tridiagonal(TridiagonalSystem sys) {
  const std::size_t n = sys.main.size();
  // Forward elimination, overwriting upper/rhs with the normalized factors.
  for (std::size_t i = 0; i < n; ++i) {
    double pivot = sys.main[i];
    if (i > 0) {
      pivot -= sys.lower[i] * sys.upper[i - 1];
      sys.rhs[i] -= sys.lower[i] * sys.rhs[i - 1];
    }
    if (std::abs(pivot) < kMinPivot) {
      throw std::runtime_error("tridiagonal solve: pivot below 1e-14 at row " + std::to_string(i));
    }
    if (i + 1 < n) sys.upper[i] /= pivot;
    sys.rhs[i] /= pivot;
  }
  Field x(std::move(sys.rhs));
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= sys.upper[i] * x[i + 1];
  return x;
}

Field laplacian(const Field& v, const Grid& grid) {
  const FaceArray grad = face_gradient(v, grid);
  Field out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (grad[i + 1] - grad[i]) / grid.h();
  return out;
}

Field solve_standard(const Field& u, const Grid& grid) {
  TridiagonalSystem sys = neumann_laplacian_system(grid, 1.0);
  for (std::size_t i = 0; i < u.size(); ++i) sys.rhs[i] = -u[i];
  return solve_tridiagonal(std::move(sys));
}

Field solve_jl(const Field& u, const Grid& grid, double mass) {
  const double discrete_mass = quadrature(u, grid);
  if (std::abs(discrete_mass - mass) > kCompatibilityTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "JL elliptic solve: quadrature(u) = " << discrete_mass << " differs from M = " << mass
        << " by more than 1e-8";
    throw CompatibilityError(msg.str());
  }
  TridiagonalSystem sys = neumann_laplacian_system(grid, 0.0);
  // Right-hand side projected onto zero mean so the singular system is consistent.
  for (std::size_t i = 0; i < u.size(); ++i) sys.rhs[i] = discrete_mass - u[i];
  // Pin cell 0 to remove the constant null space; the mean is restored below.
  sys.main[0] -= 1.0 / (grid.h() * grid.h());
  Field v = solve_tridiagonal(std::move(sys));
  const double mean = quadrature(v, grid);
  for (double& x : v) x -= mean;
  return v;
}

Field solve_elliptic(Variant variant, const Field& u, const Grid& grid, double mass) {
  return variant == Variant::Standard ? solve_standard(u, grid) : solve_jl(u, grid, mass);
}

double elliptic_residual(Variant variant, const Field& u, const Field& v, const Grid& grid,
                         double mass) {
  const Field lap = laplacian(v, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = variant == Variant::Standard ? lap[i] - v[i] + u[i] : lap[i] - mass + u[i];
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

}  // namespace chemo
