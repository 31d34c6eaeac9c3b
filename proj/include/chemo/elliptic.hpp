#pragma once

#include <stdexcept>
#include <vector>

#include "chemo/core.hpp"

namespace chemo {

/// The Neumann problem v'' = M - u has no solution unless int u = M.
class CompatibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TridiagonalSystem {
  std::vector<double> lower;  // lower[0] unused
  std::vector<double> main;
  std::vector<double> upper;  // upper[n-1] unused
  std::vector<double> rhs;
};

/// Single forward/backward sweep; throws std::runtime_error on a pivot below 1e-14.
Field solve_tridiagonal(TridiagonalSystem system);

/// Discrete v'' with zero flux through both boundary faces. Every second
/// derivative of v in the library goes through this stencil.
Field laplacian(const Field& v, const Grid& grid);

/// Solves 0 = v'' - v + u with homogeneous Neumann conditions.
Field solve_standard(const Field& u, const Grid& grid);

/// Solves 0 = v'' - M + u, int v = 0, with homogeneous Neumann conditions.
/// Throws CompatibilityError when |quadrature(u) - M| > 1e-8.
Field solve_jl(const Field& u, const Grid& grid, double mass);

Field solve_elliptic(Variant variant, const Field& u, const Grid& grid, double mass);

/// max_i |v'' - v + u| (Standard) or max_i |v'' - M + u| (JL) on the shared stencil.
double elliptic_residual(Variant variant, const Field& u, const Field& v, const Grid& grid,
                         double mass);

}  // namespace chemo
