#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "chemo/diffusion.hpp"

namespace chemo {

/// Uniform cell-centered mesh of (0,1).
class Grid {
 public:
  explicit Grid(int n_cells);

  int n_cells() const { return n_cells_; }
  double h() const { return h_; }
  /// Cell center x_i = (i + 1/2) h.
  double x(int i) const { return (i + 0.5) * h_; }
  /// Face position x_{i-1/2} = i h, for i in [0, n_cells].
  double face_x(int i) const { return i * h_; }

 private:
  int n_cells_;
  double h_;
};

/// Cell-centered samples of a scalar function (u, v, or derived quantities).
class Field {
 public:
  Field() = default;
  explicit Field(std::size_t n, double value = 0.0) : values_(n, value) {}
  explicit Field(std::vector<double> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

  auto begin() { return values_.begin(); }
  auto end() { return values_.end(); }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  std::span<const double> view() const { return values_; }
  const std::vector<double>& values() const { return values_; }

  double max() const;
  double min() const;
  bool all_finite() const;

 private:
  std::vector<double> values_;
};

/// Values at the n_cells+1 faces; entry i sits at x = i h.
using FaceArray = std::vector<double>;

/// Samples f at every cell center.
template <typename F>
Field sample(const Grid& grid, F&& f) {
  Field out(static_cast<std::size_t>(grid.n_cells()));
  for (int i = 0; i < grid.n_cells(); ++i) out[i] = f(grid.x(i));
  return out;
}

/// Interior faces hold (f_i - f_{i-1})/h; both boundary faces are 0 (no flux).
FaceArray face_gradient(const Field& f, const Grid& grid);

/// Midpoint rule h * sum f_i.
double quadrature(const Field& f, const Grid& grid);

// ---------------------------------------------------------------------------
// Problem description

enum class Variant { Standard, JaegerLuckhaus };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct ConstantIC {
  double mass;
};

/// M (1 + amplitude cos(frequency pi x)), renormalized to mass M.
struct CosineBumpIC {
  double mass;
  double amplitude;
  double frequency;
};

/// floor + K exp(-(x-center)^2 / (2 width^2)) with K set by the mass.
struct GaussianBumpIC {
  double mass;
  double center;
  double width;
  double floor;
};

using ICSpec = std::variant<ConstantIC, CosineBumpIC, GaussianBumpIC>;

double ic_mass(const ICSpec& ic);
std::string ic_kind(const ICSpec& ic);

/// Throws std::invalid_argument if the IC cannot be realized for this diffusion
/// (negative values, or a zero floor when a(u) is singular at the origin).
void validate_initial_condition(const ICSpec& ic, const DiffusionSpec& diffusion);

/// Samples the IC and rescales it so quadrature(u0) == M to rounding.
Field realize_initial_condition(const ICSpec& ic, const Grid& grid);

struct ProblemConfig {
  Variant variant = Variant::Standard;
  DiffusionSpec diffusion = DiffusionSpec::inverse_u();
  ICSpec initial_condition = ConstantIC{1.0};
  double t_end = 1.0;

  double mass() const { return ic_mass(initial_condition); }
  void validate() const;
};

struct SolverConfig {
  double cfl_diff = 0.4;
  double cfl_adv = 0.9;
  double dt_min = 1e-12;
  double blowup_threshold = 1e6;
  int record_every = 10;
  /// Exponent p of the ||v||_{L^p} monitor.
  double v_norm_exponent = 2.0;

  void validate() const;
};

/// Everything the discrete operators need to know about one trajectory.
struct Model {
  Grid grid;
  DiffusionSpec diffusion;
  Variant variant = Variant::Standard;
  /// Initial mass M; the JL elliptic equation and the estimates use it.
  double mass = 1.0;
};

}  // namespace chemo
