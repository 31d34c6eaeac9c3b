#include "chemo/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace chemo {

Grid::Grid(int n_cells) : n_cells_(n_cells), h_(0.0) {
  if (n_cells < 4) {
    throw std::invalid_argument("grid needs at least 4 cells, got " + std::to_string(n_cells));
  }
  h_ = 1.0 / n_cells;
}

double Field::max() const { return *std::max_element(values_.begin(), values_.end()); }

double Field::min() const { return *std::min_element(values_.begin(), values_.end()); }

bool Field::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double x) { return std::isfinite(x); });
}

FaceArray face_gradient(const Field& f, const Grid& grid) {
  const int n = grid.n_cells();
  FaceArray out(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 1; i < n; ++i) out[i] = (f[i] - f[i - 1]) / grid.h();
  return out;
}

double quadrature(const Field& f, const Grid& grid) {
  double sum = 0.0;
  for (double x : f) sum += x;
  return grid.h() * sum;
}

std::string to_string(Variant v) {
  return v == Variant::Standard ? "standard" : "jaeger_luckhaus";
}

Variant variant_from_string(const std::string& s) {
  if (s == "standard") return Variant::Standard;
  if (s == "jaeger_luckhaus" || s == "jl") return Variant::JaegerLuckhaus;
  throw std::invalid_argument("unknown variant '" + s + "' (expected standard or jaeger_luckhaus)");
}

double ic_mass(const ICSpec& ic) {
  return std::visit([](const auto& c) { return c.mass; }, ic);
}

std::string ic_kind(const ICSpec& ic) {
  struct Namer {
    std::string operator()(const ConstantIC&) const { return "constant"; }
    std::string operator()(const CosineBumpIC&) const { return "cosine_bump"; }
    std::string operator()(const GaussianBumpIC&) const { return "gaussian_bump"; }
  };
  return std::visit(Namer{}, ic);
}

void validate_initial_condition(const ICSpec& ic, const DiffusionSpec& diffusion) {
  const double mass = ic_mass(ic);
  if (!(std::isfinite(mass) && mass > 0.0)) {
    throw std::invalid_argument("initial mass must be positive and finite");
  }
  const bool singular = diffusion.singular_at_zero();
  if (const auto* c = std::get_if<CosineBumpIC>(&ic)) {
    if (!std::isfinite(c->amplitude) || !std::isfinite(c->frequency) || c->frequency < 0.0) {
      throw std::invalid_argument("cosine_bump: amplitude and frequency must be finite, frequency >= 0");
    }
    if (std::abs(c->amplitude) > 1.0) {
      throw std::invalid_argument("cosine_bump: |amplitude| > 1 makes u0 negative");
    }
    if (singular && std::abs(c->amplitude) >= 1.0) {
      throw std::invalid_argument(
          "cosine_bump: diffusion " + diffusion.kind_name() +
          " is singular at 0, so u0 >= m0 > 0 is required (|amplitude| must be < 1)");
    }
  } else if (const auto* g = std::get_if<GaussianBumpIC>(&ic)) {
    if (!(g->width > 0.0) || !std::isfinite(g->center)) {
      throw std::invalid_argument("gaussian_bump: width must be positive, center finite");
    }
    if (!(g->floor >= 0.0)) throw std::invalid_argument("gaussian_bump: floor must be >= 0");
    if (!(g->floor < mass)) throw std::invalid_argument("gaussian_bump: floor must be below the mass");
    if (singular && g->floor <= 0.0) {
      throw std::invalid_argument(
          "gaussian_bump: diffusion " + diffusion.kind_name() +
          " is singular at 0, so u0 >= m0 > 0 is required (floor must be > 0)");
    }
  }
}

Field realize_initial_condition(const ICSpec& ic, const Grid& grid) {
  constexpr double pi = std::numbers::pi;
  Field u;
  if (const auto* c = std::get_if<ConstantIC>(&ic)) {
    return Field(static_cast<std::size_t>(grid.n_cells()), c->mass);
  } else if (const auto* c = std::get_if<CosineBumpIC>(&ic)) {
    u = sample(grid, [&](double x) { return 1.0 + c->amplitude * std::cos(c->frequency * pi * x); });
  } else if (const auto* g = std::get_if<GaussianBumpIC>(&ic)) {
    const Field bump = sample(grid, [&](double x) {
      const double z = (x - g->center) / g->width;
      return std::exp(-0.5 * z * z);
    });
    const double k = (g->mass - g->floor) / quadrature(bump, grid);
    u = Field(bump.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = g->floor + k * bump[i];
  }
  const double scale = ic_mass(ic) / quadrature(u, grid);
  for (double& x : u) x *= scale;
  return u;
}

void ProblemConfig::validate() const {
  if (!(std::isfinite(t_end) && t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
  validate_initial_condition(initial_condition, diffusion);
}

void SolverConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  require(cfl_diff > 0.0 && cfl_diff <= 1.0, "cfl_diff must lie in (0, 1]");
  require(cfl_adv > 0.0 && cfl_adv <= 1.0, "cfl_adv must lie in (0, 1]");
  require(dt_min > 0.0, "dt_min must be positive");
  require(blowup_threshold > 0.0, "blowup_threshold must be positive");
  require(record_every >= 1, "record_every must be a positive integer");
  require(v_norm_exponent >= 1.0 && std::isfinite(v_norm_exponent), "v_norm_exponent must be >= 1");
}

}  // namespace chemo
