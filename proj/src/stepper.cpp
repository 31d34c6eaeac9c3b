#include "chemo/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chemo/elliptic.hpp"

namespace chemo {

namespace {
constexpr double kGrowthCap = 1.2;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Running: return "Running";
    case Status::Finished: return "Finished";
    case Status::BlowupSuspected: return "BlowupSuspected";
    case Status::DtCollapse: return "DtCollapse";
  }
  return "Unknown";
}

SimState initial_state(const ProblemConfig& problem, const Model& model) {
  SimState s;
  s.u = realize_initial_condition(problem.initial_condition, model.grid);
  for (double x : s.u) {
    if (!model.diffusion.admissible(x)) {
      throw DomainError("initial condition leaves the admissible range of " + model.diffusion.kind_name());
    }
  }
  s.v = solve_elliptic(model.variant, s.u, model.grid, model.mass);
  return s;
}

FaceArray compute_fluxes(const Field& u, const Field& v, const Grid& grid, const DiffusionSpec& spec) {
  const int n = grid.n_cells();
  const double inv_h = 1.0 / grid.h();
  FaceArray q(static_cast<std::size_t>(n) + 1, 0.0);
  double a_left = A(spec, u[0]);
  for (int i = 1; i < n; ++i) {
    const double a_right = A(spec, u[i]);
    const double velocity = (v[i] - v[i - 1]) * inv_h;
    const double upwind = velocity > 0.0 ? u[i - 1] : u[i];
    q[i] = (a_right - a_left) * inv_h - upwind * velocity;
    a_left = a_right;
  }
  return q;
}

double stable_dt(const Field& u, const Field& v, const Grid& grid, const DiffusionSpec& spec,
                 const SolverConfig& cfg) {
  const double h = grid.h();
  double max_a = 0.0;
  for (double x : u) max_a = std::max(max_a, a(spec, x));
  double max_velocity = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) max_velocity = std::max(max_velocity, std::abs(v[i] - v[i - 1]) / h);
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double dt_diff = max_a > 0.0 ? cfg.cfl_diff * h * h / (2.0 * max_a) : inf;
  const double dt_adv = max_velocity > 0.0 ? cfg.cfl_adv * h / max_velocity : inf;
  return std::min(dt_diff, dt_adv);
}

SimState step(const SimState& state, const Model& model, const SolverConfig& cfg, double t_stop) {
  SimState next = state;
  if (state.status != Status::Running) return next;
  const Grid& grid = model.grid;
  const DiffusionSpec& spec = model.diffusion;

  double dt = stable_dt(state.u, state.v, grid, spec, cfg);
  if (state.dt_proposal > 0.0) dt = std::min(dt, kGrowthCap * state.dt_proposal);

  const FaceArray q = compute_fluxes(state.u, state.v, grid, spec);
  Field trial(state.u.size());
  for (;;) {
    if (!(dt >= cfg.dt_min)) {
      next.status = Status::DtCollapse;
      return next;
    }
    const bool clipped = state.t + dt >= t_stop;
    double dt_used = clipped ? t_stop - state.t : dt;
    // Split the last stretch in two rather than leaving a sliver step.
    if (!clipped && state.t + 2.0 * dt > t_stop) dt_used = 0.5 * (t_stop - state.t);
    const double ratio = dt_used / grid.h();
    bool admissible = true;
    for (std::size_t i = 0; i < trial.size(); ++i) {
      trial[i] = state.u[i] + ratio * (q[i + 1] - q[i]);
      if (!spec.admissible(trial[i])) {
        admissible = false;
        break;
      }
    }
    if (admissible) {
      next.u = trial;
      next.v = solve_elliptic(model.variant, next.u, grid, model.mass);
      next.t = clipped ? t_stop : state.t + dt_used;
      next.dt = dt_used;
      next.dt_proposal = dt;
      next.step = state.step + 1;
      if (next.u.max() > cfg.blowup_threshold) next.status = Status::BlowupSuspected;
      return next;
    }
    ++next.rejected;
    dt *= 0.5;
  }
}

SimState run(const ProblemConfig& problem, const SolverConfig& solver, const Grid& grid,
             const MonitorSink& sink, const RunHooks& hooks) {
  problem.validate();
  solver.validate();
  const Model model{grid, problem.diffusion, problem.variant, problem.mass()};
  SimState state = initial_state(problem, model);
  if (!(solver.blowup_threshold > state.u.max())) {
    throw std::invalid_argument("blowup_threshold must exceed max u0");
  }

  MonitorRecorder recorder(model, solver.v_norm_exponent);
  auto emit = [&](const SimState& s) {
    const MonitorRecord r = recorder.observe(s.t, s.u, s.v);
    if (sink) sink(r);
  };

  std::size_t next_stop = 0;
  auto handle_stops = [&] {
    while (next_stop < hooks.stop_times.size() && hooks.stop_times[next_stop] <= state.t) {
      if (hooks.on_stop_time) hooks.on_stop_time(state);
      ++next_stop;
    }
  };

  emit(state);
  handle_stops();
  long since_record = 0;
  while (state.status == Status::Running) {
    const double t_stop = next_stop < hooks.stop_times.size()
                              ? std::min(hooks.stop_times[next_stop], problem.t_end)
                              : problem.t_end;
    SimState next = step(state, model, solver, t_stop);
    if (next.status == Status::DtCollapse) {
      state.status = Status::DtCollapse;
      state.rejected = next.rejected;
      break;
    }
    state = std::move(next);
    if (state.t >= problem.t_end && state.status == Status::Running) state.status = Status::Finished;
    ++since_record;
    if (state.status != Status::Running || since_record >= solver.record_every) {
      emit(state);
      since_record = 0;
    }
    handle_stops();
  }
  if (since_record != 0) emit(state);
  return state;
}

}  // namespace chemo
