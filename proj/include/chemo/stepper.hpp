#pragma once

#include <functional>
#include <span>
#include <string>

#include "chemo/core.hpp"
#include "chemo/functionals.hpp"

namespace chemo {

enum class Status { Running, Finished, BlowupSuspected, DtCollapse };

std::string to_string(Status s);

struct SimState {
  double t = 0.0;
  Field u;
  Field v;
  /// Last accepted step size (0 before the first step).
  double dt = 0.0;
  long step = 0;
  Status status = Status::Running;
  /// Step size chosen by the stability limits before clipping to a stop time;
  /// the 1.2x growth cap is measured against it.
  double dt_proposal = 0.0;
  long rejected = 0;
};

/// Initial state: realized u0 and its elliptic partner.
SimState initial_state(const ProblemConfig& problem, const Model& model);

/// q_{i-1/2} = (A(u_i) - A(u_{i-1}))/h - u_up (v_i - v_{i-1})/h on interior faces,
/// u_up taken from the cell the velocity (v_i - v_{i-1})/h points away from.
/// Boundary faces are exactly 0.
FaceArray compute_fluxes(const Field& u, const Field& v, const Grid& grid, const DiffusionSpec& spec);

/// Stable step: min(cfl_diff h^2 / (2 max a(u)), cfl_adv h / max |v_x|).
double stable_dt(const Field& u, const Field& v, const Grid& grid, const DiffusionSpec& spec,
                 const SolverConfig& cfg);

/// One explicit conservative update u_i += (dt/h)(q_{i+1/2} - q_{i-1/2}), refreshing v.
/// Steps that would leave the admissible range are retried with dt/2; the
/// status becomes DtCollapse once dt < dt_min and BlowupSuspected once
/// max u > blowup_threshold. The step never passes t_stop.
SimState step(const SimState& state, const Model& model, const SolverConfig& cfg, double t_stop);

using MonitorSink = std::function<void(const MonitorRecord&)>;

struct RunHooks {
  /// Extra times the trajectory must land on exactly (sorted, inside [0, t_end]).
  std::span<const double> stop_times;
  std::function<void(const SimState&)> on_stop_time;
};

/// Steps until t_end or a terminal status. Records the initial state, every
/// record_every accepted steps, and the final state.
SimState run(const ProblemConfig& problem, const SolverConfig& solver, const Grid& grid,
             const MonitorSink& sink, const RunHooks& hooks = {});

}  // namespace chemo
