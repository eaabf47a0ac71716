#include "vicsim/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace vicsim {

void TimeGrid::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("time grid: dt must be positive");
  if (!(t_max >= dt) || !std::isfinite(t_max))
    throw std::invalid_argument("time grid: t_max must be at least dt");
  if (sample_every < 1) throw std::invalid_argument("time grid: sample_every must be >= 1");
}

std::size_t TimeGrid::steps() const {
  return static_cast<std::size_t>(std::llround(t_max / dt));
}

namespace {

std::string breach_message(std::size_t step, double time, const std::string& metric, double value) {
  std::ostringstream os;
  os.precision(6);
  os << "invariant breach at step " << step << " (t = " << time << "): " << metric << " = "
     << value;
  return os.str();
}

void check(const StateDiagnostics& d, const InvariantTolerances& tol, std::size_t step, double t) {
  if (!d.finite) throw InvariantBreach(step, t, "non-finite state", d.trace_error);
  if (d.trace_error >= tol.trace) throw InvariantBreach(step, t, "trace error", d.trace_error);
  if (d.hermiticity >= tol.hermiticity) throw InvariantBreach(step, t, "hermiticity", d.hermiticity);
  if (d.min_eigenvalue < tol.min_eigenvalue)
    throw InvariantBreach(step, t, "min eigenvalue", d.min_eigenvalue);
}

void merge_worst(StateDiagnostics& worst, const StateDiagnostics& d) {
  worst.trace_error = std::max(worst.trace_error, d.trace_error);
  worst.hermiticity = std::max(worst.hermiticity, d.hermiticity);
  worst.min_eigenvalue = std::min(worst.min_eigenvalue, d.min_eigenvalue);
}

} // namespace

InvariantBreach::InvariantBreach(std::size_t step, double time, std::string metric, double value)
    : std::runtime_error(breach_message(step, time, metric, value)), step_(step), time_(time),
      metric_(std::move(metric)), value_(value) {}

Trajectory evolve(const DensityMatrix& rho0, const TimeGrid& grid, const ModelParams& params,
                  const InvariantTolerances& tol) {
  grid.validate();
  const StateDiagnostics d0 = rho0.diagnostics();
  try {
    check(d0, tol, 0, 0.0);
  } catch (const InvariantBreach& e) {
    throw std::invalid_argument(std::string("evolve: initial state invalid: ") + e.what());
  }

  const bool rotating = params.frame == Frame::RotatingFrame;
  auto f = [&params](double t, const Matrix9& rho) { return rhs(t, rho, params); };

  Trajectory traj;
  traj.params = params;
  traj.worst = d0;
  const std::size_t n_steps = grid.steps();
  const std::size_t n_samples = n_steps / static_cast<std::size_t>(grid.sample_every) + 1;
  traj.times.reserve(n_samples);
  traj.states.reserve(n_samples);

  // In the rotating frame rho~(0) = rho(0) since U(0) = 1.
  Matrix9 y = rho0.matrix();
  traj.times.push_back(0.0);
  traj.states.push_back(rho0);

  for (std::size_t k = 0; k < n_steps; ++k) {
    const double t = static_cast<double>(k) * grid.dt;
    StepResult<Matrix9> step = rk5_step(y, t, grid.dt, f);
    y = step.value;
    traj.max_step_error = std::max(traj.max_step_error, step.error_estimate);

    const std::size_t done = k + 1;
    const double t_next = static_cast<double>(done) * grid.dt;
    if (!y.allFinite()) throw InvariantBreach(done, t_next, "non-finite state", 0.0);
    if (done % static_cast<std::size_t>(grid.sample_every) != 0) continue;

    const Matrix9 sample = rotating ? rotating_to_interaction(y, t_next, params.delta) : y;
    const StateDiagnostics d = diagnose(sample);
    check(d, tol, done, t_next);
    merge_worst(traj.worst, d);
    traj.times.push_back(t_next);
    traj.states.emplace_back(sample);
  }
  return traj;
}

} // namespace vicsim
