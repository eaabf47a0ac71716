#pragma once

// Fixed-step Cash-Karp Runge-Kutta propagation of the two-atom density matrix.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vicsim/coupling.hpp"
#include "vicsim/dynamics.hpp"

namespace vicsim {

/// Cash-Karp 5(4) tableau.
namespace cash_karp {
inline constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 3.0 / 5.0, c5 = 1.0, c6 = 7.0 / 8.0;
inline constexpr double a21 = 1.0 / 5.0;
inline constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
inline constexpr double a41 = 3.0 / 10.0, a42 = -9.0 / 10.0, a43 = 6.0 / 5.0;
inline constexpr double a51 = -11.0 / 54.0, a52 = 5.0 / 2.0, a53 = -70.0 / 27.0, a54 = 35.0 / 27.0;
inline constexpr double a61 = 1631.0 / 55296.0, a62 = 175.0 / 512.0, a63 = 575.0 / 13824.0,
                        a64 = 44275.0 / 110592.0, a65 = 253.0 / 4096.0;
// fifth-order weights
inline constexpr double b1 = 37.0 / 378.0, b3 = 250.0 / 621.0, b4 = 125.0 / 594.0,
                        b6 = 512.0 / 1771.0;
// embedded fourth-order weights
inline constexpr double e1 = 2825.0 / 27648.0, e3 = 18575.0 / 48384.0, e4 = 13525.0 / 55296.0,
                        e5 = 277.0 / 14336.0, e6 = 1.0 / 4.0;
} // namespace cash_karp

template <class State>
struct StepResult {
  State value;
  /// max |y5 - y4|, diagnostic only
  double error_estimate;
};

/// One explicit fifth-order Cash-Karp step of y' = f(t, y). State must be an
/// Eigen dense type.
template <class State, class Rhs>
StepResult<State> rk5_step(const State& y, double t, double dt, Rhs&& f) {
  using namespace cash_karp;
  if (!(dt > 0.0)) throw std::invalid_argument("rk5_step: dt must be positive");

  const State k1 = f(t, y);
  const State k2 = f(t + c2 * dt, State(y + dt * (a21 * k1)));
  const State k3 = f(t + c3 * dt, State(y + dt * (a31 * k1 + a32 * k2)));
  const State k4 = f(t + c4 * dt, State(y + dt * (a41 * k1 + a42 * k2 + a43 * k3)));
  const State k5 = f(t + c5 * dt, State(y + dt * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)));
  const State k6 =
      f(t + c6 * dt, State(y + dt * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)));

  StepResult<State> out{State(y + dt * (b1 * k1 + b3 * k3 + b4 * k4 + b6 * k6)), 0.0};
  const State diff = dt * ((b1 - e1) * k1 + (b3 - e3) * k3 + (b4 - e4) * k4 - e5 * k5 +
                           (b6 - e6) * k6);
  out.error_estimate = diff.cwiseAbs().maxCoeff();
  return out;
}

struct TimeGrid {
  double t_max = 5.0;
  double dt = 1e-3;
  int sample_every = 10;

  /// Throws std::invalid_argument unless 0 < dt <= t_max and sample_every >= 1.
  void validate() const;
  std::size_t steps() const;
};

struct InvariantTolerances {
  double trace = 1e-8;
  double hermiticity = 1e-10;
  double min_eigenvalue = -1e-6;
};

/// A monitored density-matrix invariant failed during propagation.
class InvariantBreach : public std::runtime_error {
public:
  InvariantBreach(std::size_t step, double time, std::string metric, double value);

  std::size_t step() const { return step_; }
  double time() const { return time_; }
  const std::string& metric() const { return metric_; }
  double value() const { return value_; }

private:
  std::size_t step_;
  double time_;
  std::string metric_;
  double value_;
};

struct Trajectory {
  std::vector<double> times;
  /// Always stored in the interaction picture, whatever frame was integrated.
  std::vector<DensityMatrix> states;
  ModelParams params;
  std::optional<Geometry> geometry;

  /// Largest embedded error estimate over all steps.
  double max_step_error = 0.0;
  /// Worst monitored values over all samples.
  StateDiagnostics worst;

  std::size_t size() const { return times.size(); }
};

/// Propagate rho0 over the grid, sampling every grid.sample_every steps
/// (t = 0 included). Throws InvariantBreach on a failed monitor or non-finite
/// state, std::invalid_argument if rho0 or the grid are invalid.
Trajectory evolve(const DensityMatrix& rho0, const TimeGrid& grid, const ModelParams& params,
                  const InvariantTolerances& tol = {});

} // namespace vicsim
