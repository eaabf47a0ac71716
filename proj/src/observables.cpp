#include "vicsim/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace vicsim {

std::vector<double> ObservableSeries::real_values() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const cplx& v : values) out.push_back(v.real());
  return out;
}

ObservableSeries matrix_element(const Trajectory& traj, int i, int j, int k, int l) {
  const int row = basis_index(i, j);
  const int col = basis_index(k, l);
  ObservableSeries s;
  s.label = "rho_" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(k) +
            std::to_string(l);
  s.times = traj.times;
  s.complex_valued = true;
  s.values.reserve(traj.size());
  for (const DensityMatrix& rho : traj.states) s.values.push_back(rho.matrix()(row, col));
  return s;
}

ObservableSeries population(const Trajectory& traj, int i, int j) {
  ObservableSeries s = matrix_element(traj, i, j, i, j);
  s.label = "p_" + std::to_string(i) + std::to_string(j);
  s.complex_valued = false;
  for (cplx& v : s.values) v = v.real();
  return s;
}

ObservableSeries excited_coherence_A(const Trajectory& traj) {
  ObservableSeries s = matrix_element(traj, 1, 3, 2, 3);
  s.label = "rho12A";
  return s;
}

double perturbative_p32(const CouplingSet& coeffs, double delta, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("perturbative_p32: t must be non-negative");
  const double strength = std::norm(coeffs.GammaVc + cplx(0.0, 1.0) * coeffs.OmegaVc);
  if (std::abs(delta * t) < 1e-6) return strength * t * t;
  const double s = std::sin(0.5 * delta * t);
  return 4.0 * strength * s * s / (delta * delta);
}

double single_atom_baseline(double gamma, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("single_atom_baseline: t must be non-negative");
  return std::exp(-2.0 * gamma * t);
}

Peak peak(const ObservableSeries& series) {
  if (series.values.empty()) throw std::invalid_argument("peak: empty series");
  Peak p{series.times.front(), series.values.front().real()};
  for (std::size_t n = 1; n < series.values.size(); ++n) {
    if (series.values[n].real() > p.value) p = Peak{series.times[n], series.values[n].real()};
  }
  return p;
}

double first_crossing(const ObservableSeries& series, double threshold) {
  for (std::size_t n = 0; n < series.values.size(); ++n)
    if (series.values[n].real() > threshold) return series.times[n];
  return -1.0;
}

} // namespace vicsim
