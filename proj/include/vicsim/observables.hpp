#pragma once

#include <complex>
#include <string>
#include <vector>

#include "vicsim/coupling.hpp"
#include "vicsim/integrate.hpp"

namespace vicsim {

struct ObservableSeries {
  std::string label;
  std::vector<double> times;
  std::vector<cplx> values;
  bool complex_valued = false;

  std::vector<double> real_values() const;
};

/// p_{i;j}(t): probability of atom A in |i>, atom B in |j>. Label "p_ij".
ObservableSeries population(const Trajectory& traj, int i, int j);

/// <i_A, j_B| rho |k_A, l_B> per sample.
ObservableSeries matrix_element(const Trajectory& traj, int i, int j, int k, int l);

/// rho12^(A) = <1_A, 3_B| rho |2_A, 3_B>, label "rho12A".
ObservableSeries excited_coherence_A(const Trajectory& traj);

/// Lowest-order population of |3_A, 2_B> for the initial state |1_A, 3_B>:
/// 4 |GammaVc + i OmegaVc|^2 sin^2(delta t / 2) / delta^2, with the limit
/// |GammaVc + i OmegaVc|^2 t^2 used once |delta t| < 1e-6.
double perturbative_p32(const CouplingSet& coeffs, double delta, double t);

/// exp(-2 gamma t): population of the excited level of an isolated atom.
double single_atom_baseline(double gamma, double t);

struct Peak {
  double time = 0.0;
  double value = 0.0;
};

/// Largest real part over the series (first occurrence).
Peak peak(const ObservableSeries& series);

/// Earliest sample time where the real part exceeds the threshold, or a
/// negative value if it never does.
double first_crossing(const ObservableSeries& series, double threshold);

} // namespace vicsim
