#pragma once

// Test-only reference computations, independent of the library code paths
// they are used to check.

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "vicsim/coupling.hpp"
#include "vicsim/dynamics.hpp"

namespace oracle {

using lcplx = std::complex<long double>;

// exp(i |x|) / |x| with k0 = 1
inline lcplx scalar_green(long double x, long double y, long double z) {
  const long double r = std::sqrt(x * x + y * y + z * z);
  return std::polar(1.0L, r) / r;
}

// Central-difference Hessian entry of scalar_green at p, step h.
inline lcplx hessian_fd(const long double p[3], int mu, int nu, long double h) {
  auto at = [&](long double dmu, long double dnu) {
    long double q[3] = {p[0], p[1], p[2]};
    q[mu] += dmu;
    q[nu] += dnu;
    return scalar_green(q[0], q[1], q[2]);
  };
  if (mu == nu) {
    long double q1[3] = {p[0], p[1], p[2]}, q2[3] = {p[0], p[1], p[2]};
    q1[mu] += h;
    q2[mu] -= h;
    return (scalar_green(q1[0], q1[1], q1[2]) - 2.0L * scalar_green(p[0], p[1], p[2]) +
            scalar_green(q2[0], q2[1], q2[2])) /
           (h * h);
  }
  return (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4.0L * h * h);
}

// (delta_{mu nu} + d^2/dx_mu dx_nu) exp(i R)/R at R = zeta * n, by finite
// differences with one Richardson extrapolation step.
inline vicsim::Mat3c chi_finite_difference(const vicsim::Geometry& g) {
  const long double zeta = g.zeta();
  const Eigen::Vector3d n = g.direction();
  const long double p[3] = {zeta * n(0), zeta * n(1), zeta * n(2)};
  const long double h = 2e-3L * std::min<long double>(zeta, 1.0L);
  vicsim::Mat3c out;
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu) {
      const lcplx d1 = hessian_fd(p, mu, nu, h);
      const lcplx d2 = hessian_fd(p, mu, nu, h / 2);
      lcplx v = (4.0L * d2 - d1) / 3.0L;
      if (mu == nu) v += scalar_green(p[0], p[1], p[2]);
      out(mu, nu) = vicsim::cplx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    }
  return out;
}

// Dense-matrix form of X Y rho - 2 Y rho X + rho X Y.
inline vicsim::Matrix9 dissipator_dense(const vicsim::Matrix9& x, const vicsim::Matrix9& y,
                                        const vicsim::Matrix9& rho) {
  return x * y * rho - 2.0 * y * rho * x + rho * x * y;
}

// Random Hermitian, positive, unit-trace 9 x 9 matrix.
inline vicsim::Matrix9 random_density_matrix(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  vicsim::Matrix9 a;
  for (int i = 0; i < vicsim::kDim; ++i)
    for (int j = 0; j < vicsim::kDim; ++j) a(i, j) = vicsim::cplx(n(rng), n(rng));
  vicsim::Matrix9 rho = a * a.adjoint();
  return rho / rho.trace();
}

// Uniformly drawn geometry: theta, phi in half turns, separation with
// k0 R in [zeta_lo, zeta_hi] (log uniform).
inline vicsim::Geometry random_geometry(std::mt19937_64& rng, double zeta_lo, double zeta_hi) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double zeta = zeta_lo * std::pow(zeta_hi / zeta_lo, u(rng));
  return vicsim::Geometry(u(rng), 2.0 * u(rng), zeta / (2.0 * M_PI));
}

// Relative deviation on the coefficient scale: |a - b| / max(1, |a|, |b|).
inline double coeff_deviation(vicsim::cplx a, vicsim::cplx b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace oracle
