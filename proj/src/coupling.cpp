#include "vicsim/coupling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vicsim {

namespace {

constexpr double kPi = std::numbers::pi;

// Reduce x to [0, 2).
double reduce_half_turns(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  return r;
}

// Sesquilinear form sum_{mu,nu} a_mu M_{mu nu} conj(b_nu).
cplx sesquilinear(const Vec3c& a, const Eigen::Matrix3d& m, const Vec3c& b) {
  cplx acc{};
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu) acc += a(mu) * m(mu, nu) * std::conj(b(nu));
  return acc;
}

} // namespace

double sin_pi(double x) {
  const double r = reduce_half_turns(x);
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == 1.5) return -1.0;
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  const double r = reduce_half_turns(x);
  if (r == 0.5 || r == 1.5) return 0.0;
  if (r == 0.0) return 1.0;
  if (r == 1.0) return -1.0;
  return std::cos(kPi * r);
}

Geometry::Geometry(double theta_pi, double phi_pi, double r_over_lambda)
    : theta_pi_(theta_pi), phi_pi_(phi_pi), r_over_lambda_(r_over_lambda) {
  if (!std::isfinite(theta_pi) || !std::isfinite(phi_pi))
    throw std::invalid_argument("geometry: angles must be finite");
  if (!(r_over_lambda > 0.0) || !std::isfinite(r_over_lambda))
    throw std::invalid_argument("geometry: separation must be positive and finite, got " +
                                std::to_string(r_over_lambda));
}

Geometry Geometry::from_radians(double theta, double phi, double r_over_lambda) {
  return Geometry(theta / kPi, phi / kPi, r_over_lambda);
}

double Geometry::theta() const { return theta_pi_ * kPi; }
double Geometry::phi() const { return phi_pi_ * kPi; }
double Geometry::zeta() const { return 2.0 * kPi * r_over_lambda_; }

Eigen::Vector3d Geometry::direction() const {
  const double st = sin_pi(theta_pi_);
  return {st * cos_pi(phi_pi_), st * sin_pi(phi_pi_), cos_pi(theta_pi_)};
}

RadialFunctions radial_functions(double zeta) {
  if (!(zeta > 0.0) || !std::isfinite(zeta))
    throw std::domain_error("radial_functions: zeta must be positive, got " + std::to_string(zeta));
  if (zeta < kMinZeta)
    throw std::domain_error("radial_functions: zeta below point-dipole validity limit");

  const double s = std::sin(zeta);
  const double c = std::cos(zeta);
  const double z1 = 1.0 / zeta;
  const double z2 = z1 * z1;
  const double z3 = z2 * z1;

  RadialFunctions f{};
  f.Pr = c * z1 - s * z2 - c * z3;
  f.Qr = c * z1 - 3.0 * s * z2 - 3.0 * c * z3;
  f.Pi = s * z1 + c * z2 - s * z3;
  f.Qi = s * z1 + 3.0 * c * z2 - 3.0 * s * z3;
  return f;
}

ChiTensor chi_tensor(const Geometry& geom) {
  const double zeta = geom.zeta();
  if (zeta < kMinZeta) throw std::domain_error("chi_tensor: separation below validity limit");

  const double z1 = 1.0 / zeta;
  const double z2 = z1 * z1;
  const double z3 = z2 * z1;
  const cplx phase = std::polar(1.0, zeta);
  const cplx diag = cplx(z1 - z3, z2) * phase;
  const cplx radial = cplx(z1 - 3.0 * z3, 3.0 * z2) * phase;

  const Eigen::Vector3d n = geom.direction();
  ChiTensor chi;
  for (int mu = 0; mu < 3; ++mu) {
    for (int nu = 0; nu < 3; ++nu) {
      const cplx d = (mu == nu) ? diag : cplx{};
      chi.components(mu, nu) = d - (n(mu) * n(nu)) * radial;
    }
  }
  return chi;
}

std::array<Vec3c, 2> dipoles(DipoleModel model) {
  const cplx i{0.0, 1.0};
  switch (model) {
  case DipoleModel::RealOrthogonal:
    return {Vec3c(1.0, 0.0, 0.0), Vec3c(0.0, 1.0, 0.0)};
  case DipoleModel::SphericalComplex: {
    const double s = 1.0 / std::sqrt(2.0);
    const Vec3c e_minus(s, -i * s, 0.0);
    const Vec3c e_plus(s, i * s, 0.0);
    return {Vec3c(-e_minus), e_plus};
  }
  }
  throw std::invalid_argument("dipoles: unknown model");
}

CouplingSet CouplingSet::uncoupled(double gamma) {
  CouplingSet c;
  c.gamma1 = gamma;
  c.gamma2 = gamma;
  return c;
}

CouplingSet coupling_from_chi(const Vec3c& d1, const Vec3c& d2, const ChiTensor& chi,
                              double gamma) {
  const double n1 = d1.squaredNorm();
  const double n2 = d2.squaredNorm();
  if (!(n1 > 0.0) || std::abs(n1 - n2) > 1e-12 * n1)
    throw std::invalid_argument("coupling_from_chi: dipoles must have equal nonzero magnitude");
  if (std::abs(d1.dot(d2)) > 1e-12 * n1) // dot() conjugates its left argument
    throw std::invalid_argument("coupling_from_chi: dipoles must be orthogonal");

  const Eigen::Matrix3d im = chi.components.imag();
  const Eigen::Matrix3d re = chi.components.real();
  // gamma = 2|d|^2 k0^3 / (3 hbar), so |d|^2 k0^3 / hbar = 3 gamma / 2.
  const double scale = 1.5 * gamma / n1;

  CouplingSet c;
  c.gamma1 = gamma;
  c.gamma2 = gamma;
  c.Gamma1 = scale * sesquilinear(d1, im, d1);
  c.Omega1 = scale * sesquilinear(d1, re, d1);
  c.Gamma2 = scale * sesquilinear(d2, im, d2);
  c.Omega2 = scale * sesquilinear(d2, re, d2);
  c.GammaVc = scale * sesquilinear(d2, im, d1);
  c.OmegaVc = scale * sesquilinear(d2, re, d1);
  return c;
}

CouplingSet coupling_real_dipoles(const Geometry& geom, double gamma) {
  const RadialFunctions f = radial_functions(geom.zeta());
  const double st = sin_pi(geom.theta_pi());
  const double sp = sin_pi(geom.phi_pi());
  const double cp = cos_pi(geom.phi_pi());
  const double st2 = st * st;
  const double k = 1.5 * gamma;

  CouplingSet c;
  c.gamma1 = gamma;
  c.gamma2 = gamma;
  c.Gamma1 = k * (f.Pi - st2 * cp * cp * f.Qi);
  c.Omega1 = k * (f.Pr - st2 * cp * cp * f.Qr);
  c.Gamma2 = k * (f.Pi - st2 * sp * sp * f.Qi);
  c.Omega2 = k * (f.Pr - st2 * sp * sp * f.Qr);
  c.GammaVc = -k * st2 * sp * cp * f.Qi;
  c.OmegaVc = -k * st2 * sp * cp * f.Qr;
  return c;
}

CouplingSet coupling_spherical(const Geometry& geom, double gamma) {
  const RadialFunctions f = radial_functions(geom.zeta());
  const double st = sin_pi(geom.theta_pi());
  const double st2 = st * st;
  const cplx phase(cos_pi(2.0 * geom.phi_pi()), sin_pi(2.0 * geom.phi_pi()));
  const double k = 0.75 * gamma;

  CouplingSet c;
  c.gamma1 = gamma;
  c.gamma2 = gamma;
  c.Gamma1 = k * (2.0 * f.Pi - st2 * f.Qi);
  c.Gamma2 = c.Gamma1;
  c.Omega1 = k * (2.0 * f.Pr - st2 * f.Qr);
  c.Omega2 = c.Omega1;
  c.GammaVc = k * st2 * f.Qi * phase;
  c.OmegaVc = k * st2 * f.Qr * phase;
  return c;
}

CouplingSet coupling_for(DipoleModel model, const Geometry& geom, double gamma) {
  switch (model) {
  case DipoleModel::RealOrthogonal: return coupling_real_dipoles(geom, gamma);
  case DipoleModel::SphericalComplex: return coupling_spherical(geom, gamma);
  }
  throw std::invalid_argument("coupling_for: unknown model");
}

} // namespace vicsim
