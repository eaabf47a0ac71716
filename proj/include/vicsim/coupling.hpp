#pragma once

// Retarded dipole-dipole tensor and the master-equation coefficients for two
// identical V-type atoms. All rates are in units of the single-atom gamma,
// lengths in units of the transition wavelength.

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace vicsim {

using cplx = std::complex<double>;
using Vec3c = Eigen::Matrix<cplx, 3, 1>;
using Mat3c = Eigen::Matrix<cplx, 3, 3>;

/// Smallest k0*R accepted by the radial functions. Below this the point-dipole
/// divergence dominates and the closed forms lose all significance.
inline constexpr double kMinZeta = 1e-4;

/// sin(pi*x) and cos(pi*x), exact at integer and half-integer x.
double sin_pi(double x);
double cos_pi(double x);

/// Position of atom B relative to atom A.
///
/// Angles are stored in units of pi ("half turns") so the special
/// configurations theta = n*pi and phi = n*pi/2 are exactly representable and
/// produce exact zeros in the direction cosines.
class Geometry {
public:
  /// theta_pi, phi_pi in units of pi; r_over_lambda = R / lambda.
  Geometry(double theta_pi, double phi_pi, double r_over_lambda);

  static Geometry from_radians(double theta, double phi, double r_over_lambda);

  double theta_pi() const { return theta_pi_; }
  double phi_pi() const { return phi_pi_; }
  double theta() const;
  double phi() const;
  double r_over_lambda() const { return r_over_lambda_; }
  /// k0 * R = 2 pi R / lambda.
  double zeta() const;
  /// Unit vector along R.
  Eigen::Vector3d direction() const;

private:
  double theta_pi_;
  double phi_pi_;
  double r_over_lambda_;
};

/// The four radial combinations entering the dyadic Green tensor.
struct RadialFunctions {
  double Pr;
  double Pi;
  double Qr;
  double Qi;
};

/// Throws std::domain_error for zeta <= 0 or zeta < kMinZeta.
RadialFunctions radial_functions(double zeta);

/// Dipole-dipole tensor in units of k0^3 (symmetric, complex).
struct ChiTensor {
  Mat3c components;

  cplx operator()(int mu, int nu) const { return components(mu, nu); }
};

ChiTensor chi_tensor(const Geometry& geom);

enum class DipoleModel {
  RealOrthogonal,   ///< d1 = x d, d2 = y d
  SphericalComplex, ///< d1 = -d e_-, d2 = d e_+ (m = +-1 Zeeman sublevels)
};

/// Unit transition dipoles (d1, d2) of the given model.
std::array<Vec3c, 2> dipoles(DipoleModel model);

/// The eight coefficients of the two-atom master equation, in units of gamma.
struct CouplingSet {
  cplx gamma1{1.0};
  cplx gamma2{1.0};
  cplx Gamma1{};
  cplx Gamma2{};
  cplx Omega1{};
  cplx Omega2{};
  cplx GammaVc{};
  cplx OmegaVc{};

  /// Entries in declaration order; handy for sweeps and element-wise checks.
  std::array<cplx, 8> entries() const {
    return {gamma1, gamma2, Gamma1, Gamma2, Omega1, Omega2, GammaVc, OmegaVc};
  }

  /// Independent atoms (R -> infinity): only the single-atom rates survive.
  static CouplingSet uncoupled(double gamma = 1.0);
};

/// Coefficients from the sesquilinear forms d . Im(chi) . d'* and
/// d . Re(chi) . d'*, with Im/Re taken entry-wise on the tensor.
/// Requires d1 . d2* = 0 and |d1| = |d2| (std::invalid_argument otherwise).
CouplingSet coupling_from_chi(const Vec3c& d1, const Vec3c& d2, const ChiTensor& chi,
                              double gamma = 1.0);

/// Closed forms for d1 = x, d2 = y. All entries real.
CouplingSet coupling_real_dipoles(const Geometry& geom, double gamma = 1.0);

/// Closed forms for d1 = -e_-, d2 = e_+.
CouplingSet coupling_spherical(const Geometry& geom, double gamma = 1.0);

/// Dispatch on the dipole model to the closed forms.
CouplingSet coupling_for(DipoleModel model, const Geometry& geom, double gamma = 1.0);

} // namespace vicsim
