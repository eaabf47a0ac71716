#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "vicsim/coupling.hpp"

using namespace vicsim;
using std::numbers::pi;

TEST_CASE("sin_pi and cos_pi are exact at the special angles") {
  for (double n : {-2.0, -1.0, 0.0, 1.0, 2.0, 3.0}) {
    CHECK(sin_pi(n) == 0.0);
    CHECK(cos_pi(n + 0.5) == 0.0);
  }
  CHECK(sin_pi(0.5) == 1.0);
  CHECK(sin_pi(1.5) == -1.0);
  CHECK(cos_pi(1.0) == -1.0);
  CHECK(sin_pi(0.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(cos_pi(-1.0 / 3.0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("geometry rejects coincident atoms") {
  CHECK_THROWS_AS(Geometry(0.5, 0.25, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Geometry(0.5, 0.25, -1.0), std::invalid_argument);
  const Geometry g(0.5, 0.25, 0.25);
  CHECK(g.zeta() == doctest::Approx(pi / 2));
  CHECK(g.theta() == doctest::Approx(pi / 2));
  const Geometry h = Geometry::from_radians(pi / 2, pi / 4, 0.25);
  CHECK(h.theta_pi() == doctest::Approx(0.5));
  CHECK(h.phi_pi() == doctest::Approx(0.25));
}

TEST_CASE("radial functions: frozen high-precision values") {
  // 40-digit reference values of the closed forms.
  const RadialFunctions q = radial_functions(pi / 2);
  CHECK(q.Pi == doctest::Approx(0.3786074969019854296).epsilon(1e-14));
  CHECK(q.Qi == doctest::Approx(-0.13741705402920639735).epsilon(1e-14));
  CHECK(q.Pr == doctest::Approx(-0.40528473456935108578).epsilon(1e-14));
  CHECK(q.Qr == doctest::Approx(-1.2158542037080532573).epsilon(1e-14));
  CHECK(q.Pi == doctest::Approx(2 / pi - std::pow(2 / pi, 3)).epsilon(1e-14));

  const RadialFunctions one = radial_functions(1.0);
  CHECK(one.Pi == doctest::Approx(0.5403023058681397174).epsilon(1e-14));
  CHECK(one.Qi == doctest::Approx(-0.062035052011373861102).epsilon(1e-12));
  CHECK(one.Pr == doctest::Approx(-0.84147098480789650665).epsilon(1e-14));
  CHECK(one.Qr == doctest::Approx(-3.6050175661599689548).epsilon(1e-14));
}

TEST_CASE("radial functions: small and large separation limits") {
  const double z = 1e-3;
  const RadialFunctions f = radial_functions(z);
  // Taylor: Pi = 2/3 - 2 z^2/15, Qi = -z^2/15.
  CHECK(f.Pi == doctest::Approx(2.0 / 3.0 - 2.0 * z * z / 15.0).epsilon(1e-9));
  CHECK(std::abs(f.Qi - (-z * z / 15.0)) < 1e-9);
  CHECK(f.Pr < -0.99e9);
  CHECK(f.Qr < -2.99e9);

  const RadialFunctions far = radial_functions(2 * pi * 10);
  CHECK(std::abs(far.Pi) < 0.02);
  CHECK(std::abs(far.Qi) < 0.02);
  const RadialFunctions very_far = radial_functions(2 * pi * 1e4);
  CHECK(std::abs(very_far.Pr) < 1e-4);
  CHECK(std::abs(very_far.Qr) < 1e-4);
}

TEST_CASE("radial functions reject non-positive and sub-limit zeta") {
  CHECK_THROWS_AS(radial_functions(0.0), std::domain_error);
  CHECK_THROWS_AS(radial_functions(-1.0), std::domain_error);
  CHECK_THROWS_AS(radial_functions(0.5e-4), std::domain_error);
  CHECK_THROWS_AS(radial_functions(std::nan("")), std::domain_error);
  CHECK_NOTHROW(radial_functions(kMinZeta));
}

TEST_CASE("chi tensor is symmetric and matches the derivative form") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 50; ++n) {
    const Geometry g = oracle::random_geometry(rng, 0.3, 30.0);
    const ChiTensor chi = chi_tensor(g);
    CHECK((chi.components - chi.components.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    const Mat3c fd = oracle::chi_finite_difference(g);
    const double rel = (fd - chi.components).cwiseAbs().maxCoeff() / chi.components.cwiseAbs().maxCoeff();
    CHECK(rel < 1e-6);
  }

  const Geometry g(0.5, 0.25, 1.0 / (2 * pi));
  const Mat3c fd = oracle::chi_finite_difference(g);
  const ChiTensor chi = chi_tensor(g);
  CHECK((fd - chi.components).cwiseAbs().maxCoeff() / chi.components.cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("chi tensor along z has no xy component") {
  const ChiTensor chi = chi_tensor(Geometry(0.0, 0.3, 0.2));
  CHECK(chi(0, 1) == cplx{});
  CHECK(chi(1, 0) == cplx{});
  CHECK(chi(0, 0) == chi(1, 1));
}

TEST_CASE("dipole models are orthogonal with unit norm") {
  for (DipoleModel m : {DipoleModel::RealOrthogonal, DipoleModel::SphericalComplex}) {
    const auto d = dipoles(m);
    CHECK(d[0].squaredNorm() == doctest::Approx(1.0));
    CHECK(d[1].squaredNorm() == doctest::Approx(1.0));
    CHECK(std::abs(d[0].dot(d[1])) < 1e-15);
  }
}

TEST_CASE("coupling_from_chi rejects non-orthogonal or unequal dipoles") {
  const ChiTensor chi = chi_tensor(Geometry(0.5, 0.25, 0.25));
  CHECK_THROWS_AS(coupling_from_chi(Vec3c(1, 0, 0), Vec3c(1, 1, 0) / std::sqrt(2.0), chi),
                  std::invalid_argument);
  CHECK_THROWS_AS(coupling_from_chi(Vec3c(1, 0, 0), Vec3c(0, 2, 0), chi), std::invalid_argument);
  CHECK_THROWS_AS(coupling_from_chi(Vec3c(0, 0, 0), Vec3c(0, 0, 0), chi), std::invalid_argument);
}

TEST_CASE("closed forms equal the tensor route") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    const Geometry g = oracle::random_geometry(rng, 0.05, 50.0);
    const ChiTensor chi = chi_tensor(g);
    for (DipoleModel m : {DipoleModel::RealOrthogonal, DipoleModel::SphericalComplex}) {
      const auto d = dipoles(m);
      const auto a = coupling_for(m, g).entries();
      const auto b = coupling_from_chi(d[0], d[1], chi).entries();
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(oracle::coeff_deviation(a[k], b[k]) < 1e-10);
    }
  }
}

TEST_CASE("real dipoles: frozen value at quarter-wavelength separation") {
  const CouplingSet c = coupling_real_dipoles(Geometry(0.5, 0.25, 0.25));
  // -(3/2) sin^2(theta) sin(phi) cos(phi) Qi = -(3/4) Qi(pi/2)
  CHECK(c.GammaVc.real() == doctest::Approx(0.10306279052190479801).epsilon(1e-13));
  CHECK(c.GammaVc.real() == doctest::Approx(-0.75 * radial_functions(pi / 2).Qi).epsilon(1e-14));
  for (const cplx& v : c.entries()) CHECK(v.imag() == 0.0);
}

TEST_CASE("geometric nulls are exact") {
  for (double theta : {0.0, 1.0}) {
    for (double phi : {0.0, 0.1, 0.25, 0.7, 1.3}) {
      for (double r : {0.01, 0.25, 3.0}) {
        const Geometry g(theta, phi, r);
        for (DipoleModel m : {DipoleModel::RealOrthogonal, DipoleModel::SphericalComplex}) {
          const CouplingSet c = coupling_for(m, g);
          CHECK(c.GammaVc == cplx{});
          CHECK(c.OmegaVc == cplx{});
          const auto d = dipoles(m);
          const CouplingSet t = coupling_from_chi(d[0], d[1], chi_tensor(g));
          CHECK(t.GammaVc == cplx{});
          CHECK(t.OmegaVc == cplx{});
        }
      }
    }
  }
  for (double phi : {0.0, 0.5, 1.0, 1.5}) {
    for (double theta : {0.2, 0.5, 0.8}) {
      const Geometry g(theta, phi, 0.25);
      const CouplingSet c = coupling_real_dipoles(g);
      CHECK(c.GammaVc == cplx{});
      CHECK(c.OmegaVc == cplx{});
      const CouplingSet t = coupling_from_chi(Vec3c(1, 0, 0), Vec3c(0, 1, 0), chi_tensor(g));
      CHECK(t.GammaVc == cplx{});
      CHECK(t.OmegaVc == cplx{});
    }
  }
}

TEST_CASE("spherical model: equal real diagonal terms, phi-independent magnitudes") {
  const double thetas[] = {0.2, 0.5, 0.9};
  for (double theta : thetas) {
    const CouplingSet ref = coupling_spherical(Geometry(theta, 0.0, 0.2));
    for (double phi : {1.0 / 6.0, 0.25, 1.0 / 3.0, 0.77}) {
      const CouplingSet c = coupling_spherical(Geometry(theta, phi, 0.2));
      CHECK(c.Gamma1 == c.Gamma2);
      CHECK(c.Omega1 == c.Omega2);
      CHECK(c.Gamma1.imag() == 0.0);
      CHECK(c.Omega1.imag() == 0.0);
      CHECK(c.Gamma1 == ref.Gamma1);
      CHECK(std::abs(c.GammaVc) == doctest::Approx(std::abs(ref.GammaVc)).epsilon(1e-14));
      CHECK(std::abs(c.OmegaVc) == doctest::Approx(std::abs(ref.OmegaVc)).epsilon(1e-14));
    }
  }
}

TEST_CASE("collective rates never exceed the single-atom rate") {
  for (DipoleModel m : {DipoleModel::RealOrthogonal, DipoleModel::SphericalComplex}) {
    for (double theta : {0.0, 0.25, 0.5}) {
      for (double phi : {0.0, 0.125, 0.25, 0.5}) {
        for (int k = 0; k <= 120; ++k) {
          const double zeta = std::pow(10.0, -3.0 + 6.0 * k / 120.0);
          const CouplingSet c = coupling_for(m, Geometry(theta, phi, zeta / (2 * pi)));
          CHECK(std::abs(c.Gamma1) <= 1.0 + 1e-12);
          CHECK(std::abs(c.Gamma2) <= 1.0 + 1e-12);
          CHECK(std::abs(c.GammaVc) <= 1.0 + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("short-distance behaviour") {
  const Geometry g(0.5, 0.25, 1e-3 / (2 * pi));
  const CouplingSet c = coupling_real_dipoles(g);
  CHECK(c.Gamma1.real() >= 1.0 - 1e-4);
  CHECK(c.Gamma1.real() <= 1.0 + 1e-4);
  CHECK(c.Gamma1.real() == doctest::Approx(1.5 * (radial_functions(1e-3).Pi - 0.5 * radial_functions(1e-3).Qi)));
  CHECK(std::abs(c.Omega1) > 100.0);
  CHECK(std::abs(c.OmegaVc) > 100.0);
  // GammaVc goes to zero with Qi, not to the single-atom rate.
  CHECK(std::abs(c.GammaVc) < 1e-6);
}

TEST_CASE("uncoupled set has only the single-atom rates") {
  const CouplingSet c = CouplingSet::uncoupled();
  CHECK(c.gamma1 == cplx(1.0));
  CHECK(c.gamma2 == cplx(1.0));
  CHECK(c.Gamma1 == cplx{});
  CHECK(c.OmegaVc == cplx{});
}

TEST_CASE("real dipoles give purely real coefficients on both routes") {
  std::mt19937_64 rng(5);
  const auto d = dipoles(DipoleModel::RealOrthogonal);
  for (int n = 0; n < 100; ++n) {
    const Geometry g = oracle::random_geometry(rng, 0.05, 50.0);
    for (cplx v : coupling_real_dipoles(g).entries()) CHECK(v.imag() == 0.0);
    for (cplx v : coupling_from_chi(d[0], d[1], chi_tensor(g)).entries()) CHECK(v.imag() == 0.0);
  }
}
