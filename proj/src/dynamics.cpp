#include "vicsim/dynamics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace vicsim {

int basis_index(int i, int j) {
  if (i < 1 || i > kLevels || j < 1 || j > kLevels)
    throw std::out_of_range("basis_index: levels must be in 1..3, got (" + std::to_string(i) +
                            ", " + std::to_string(j) + ")");
  return kLevels * (i - 1) + (j - 1);
}

int level2_count(int index) {
  const int i = index / kLevels + 1;
  const int j = index % kLevels + 1;
  return (i == 2 ? 1 : 0) + (j == 2 ? 1 : 0);
}

StateDiagnostics diagnose(const Matrix9& rho) {
  StateDiagnostics d;
  d.finite = rho.allFinite();
  if (!d.finite) {
    d.trace_error = d.hermiticity = std::numeric_limits<double>::quiet_NaN();
    d.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    return d;
  }
  d.trace_error = std::abs(rho.trace() - cplx(1.0));
  d.hermiticity = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const Matrix9 herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix9> solver(herm, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = solver.eigenvalues().minCoeff();
  return d;
}

DensityMatrix DensityMatrix::basis_state(int i, int j) {
  Matrix9 m = Matrix9::Zero();
  const int k = basis_index(i, j);
  m(k, k) = 1.0;
  return DensityMatrix(m);
}

// ---------------------------------------------------------------------------
// AtomicOperator

void AtomicOperator::add(int row, int col, cplx value) {
  for (std::size_t n = 0; n < size_; ++n) {
    if (entries_[n].row == row && entries_[n].col == col) {
      entries_[n].value += value;
      return;
    }
  }
  if (size_ == kCapacity) throw std::length_error("AtomicOperator: capacity exceeded");
  entries_[size_++] = Entry{row, col, value};
}

bool AtomicOperator::is_zero() const {
  for (const Entry& e : *this)
    if (e.value != cplx{}) return false;
  return true;
}

AtomicOperator AtomicOperator::adjoint() const {
  AtomicOperator out;
  for (const Entry& e : *this) out.add(e.col, e.row, std::conj(e.value));
  return out;
}

Matrix9 AtomicOperator::dense() const {
  Matrix9 m = Matrix9::Zero();
  for (const Entry& e : *this) m(e.row, e.col) += e.value;
  return m;
}

void AtomicOperator::accumulate_left(Matrix9& out, cplx coeff, const Matrix9& rho) const {
  for (const Entry& e : *this) out.row(e.row) += (coeff * e.value) * rho.row(e.col);
}

void AtomicOperator::accumulate_right(Matrix9& out, cplx coeff, const Matrix9& rho) const {
  for (const Entry& e : *this) out.col(e.col) += (coeff * e.value) * rho.col(e.row);
}

AtomicOperator operator*(const AtomicOperator& lhs, const AtomicOperator& rhs) {
  AtomicOperator out;
  for (const auto& a : lhs)
    for (const auto& b : rhs)
      if (a.col == b.row) out.add(a.row, b.col, a.value * b.value);
  return out;
}

AtomicOperator lowering_op(Atom atom, int transition) {
  if (transition != 1 && transition != 2)
    throw std::invalid_argument("lowering_op: transition must be 1 or 2");
  AtomicOperator op;
  for (int other = 1; other <= kLevels; ++other) {
    if (atom == Atom::A)
      op.add(basis_index(3, other), basis_index(transition, other), 1.0);
    else
      op.add(basis_index(other, 3), basis_index(other, transition), 1.0);
  }
  return op;
}

// ---------------------------------------------------------------------------
// Master equation

namespace {

// out += coeff * (X Y rho - 2 Y rho X + rho X Y)
void add_dissipator(Matrix9& out, cplx coeff, const AtomicOperator& x, const AtomicOperator& y,
                    const Matrix9& rho) {
  const AtomicOperator xy = x * y;
  xy.accumulate_left(out, coeff, rho);
  xy.accumulate_right(out, coeff, rho);
  for (const auto& ye : y)
    for (const auto& xe : x)
      out(ye.row, xe.col) += (-2.0 * coeff * ye.value * xe.value) * rho(ye.col, xe.row);
}

// out += coeff * [op, rho]
void add_commutator(Matrix9& out, cplx coeff, const AtomicOperator& op, const Matrix9& rho) {
  op.accumulate_left(out, coeff, rho);
  op.accumulate_right(out, -coeff, rho);
}

struct OperatorBank {
  // [atom][transition-1]
  AtomicOperator lower[2][2];
  AtomicOperator raise[2][2];
  // raise[mu][j] * lower[nu][j] for mu != nu, and the cross-transition products
  AtomicOperator hop[2][2];       // S_{j,mu}^dagger S_{j,nu}, index [mu][j], nu = other
  AtomicOperator cross_up[2];     // beta_mu^dagger alpha_nu, index [mu]
  AtomicOperator cross_down[2];   // alpha_nu^dagger beta_mu, index [mu]

  OperatorBank() {
    for (int mu = 0; mu < 2; ++mu)
      for (int j = 0; j < 2; ++j) {
        lower[mu][j] = lowering_op(mu == 0 ? Atom::A : Atom::B, j + 1);
        raise[mu][j] = lower[mu][j].adjoint();
      }
    for (int mu = 0; mu < 2; ++mu) {
      const int nu = 1 - mu;
      for (int j = 0; j < 2; ++j) hop[mu][j] = raise[mu][j] * lower[nu][j];
      cross_up[mu] = raise[mu][1] * lower[nu][0];
      cross_down[mu] = raise[nu][0] * lower[mu][1];
    }
  }
};

const OperatorBank& bank() {
  static const OperatorBank b;
  return b;
}

constexpr cplx kI{0.0, 1.0};

// Assemble the five term families. `forward` multiplies every coefficient
// attached to beta_mu^dagger alpha_nu, `backward` its Hermitian conjugate.
Matrix9 assemble(const Matrix9& rho, const CouplingSet& c, cplx forward, cplx backward) {
  const OperatorBank& ops = bank();
  Matrix9 out = Matrix9::Zero();
  const std::array<cplx, 2> gamma{c.gamma1, c.gamma2};
  const std::array<cplx, 2> big_gamma{c.Gamma1, c.Gamma2};
  const std::array<cplx, 2> omega{c.Omega1, c.Omega2};

  for (int j = 0; j < 2; ++j) {
    // F1: independent spontaneous emission of each atom.
    for (int mu = 0; mu < 2; ++mu)
      add_dissipator(out, -gamma[j], ops.raise[mu][j], ops.lower[mu][j], rho);

    // F2: collective decay between parallel dipoles, bracket + h.c.
    add_dissipator(out, -big_gamma[j], ops.raise[0][j], ops.lower[1][j], rho);
    add_dissipator(out, -std::conj(big_gamma[j]), ops.raise[1][j], ops.lower[0][j], rho);

    // F3: dispersive exchange between parallel dipoles, i Omega [S_A^+ S_B, rho] + h.c.
    add_commutator(out, kI * omega[j], ops.hop[0][j], rho);
    add_commutator(out, kI * std::conj(omega[j]), ops.hop[1][j], rho);
  }

  // F4 and F5: cross coupling of orthogonal dipoles, each with A <-> B.
  const cplx g_fwd = c.GammaVc * forward;
  const cplx g_bwd = std::conj(c.GammaVc) * backward;
  const cplx o_fwd = kI * c.OmegaVc * forward;
  const cplx o_bwd = kI * std::conj(c.OmegaVc) * backward;
  for (int mu = 0; mu < 2; ++mu) {
    const int nu = 1 - mu;
    add_dissipator(out, -g_fwd, ops.raise[mu][1], ops.lower[nu][0], rho);
    add_dissipator(out, -g_bwd, ops.raise[nu][0], ops.lower[mu][1], rho);
    add_commutator(out, o_fwd, ops.cross_up[mu], rho);
    add_commutator(out, o_bwd, ops.cross_down[mu], rho);
  }
  return out;
}

} // namespace

Matrix9 dissipator_term(const AtomicOperator& x, const AtomicOperator& y, const Matrix9& rho) {
  Matrix9 out = Matrix9::Zero();
  add_dissipator(out, 1.0, x, y, rho);
  return out;
}

Matrix9 rhs_interaction(double t, const Matrix9& rho, const ModelParams& params) {
  const cplx forward = std::polar(1.0, -params.delta * t);
  return assemble(rho, params.coeffs, forward, std::conj(forward));
}

Matrix9 rhs_rotating(const Matrix9& rho_tilde, const ModelParams& params) {
  Matrix9 out = assemble(rho_tilde, params.coeffs, 1.0, 1.0);
  if (params.delta != 0.0) {
    // + i delta [N2, rho~]; N2 is diagonal in the product basis.
    for (int b = 0; b < kDim; ++b)
      for (int a = 0; a < kDim; ++a) {
        const int dn = level2_count(a) - level2_count(b);
        if (dn != 0) out(a, b) += kI * (params.delta * dn) * rho_tilde(a, b);
      }
  }
  return out;
}

Matrix9 rhs(double t, const Matrix9& rho, const ModelParams& params) {
  return params.frame == Frame::RotatingFrame ? rhs_rotating(rho, params)
                                              : rhs_interaction(t, rho, params);
}

Matrix9 rotating_to_interaction(const Matrix9& rho_tilde, double t, double delta) {
  Matrix9 out = rho_tilde;
  for (int b = 0; b < kDim; ++b)
    for (int a = 0; a < kDim; ++a) {
      const int dn = level2_count(a) - level2_count(b);
      if (dn != 0) out(a, b) *= std::polar(1.0, -delta * t * dn);
    }
  return out;
}

Matrix9 interaction_to_rotating(const Matrix9& rho, double t, double delta) {
  return rotating_to_interaction(rho, t, -delta);
}

} // namespace vicsim
