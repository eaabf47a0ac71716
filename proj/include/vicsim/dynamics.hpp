#pragma once

// Two-atom state space (3 x 3 = 9 levels) and the right-hand side of the
// collective master equation for two radiatively coupled V systems.
//
// Basis ordering: |i_A, j_B>, i, j in {1, 2, 3}, flat index 3(i-1) + (j-1).
// Levels 1 and 2 are excited (|1> above |2> by delta), 3 is the ground state.

#include <array>
#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "vicsim/coupling.hpp"

namespace vicsim {

inline constexpr int kLevels = 3;
inline constexpr int kDim = kLevels * kLevels;

using Matrix9 = Eigen::Matrix<cplx, kDim, kDim>;

enum class Atom { A, B };

/// Flat index of |i_A, j_B>; throws std::out_of_range outside 1..3.
int basis_index(int i, int j);

/// Number of atoms in level |2> for the given flat index (eigenvalue of N2).
int level2_count(int index);

struct StateDiagnostics {
  double trace_error = 0.0;    ///< |Tr rho - 1|
  double hermiticity = 0.0;    ///< max |rho - rho^dagger|
  double min_eigenvalue = 0.0; ///< of the Hermitian part
  bool finite = true;
};

StateDiagnostics diagnose(const Matrix9& rho);

/// Hermitian unit-trace positive 9 x 9 matrix.
class DensityMatrix {
public:
  DensityMatrix() : rho_(Matrix9::Zero()) {}
  explicit DensityMatrix(const Matrix9& rho) : rho_(rho) {}

  /// |i_A, j_B><i_A, j_B|
  static DensityMatrix basis_state(int i, int j);

  const Matrix9& matrix() const { return rho_; }
  /// <i_A, j_B| rho |k_A, l_B>
  cplx element(int i, int j, int k, int l) const {
    return rho_(basis_index(i, j), basis_index(k, l));
  }
  StateDiagnostics diagnostics() const { return diagnose(rho_); }

private:
  Matrix9 rho_;
};

/// Sparse 9 x 9 operator built from atomic transition operators. Products of
/// the lowering/raising operators used here never have more than three
/// nonzeros, so storage is a small fixed-capacity array.
class AtomicOperator {
public:
  struct Entry {
    int row;
    int col;
    cplx value;
  };
  static constexpr std::size_t kCapacity = kDim;

  AtomicOperator() = default;

  void add(int row, int col, cplx value);
  std::size_t size() const { return size_; }
  const Entry* begin() const { return entries_.data(); }
  const Entry* end() const { return entries_.data() + size_; }
  bool is_zero() const;

  AtomicOperator adjoint() const;
  Matrix9 dense() const;

  /// out += coeff * (op * rho)
  void accumulate_left(Matrix9& out, cplx coeff, const Matrix9& rho) const;
  /// out += coeff * (rho * op)
  void accumulate_right(Matrix9& out, cplx coeff, const Matrix9& rho) const;

  friend AtomicOperator operator*(const AtomicOperator& lhs, const AtomicOperator& rhs);

private:
  std::array<Entry, kCapacity> entries_{};
  std::size_t size_ = 0;
};

/// alpha_mu (transition 1) or beta_mu (transition 2) of the given atom:
/// |3_mu><t_mu| tensored with the identity on the other atom.
AtomicOperator lowering_op(Atom atom, int transition);

/// X Y rho - 2 Y rho X + rho X Y
Matrix9 dissipator_term(const AtomicOperator& x, const AtomicOperator& y, const Matrix9& rho);

enum class Frame {
  InteractionPicture, ///< explicit exp(-+ i delta t) phases on the cross terms
  RotatingFrame,      ///< rho~ = U rho U^dagger, U = exp(i delta t N2)
};

struct ModelParams {
  CouplingSet coeffs;
  double delta = 0.0; ///< splitting of |1> and |2>, units of gamma
  Frame frame = Frame::InteractionPicture;
};

/// d rho / dt in the interaction picture at time t.
Matrix9 rhs_interaction(double t, const Matrix9& rho, const ModelParams& params);

/// Time-independent d rho~ / dt in the rotating frame.
Matrix9 rhs_rotating(const Matrix9& rho_tilde, const ModelParams& params);

/// Dispatch on params.frame.
Matrix9 rhs(double t, const Matrix9& rho, const ModelParams& params);

/// rho~ -> rho: rho_ab = exp(-i delta t (n_a - n_b)) rho~_ab.
Matrix9 rotating_to_interaction(const Matrix9& rho_tilde, double t, double delta);
/// rho -> rho~
Matrix9 interaction_to_rotating(const Matrix9& rho, double t, double delta);

} // namespace vicsim
