#ifndef SOFTQED_QUBIT_STATES_HPP
#define SOFTQED_QUBIT_STATES_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "softqed/kinematics.hpp"

namespace softqed {

// Spin basis ordering throughout: (uu, ud, du, dd), quantized along the lab
// z-axis.

using SpinAmplitude = Eigen::Vector4cd;
using SpinDensityMatrix = Eigen::Matrix4cd;

struct MomentumPair {
  OnShellMomentum p1;
  OnShellMomentum p2;
  double weight = 1.0;
};

/// Two-qubit spin (x) momentum state on a finite weighted grid of on-shell
/// momentum pairs.  Normalization: sum_pairs w sum_spins |phi|^2 = 1.
struct TwoQubitState {
  std::vector<MomentumPair> grid;
  std::vector<SpinAmplitude> amplitudes;  // one 4-spinor per pair

  double norm_squared() const;
  void normalize();
  void check_normalized(double tol = 1e-8) const;
};

/// Outer product phi(a) phi(b)^dagger, the 4x4 block of the joint matrix.
SpinDensityMatrix amplitude_matrix_S(const TwoQubitState& state, std::size_t a, std::size_t b);

/// Reduced spin density matrix of the free state: weighted sum of the
/// momentum-diagonal blocks.
SpinDensityMatrix reduce_spin_free(const TwoQubitState& state);

/// Per-pair dressing phase kappa(R1,t) + kappa(R2,t), spin-independent.
struct DressedPhaseAssignment {
  std::vector<double> phases;  // one entry per grid pair

  /// Velocities taken on the mass shell of each pair; x1, x2, t, t0 as in the
  /// world-line phases.
  static DressedPhaseAssignment build(const TwoQubitState& state, const Vec3& x1, const Vec3& x2,
                                      double t, double t0, double alpha = kFineStructure);
};

/// Reduced spin density matrix of the dressed state: the joint matrix carries
/// e^{i theta} with theta = -kappa(a) + kappa(b) on block (a,b); the momentum
/// trace only touches a = b where theta vanishes identically.
SpinDensityMatrix reduce_spin_dressed(const TwoQubitState& state,
                                      const DressedPhaseAssignment& phases);

/// Full (4N)x(4N) joint matrix with the dressing phases exposed on the
/// off-diagonal momentum blocks.  Small grids only.
Eigen::MatrixXcd joint_matrix_with_phases(const TwoQubitState& state,
                                          const DressedPhaseAssignment& phases);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const SpinDensityMatrix& rho);

/// Negativity: sum of |negative eigenvalues| of the partial transpose.
double negativity(const SpinDensityMatrix& rho);

/// Von Neumann entropy (bits) of the one-qubit reduction of a pure spin state.
double entropy_of_entanglement(const SpinAmplitude& chi);

/// Entropy variant for a full state: requires the spin amplitude to factorize
/// from the momentum dependence; throws otherwise.
double entropy_of_entanglement(const TwoQubitState& state);

/// Validate Hermiticity, unit trace and positivity.
void check_density_matrix(const SpinDensityMatrix& rho, double tol = 1e-9);

// Plain-text state file: one pair per line,
//   p1x p1y p1z p2x p2y p2z weight  re_uu im_uu re_ud im_ud re_du im_du re_dd im_dd
// '#' starts a comment.  All masses are 1.
TwoQubitState read_state(std::istream& is);
void write_state(const TwoQubitState& state, std::ostream& os);

}  // namespace softqed

#endif  // SOFTQED_QUBIT_STATES_HPP
