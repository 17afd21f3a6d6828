#include "softqed/qubit_states.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "softqed/phase_factors.hpp"

namespace softqed {

using Complex = std::complex<double>;

double TwoQubitState::norm_squared() const {
  double n = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) n += grid[i].weight * amplitudes[i].squaredNorm();
  return n;
}

void TwoQubitState::normalize() {
  const double n = std::sqrt(norm_squared());
  if (n <= 0.0) throw std::invalid_argument("TwoQubitState: cannot normalize the zero state");
  for (auto& a : amplitudes) a /= n;
}

void TwoQubitState::check_normalized(double tol) const {
  if (grid.size() != amplitudes.size())
    throw std::invalid_argument("TwoQubitState: grid/amplitude size mismatch");
  if (std::abs(norm_squared() - 1.0) > tol)
    throw std::invalid_argument("TwoQubitState: state is not normalized");
}

SpinDensityMatrix amplitude_matrix_S(const TwoQubitState& state, std::size_t a, std::size_t b) {
  if (a >= state.grid.size() || b >= state.grid.size())
    throw std::out_of_range("amplitude_matrix_S: pair index outside grid");
  return state.amplitudes[a] * state.amplitudes[b].adjoint();
}

SpinDensityMatrix reduce_spin_free(const TwoQubitState& state) {
  state.check_normalized();
  SpinDensityMatrix rho = SpinDensityMatrix::Zero();
  for (std::size_t i = 0; i < state.grid.size(); ++i)
    rho += state.grid[i].weight * amplitude_matrix_S(state, i, i);
  return rho;
}

DressedPhaseAssignment DressedPhaseAssignment::build(const TwoQubitState& state, const Vec3& x1,
                                                     const Vec3& x2, double t, double t0,
                                                     double alpha) {
  DressedPhaseAssignment out;
  out.phases.reserve(state.grid.size());
  for (const auto& pair : state.grid) {
    const double k1 = kappa_retarded(pair.p1.velocity(), x1, t, t0, alpha);
    const double k2 = kappa_retarded(pair.p2.velocity(), x2, t, t0, alpha);
    out.phases.push_back(k1 + k2);
  }
  return out;
}

SpinDensityMatrix reduce_spin_dressed(const TwoQubitState& state,
                                      const DressedPhaseAssignment& phases) {
  state.check_normalized();
  if (phases.phases.size() != state.grid.size())
    throw std::invalid_argument("reduce_spin_dressed: phase assignment does not match grid");
  SpinDensityMatrix rho = SpinDensityMatrix::Zero();
  for (std::size_t i = 0; i < state.grid.size(); ++i) {
    // theta(a,a) = -kappa(a) + kappa(a) = 0: the trace never sees the phases.
    const double theta = -phases.phases[i] + phases.phases[i];
    const Complex factor = std::exp(Complex(0.0, theta));
    rho += state.grid[i].weight * factor * amplitude_matrix_S(state, i, i);
  }
  return rho;
}

Eigen::MatrixXcd joint_matrix_with_phases(const TwoQubitState& state,
                                          const DressedPhaseAssignment& phases) {
  state.check_normalized();
  const std::size_t n = state.grid.size();
  if (phases.phases.size() != n)
    throw std::invalid_argument("joint_matrix_with_phases: phase assignment does not match grid");
  if (n * n > 10000)
    throw std::invalid_argument("joint_matrix_with_phases: grid too large for the joint matrix");
  Eigen::MatrixXcd joint = Eigen::MatrixXcd::Zero(4 * n, 4 * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const double theta = -phases.phases[a] + phases.phases[b];
      const double w = std::sqrt(state.grid[a].weight * state.grid[b].weight);
      joint.block<4, 4>(4 * a, 4 * b) =
          w * std::exp(Complex(0.0, theta)) * amplitude_matrix_S(state, a, b);
    }
  }
  return joint;
}

void check_density_matrix(const SpinDensityMatrix& rho, double tol) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-6 || std::abs(rho.trace().imag()) > tol)
    throw std::invalid_argument("density matrix does not have unit trace");
  Eigen::SelfAdjointEigenSolver<SpinDensityMatrix> es(rho);
  if (es.eigenvalues().minCoeff() < -tol)
    throw std::invalid_argument("density matrix is not positive semidefinite");
}

double concurrence(const SpinDensityMatrix& rho) {
  check_density_matrix(rho);
  SpinDensityMatrix yy = SpinDensityMatrix::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;  // sigma_y (x) sigma_y
  // The Wootters lambdas are the singular values of tau = A^T (sy x sy) A for
  // any factorization rho = A A^dagger: rho rho~ is similar to conj(tau) tau
  // and tau is complex symmetric, so conj(tau) tau = tau^dagger tau.  Working
  // with tau avoids the sqrt-of-eigenvalue noise floor (~1e-8) that the
  // eigenvalues of rho rho~ carry near zero.
  Eigen::SelfAdjointEigenSolver<SpinDensityMatrix> es(rho);
  const double cut = 64.0 * std::numeric_limits<double>::epsilon() * es.eigenvalues().maxCoeff();
  Eigen::MatrixXcd a(4, 4);
  int rank = 0;
  for (int i = 0; i < 4; ++i)
    if (es.eigenvalues()[i] > cut)
      a.col(rank++) = std::sqrt(es.eigenvalues()[i]) * es.eigenvectors().col(i);
  if (rank == 0) return 0.0;
  const Eigen::MatrixXcd tau = a.leftCols(rank).transpose() * yy * a.leftCols(rank);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(tau);
  double c = 0.0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    c += (i == 0 ? 1.0 : -1.0) * svd.singularValues()[i];
  return std::max(0.0, c);
}

double negativity(const SpinDensityMatrix& rho) {
  check_density_matrix(rho);
  // Partial transpose on the second qubit: swap the column index of qubit 2.
  SpinDensityMatrix pt;
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2) pt(2 * a1 + a2, 2 * b1 + b2) = rho(2 * a1 + b2, 2 * b1 + a2);
  Eigen::SelfAdjointEigenSolver<SpinDensityMatrix> es(pt);
  double neg = 0.0;
  for (int i = 0; i < 4; ++i) neg += std::max(0.0, -es.eigenvalues()[i]);
  return neg;
}

double entropy_of_entanglement(const SpinAmplitude& chi) {
  const double n2 = chi.squaredNorm();
  if (std::abs(n2 - 1.0) > 1e-8)
    throw std::invalid_argument("entropy_of_entanglement: spin state must be normalized");
  Eigen::Matrix2cd rho_a = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) rho_a(a, b) += chi[2 * a + c] * std::conj(chi[2 * b + c]);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho_a);
  double s = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double lam = es.eigenvalues()[i];
    if (lam > 1e-15) s -= lam * std::log2(lam);
  }
  return s;
}

double entropy_of_entanglement(const TwoQubitState& state) {
  state.check_normalized();
  const std::size_t n = state.grid.size();
  Eigen::MatrixXcd m(4, n);
  for (std::size_t i = 0; i < n; ++i)
    m.col(i) = std::sqrt(state.grid[i].weight) * state.amplitudes[i];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() > 1 && sv[1] > 1e-10 * sv[0])
    throw std::invalid_argument(
        "entropy_of_entanglement: spin does not factorize from momentum");
  SpinAmplitude chi = svd.matrixU().col(0);
  return entropy_of_entanglement(chi);
}

TwoQubitState read_state(std::istream& is) {
  TwoQubitState state;
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double p1x, p1y, p1z, p2x, p2y, p2z, w;
    if (!(ls >> p1x >> p1y >> p1z >> p2x >> p2y >> p2z >> w)) continue;
    SpinAmplitude amp;
    for (int s = 0; s < 4; ++s) {
      double re, im;
      if (!(ls >> re >> im)) throw std::invalid_argument("read_state: truncated amplitude row");
      amp[s] = Complex(re, im);
    }
    state.grid.push_back({OnShellMomentum{1.0, {p1x, p1y, p1z}},
                          OnShellMomentum{1.0, {p2x, p2y, p2z}}, w});
    state.amplitudes.push_back(amp);
  }
  return state;
}

void write_state(const TwoQubitState& state, std::ostream& os) {
  os.precision(17);
  os << "# p1x p1y p1z p2x p2y p2z weight re/im x4 (uu ud du dd)\n";
  for (std::size_t i = 0; i < state.grid.size(); ++i) {
    const auto& g = state.grid[i];
    os << g.p1.spatial().x << ' ' << g.p1.spatial().y << ' ' << g.p1.spatial().z << ' '
       << g.p2.spatial().x << ' ' << g.p2.spatial().y << ' ' << g.p2.spatial().z << ' ' << g.weight;
    for (int s = 0; s < 4; ++s)
      os << ' ' << state.amplitudes[i][s].real() << ' ' << state.amplitudes[i][s].imag();
    os << '\n';
  }
}

}  // namespace softqed
