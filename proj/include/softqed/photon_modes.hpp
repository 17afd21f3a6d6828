#ifndef SOFTQED_PHOTON_MODES_HPP
#define SOFTQED_PHOTON_MODES_HPP

#include <array>
#include <complex>
#include <iosfwd>
#include <vector>

#include "softqed/kinematics.hpp"

namespace softqed {

using Complex = std::complex<double>;
using Complex4 = std::array<Complex, 4>;

struct PhotonMode {
  Vec3 k;         // spatial momentum, k0 = |k|
  double k0;      // energy
  double weight;  // quadrature weight, includes the d^3k measure
};

/// Discretized soft-photon phase space: log-spaced radial nodes between the
/// IR and UV cutoffs, Gauss-Legendre nodes in cos(theta), uniform azimuth.
class PhotonModeGrid {
 public:
  static PhotonModeGrid build(double ir_cutoff, double uv_cutoff, int n_radial, int n_polar,
                              int n_azimuth);

  double ir_cutoff() const { return ir_cutoff_; }
  double uv_cutoff() const { return uv_cutoff_; }
  const std::vector<PhotonMode>& modes() const { return modes_; }
  std::size_t size() const { return modes_.size(); }

  /// Sum of weight * f(k) over all modes, approximating the d^3k integral.
  template <typename F>
  double integrate(const F& f) const {
    double acc = 0.0, comp = 0.0;  // Kahan
    for (const auto& m : modes_) {
      const double term = m.weight * f(m) - comp;
      const double next = acc + term;
      comp = (next - acc) - term;
      acc = next;
    }
    return acc;
  }

  bool same_grid(const PhotonModeGrid& other) const { return this == &other; }

  void write_csv(std::ostream& os) const;

 private:
  PhotonModeGrid() = default;
  double ir_cutoff_ = 0.0, uv_cutoff_ = 0.0;
  std::vector<PhotonMode> modes_;
};

/// V^mu = (eta+v)^mu (eta-v).k - k^mu and c^mu = V^mu / (V.k) for one mode.
struct DressingVector {
  FourVector V;
  FourVector c;
};

DressingVector dressing_vector(const Vec3& v, const PhotonMode& mode);

/// Coherent photon-cloud amplitude: one complex 4-vector per grid mode.
class CloudAmplitude {
 public:
  CloudAmplitude(const PhotonModeGrid& grid, std::vector<Complex4> values,
                 std::vector<OnShellMomentum> momenta, double time, bool dressed)
      : grid_(&grid),
        values_(std::move(values)),
        momenta_(std::move(momenta)),
        time_(time),
        dressed_(dressed) {}

  const PhotonModeGrid& grid() const { return *grid_; }
  const std::vector<Complex4>& values() const { return values_; }
  const std::vector<OnShellMomentum>& momenta() const { return momenta_; }
  double time() const { return time_; }
  bool dressed() const { return dressed_; }

  void write_csv(std::ostream& os) const;

 private:
  const PhotonModeGrid* grid_;
  std::vector<Complex4> values_;
  std::vector<OnShellMomentum> momenta_;
  double time_;
  bool dressed_;
};

/// Eigenvalue of the two-particle asymptotic evolution cloud:
/// f^mu(k) = e/(2 pi)^{3/2} (2 k0)^{-1/2}
///           [ p1^mu/(p1.k) e^{i k.p1 t/p10} + p2^mu/(p2.k) e^{i k.p2 t/p20} ].
CloudAmplitude cloud_amplitude_W(const OnShellMomentum& p1, const OnShellMomentum& p2, double t,
                                 const PhotonModeGrid& grid, double alpha = kFineStructure);

/// Single-particle variant of the same eigenvalue.
CloudAmplitude cloud_amplitude_single(const OnShellMomentum& p, double t,
                                      const PhotonModeGrid& grid, double alpha = kFineStructure);

/// Dressed combination: each p_i^mu/(p_i.k) replaced by p_i^mu/(p_i.k) - c_i^mu
/// with v_i = p_i/p_i0 on the mass shell.
CloudAmplitude cloud_amplitude_dressed(const OnShellMomentum& p1, const OnShellMomentum& p2,
                                       double t, const PhotonModeGrid& grid,
                                       double alpha = kFineStructure);

enum class Projection { transverse, feynman };

/// Two real unit 3-vectors orthogonal to khat and to each other.
std::pair<Vec3, Vec3> transverse_basis(const Vec3& khat);

/// Soft-photon number of the cloud.  Transverse: sum over the two physical
/// polarizations; Feynman: -g_{mu nu} f^mu f^nu*.
double soft_photon_number(const CloudAmplitude& amplitude, Projection projection);

/// Coherent-state overlap exp(-|f|^2/2 - |g|^2/2 + <g,f>) with
/// transverse-projected inner products.  Grids must coincide.
Complex coherent_overlap(const CloudAmplitude& f, const CloudAmplitude& g);

}  // namespace softqed

#endif  // SOFTQED_PHOTON_MODES_HPP
