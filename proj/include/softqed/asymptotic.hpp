#ifndef SOFTQED_ASYMPTOTIC_HPP
#define SOFTQED_ASYMPTOTIC_HPP

#include <complex>
#include <vector>

#include "softqed/kinematics.hpp"
#include "softqed/photon_modes.hpp"

namespace softqed {

enum class TermGroup {
  pair_creation,  // two fermion creators / annihilators
  scattering      // one creator, one annihilator
};

/// One smeared interaction term: a group, a fermion momentum, a normalized
/// isotropic Gaussian envelope over photon momentum, and a time.
struct OscillatoryTermSpec {
  TermGroup group = TermGroup::scattering;
  Vec3 fermion_momentum{};
  double envelope_width = 0.01;  // sigma, in units of m
  double time = 0.0;
  double mass = 1.0;
};

/// Normalized envelope value g(k) = (2 pi sigma^2)^{-3/2} exp(-k^2 / 2 sigma^2).
double envelope(const OscillatoryTermSpec& spec, double k);

/// Phase of the term's exponential factor.
/// Group 1 (pair):       E(p) + E(p + k) + k0
/// Group 2 (scattering): E(p + k) - E(p) - k0   (photon-emission branch)
double term_phase(const OscillatoryTermSpec& spec, const Vec3& k);

/// Smeared amplitude I(t) = integral d^3k g(k) exp(i Phi(k) t) by adaptive
/// quadrature (radial x polar, azimuthally symmetric about the fermion axis).
std::complex<double> oscillatory_integral(const OscillatoryTermSpec& spec);

/// | E(p + k) - E(p) - k.p/p0 |, the remainder of the small-k expansion of the
/// scattering-group phase.  Bounded by |k|^2 (1 + |v|)^2 / (2m).
double phase_expansion_residual(const Vec3& p, const Vec3& k, double mass = 1.0);

/// Eigenvalue of the asymptotic current on a multi-particle Fock state:
/// sum over constituents of j_mu(k, t; p) = e (p_mu / p0) e^{-i k.p t / p0}.
Complex4 current_eigenvalue(const std::vector<OnShellMomentum>& momenta, const FourVector& k,
                            double t, double alpha = kFineStructure);

}  // namespace softqed

#endif  // SOFTQED_ASYMPTOTIC_HPP
