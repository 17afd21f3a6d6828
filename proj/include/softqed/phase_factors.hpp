#ifndef SOFTQED_PHASE_FACTORS_HPP
#define SOFTQED_PHASE_FACTORS_HPP

#include <stdexcept>

#include "softqed/kinematics.hpp"

namespace softqed {

struct SingularConfiguration : std::domain_error {
  using std::domain_error::domain_error;
};

/// World-line configuration for the dressing phases.  Velocities must be
/// collinear (the closed forms assume the perpendicular component of v1
/// vanishes); t and t0 must have the same sign.
struct PhaseConfig {
  Vec3 v1{}, v2{};
  Vec3 x1{}, x2{};
  double t = 0.0;
  double t0 = 0.0;
  double alpha = kFineStructure;

  void validate() const;
};

/// Self phase for a single world line by closed form:
/// alpha (1/gamma) (t - t0) / sqrt(R^2 + gamma^2 (v.R)^2), R = x - v t.
/// Does not require any collinearity.
double kappa_retarded(const Vec3& v, const Vec3& x, double t, double t0,
                      double alpha = kFineStructure);

/// kappa_1 or kappa_2 by world-line quadrature of the (constant) integrand.
double kappa_self_quadrature(const PhaseConfig& cfg, int which);

/// Same, in closed form.  The two routes are mutual oracles.
double kappa_self_closed(const PhaseConfig& cfg, int which);

/// Cross phase kappa_12 by adaptive quadrature along world line 1:
/// alpha gamma1 (1 - v1.v2) int_{t0}^{t} ds
///   { [R1 + s v_r]^2 + gamma1^2 [v1.(R1 + s v_r)]^2 }^{-1/2}.
double kappa_cross_quadrature(const PhaseConfig& cfg);

/// Cross phase in closed form.  asymptotic=true drops the finite-position
/// correction logarithm, leaving alpha (1/u_r) ln(t/t0).
double kappa_cross_closed(const PhaseConfig& cfg, bool asymptotic);

/// Phase-operator eigenvalue phi = alpha (1/u_r) ln(|t|/t0) on the
/// two-particle state.
double phi_eigenvalue(const OnShellMomentum& p1, const OnShellMomentum& p2, double t, double t0,
                      double alpha = kFineStructure);

/// | e^{i phi} e^{-i kappa_12} - 1 | with the asymptotic closed form for
/// kappa_12.  Vanishes identically: the two expressions coincide.
double cancellation_residual(const PhaseConfig& cfg, const OnShellMomentum& p1,
                             const OnShellMomentum& p2);

/// Same residual with kappa_12 from full quadrature; tends to zero as
/// t0 -> infinity at fixed t/t0.
double cancellation_residual_quadrature(const PhaseConfig& cfg, const OnShellMomentum& p1,
                                        const OnShellMomentum& p2);

}  // namespace softqed

#endif  // SOFTQED_PHASE_FACTORS_HPP
