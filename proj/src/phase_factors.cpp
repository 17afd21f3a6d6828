#include "softqed/phase_factors.hpp"

#include <cmath>
#include <complex>

#include "softqed/quadrature.hpp"

namespace softqed {

void PhaseConfig::validate() const {
  if (v1.norm() >= 1.0 || v2.norm() >= 1.0)
    throw std::invalid_argument("PhaseConfig: speeds must be < 1");
  detail::require_collinear(v1, v2, "PhaseConfig");
  if (!(t * t0 > 0.0)) throw std::invalid_argument("PhaseConfig: t and t0 must share a sign");
}

namespace {

double gamma_of(const Vec3& v) { return 1.0 / std::sqrt(1.0 - v.norm2()); }

// Liénard-Wiechert style denominator sqrt(R^2 + gamma^2 (v.R)^2).
double lw_denominator(const Vec3& v, const Vec3& R) {
  const double g = gamma_of(v);
  const double vr = v.dot(R);
  return std::sqrt(R.norm2() + g * g * vr * vr);
}

}  // namespace

double kappa_retarded(const Vec3& v, const Vec3& x, double t, double t0, double alpha) {
  const Vec3 R = retarded_position(x, v, t);
  const double denom = lw_denominator(v, R);
  if (denom < 1e-14)
    throw SingularConfiguration("kappa_retarded: particle sits at its own retarded position");
  return alpha / gamma_of(v) * (t - t0) / denom;
}

double kappa_self_closed(const PhaseConfig& cfg, int which) {
  cfg.validate();
  if (which != 1 && which != 2)
    throw std::invalid_argument("kappa_self_closed: which must be 1 or 2");
  const Vec3& v = which == 1 ? cfg.v1 : cfg.v2;
  const Vec3& x = which == 1 ? cfg.x1 : cfg.x2;
  return kappa_retarded(v, x, cfg.t, cfg.t0, cfg.alpha);
}

double kappa_self_quadrature(const PhaseConfig& cfg, int which) {
  cfg.validate();
  if (which != 1 && which != 2)
    throw std::invalid_argument("kappa_self_quadrature: which must be 1 or 2");
  const Vec3& v = which == 1 ? cfg.v1 : cfg.v2;
  const Vec3& x = which == 1 ? cfg.x1 : cfg.x2;
  const double g = gamma_of(v);
  const WorldLine line{FourVector{cfg.t, x}, v};
  const auto f = [&](double s) {
    const Vec3 r = line.position(s) - s * v;  // equals R for the self term
    const double denom = lw_denominator(v, r);
    if (denom < 1e-14)
      throw SingularConfiguration("kappa_self_quadrature: singular world-line point");
    return 1.0 / denom;
  };
  return cfg.alpha / g * integrate_adaptive(f, cfg.t0, cfg.t, 1e-10);
}

double kappa_cross_quadrature(const PhaseConfig& cfg) {
  cfg.validate();
  const Vec3 vr = cfg.v1 - cfg.v2;
  if (vr.norm() < 1e-14)
    throw SingularConfiguration("kappa_cross_quadrature: relative velocity vanishes");
  const double g1 = gamma_of(cfg.v1);
  const Vec3 R1 = retarded_position(cfg.x1, cfg.v1, cfg.t);
  const auto f = [&](double s) {
    const Vec3 r = R1 + s * vr;
    const double denom = lw_denominator(cfg.v1, r);
    if (denom < 1e-12)
      throw SingularConfiguration("kappa_cross_quadrature: world-line crossing in window");
    return 1.0 / denom;
  };
  return cfg.alpha * g1 * (1.0 - cfg.v1.dot(cfg.v2)) * integrate_adaptive(f, cfg.t0, cfg.t, 1e-10);
}

double kappa_cross_closed(const PhaseConfig& cfg, bool asymptotic) {
  cfg.validate();
  const Vec3 vrv = cfg.v1 - cfg.v2;
  const double vr = vrv.norm();
  if (vr < 1e-14) throw SingularConfiguration("kappa_cross_closed: relative velocity vanishes");
  const double ur = vr / (1.0 - cfg.v1.dot(cfg.v2));

  if (asymptotic) return cfg.alpha / ur * std::log(cfg.t / cfg.t0);

  const double g1 = gamma_of(cfg.v1);
  const Vec3 vhat = vrv / vr;
  const Vec3 R1 = retarded_position(cfg.x1, cfg.v1, cfg.t);
  const double Rpar = R1.dot(vhat);
  const double b = (R1 - Rpar * vhat).norm();
  const double w1 = cfg.t * vr + Rpar;
  const double w0 = cfg.t0 * vr + Rpar;
  if (w1 <= 0.0 || w0 <= 0.0)
    throw SingularConfiguration("kappa_cross_closed: t v_r + R_par <= 0 in the window");

  const double bg = b / g1;
  const double corr =
      ((1.0 + Rpar / (cfg.t * vr)) * (1.0 + std::sqrt(bg * bg / (w1 * w1) + 1.0))) /
      ((1.0 + Rpar / (cfg.t0 * vr)) * (1.0 + std::sqrt(bg * bg / (w0 * w0) + 1.0)));
  return cfg.alpha / ur * (std::log(cfg.t / cfg.t0) + std::log(corr));
}

double phi_eigenvalue(const OnShellMomentum& p1, const OnShellMomentum& p2, double t, double t0,
                      double alpha) {
  if (!(t * t0 > 0.0)) throw std::invalid_argument("phi_eigenvalue: t and t0 must share a sign");
  const double ur = relative_velocity_invariant(p1, p2);
  if (ur < 1e-14)
    throw SingularConfiguration("phi_eigenvalue: equal momenta give a divergent phase");
  return alpha / ur * std::log(std::abs(t) / std::abs(t0));
}

namespace {

double phase_product_residual(double phi, double kappa12) {
  const std::complex<double> z =
      std::exp(std::complex<double>(0.0, phi)) * std::exp(std::complex<double>(0.0, -kappa12));
  return std::abs(z - 1.0);
}

}  // namespace

double cancellation_residual(const PhaseConfig& cfg, const OnShellMomentum& p1,
                             const OnShellMomentum& p2) {
  return phase_product_residual(phi_eigenvalue(p1, p2, cfg.t, cfg.t0, cfg.alpha),
                                kappa_cross_closed(cfg, true));
}

double cancellation_residual_quadrature(const PhaseConfig& cfg, const OnShellMomentum& p1,
                                        const OnShellMomentum& p2) {
  return phase_product_residual(phi_eigenvalue(p1, p2, cfg.t, cfg.t0, cfg.alpha),
                                kappa_cross_quadrature(cfg));
}

}  // namespace softqed
