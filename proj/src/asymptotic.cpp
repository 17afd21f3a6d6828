#include "softqed/asymptotic.hpp"

#include <stdexcept>

#include "softqed/quadrature.hpp"

namespace softqed {

double envelope(const OscillatoryTermSpec& spec, double k) {
  const double s2 = spec.envelope_width * spec.envelope_width;
  return std::pow(2.0 * M_PI * s2, -1.5) * std::exp(-0.5 * k * k / s2);
}

double term_phase(const OscillatoryTermSpec& spec, const Vec3& k) {
  const double m = spec.mass;
  const Vec3& p = spec.fermion_momentum;
  const double ep = std::sqrt(p.norm2() + m * m);
  const double eq = std::sqrt((p + k).norm2() + m * m);
  const double k0 = k.norm();
  return spec.group == TermGroup::pair_creation ? ep + eq + k0 : eq - ep - k0;
}

std::complex<double> oscillatory_integral(const OscillatoryTermSpec& spec) {
  if (spec.envelope_width <= 0.0)
    throw std::invalid_argument("oscillatory_integral: envelope width must be positive");
  using C = std::complex<double>;
  const double sigma = spec.envelope_width;
  const double pmag = spec.fermion_momentum.norm();
  const Vec3 axis = pmag > 0.0 ? spec.fermion_momentum.normalized() : Vec3{0, 0, 1};
  const double m = spec.mass;
  const double ep = std::sqrt(pmag * pmag + m * m);
  const double t = spec.time;
  const bool pair = spec.group == TermGroup::pair_creation;

  // Azimuthal symmetry about the fermion axis: 2 pi * int_0^rmax r^2 g(r)
  // [int_-1^1 exp(i Phi(r,c) t) dc] dr.
  const double rmax = 10.0 * sigma;
  const auto inner = [&](double r) -> C {
    const auto f = [&](double c) -> C {
      const double q2 = pmag * pmag + r * r + 2.0 * pmag * r * c;
      const double eq = std::sqrt(q2 + m * m);
      const double phi = pair ? ep + eq + r : eq - ep - r;
      return std::exp(C(0.0, phi * t));
    };
    return integrate_adaptive(f, -1.0, 1.0, 1e-12);
  };
  const auto radial = [&](double r) -> C {
    return 2.0 * M_PI * r * r * envelope(spec, r) * inner(r);
  };
  return integrate_adaptive(radial, 0.0, rmax, 1e-12);
}

double phase_expansion_residual(const Vec3& p, const Vec3& k, double mass) {
  const double ep = std::sqrt(p.norm2() + mass * mass);
  const double eq = std::sqrt((p + k).norm2() + mass * mass);
  return std::abs(eq - ep - k.dot(p) / ep);
}

Complex4 current_eigenvalue(const std::vector<OnShellMomentum>& momenta, const FourVector& k,
                            double t, double alpha) {
  if (std::abs(minkowski_dot(k, k)) > 1e-10 * (k.t * k.t + 1e-300))
    throw std::invalid_argument("current_eigenvalue: k must be null");
  const double e = std::sqrt(coupling_e2(alpha));
  Complex4 out{};
  for (const auto& p : momenta) {
    const FourVector pmu = p.four_momentum();
    const double p0 = p.energy();
    const Complex phase = std::exp(Complex(0.0, -minkowski_dot(k, pmu) * t / p0));
    for (int mu = 0; mu < 4; ++mu) out[mu] += e * pmu[mu] / p0 * phase;
  }
  return out;
}

}  // namespace softqed
