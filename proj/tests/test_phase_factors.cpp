#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "softqed/phase_factors.hpp"

using namespace softqed;

namespace {

PhaseConfig rest_frame_config() {
  PhaseConfig cfg;
  cfg.v1 = {0, 0, 0};
  cfg.v2 = {0.6, 0, 0};
  cfg.x1 = {1, 0, 0};
  cfg.x2 = {-1, 0, 0};
  cfg.t = 1000.0;
  cfg.t0 = 10.0;
  return cfg;
}

OnShellMomentum from_velocity(const Vec3& v) {
  const double g = 1.0 / std::sqrt(1.0 - v.norm2());
  return {1.0, g * v};
}

}  // namespace

TEST_CASE("kappa self: rest particle closed form") {
  PhaseConfig cfg = rest_frame_config();
  // v = 0, x = xhat: kappa = alpha (t - t0)
  CHECK(kappa_self_closed(cfg, 1) ==
        doctest::Approx(cfg.alpha * (cfg.t - cfg.t0)).epsilon(1e-14));
  CHECK(kappa_self_quadrature(cfg, 1) == doctest::Approx(kappa_self_closed(cfg, 1)).epsilon(1e-12));
}

TEST_CASE("kappa self: quadrature matches closed form to machine precision") {
  PhaseConfig cfg;
  cfg.v1 = {0.6, 0, 0};
  cfg.v2 = {0, 0, 0};
  cfg.x1 = {1, 0, 0};
  cfg.x2 = {0, 1, 0};
  cfg.t = 100.0;
  cfg.t0 = 10.0;
  const double closed = kappa_self_closed(cfg, 1);
  const Vec3 R = retarded_position(cfg.x1, cfg.v1, cfg.t);
  const double g = 1.0 / std::sqrt(1.0 - cfg.v1.norm2());
  const double expect =
      cfg.alpha / g * (cfg.t - cfg.t0) /
      std::sqrt(R.norm2() + g * g * cfg.v1.dot(R) * cfg.v1.dot(R));
  CHECK(closed == doctest::Approx(expect).epsilon(1e-14));
  CHECK(kappa_self_quadrature(cfg, 1) == doctest::Approx(closed).epsilon(1e-12));
}

TEST_CASE("kappa self: random configs, constant integrand") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> mag(0.0, 0.85);
  for (int i = 0; i < 100; ++i) {
    PhaseConfig cfg;
    const Vec3 axis = Vec3{u(rng), u(rng), u(rng)}.normalized();
    cfg.v1 = mag(rng) * axis;
    cfg.v2 = -mag(rng) * axis;
    cfg.x1 = {u(rng), u(rng), u(rng)};
    cfg.x2 = {u(rng), u(rng), u(rng)};
    cfg.t0 = 10.0 + 90.0 * std::abs(u(rng));
    cfg.t = cfg.t0 * (2.0 + 8.0 * std::abs(u(rng)));
    for (int which : {1, 2}) {
      double closed;
      try {
        closed = kappa_self_closed(cfg, which);
      } catch (const SingularConfiguration&) {
        continue;
      }
      CHECK(kappa_self_quadrature(cfg, which) == doctest::Approx(closed).epsilon(1e-12));
    }
  }
}

TEST_CASE("kappa self: zero coupling and singular configuration") {
  PhaseConfig cfg = rest_frame_config();
  cfg.alpha = 0.0;
  CHECK(kappa_self_closed(cfg, 1) == 0.0);
  cfg.alpha = kFineStructure;
  cfg.x1 = {0, 0, 0};  // at rest at its own retarded position
  CHECK_THROWS_AS(kappa_self_closed(cfg, 1), SingularConfiguration);
}

TEST_CASE("kappa cross: quadrature vs full closed form") {
  PhaseConfig cfg = rest_frame_config();
  const double quad = kappa_cross_quadrature(cfg);
  const double closed = kappa_cross_closed(cfg, false);
  CHECK(quad == doctest::Approx(closed).epsilon(1e-6));
}

TEST_CASE("kappa cross: 100 random collinear configs agree to 1e-6") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> mag(0.05, 0.85);
  int tested = 0;
  while (tested < 100) {
    PhaseConfig cfg;
    const Vec3 axis = Vec3{u(rng), u(rng), u(rng)}.normalized();
    cfg.v1 = mag(rng) * axis;
    cfg.v2 = -mag(rng) * axis;
    cfg.x1 = {u(rng), u(rng), u(rng)};
    cfg.x2 = {u(rng), u(rng), u(rng)};
    cfg.t0 = 50.0 + 100.0 * std::abs(u(rng));
    cfg.t = cfg.t0 * (2.0 + 8.0 * std::abs(u(rng)));
    double closed;
    try {
      closed = kappa_cross_closed(cfg, false);
    } catch (const SingularConfiguration&) {
      continue;
    }
    CHECK(kappa_cross_quadrature(cfg) == doctest::Approx(closed).epsilon(1e-6));
    ++tested;
  }
}

TEST_CASE("kappa cross: asymptotic law") {
  // alpha / u_r * ln(t/t0) for u_r = 0.6, t/t0 = e
  PhaseConfig cfg = rest_frame_config();
  cfg.t0 = 1000.0;
  cfg.t = cfg.t0 * std::exp(1.0);
  CHECK(kappa_cross_closed(cfg, true) == doctest::Approx(0.0121622).epsilon(1e-4));

  // fixed t/t0 = 10, growing t0: quadrature converges to alpha/u_r ln(10)
  const double target = cfg.alpha / 0.6 * std::log(10.0);
  double prev = 1e9;
  for (double t0 : {1e3, 1e4, 1e5}) {
    cfg.t0 = t0;
    cfg.t = 10.0 * t0;
    const double diff = std::abs(kappa_cross_quadrature(cfg) - target);
    CHECK(diff < prev);
    prev = diff;
  }
  CHECK(prev < 1e-3 * target);
}

TEST_CASE("kappa cross: full form reduces to asymptotic when b = Rpar = 0") {
  PhaseConfig cfg;
  cfg.v1 = {0, 0, 0};
  cfg.v2 = {0.6, 0, 0};
  cfg.x1 = {0, 0, 0};  // R1 = x1 - v1 t = 0
  cfg.t = 500.0;
  cfg.t0 = 20.0;
  CHECK(kappa_cross_closed(cfg, false) ==
        doctest::Approx(kappa_cross_closed(cfg, true)).epsilon(1e-14));
}

TEST_CASE("kappa cross: exchange symmetry") {
  // Mirror-symmetric world lines: relabeling 1 <-> 2 maps the configuration
  // onto its parity image, so the two orderings must agree exactly.
  PhaseConfig cfg;
  cfg.v1 = {0.4, 0, 0};
  cfg.v2 = {-0.4, 0, 0};
  cfg.x1 = {0.5, 0.2, 0};
  cfg.x2 = {-0.5, -0.2, 0};
  cfg.t = 2e4;
  cfg.t0 = 2e3;
  PhaseConfig swapped = cfg;
  std::swap(swapped.v1, swapped.v2);
  std::swap(swapped.x1, swapped.x2);
  CHECK(kappa_cross_quadrature(cfg) ==
        doctest::Approx(kappa_cross_quadrature(swapped)).epsilon(1e-10));
  // The asymptotic form depends only on u_r, symmetric for any labeling.
  PhaseConfig generic = cfg;
  generic.v1 = {0.3, 0, 0};
  generic.v2 = {-0.5, 0, 0};
  PhaseConfig generic_swapped = generic;
  std::swap(generic_swapped.v1, generic_swapped.v2);
  std::swap(generic_swapped.x1, generic_swapped.x2);
  CHECK(kappa_cross_closed(generic, true) ==
        doctest::Approx(kappa_cross_closed(generic_swapped, true)).epsilon(1e-14));
}

TEST_CASE("phi eigenvalue") {
  const OnShellMomentum rest = from_velocity({0, 0, 0});
  const OnShellMomentum moving = from_velocity({0.6, 0, 0});
  CHECK(phi_eigenvalue(rest, moving, 100.0, 100.0) == doctest::Approx(0.0));
  CHECK(phi_eigenvalue(rest, moving, 100.0 * std::exp(1.0), 100.0) ==
        doctest::Approx(0.0121622).epsilon(1e-4));
  CHECK(phi_eigenvalue(rest, moving, 100.0, 10.0, 0.0) == 0.0);
  CHECK_THROWS_AS(phi_eigenvalue(rest, rest, 100.0, 10.0), SingularConfiguration);
}

TEST_CASE("phase cancellation: asymptotic forms cancel exactly") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> mag(0.05, 0.85);
  for (int i = 0; i < 100; ++i) {
    PhaseConfig cfg;
    const Vec3 axis = Vec3{u(rng), u(rng), u(rng)}.normalized();
    cfg.v1 = mag(rng) * axis;
    cfg.v2 = -mag(rng) * axis;
    cfg.x1 = {u(rng), u(rng), u(rng)};
    cfg.t0 = 100.0 + 100.0 * std::abs(u(rng));
    cfg.t = cfg.t0 * (2.0 + 8.0 * std::abs(u(rng)));
    CHECK(cancellation_residual(cfg, from_velocity(cfg.v1), from_velocity(cfg.v2)) < 1e-12);
  }
}

TEST_CASE("phase cancellation: quadrature residual decreases with t0") {
  PhaseConfig cfg = rest_frame_config();
  double prev = 1e9;
  for (double t0 : {1e3, 1e4, 1e5}) {
    cfg.t0 = t0;
    cfg.t = 10.0 * t0;
    const double r =
        cancellation_residual_quadrature(cfg, from_velocity(cfg.v1), from_velocity(cfg.v2));
    CHECK(r < prev);
    prev = r;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("t0 divergence of the asymptotic cross phase") {
  PhaseConfig cfg = rest_frame_config();
  cfg.x1 = {0, 0, 0};
  double prev = 0.0;
  for (double t0 : {100.0, 10.0, 1.0, 0.1}) {
    cfg.t0 = t0;
    const double k = kappa_cross_closed(cfg, true);
    CHECK(k > prev);
    prev = k;
  }
  // also monotone in t at fixed t0
  cfg.t0 = 1.0;
  prev = 0.0;
  for (double t : {1e3, 1e4, 1e5, 1e6}) {
    cfg.t = t;
    const double k = kappa_cross_closed(cfg, true);
    CHECK(k > prev);
    prev = k;
  }
}

TEST_CASE("t0 independence of the cancelled combination") {
  PhaseConfig cfg = rest_frame_config();
  const OnShellMomentum p1 = from_velocity(cfg.v1);
  const OnShellMomentum p2 = from_velocity(cfg.v2);
  double first = 0.0;
  bool have_first = false;
  for (double t0 : {10.0, 100.0, 1000.0}) {
    cfg.t0 = t0;
    cfg.t = 10.0 * t0;
    const double combo =
        phi_eigenvalue(p1, p2, cfg.t, cfg.t0) - kappa_cross_closed(cfg, true);
    if (!have_first) {
      first = combo;
      have_first = true;
    }
    CHECK(std::abs(combo - first) < 1e-12);
  }
}

TEST_CASE("config validation") {
  PhaseConfig cfg = rest_frame_config();
  cfg.v1 = {0.2, 0.1, 0};  // not collinear with v2
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = rest_frame_config();
  cfg.t0 = -5.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
