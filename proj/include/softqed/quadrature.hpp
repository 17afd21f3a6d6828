#ifndef SOFTQED_QUADRATURE_HPP
#define SOFTQED_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace softqed {

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on the
/// Legendre recurrence).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

namespace detail {

// Gauss 7 / Kronrod 15 abscissae and weights on [-1,1] (positive half).
extern const double kKronrodNodes[8];
extern const double kKronrodWeights[8];
extern const double kGaussWeights[4];

template <typename T>
double qnorm(const T& v) {
  return std::abs(v);
}

template <typename F, typename T>
void gk15(const F& f, double a, double b, T& kronrod, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T resg{};
  T resk{};
  const T fc = f(c);
  resk = kKronrodWeights[7] * fc;
  resg = kGaussWeights[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kKronrodNodes[j];
    const T f1 = f(c - x);
    const T f2 = f(c + x);
    resk = resk + kKronrodWeights[j] * (f1 + f2);
    if (j % 2 == 1) resg = resg + kGaussWeights[j / 2] * (f1 + f2);
  }
  kronrod = h * resk;
  err = qnorm(h * (resk - resg));
}

template <typename F, typename T>
T adaptive_impl(const F& f, double a, double b, double tol, int depth) {
  T v{};
  double err = 0.0;
  gk15<F, T>(f, a, b, v, err);
  // roundoff floor: halving tol forever would otherwise force a full-depth
  // subdivision tree once the local error is dominated by machine precision
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * qnorm(v);
  if (err <= std::max(tol, floor) || depth <= 0) return v;
  const double c = 0.5 * (a + b);
  return adaptive_impl<F, T>(f, a, c, 0.5 * tol, depth - 1) +
         adaptive_impl<F, T>(f, c, b, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (G7,K15) with absolute tolerance.
template <typename F>
auto integrate_adaptive(const F& f, double a, double b, double tol = 1e-10, int max_depth = 48) {
  using T = decltype(f(a));
  return detail::adaptive_impl<F, T>(f, a, b, tol, max_depth);
}

}  // namespace softqed

#endif  // SOFTQED_QUADRATURE_HPP
