#ifndef SOFTQED_KINEMATICS_HPP
#define SOFTQED_KINEMATICS_HPP

#include <cmath>
#include <stdexcept>

// Natural units: hbar = c = 1, energies and momenta in units of the fermion
// mass m, times in units of 1/m.  Metric signature (+,-,-,-).

namespace softqed {

inline constexpr double kFineStructure = 1.0 / 137.035999;

/// e^2 = 4 pi alpha
inline double coupling_e2(double alpha) { return 4.0 * M_PI * alpha; }

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }
  Vec3 normalized() const {
    const double n = norm();
    return n > 0.0 ? *this / n : Vec3{0, 0, 1};
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

struct FourVector {
  double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

  FourVector() = default;
  FourVector(double t_, double x_, double y_, double z_) : t(t_), x(x_), y(y_), z(z_) {}
  FourVector(double t_, const Vec3& s) : t(t_), x(s.x), y(s.y), z(s.z) {}

  Vec3 spatial() const { return {x, y, z}; }

  FourVector operator+(const FourVector& o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
  FourVector operator-(const FourVector& o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
  FourVector operator*(double s) const { return {t * s, x * s, y * s, z * s}; }

  double operator[](int mu) const {
    switch (mu) {
      case 0: return t;
      case 1: return x;
      case 2: return y;
      default: return z;
    }
  }
};

/// a.b = a0 b0 - a1 b1 - a2 b2 - a3 b3
inline double minkowski_dot(const FourVector& a, const FourVector& b) {
  return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

/// Particle momentum constrained to the mass shell p.p = m^2.
class OnShellMomentum {
 public:
  OnShellMomentum(double mass, const Vec3& p) : mass_(mass), p_(p) {
    if (mass <= 0.0) throw std::invalid_argument("OnShellMomentum: mass must be positive");
  }

  double mass() const { return mass_; }
  const Vec3& spatial() const { return p_; }
  double energy() const { return std::sqrt(p_.norm2() + mass_ * mass_); }
  Vec3 velocity() const { return p_ / energy(); }
  double gamma() const { return energy() / mass_; }
  FourVector four_momentum() const { return {energy(), p_}; }

 private:
  double mass_;
  Vec3 p_;
};

/// Straight world line x(s) = x + (s - x0)(eta + v), with x0(s) = s.
struct WorldLine {
  FourVector base;
  Vec3 velocity;

  Vec3 position(double s) const { return base.spatial() + (s - base.t) * velocity; }
  FourVector point(double s) const { return {s, position(s)}; }
};

namespace detail {
inline void require_collinear(const Vec3& v1, const Vec3& v2, const char* what) {
  const double scale = v1.norm() * v2.norm();
  if (v1.cross(v2).norm() > 1e-12 * std::max(scale, 1e-300))
    throw std::invalid_argument(std::string(what) + ": velocities must be collinear");
}
}  // namespace detail

/// Invariant relative speed u(p,q) = sqrt(1 - m^4/(p.q)^2) for an equal-mass
/// on-shell pair.  Evaluated through (p.q - m^2)(p.q + m^2) to keep the
/// near-threshold cancellation under control.
inline double relative_velocity_invariant(const OnShellMomentum& p, const OnShellMomentum& q) {
  if (std::abs(p.mass() - q.mass()) > 1e-12 * p.mass())
    throw std::invalid_argument("relative_velocity_invariant: masses must be equal");
  const double m2 = p.mass() * q.mass();
  const double pq = minkowski_dot(p.four_momentum(), q.four_momentum());
  if (pq < m2 * (1.0 - 1e-10))
    throw std::domain_error("relative_velocity_invariant: p.q < m^2 is unphysical");
  const double num = std::max(pq - m2, 0.0) * (pq + m2);
  return std::sqrt(num) / pq;
}

/// u_r = |v1 - v2| / (1 - v1.v2), valid for collinear 3-velocities only.
inline double relative_velocity_3v(const Vec3& v1, const Vec3& v2) {
  if (v1.norm() >= 1.0 || v2.norm() >= 1.0)
    throw std::invalid_argument("relative_velocity_3v: speeds must be < 1");
  detail::require_collinear(v1, v2, "relative_velocity_3v");
  return (v1 - v2).norm() / (1.0 - v1.dot(v2));
}

/// R = x - v t
inline Vec3 retarded_position(const Vec3& x, const Vec3& v, double t) { return x - v * t; }

/// Boost an on-shell momentum by velocity w (active boost of the particle).
inline OnShellMomentum boost(const OnShellMomentum& p, const Vec3& w) {
  const double w2 = w.norm2();
  if (w2 >= 1.0) throw std::invalid_argument("boost: |w| must be < 1");
  if (w2 == 0.0) return p;
  const double g = 1.0 / std::sqrt(1.0 - w2);
  const Vec3 ps = p.spatial();
  const double pl = ps.dot(w) / std::sqrt(w2);
  const Vec3 what = w.normalized();
  const Vec3 perp = ps - pl * what;
  const double e = p.energy();
  const double pl2 = g * (pl + std::sqrt(w2) * e);
  return {p.mass(), perp + pl2 * what};
}

}  // namespace softqed

#endif  // SOFTQED_KINEMATICS_HPP
