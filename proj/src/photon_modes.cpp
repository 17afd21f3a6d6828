#include "softqed/photon_modes.hpp"

#include <ostream>
#include <stdexcept>

#include "softqed/quadrature.hpp"

namespace softqed {

PhotonModeGrid PhotonModeGrid::build(double ir_cutoff, double uv_cutoff, int n_radial, int n_polar,
                                     int n_azimuth) {
  if (!(ir_cutoff > 0.0) || !(uv_cutoff > ir_cutoff))
    throw std::invalid_argument("PhotonModeGrid: need 0 < ir_cutoff < uv_cutoff");
  if (n_radial < 2 || n_polar < 2 || n_azimuth < 2)
    throw std::invalid_argument("PhotonModeGrid: node counts must be >= 2");

  std::vector<double> ru, rw, cu, cw;
  gauss_legendre(n_radial, ru, rw);
  gauss_legendre(n_polar, cu, cw);

  PhotonModeGrid grid;
  grid.ir_cutoff_ = ir_cutoff;
  grid.uv_cutoff_ = uv_cutoff;
  grid.modes_.reserve(static_cast<std::size_t>(n_radial) * n_polar * n_azimuth);

  // d^3k = k^3 d(ln k) dcos(theta) dphi
  const double lu = std::log(ir_cutoff);
  const double hu = std::log(uv_cutoff);
  const double half = 0.5 * (hu - lu);
  const double mid = 0.5 * (hu + lu);
  const double dphi = 2.0 * M_PI / n_azimuth;

  for (int ir = 0; ir < n_radial; ++ir) {
    const double k = std::exp(mid + half * ru[ir]);
    const double wr = half * rw[ir] * k * k * k;
    for (int ic = 0; ic < n_polar; ++ic) {
      const double c = cu[ic];
      const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      for (int ia = 0; ia < n_azimuth; ++ia) {
        const double phi = (ia + 0.5) * dphi;
        PhotonMode m;
        m.k = Vec3{k * s * std::cos(phi), k * s * std::sin(phi), k * c};
        m.k0 = k;
        m.weight = wr * cw[ic] * dphi;
        grid.modes_.push_back(m);
      }
    }
  }
  return grid;
}

void PhotonModeGrid::write_csv(std::ostream& os) const {
  os << "kx,ky,kz,k0,weight\n";
  for (const auto& m : modes_)
    os << m.k.x << ',' << m.k.y << ',' << m.k.z << ',' << m.k0 << ',' << m.weight << '\n';
}

DressingVector dressing_vector(const Vec3& v, const PhotonMode& mode) {
  const FourVector k{mode.k0, mode.k};
  const FourVector eta_plus_v{1.0, v};
  const FourVector eta_minus_v{1.0, -v};
  const double emk = minkowski_dot(eta_minus_v, k);  // k0 + v.k
  DressingVector d;
  d.V = eta_plus_v * emk - k;
  const double Vk = minkowski_dot(d.V, k);
  d.c = d.V * (1.0 / Vk);
  return d;
}

namespace {

Complex4 bare_term(const OnShellMomentum& p, const PhotonMode& mode, double t) {
  const FourVector pmu = p.four_momentum();
  const FourVector k{mode.k0, mode.k};
  const double pk = minkowski_dot(pmu, k);
  const Complex phase = std::exp(Complex(0.0, pk * t / p.energy()));
  Complex4 out;
  for (int mu = 0; mu < 4; ++mu) out[mu] = pmu[mu] / pk * phase;
  return out;
}

Complex4 dressed_term(const OnShellMomentum& p, const PhotonMode& mode, double t) {
  const FourVector pmu = p.four_momentum();
  const FourVector k{mode.k0, mode.k};
  const double pk = minkowski_dot(pmu, k);
  const Complex phase = std::exp(Complex(0.0, pk * t / p.energy()));
  const DressingVector d = dressing_vector(p.velocity(), mode);
  Complex4 out;
  for (int mu = 0; mu < 4; ++mu) out[mu] = (pmu[mu] / pk - d.c[mu]) * phase;
  return out;
}

template <typename Term>
std::vector<Complex4> assemble(const std::vector<OnShellMomentum>& momenta,
                               const PhotonModeGrid& grid, double t, double alpha,
                               const Term& term) {
  const double e = std::sqrt(coupling_e2(alpha));
  const double pref = e / std::pow(2.0 * M_PI, 1.5);
  std::vector<Complex4> values(grid.size());
  const auto& modes = grid.modes();
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const double soft = pref / std::sqrt(2.0 * modes[i].k0);
    Complex4 acc{};
    for (const auto& p : momenta) {
      const Complex4 tp = term(p, modes[i], t);
      for (int mu = 0; mu < 4; ++mu) acc[mu] += tp[mu];
    }
    for (int mu = 0; mu < 4; ++mu) values[i][mu] = soft * acc[mu];
  }
  return values;
}

}  // namespace

CloudAmplitude cloud_amplitude_W(const OnShellMomentum& p1, const OnShellMomentum& p2, double t,
                                 const PhotonModeGrid& grid, double alpha) {
  std::vector<OnShellMomentum> ps{p1, p2};
  auto values = assemble(ps, grid, t, alpha, bare_term);
  return {grid, std::move(values), std::move(ps), t, false};
}

CloudAmplitude cloud_amplitude_single(const OnShellMomentum& p, double t,
                                      const PhotonModeGrid& grid, double alpha) {
  std::vector<OnShellMomentum> ps{p};
  auto values = assemble(ps, grid, t, alpha, bare_term);
  return {grid, std::move(values), std::move(ps), t, false};
}

CloudAmplitude cloud_amplitude_dressed(const OnShellMomentum& p1, const OnShellMomentum& p2,
                                       double t, const PhotonModeGrid& grid, double alpha) {
  std::vector<OnShellMomentum> ps{p1, p2};
  auto values = assemble(ps, grid, t, alpha, dressed_term);
  return {grid, std::move(values), std::move(ps), t, true};
}

std::pair<Vec3, Vec3> transverse_basis(const Vec3& khat) {
  const Vec3 seed = std::abs(khat.x) < 0.5 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = khat.cross(seed).normalized();
  const Vec3 e2 = khat.cross(e1);
  return {e1, e2};
}

namespace {

double transverse_norm_density(const Complex4& f, const Vec3& khat) {
  const auto [e1, e2] = transverse_basis(khat);
  const Complex a = e1.x * f[1] + e1.y * f[2] + e1.z * f[3];
  const Complex b = e2.x * f[1] + e2.y * f[2] + e2.z * f[3];
  return std::norm(a) + std::norm(b);
}

}  // namespace

double soft_photon_number(const CloudAmplitude& amplitude, Projection projection) {
  const auto& modes = amplitude.grid().modes();
  const auto& vals = amplitude.values();
  double acc = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    double density;
    if (projection == Projection::transverse) {
      density = transverse_norm_density(vals[i], modes[i].k.normalized());
    } else {
      density = -std::norm(vals[i][0]) + std::norm(vals[i][1]) + std::norm(vals[i][2]) +
                std::norm(vals[i][3]);
    }
    const double term = modes[i].weight * density - comp;
    const double next = acc + term;
    comp = (next - acc) - term;
    acc = next;
  }
  return acc;
}

Complex coherent_overlap(const CloudAmplitude& f, const CloudAmplitude& g) {
  if (!f.grid().same_grid(g.grid()))
    throw std::invalid_argument("coherent_overlap: amplitudes live on different grids");
  const auto& modes = f.grid().modes();
  const auto& fv = f.values();
  const auto& gv = g.values();
  double nf = 0.0, ng = 0.0;
  Complex gf{};
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const Vec3 khat = modes[i].k.normalized();
    const auto [e1, e2] = transverse_basis(khat);
    const Complex fa = e1.x * fv[i][1] + e1.y * fv[i][2] + e1.z * fv[i][3];
    const Complex fb = e2.x * fv[i][1] + e2.y * fv[i][2] + e2.z * fv[i][3];
    const Complex ga = e1.x * gv[i][1] + e1.y * gv[i][2] + e1.z * gv[i][3];
    const Complex gb = e2.x * gv[i][1] + e2.y * gv[i][2] + e2.z * gv[i][3];
    const double w = modes[i].weight;
    nf += w * (std::norm(fa) + std::norm(fb));
    ng += w * (std::norm(ga) + std::norm(gb));
    gf += w * (std::conj(ga) * fa + std::conj(gb) * fb);
  }
  return std::exp(Complex(-0.5 * nf - 0.5 * ng, 0.0) + gf);
}

void CloudAmplitude::write_csv(std::ostream& os) const {
  os << "kx,ky,kz,weight,re_f0,im_f0,re_f1,im_f1,re_f2,im_f2,re_f3,im_f3\n";
  const auto& modes = grid_->modes();
  for (std::size_t i = 0; i < modes.size(); ++i) {
    os << modes[i].k.x << ',' << modes[i].k.y << ',' << modes[i].k.z << ',' << modes[i].weight;
    for (int mu = 0; mu < 4; ++mu)
      os << ',' << values_[i][mu].real() << ',' << values_[i][mu].imag();
    os << '\n';
  }
}

}  // namespace softqed
