// Batch front end: run the verification pipelines and emit CSV/JSON artifacts.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "softqed/asymptotic.hpp"
#include "softqed/phase_factors.hpp"
#include "softqed/photon_modes.hpp"
#include "softqed/qubit_states.hpp"

using json = nlohmann::ordered_json;
using namespace softqed;

namespace {

struct RunConfig {
  double alpha = kFineStructure;
  Vec3 v1{0, 0, 0}, v2{0.6, 0, 0};
  Vec3 x1{1, 0, 0}, x2{0, 0.5, 0};
  std::vector<double> t0_schedule{1e3, 1e4, 1e5};
  double t_ratio = 10.0;  // t = t_ratio * t0
  double ir_cutoff = 1e-4, uv_cutoff = 0.1;
  int n_radial = 48, n_polar = 16, n_azimuth = 16;
  std::vector<double> lambda_schedule{1e-3, 1e-4, 1e-5};
  std::vector<double> time_schedule{0, 10, 30, 100, 300, 1000};
  double envelope_width = 0.01;
  double fermion_momentum = 0.5;
  std::string state_file;  // spin-rho input; empty -> random or singlet
  int n_pairs = 20;        // random state size when no file given
};

Vec3 parse_vec3(const std::string& s, const std::string& key) {
  std::istringstream is(s);
  Vec3 v;
  char c1, c2;
  if (!(is >> v.x >> c1 >> v.y >> c2 >> v.z) || c1 != ',' || c2 != ',')
    throw std::runtime_error("config key '" + key + "': expected 'x,y,z', got '" + s + "'");
  return v;
}

std::vector<double> parse_list(const std::string& s, const std::string& key) {
  std::vector<double> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw std::runtime_error("config key '" + key + "': bad number '" + tok + "'");
    }
  }
  if (out.empty()) throw std::runtime_error("config key '" + key + "': empty list");
  return out;
}

// key = value structured text; '#' comments
RunConfig load_config(const std::string& path) {
  RunConfig cfg;
  if (path.empty()) return cfg;
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "alpha") cfg.alpha = std::stod(val);
    else if (key == "v1") cfg.v1 = parse_vec3(val, key);
    else if (key == "v2") cfg.v2 = parse_vec3(val, key);
    else if (key == "x1") cfg.x1 = parse_vec3(val, key);
    else if (key == "x2") cfg.x2 = parse_vec3(val, key);
    else if (key == "t0_schedule") cfg.t0_schedule = parse_list(val, key);
    else if (key == "t_ratio") cfg.t_ratio = std::stod(val);
    else if (key == "ir_cutoff") cfg.ir_cutoff = std::stod(val);
    else if (key == "uv_cutoff") cfg.uv_cutoff = std::stod(val);
    else if (key == "n_radial") cfg.n_radial = std::stoi(val);
    else if (key == "n_polar") cfg.n_polar = std::stoi(val);
    else if (key == "n_azimuth") cfg.n_azimuth = std::stoi(val);
    else if (key == "lambda_schedule") cfg.lambda_schedule = parse_list(val, key);
    else if (key == "time_schedule") cfg.time_schedule = parse_list(val, key);
    else if (key == "envelope_width") cfg.envelope_width = std::stod(val);
    else if (key == "fermion_momentum") cfg.fermion_momentum = std::stod(val);
    else if (key == "state_file") cfg.state_file = val;
    else if (key == "n_pairs") cfg.n_pairs = std::stoi(val);
    else
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key '" + key +
                               "'");
  }
  for (double t0 : cfg.t0_schedule)
    if (t0 <= 0.0 || cfg.t_ratio * t0 / t0 <= 0.0)
      throw std::runtime_error("t0_schedule entries and t_ratio must be positive");
  return cfg;
}

OnShellMomentum from_velocity(const Vec3& v) {
  const double g = 1.0 / std::sqrt(1.0 - v.norm2());
  return {1.0, g * v};
}

std::ofstream open_artifact(const std::string& out_dir, const std::string& name) {
  std::filesystem::create_directories(out_dir);
  const auto path = std::filesystem::path(out_dir) / name;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os.precision(17);
  return os;
}

json matrix_to_json(const SpinDensityMatrix& rho) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back({rho(i, j).real(), rho(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

// --- pipelines -------------------------------------------------------------

bool run_phases(const RunConfig& cfg, const std::string& out_dir, double tol) {
  auto csv = open_artifact(out_dir, "phases.csv");
  csv << "t0,t,kappa1_closed,kappa1_quad,kappa2_closed,kappa2_quad,"
         "kappa12_closed,kappa12_quad,kappa12_asymptotic,phi\n";
  bool ok = true;
  for (double t0 : cfg.t0_schedule) {
    PhaseConfig pc;
    pc.v1 = cfg.v1, pc.v2 = cfg.v2, pc.x1 = cfg.x1, pc.x2 = cfg.x2;
    pc.t0 = t0;
    pc.t = cfg.t_ratio * t0;
    pc.alpha = cfg.alpha;
    pc.validate();
    const double k1c = kappa_self_closed(pc, 1), k1q = kappa_self_quadrature(pc, 1);
    const double k2c = kappa_self_closed(pc, 2), k2q = kappa_self_quadrature(pc, 2);
    const double kxc = kappa_cross_closed(pc, false);
    const double kxq = kappa_cross_quadrature(pc);
    const double kxa = kappa_cross_closed(pc, true);
    const double phi = phi_eigenvalue(from_velocity(cfg.v1), from_velocity(cfg.v2), pc.t, t0,
                                      cfg.alpha);
    csv << t0 << ',' << pc.t << ',' << k1c << ',' << k1q << ',' << k2c << ',' << k2q << ','
        << kxc << ',' << kxq << ',' << kxa << ',' << phi << '\n';
    ok = ok && std::abs(k1c - k1q) < tol * std::max(1.0, std::abs(k1c));
    ok = ok && std::abs(k2c - k2q) < tol * std::max(1.0, std::abs(k2c));
    ok = ok && std::abs(kxc - kxq) < 1e-6 * std::abs(kxq);
  }
  return ok;
}

bool run_cancellation(const RunConfig& cfg, const std::string& out_dir, double tol) {
  auto csv = open_artifact(out_dir, "cancellation.csv");
  csv << "t0,t,residual_asymptotic,residual_quadrature\n";
  const auto p1 = from_velocity(cfg.v1);
  const auto p2 = from_velocity(cfg.v2);
  bool ok = true;
  double prev = 1e300, last = 0.0;
  for (double t0 : cfg.t0_schedule) {
    PhaseConfig pc;
    pc.v1 = cfg.v1, pc.v2 = cfg.v2, pc.x1 = cfg.x1, pc.x2 = cfg.x2;
    pc.t0 = t0;
    pc.t = cfg.t_ratio * t0;
    pc.alpha = cfg.alpha;
    const double ra = cancellation_residual(pc, p1, p2);
    const double rq = cancellation_residual_quadrature(pc, p1, p2);
    csv << t0 << ',' << pc.t << ',' << ra << ',' << rq << '\n';
    ok = ok && ra < tol;
    ok = ok && rq < prev;
    prev = last = rq;
  }
  return ok && last < 1e-3;
}

bool run_spin_rho(const RunConfig& cfg, const std::string& out_dir, double tol, uint64_t seed) {
  TwoQubitState state;
  if (!cfg.state_file.empty()) {
    std::ifstream is(cfg.state_file);
    if (!is) throw std::runtime_error("cannot open state file " + cfg.state_file);
    state = read_state(is);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> up(-0.8, 0.8);
    std::normal_distribution<double> ga;
    for (int a = 0; a < cfg.n_pairs; ++a) {
      state.grid.push_back({{1.0, {up(rng), up(rng), up(rng)}},
                            {1.0, {up(rng), up(rng), up(rng)}},
                            std::abs(ga(rng)) + 0.1});
      SpinAmplitude chi;
      for (int i = 0; i < 4; ++i) chi(i) = {ga(rng), ga(rng)};
      state.amplitudes.push_back(chi);
    }
    state.normalize();
  }
  state.check_normalized();

  const double t0 = cfg.t0_schedule.front();
  const auto phases =
      DressedPhaseAssignment::build(state, cfg.x1, cfg.x2, cfg.t_ratio * t0, t0, cfg.alpha);
  const auto rho_free = reduce_spin_free(state);
  const auto rho_dressed = reduce_spin_dressed(state, phases);
  const double max_diff = (rho_dressed - rho_free).cwiseAbs().maxCoeff();

  json out;
  out["seed"] = seed;
  out["n_pairs"] = state.grid.size();
  out["rho_free"] = matrix_to_json(rho_free);
  out["rho_dressed"] = matrix_to_json(rho_dressed);
  out["max_diff"] = max_diff;
  out["measures"] = {{"concurrence_free", concurrence(rho_free)},
                     {"concurrence_dressed", concurrence(rho_dressed)},
                     {"negativity_free", negativity(rho_free)},
                     {"negativity_dressed", negativity(rho_dressed)}};
  auto js = open_artifact(out_dir, "spin_rho.json");
  js << out.dump(2) << '\n';

  auto csv = open_artifact(out_dir, "spin_rho.csv");
  csv << "row,col,re_free,im_free,re_dressed,im_dressed\n";
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      csv << i << ',' << j << ',' << rho_free(i, j).real() << ',' << rho_free(i, j).imag()
          << ',' << rho_dressed(i, j).real() << ',' << rho_dressed(i, j).imag() << '\n';

  return max_diff < tol;
}

bool run_softcount(const RunConfig& cfg, const std::string& out_dir, double) {
  auto csv = open_artifact(out_dir, "softcount.csv");
  csv << "lambda,n_undressed,n_dressed,diff_to_doubled_cutoff\n";
  const auto p1 = from_velocity(cfg.v1);
  const auto p2 = from_velocity(cfg.v2);
  std::vector<double> xs, ys;
  bool ok = true;
  double first_diff = 0.0;
  bool have_first = false;
  for (double lam : cfg.lambda_schedule) {
    const auto g1 =
        PhotonModeGrid::build(lam, cfg.uv_cutoff, cfg.n_radial, cfg.n_polar, cfg.n_azimuth);
    const auto g2 = PhotonModeGrid::build(2.0 * lam, cfg.uv_cutoff, cfg.n_radial, cfg.n_polar,
                                          cfg.n_azimuth);
    const double nu = soft_photon_number(cloud_amplitude_W(p1, p2, 0.0, g1, cfg.alpha),
                                         Projection::transverse);
    const double nu2 = soft_photon_number(cloud_amplitude_W(p1, p2, 0.0, g2, cfg.alpha),
                                          Projection::transverse);
    const double nd = soft_photon_number(cloud_amplitude_dressed(p1, p2, 0.0, g1, cfg.alpha),
                                         Projection::transverse);
    csv << lam << ',' << nu << ',' << nd << ',' << (nu - nu2) << '\n';
    xs.push_back(std::log(1.0 / lam));
    ys.push_back(nu);
    ok = ok && nd < 1e-10;
    if (have_first) ok = ok && std::abs((nu - nu2) - first_diff) < 0.01 * first_diff;
    else first_diff = nu - nu2, have_first = true;
  }
  // log fit
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    sx += xs[i], sy += ys[i], sxx += xs[i] * xs[i], sxy += xs[i] * ys[i], syy += ys[i] * ys[i];
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double r2 = (n * sxy - sx * sy) * (n * sxy - sx * sy) /
                    ((n * sxx - sx * sx) * (n * syy - sy * sy));
  std::cout << "softcount: log-fit slope " << slope << ", R^2 " << r2 << '\n';
  return ok && slope > 0.0 && r2 > 0.99;
}

bool run_stationary(const RunConfig& cfg, const std::string& out_dir, double) {
  auto csv = open_artifact(out_dir, "stationary.csv");
  csv << "t,group1_abs,group1_re,group1_im,group2_abs,group2_re,group2_im\n";
  bool ok = true;
  double g1_first = 0.0, g1_last = 0.0;
  for (double t : cfg.time_schedule) {
    OscillatoryTermSpec s;
    s.fermion_momentum = {cfg.fermion_momentum, 0, 0};
    s.envelope_width = cfg.envelope_width;
    s.time = t;
    s.group = TermGroup::pair_creation;
    const auto i1 = oscillatory_integral(s);
    s.group = TermGroup::scattering;
    const auto i2 = oscillatory_integral(s);
    csv << t << ',' << std::abs(i1) << ',' << i1.real() << ',' << i1.imag() << ','
        << std::abs(i2) << ',' << i2.real() << ',' << i2.imag() << '\n';
    if (t == cfg.time_schedule.front()) g1_first = std::abs(i1);
    g1_last = std::abs(i1);
  }
  // sanity: the pair-creation group decays across the schedule
  ok = ok && g1_last < g1_first;
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soft-photon dressing verification pipelines"};
  std::string config_path, out_dir = "out", command = "all";
  uint64_t seed = 1;
  double tolerance = 1e-12;
  app.add_option("--config", config_path, "key = value run configuration file");
  app.add_option("--out", out_dir, "output directory for CSV/JSON artifacts");
  app.add_option("--seed", seed, "seed for random state generation");
  app.add_option("--tolerance", tolerance, "tolerance for closed-form/identity checks");
  app.add_option("--command", command, "phases|cancellation|spin-rho|softcount|stationary|all");
  CLI11_PARSE(app, argc, argv);

  try {
    const RunConfig cfg = load_config(config_path);
    json verdict;
    bool all_ok = true;
    auto run_one = [&](const std::string& name, bool (*fn)(const RunConfig&, const std::string&,
                                                           double)) {
      const bool ok = fn(cfg, out_dir, tolerance);
      verdict[name] = ok ? "PASS" : "FAIL";
      std::cout << name << ": " << (ok ? "PASS" : "FAIL") << '\n';
      all_ok = all_ok && ok;
    };
    const bool all = command == "all";
    if (all || command == "phases") run_one("phases", run_phases);
    if (all || command == "cancellation") run_one("cancellation", run_cancellation);
    if (all || command == "spin-rho") {
      const bool ok = run_spin_rho(cfg, out_dir, std::max(tolerance, 1e-14), seed);
      verdict["spin-rho"] = ok ? "PASS" : "FAIL";
      std::cout << "spin-rho: " << (ok ? "PASS" : "FAIL") << '\n';
      all_ok = all_ok && ok;
    }
    if (all || command == "softcount") run_one("softcount", run_softcount);
    if (all || command == "stationary") run_one("stationary", run_stationary);
    if (verdict.empty()) {
      std::cerr << "unknown command '" << command << "'\n";
      return 2;
    }
    if (all) {
      auto js = open_artifact(out_dir, "verdict.json");
      js << verdict.dump(2) << '\n';
    }
    return all_ok ? 0 : 1;
  } catch (const SingularConfiguration& e) {
    std::cerr << "singular configuration: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
