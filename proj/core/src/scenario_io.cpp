#include "fabeam/scenario_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace fabeam {

namespace {

constexpr const char* kMagic = "fabeam-scenario";
constexpr int kVersion = 1;

void expect(std::istream& is, const std::string& token) {
  std::string got;
  is >> got;
  if (got != token)
    throw std::runtime_error("scenario parse error: expected '" + token +
                             "', got '" + got + "'");
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<double> parse_list(const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

}  // namespace

void save_scenario(std::ostream& os, const Scenario& s) {
  const auto& g = s.geometry;
  os << std::setprecision(17);
  os << kMagic << " v" << kVersion << "\n";
  os << "wavelength " << g.wavelength << "\n";
  os << "region_side " << g.region_side << "\n";
  os << "noise_user " << s.channels.noise_user << "\n";
  os << "noise_eve " << s.channels.noise_eve << "\n";
  os << "bs " << g.antennas() << "\n";
  for (const auto& b : g.bs_positions) os << b.x() << " " << b.y() << "\n";
  os << "users " << g.users() << "\n";
  for (int k = 0; k < g.users(); ++k) {
    const int L = g.paths(k);
    os << "user " << k << " paths " << L << " eps "
       << s.channels.eps[std::size_t(k)] << "\n";
    for (const auto& a : g.path_angles[std::size_t(k)])
      os << a.theta << " " << a.phi << "\n";
    const CMat& sig = g.path_response[std::size_t(k)];
    for (Eigen::Index r = 0; r < sig.rows(); ++r) {
      for (Eigen::Index c = 0; c < sig.cols(); ++c) {
        os << sig(r, c).real() << " " << sig(r, c).imag();
        os << (c + 1 == sig.cols() ? "\n" : " ");
      }
    }
  }
  os << "eve " << g.eve_theta << " " << g.eve_phi << " " << g.eve_gain << "\n";
  os << "eve_theta_grid " << g.eve_theta_grid.size();
  for (double t : g.eve_theta_grid) os << " " << t;
  os << "\neve_phi_grid " << g.eve_phi_grid.size();
  for (double p : g.eve_phi_grid) os << " " << p;
  os << "\n";
}

Scenario load_scenario(std::istream& is) {
  expect(is, kMagic);
  std::string version;
  is >> version;
  if (version != "v1")
    throw std::runtime_error("unsupported scenario version " + version);

  Scenario s;
  auto& g = s.geometry;
  double noise_user = 0.0, noise_eve = 0.0;
  expect(is, "wavelength");
  is >> g.wavelength;
  expect(is, "region_side");
  is >> g.region_side;
  expect(is, "noise_user");
  is >> noise_user;
  expect(is, "noise_eve");
  is >> noise_eve;
  expect(is, "bs");
  int nbs = 0;
  is >> nbs;
  for (int n = 0; n < nbs; ++n) {
    double u = 0.0, v = 0.0;
    is >> u >> v;
    g.bs_positions.emplace_back(u, v);
  }
  expect(is, "users");
  int users = 0;
  is >> users;
  std::vector<double> eps;
  for (int k = 0; k < users; ++k) {
    expect(is, "user");
    int idx = 0, L = 0;
    double ek = 0.0;
    is >> idx;
    expect(is, "paths");
    is >> L;
    expect(is, "eps");
    is >> ek;
    eps.push_back(ek);
    std::vector<PathAngle> angles(std::size_t(L));
    for (auto& a : angles) is >> a.theta >> a.phi;
    CMat sig(L, L);
    for (Eigen::Index r = 0; r < L; ++r)
      for (Eigen::Index c = 0; c < L; ++c) {
        double re = 0.0, im = 0.0;
        is >> re >> im;
        sig(r, c) = cplx(re, im);
      }
    g.path_angles.push_back(std::move(angles));
    g.path_response.push_back(std::move(sig));
  }
  expect(is, "eve");
  is >> g.eve_theta >> g.eve_phi >> g.eve_gain;
  expect(is, "eve_theta_grid");
  std::size_t nt = 0;
  is >> nt;
  g.eve_theta_grid.resize(nt);
  for (auto& t : g.eve_theta_grid) is >> t;
  expect(is, "eve_phi_grid");
  std::size_t np = 0;
  is >> np;
  g.eve_phi_grid.resize(np);
  for (auto& p : g.eve_phi_grid) is >> p;
  if (!is) throw std::runtime_error("truncated scenario record");
  g.validate();

  s.channels = realize_channels(g, FaPlacement::origin(users), noise_user,
                                noise_eve, 0.0);
  s.channels.eps = eps;
  return s;
}

void save_scenario_file(const std::string& path, const Scenario& s) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  save_scenario(os, s);
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return load_scenario(is);
}

std::map<std::string, std::string> read_key_values(std::istream& is) {
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line missing '=': " + line);
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

ScenarioConfig parse_scenario_config(std::istream& is) {
  ScenarioConfig c;
  for (const auto& [key, value] : read_key_values(is)) {
    if (key == "users") c.users = std::stoi(value);
    else if (key == "antennas") c.antennas = std::stoi(value);
    else if (key == "paths") c.paths = std::stoi(value);
    else if (key == "wavelength") c.wavelength = std::stod(value);
    else if (key == "region_side") c.region_side = std::stod(value);
    else if (key == "pathloss_exponent") c.pathloss_exponent = std::stod(value);
    else if (key == "pathloss_model") {
      if (value == "as_printed") c.pathloss_model = PathLossModel::kAsPrinted;
      else if (value == "conventional")
        c.pathloss_model = PathLossModel::kConventional;
      else throw std::runtime_error("unknown pathloss_model " + value);
    } else if (key == "user_distance_min") c.user_distance_min = std::stod(value);
    else if (key == "user_distance_max") c.user_distance_max = std::stod(value);
    else if (key == "eve_distance_min") c.eve_distance_min = std::stod(value);
    else if (key == "eve_distance_max") c.eve_distance_max = std::stod(value);
    else if (key == "noise_user") c.noise_user = std::stod(value);
    else if (key == "noise_eve") c.noise_eve = std::stod(value);
    else if (key == "relative_csi_error") c.relative_csi_error = std::stod(value);
    else if (key == "eve_theta_grid") c.eve_theta_grid = parse_list(value);
    else if (key == "eve_phi_grid") c.eve_phi_grid = parse_list(value);
    else throw std::runtime_error("unknown scenario config key " + key);
  }
  c.validate();
  return c;
}

ScenarioConfig parse_scenario_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return parse_scenario_config(is);
}

}  // namespace fabeam
