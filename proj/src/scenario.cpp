// SPDX-License-Identifier: Apache-2.0

#include "gaa/scenario.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace gaa {

namespace {

constexpr double kDegToRad = M_PI / 180.0;

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// splits "value [unit]" where unit is a trailing alphabetic token
std::pair<double, std::string> parse_number_unit(const std::string& raw, int line) {
  const std::string text = trim(raw);
  size_t unit_begin = text.size();
  while (unit_begin > 0) {
    const char c = text[unit_begin - 1];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      --unit_begin;
    } else {
      break;
    }
  }
  const std::string num_part = trim(text.substr(0, unit_begin));
  const std::string unit = lower(trim(text.substr(unit_begin)));
  try {
    size_t pos = 0;
    const double v = std::stod(num_part, &pos);
    if (pos != num_part.size()) throw std::invalid_argument("trailing characters");
    return {v, unit};
  } catch (const std::exception&) {
    throw ScenarioError(line, "expected a number, got '" + text + "'");
  }
}

double parse_plain(const std::string& raw, int line) {
  auto [v, unit] = parse_number_unit(raw, line);
  if (!unit.empty()) throw ScenarioError(line, "unexpected unit '" + unit + "'");
  return v;
}

double parse_angle(const std::string& raw, int line) {
  auto [v, unit] = parse_number_unit(raw, line);
  if (unit.empty() || unit == "rad") return v;
  if (unit == "deg") return v * kDegToRad;
  throw ScenarioError(line, "unknown angle unit '" + unit + "' (use deg or rad)");
}

double parse_power(const std::string& raw, int line) {
  auto [v, unit] = parse_number_unit(raw, line);
  if (unit.empty() || unit == "mw") return v;
  if (unit == "dbm") return dbm_to_mw(v);
  throw ScenarioError(line, "unknown power unit '" + unit + "' (use mW or dBm)");
}

bool parse_bool(const std::string& raw, int line) {
  const std::string v = lower(trim(raw));
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ScenarioError(line, "expected a boolean, got '" + raw + "'");
}

std::vector<double> parse_list(const std::string& raw, int line) {
  std::vector<double> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_plain(item, line));
  }
  return out;
}

long parse_long(const std::string& raw, int line) {
  const double v = parse_plain(raw, line);
  if (v != std::floor(v)) throw ScenarioError(line, "expected an integer, got '" + raw + "'");
  return static_cast<long>(v);
}

}  // namespace

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

ArrayGeometry Scenario::geometry() const { return ArrayGeometry{m_half, n_y}; }
NoiseParams Scenario::noise() const { return NoiseParams{sigma_sq}; }
GridSpec Scenario::grid() const { return GridSpec{grid_step, grid_refine}; }

TerminalProfile Scenario::gcs_profile() const {
  TerminalProfile p;
  p.power_mw = p0_mw;
  p.rician_lambda_sq = lambda0_sq;
  p.path_loss_exp = path_loss_exp;
  p.direction = angles_to_cosines(AnglePair{theta0, phi0});
  p.distance_m = d0_m ? *d0_m : distance_from_height(height_m, theta0);
  return p;
}

TerminalProfile Scenario::ma_profile() const {
  const double th = theta1.value_or(theta0);
  const double ph = phi1.value_or(phi0);
  TerminalProfile p;
  p.power_mw = p1_mw.value_or(p0_mw);
  p.rician_lambda_sq = lambda1_sq.value_or(lambda0_sq);
  p.path_loss_exp = path_loss_exp;
  p.direction = angles_to_cosines(AnglePair{th, ph});
  if (d1_m) {
    p.distance_m = *d1_m;
  } else if (theta1) {
    p.distance_m = distance_from_height(height_m, th);
  } else {
    p.distance_m = d0_m ? *d0_m : distance_from_height(height_m, theta0);
  }
  return p;
}

GcsKnowledge Scenario::knowledge() const {
  return make_gcs_knowledge(gcs_profile(), sigma_sq, geometry());
}

FarModel Scenario::far_model() const { return FarModel{geometry().total(), k_split}; }

void Scenario::validate() const {
  geometry().validate();
  noise().validate();
  grid().validate();
  gcs_profile().validate();
  ma_profile().validate();
  far_model().validate();
  if (trials < 0) throw std::invalid_argument("Scenario: trials must be >= 0");
  if (tau_count < 2) throw std::invalid_argument("Scenario: tau_count must be >= 2");
  if (sweep_count < 2) throw std::invalid_argument("Scenario: sweep_count must be >= 2");
  for (double eta : eta_list) {
    if (!(eta > 0.0 && eta < 1.0)) {
      throw std::invalid_argument("Scenario: eta values must lie in (0,1)");
    }
  }
}

Scenario parse_scenario(std::istream& in) {
  Scenario sc;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ScenarioError(lineno, "expected 'key = value', got '" + line + "'");
    }
    const std::string key = lower(trim(line.substr(0, eq)));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ScenarioError(lineno, "empty key");
    if (value.empty()) throw ScenarioError(lineno, "empty value for key '" + key + "'");
    if (!seen.insert(key).second) {
      throw ScenarioError(lineno, "duplicate key '" + key + "'");
    }

    if (key == "m_half") {
      sc.m_half = static_cast<int>(parse_long(value, lineno));
    } else if (key == "n_y") {
      sc.n_y = static_cast<int>(parse_long(value, lineno));
    } else if (key == "sigma_sq") {
      sc.sigma_sq = parse_plain(value, lineno);
    } else if (key == "path_loss_exp") {
      sc.path_loss_exp = parse_plain(value, lineno);
    } else if (key == "height") {
      sc.height_m = parse_plain(value, lineno);
    } else if (key == "theta0") {
      sc.theta0 = parse_angle(value, lineno);
    } else if (key == "phi0") {
      sc.phi0 = parse_angle(value, lineno);
    } else if (key == "p0") {
      sc.p0_mw = parse_power(value, lineno);
    } else if (key == "lambda0_sq") {
      sc.lambda0_sq = parse_plain(value, lineno);
    } else if (key == "d0") {
      sc.d0_m = parse_plain(value, lineno);
    } else if (key == "theta1") {
      sc.theta1 = parse_angle(value, lineno);
    } else if (key == "phi1") {
      sc.phi1 = parse_angle(value, lineno);
    } else if (key == "p1") {
      sc.p1_mw = parse_power(value, lineno);
    } else if (key == "lambda1_sq") {
      sc.lambda1_sq = parse_plain(value, lineno);
    } else if (key == "d1") {
      sc.d1_m = parse_plain(value, lineno);
    } else if (key == "psi") {
      sc.psi = parse_angle(value, lineno);
    } else if (key == "grid_step") {
      sc.grid_step = parse_plain(value, lineno);
    } else if (key == "grid_refine") {
      sc.grid_refine = parse_bool(value, lineno);
    } else if (key == "trials") {
      sc.trials = parse_long(value, lineno);
    } else if (key == "seed") {
      const long s = parse_long(value, lineno);
      if (s < 0) throw ScenarioError(lineno, "seed must be nonnegative");
      sc.seed = static_cast<std::uint64_t>(s);
    } else if (key == "threads") {
      sc.threads = static_cast<int>(parse_long(value, lineno));
    } else if (key == "k_split") {
      sc.k_split = static_cast<int>(parse_long(value, lineno));
    } else if (key == "eta_list") {
      sc.eta_list = parse_list(value, lineno);
    } else if (key == "tau_min") {
      sc.tau_min = parse_plain(value, lineno);
    } else if (key == "tau_max") {
      sc.tau_max = parse_plain(value, lineno);
    } else if (key == "tau_count") {
      sc.tau_count = static_cast<int>(parse_long(value, lineno));
    } else if (key == "sweep_min") {
      sc.sweep_min = parse_plain(value, lineno);
    } else if (key == "sweep_max") {
      sc.sweep_max = parse_plain(value, lineno);
    } else if (key == "sweep_count") {
      sc.sweep_count = static_cast<int>(parse_long(value, lineno));
    } else {
      throw ScenarioError(lineno, "unknown key '" + key + "'");
    }
  }
  try {
    sc.validate();
  } catch (const std::exception& e) {
    throw ScenarioError(lineno, std::string("invalid scenario: ") + e.what());
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
  return parse_scenario(in);
}

}  // namespace gaa
