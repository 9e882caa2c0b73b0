#include "oddres/run_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oddres {

namespace {

double parse_double(const std::string& key, const std::string& s) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for " + key + ": '" + s + "'");
  }
}

long parse_long(const std::string& key, const std::string& s) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer for " + key + ": '" + s + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw std::invalid_argument("config: bad boolean for " + key + ": '" + s + "'");
}

double parse_angle(const std::string& key, const std::string& s) {
  if (s == "pi") return M_PI;
  if (s == "-pi") return -M_PI;
  return parse_double(key, s);
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// "min:max:count"
void parse_grid(const std::string& key, const std::string& s, double& lo, double& hi, int& count) {
  std::size_t c1 = s.find(':');
  std::size_t c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw std::invalid_argument("config: " + key + " wants min:max:count, got '" + s + "'");
  lo = parse_angle(key, s.substr(0, c1));
  hi = parse_angle(key, s.substr(c1 + 1, c2 - c1 - 1));
  count = static_cast<int>(parse_long(key, s.substr(c2 + 1)));
}

}  // namespace

std::complex<double> parse_beta_token(const std::string& token) {
  std::size_t colon = token.find(':');
  double mag, arg = 0.0;
  if (colon == std::string::npos) {
    mag = parse_double("betas", token);
  } else {
    mag = parse_double("betas", token.substr(0, colon));
    arg = parse_angle("betas", token.substr(colon + 1));
  }
  if (mag < 0) throw std::invalid_argument("config: beta magnitude must be >= 0: '" + token + "'");
  return std::polar(mag, arg);
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "command") {
    cfg.command = value;
  } else if (key == "k") {
    cfg.k = static_cast<int>(parse_long(key, value));
  } else if (key == "j") {
    cfg.j = static_cast<int>(parse_long(key, value));
  } else if (key == "S") {
    cfg.S = static_cast<int>(parse_long(key, value));
  } else if (key == "M") {
    cfg.M = static_cast<int>(parse_long(key, value));
  } else if (key == "precision") {
    cfg.precision_bits = static_cast<unsigned>(parse_long(key, value));
  } else if (key == "refine_bits") {
    cfg.refine_bits = static_cast<unsigned>(parse_long(key, value));
  } else if (key == "betas") {
    cfg.betas.clear();
    for (const std::string& tok : split_ws(value)) cfg.betas.push_back(parse_beta_token(tok));
  } else if (key == "nodes") {
    cfg.nodes = static_cast<int>(parse_long(key, value));
  } else if (key == "n_schedule") {
    cfg.n_schedule.clear();
    for (const std::string& tok : split_ws(value))
      cfg.n_schedule.push_back(static_cast<int>(parse_long(key, tok)));
  } else if (key == "theta_probes") {
    cfg.theta_probes.clear();
    for (const std::string& tok : split_ws(value)) cfg.theta_probes.push_back(parse_double(key, tok));
  } else if (key == "homotopy_steps") {
    cfg.homotopy_steps = static_cast<int>(parse_long(key, value));
  } else if (key == "tol_truncation") {
    cfg.tol_truncation = parse_double(key, value);
  } else if (key == "tol_f") {
    cfg.tol_f = parse_double(key, value);
  } else if (key == "tol_g") {
    cfg.tol_g = parse_double(key, value);
  } else if (key == "cache") {
    cfg.cache_path = value;
  } else if (key == "output") {
    cfg.output_path = value;
  } else if (key == "jobs") {
    cfg.jobs = static_cast<int>(parse_long(key, value));
  } else if (key == "dump_hex") {
    cfg.dump_hex = parse_bool(key, value);
  } else if (key == "delta") {
    cfg.delta = parse_double(key, value);
  } else if (key == "B_delta") {
    cfg.B_delta = parse_double(key, value);
  } else if (key == "R") {
    cfg.R = parse_double(key, value);
  } else if (key == "grid_mag") {
    parse_grid(key, value, cfg.grid_mag_min, cfg.grid_mag_max, cfg.grid_mag_count);
  } else if (key == "grid_arg") {
    parse_grid(key, value, cfg.grid_arg_min, cfg.grid_arg_max, cfg.grid_arg_count);
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not key=value: '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    try {
      apply_setting(cfg, key, value);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string(e.what()) + " (line " + std::to_string(lineno) + ")");
    }
  }
  return cfg;
}

void validate_config(const RunConfig& cfg) {
  auto fail = [](const std::string& m) { throw std::invalid_argument("config: " + m); };

  if (cfg.command != "coeffs" && cfg.command != "sum" && cfg.command != "oracle" &&
      cfg.command != "compare" && cfg.command != "regions")
    fail("command must be one of coeffs|sum|oracle|compare|regions, got '" + cfg.command + "'");
  if (cfg.k < 1) fail("k must be >= 1");
  if (cfg.j < 0) fail("j must be >= 0");
  if (cfg.S < 0) fail("S must be >= 0");
  if (cfg.precision_bits < 64 || cfg.precision_bits > 65536)
    fail("precision must lie in [64, 65536] bits");
  if (cfg.jobs < 0) fail("jobs must be >= 0 (0 = all cores)");
  if (cfg.nodes < 2) fail("nodes must be >= 2");

  if (cfg.command == "sum" || cfg.command == "compare") {
    if (cfg.M < 1) fail("M must be >= 1 for summation");
    if (cfg.S < 2 * cfg.M)
      fail("S must be >= 2M so the even Borel series carries enough data (S=" +
           std::to_string(cfg.S) + ", M=" + std::to_string(cfg.M) + ")");
    if (cfg.betas.empty()) fail("betas must be nonempty for " + cfg.command);
  }
  if (cfg.command == "oracle" || cfg.command == "compare") {
    if (cfg.n_schedule.empty()) fail("n_schedule must be nonempty");
    for (int n : cfg.n_schedule)
      if (n < 2 * cfg.k + 2) fail("n_schedule entries must exceed the perturbation band");
    if (cfg.homotopy_steps < 1) fail("homotopy_steps must be >= 1");
    if (cfg.betas.empty()) fail("betas must be nonempty for " + cfg.command);
  }
  if (cfg.command == "regions") {
    if (cfg.grid_mag_count < 1 || cfg.grid_arg_count < 1) fail("region grid counts must be >= 1");
    if (cfg.delta <= 0 || cfg.B_delta <= 0 || cfg.R <= 0) fail("delta, B_delta, R must be > 0");
  }
  if (cfg.tol_f <= 0 || cfg.tol_g <= 0) fail("tolerances must be > 0");
}

}  // namespace oddres
