#pragma once

#include <complex>
#include <string>
#include <vector>

namespace oddres {

// Everything a pipeline run needs, parsed from a key=value config file plus
// command-line overrides. Angles are radians; the beta list uses "mag:arg"
// tokens where arg is a double or the literal pi / -pi.
struct RunConfig {
  std::string command;  // coeffs | sum | oracle | compare | regions

  int k = 1;
  int j = 0;
  int S = 40;  // series truncation order
  int M = 15;  // Pade order in the Borel variable t

  unsigned precision_bits = 256;
  unsigned refine_bits = 128;

  std::vector<std::complex<double>> betas;

  int nodes = 64;
  std::vector<int> n_schedule{100, 200, 400};
  std::vector<double> theta_probes{0.0, 0.02, 0.04};
  int homotopy_steps = 16;
  double tol_truncation = 1e-8;

  double tol_f = 1e-4;
  double tol_g = 1e-3;

  std::string cache_path;
  std::string output_path;
  int jobs = 1;
  bool dump_hex = false;

  // region predicate parameters and the regions sweep grid
  double delta = 0.1;
  double B_delta = 0.1;
  double R = 1.0;
  double grid_mag_min = 0.01, grid_mag_max = 0.2;
  int grid_mag_count = 8;
  double grid_arg_min = 0.0, grid_arg_max = 3.141592653589793;
  int grid_arg_count = 9;
};

// Applies one key=value assignment. Throws std::invalid_argument for unknown
// keys or unparseable values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

// Reads a config file: one key=value per line, '#' starts a comment, blank
// lines ignored. Later lines win.
RunConfig parse_config_file(const std::string& path);

// Cross-field checks (command known, orders consistent, grids nonempty).
// Throws std::invalid_argument with a message naming the offending key.
void validate_config(const RunConfig& cfg);

std::complex<double> parse_beta_token(const std::string& token);

}  // namespace oddres
