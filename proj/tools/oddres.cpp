#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oddres/pipeline.hpp"
#include "oddres/run_config.hpp"

namespace {

int run(const oddres::RunConfig& cfg) {
  if (cfg.output_path.empty()) return oddres::run_pipeline(cfg, std::cout);
  // Build the full report before touching the file so a failed run never
  // leaves a truncated CSV behind.
  std::ostringstream buf;
  int rc = oddres::run_pipeline(cfg, buf);
  std::ofstream out(cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + cfg.output_path);
  out << buf.str();
  if (!out) throw std::runtime_error("write failed: " + cfg.output_path);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Resonances of the odd anharmonic oscillator p^2 + x^2 + beta x^(2k+1):\n"
      "exact perturbation coefficients, distributional Borel-Leroy summation,\n"
      "a complex-scaling spectral cross-check, and admissibility regions."};

  std::string command;
  std::string config_path;
  std::vector<std::string> overrides;
  std::string output;
  std::string betas;
  long precision = -1;
  long jobs = -1;
  bool dump_hex = false;

  app.add_option("command", command, "coeffs | sum | oracle | compare | regions");
  app.add_option("-c,--config", config_path, "key=value config file");
  app.add_option("--set", overrides, "override a config key, e.g. --set S=60")
      ->type_name("KEY=VALUE");
  app.add_option("-o,--output", output, "write CSV here instead of stdout");
  app.add_option("--betas", betas, "space-separated mag:arg list (arg accepts pi, -pi)");
  app.add_option("--precision", precision, "working precision in bits");
  app.add_option("--jobs", jobs, "worker threads for sweeps (0 = all cores)");
  app.add_flag("--dump-hex", dump_hex, "add hex-float columns for exact reproduction");

  CLI11_PARSE(app, argc, argv);

  try {
    oddres::RunConfig cfg;
    if (!config_path.empty()) cfg = oddres::parse_config_file(config_path);
    if (!command.empty()) cfg.command = command;
    if (!betas.empty()) oddres::apply_setting(cfg, "betas", betas);
    if (precision >= 0) oddres::apply_setting(cfg, "precision", std::to_string(precision));
    if (jobs >= 0) oddres::apply_setting(cfg, "jobs", std::to_string(jobs));
    if (dump_hex) cfg.dump_hex = true;
    if (!output.empty()) cfg.output_path = output;
    for (const std::string& ov : overrides) {
      std::size_t eq = ov.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--set wants KEY=VALUE, got '" + ov + "'");
      oddres::apply_setting(cfg, ov.substr(0, eq), ov.substr(eq + 1));
    }
    if (cfg.command.empty())
      throw std::invalid_argument("no command given (positional argument or command= in config)");
    return run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "oddres: " << e.what() << '\n';
    return 1;
  }
}
