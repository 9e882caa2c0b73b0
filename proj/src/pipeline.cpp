#include "oddres/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "oddres/borel.hpp"
#include "oddres/cache.hpp"
#include "oddres/geometry.hpp"
#include "oddres/parallel.hpp"
#include "oddres/spectral.hpp"
#include "oddres/summation.hpp"
#include "oddres/version.hpp"

namespace oddres {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void provenance(std::ostream& out, const RunConfig& cfg, const char* algorithm) {
  out << "# oddres " << ODDRES_VERSION << ' ' << cfg.command << ' ' << algorithm << '\n';
  out << "# k=" << cfg.k << " j=" << cfg.j << " S=" << cfg.S;
  if (cfg.command == "sum" || cfg.command == "compare") out << " M=" << cfg.M;
  out << " precision=" << cfg.precision_bits << " jobs=" << cfg.jobs << '\n';
}

RSExpansion expansion_for(const RunConfig& cfg) {
  OscillatorSpec spec(cfg.k, cfg.j);
  if (!cfg.cache_path.empty()) {
    if (auto cached = load_expansion(cfg.cache_path, spec, cfg.S)) return *cached;
  }
  RSExpansion e = rs_expand(spec, cfg.S);
  if (!cfg.cache_path.empty()) save_expansion(e, cfg.cache_path);
  return e;
}

// The summation chain shared by `sum` and `compare`: series, Borel-Leroy
// transform, diagonal approximant in z = t^2, and a next-lower-order
// approximant as the stability reference for the continuation.
struct SummationContext {
  RSExpansion series;
  PadeApproximant pade;
  PadeApproximant reference;
  bool has_reference = false;
  Rational q;

  static SummationContext build(const RunConfig& cfg) {
    SummationContext ctx;
    ctx.series = expansion_for(cfg);
    ctx.q = ctx.series.spec.q();
    BorelSeries borel = leroy_transform(ctx.series);
    std::vector<Rational> c = borel.even_coefficients();
    int mz = cfg.M / 2;
    if (mz < 1) throw std::invalid_argument("sum: M too small for a diagonal approximant in z");
    ctx.pade = pade_construct(c, mz, 2);
    if (mz >= 2) {
      ctx.reference = pade_construct(c, mz - 1, 2);
      ctx.has_reference = true;
    }
    return ctx;
  }
};

bool near(double a, double b) { return std::abs(a - b) < 1e-12; }

// Distributional boundary values are defined on the real beta axis; the width
// changes sign between the two edges of the cut.
struct RealAxisBeta {
  Real mag;
  bool negative_axis = false;
};

RealAxisBeta classify_real_beta(std::complex<double> beta, const char* cmd) {
  double arg = std::arg(beta);
  if (std::abs(beta) == 0.0)
    throw std::invalid_argument(std::string(cmd) + ": beta must be nonzero");
  if (!near(arg, 0.0) && !near(arg, M_PI) && !near(arg, -M_PI))
    throw std::invalid_argument(std::string(cmd) +
                                ": distributional summation needs real beta (arg 0 or pi), got arg=" +
                                fmt_double(arg));
  return {Real(std::abs(beta)), !near(arg, 0.0)};
}

int run_coeffs(const RunConfig& cfg, std::ostream& out) {
  RSExpansion e = expansion_for(cfg);
  provenance(out, cfg, SERIES_ALGORITHM);
  out << "# exact rationals in lowest terms; odd orders vanish by parity\n";
  out << "s,numerator,denominator\n";
  for (int s = 0; s <= e.order; ++s) {
    const Rational& a = e.a[static_cast<std::size_t>(s)];
    out << s << ',' << numerator(a) << ',' << denominator(a) << '\n';
  }
  return 0;
}

int run_sum(const RunConfig& cfg, std::ostream& out) {
  SummationContext ctx = SummationContext::build(cfg);
  QuadratureSpec quad{cfg.nodes, cfg.jobs};

  struct Row {
    std::complex<double> beta;
    SumResult res;
  };
  std::vector<Row> rows(cfg.betas.size());
  for (std::size_t i = 0; i < cfg.betas.size(); ++i) rows[i].beta = cfg.betas[i];
  // Pre-classify serially so bad input fails before any work is spent.
  for (const Row& r : rows) classify_real_beta(r.beta, "sum");

  parallel_for(rows.size(), cfg.jobs, [&](std::size_t i) {
    RealAxisBeta rb = classify_real_beta(rows[i].beta, "sum");
    QuadratureSpec inner = quad;
    inner.jobs = 1;  // outer loop already owns the threads
    rows[i].res = distributional_sum(ctx.pade, rb.mag, ctx.q, inner,
                                     ctx.has_reference ? &ctx.reference : nullptr);
    if (rb.negative_axis) rows[i].res.g = -rows[i].res.g;
  });

  provenance(out, cfg, SUMMATION_ALGORITHM);
  out << "# Mz=" << ctx.pade.order << (ctx.pade.defect ? " (defect-reduced)" : "")
      << " nodes=" << cfg.nodes << '\n';
  out << "beta_mag,beta_arg,f,g";
  if (cfg.dump_hex) out << ",f_hex,g_hex";
  out << ",quad_error,delta_residual,real_poles,nearest_pole_t,min_node_pole_gap,low_confidence\n";
  for (const Row& r : rows) {
    out << fmt_double(std::abs(r.beta)) << ',' << fmt_double(std::arg(r.beta)) << ','
        << format_real(r.res.f) << ',' << format_real(r.res.g);
    if (cfg.dump_hex) out << ',' << format_real_hex(r.res.f) << ',' << format_real_hex(r.res.g);
    out << ',' << format_real(r.res.diag.quad_error, 3) << ','
        << format_real(r.res.diag.delta_residual, 3) << ',' << r.res.diag.real_pole_count << ','
        << format_real(r.res.diag.nearest_pole_t, 12) << ','
        << format_real(r.res.diag.min_node_pole_gap, 3) << ','
        << (r.res.diag.low_confidence ? 1 : 0) << '\n';
  }
  return 0;
}

TraceOptions trace_options(const RunConfig& cfg) {
  TraceOptions opts;
  opts.theta_probe_offsets = cfg.theta_probes;
  opts.n_schedule = cfg.n_schedule;
  opts.homotopy_steps = cfg.homotopy_steps;
  opts.truncation_tol = cfg.tol_truncation;
  opts.refine_bits = cfg.refine_bits;
  return opts;
}

int run_oracle(const RunConfig& cfg, std::ostream& out) {
  OscillatorSpec spec(cfg.k, cfg.j);
  TraceOptions opts = trace_options(cfg);

  std::vector<ResonanceEstimate> rows(cfg.betas.size());
  // Each trace is a chain of dense eigensolves; thread the beta sweep, not
  // the solver.
  parallel_for(rows.size(), cfg.jobs,
               [&](std::size_t i) { rows[i] = trace_resonance(spec, cfg.betas[i], opts); });

  provenance(out, cfg, SPECTRAL_ALGORITHM);
  out << "# refine_bits=" << cfg.refine_bits << " tol_truncation=" << fmt_double(cfg.tol_truncation)
      << '\n';
  out << "beta_mag,beta_arg,re_E,im_E,N,theta,theta_flagged,plateau_spread,truncation_delta,"
         "residual,converged\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ResonanceEstimate& r = rows[i];
    out << fmt_double(std::abs(cfg.betas[i])) << ',' << fmt_double(std::arg(cfg.betas[i])) << ','
        << fmt_double(r.E.real()) << ',' << fmt_double(r.E.imag()) << ',' << r.N_used << ','
        << fmt_double(r.theta_used) << ',' << (r.theta_flagged ? 1 : 0) << ','
        << fmt_double(r.plateau_spread) << ',' << fmt_double(r.truncation_delta) << ','
        << fmt_double(r.residual) << ',' << (r.converged ? 1 : 0) << '\n';
  }
  return 0;
}

int run_compare(const RunConfig& cfg, std::ostream& out) {
  SummationContext ctx = SummationContext::build(cfg);
  OscillatorSpec spec(cfg.k, cfg.j);
  TraceOptions opts = trace_options(cfg);
  QuadratureSpec quad{cfg.nodes, 1};

  struct Row {
    SumResult sum;
    ResonanceEstimate osc;
    double delta_f = 0, delta_g = 0;
    bool pass = false;
  };
  std::vector<Row> rows(cfg.betas.size());
  for (const auto& b : cfg.betas) classify_real_beta(b, "compare");

  parallel_for(rows.size(), cfg.jobs, [&](std::size_t i) {
    Row& r = rows[i];
    RealAxisBeta rb = classify_real_beta(cfg.betas[i], "compare");
    r.sum = distributional_sum(ctx.pade, rb.mag, ctx.q, quad,
                               ctx.has_reference ? &ctx.reference : nullptr);
    if (rb.negative_axis) r.sum.g = -r.sum.g;
    r.osc = trace_resonance(spec, cfg.betas[i], opts);
    r.delta_f = std::abs(static_cast<double>(r.sum.f) - r.osc.E.real());
    r.delta_g = std::abs(std::abs(static_cast<double>(r.sum.g)) - std::abs(r.osc.E.imag()));
    r.pass = r.delta_f <= cfg.tol_f && r.delta_g <= cfg.tol_g;
  });

  provenance(out, cfg, SUMMATION_ALGORITHM);
  out << "# cross-check against " << SPECTRAL_ALGORITHM << " tol_f=" << fmt_double(cfg.tol_f)
      << " tol_g=" << fmt_double(cfg.tol_g) << '\n';
  out << "beta_mag,beta_arg,f,g,re_E,im_E,delta_f,delta_g,pass\n";
  bool all_pass = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    all_pass = all_pass && r.pass;
    out << fmt_double(std::abs(cfg.betas[i])) << ',' << fmt_double(std::arg(cfg.betas[i])) << ','
        << format_real(r.sum.f) << ',' << format_real(r.sum.g) << ',' << fmt_double(r.osc.E.real())
        << ',' << fmt_double(r.osc.E.imag()) << ',' << fmt_double(r.delta_f) << ','
        << fmt_double(r.delta_g) << ',' << (r.pass ? 1 : 0) << '\n';
  }
  return all_pass ? 0 : 2;
}

int run_regions(const RunConfig& cfg, std::ostream& out) {
  RegionSpec region{cfg.k, cfg.delta, cfg.B_delta, cfg.R};
  Rational q = OscillatorSpec(cfg.k, 0).q();

  auto axis = [](double lo, double hi, int count, int i) {
    return count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  };

  struct Row {
    double mag, arg;
    bool sector, nev_upper, nev_lower, parallelogram;
    double theta_star;
    bool theta_flagged;
  };
  std::size_t total = static_cast<std::size_t>(cfg.grid_mag_count) *
                      static_cast<std::size_t>(cfg.grid_arg_count);
  std::vector<Row> rows(total);

  parallel_for(total, cfg.jobs, [&](std::size_t idx) {
    int im = static_cast<int>(idx) / cfg.grid_arg_count;
    int ia = static_cast<int>(idx) % cfg.grid_arg_count;
    Row& r = rows[idx];
    r.mag = axis(cfg.grid_mag_min, cfg.grid_mag_max, cfg.grid_mag_count, im);
    r.arg = axis(cfg.grid_arg_min, cfg.grid_arg_max, cfg.grid_arg_count, ia);
    std::complex<double> beta = std::polar(r.mag, r.arg);
    r.sector = sector_membership(beta, region);
    r.nev_upper = nevanlinna_membership(beta, q, cfg.R, NevanlinnaVariant::upper);
    r.nev_lower = nevanlinna_membership(beta, q, cfg.R, NevanlinnaVariant::lower);
    ThetaChoice tc = choose_theta(r.arg, cfg.k);
    r.theta_star = tc.theta;
    r.theta_flagged = tc.flagged;
    r.parallelogram = in_parallelogram_P(r.arg, tc.theta, cfg.k);
  });

  provenance(out, cfg, "admissibility-regions-1");
  out << "# delta=" << fmt_double(cfg.delta) << " B_delta=" << fmt_double(cfg.B_delta)
      << " R=" << fmt_double(cfg.R) << '\n';
  out << "beta_mag,beta_arg,sector,nevanlinna_upper,nevanlinna_lower,theta_star,theta_flagged,"
         "parallelogram\n";
  for (const Row& r : rows) {
    out << fmt_double(r.mag) << ',' << fmt_double(r.arg) << ',' << (r.sector ? 1 : 0) << ','
        << (r.nev_upper ? 1 : 0) << ',' << (r.nev_lower ? 1 : 0) << ',' << fmt_double(r.theta_star)
        << ',' << (r.theta_flagged ? 1 : 0) << ',' << (r.parallelogram ? 1 : 0) << '\n';
  }
  return 0;
}

}  // namespace

int run_pipeline(const RunConfig& cfg, std::ostream& out) {
  validate_config(cfg);
  precision::set_bits(cfg.precision_bits);

  if (cfg.command == "coeffs") return run_coeffs(cfg, out);
  if (cfg.command == "sum") return run_sum(cfg, out);
  if (cfg.command == "oracle") return run_oracle(cfg, out);
  if (cfg.command == "compare") return run_compare(cfg, out);
  if (cfg.command == "regions") return run_regions(cfg, out);
  throw std::invalid_argument("unknown command: " + cfg.command);
}

}  // namespace oddres
