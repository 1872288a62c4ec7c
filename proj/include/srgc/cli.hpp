#pragma once

// Command implementations behind the srgc binary. Each command returns a
// process exit code: 0 success, 1 solver or window failure, 2 config error,
// 3 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "srgc/circuit.hpp"
#include "srgc/config.hpp"
#include "srgc/csv.hpp"
#include "srgc/elements.hpp"
#include "srgc/errors.hpp"
#include "srgc/solvers.hpp"
#include "srgc/srg.hpp"

namespace srgc {

struct CliOptions {
  std::string config_path;  // empty: built-in defaults
  std::string out_path;     // empty: per-command default filename
  std::uint64_t seed = 1;
  std::size_t n = 100000;
  std::string trace_out;
  bool dump_iterates = false;
};

inline RunConfig load_config_or_default(const std::string& path) {
  if (path.empty()) return RunConfig{};
  return parse_config_file(path);
}

inline std::shared_ptr<const Element> element_from_name(
    const std::string& name, const RunConfig& cfg) {
  if (name == "identity")
    return std::make_shared<LinearResistorElement>(LinearResistor(1.0));
  if (name == "tunnel")
    return std::make_shared<TunnelDiodeElement>(
        TunnelDiode(cfg.r1, cfg.r2, cfg.vbar));
  if (name == "tunnel-inverse")
    return std::make_shared<TunnelDiodeInverseElement>(
        TunnelDiode(cfg.r1, cfg.r2, cfg.vbar));
  if (name == "transistor")
    return std::make_shared<EbersMollElement>(
        EbersMollTransistor(cfg.alpha_r, cfg.alpha_f));
  if (name == "leaky-transistor")
    return std::make_shared<LeakyTransistorElement>(LeakyTransistor(
        EbersMollTransistor(cfg.alpha_r, cfg.alpha_f), cfg.leakage_r));
  throw config_error(
      "unknown element '" + name +
      "' (expected identity, tunnel, tunnel-inverse, transistor, or "
      "leaky-transistor)");
}

inline int cmd_srg_sample(const std::string& element_name,
                          const CliOptions& opt) {
  try {
    const RunConfig cfg = load_config_or_default(opt.config_path);
    if (opt.n < 1) throw config_error("srg-sample: --n must be at least 1");
    const auto element = element_from_name(element_name, cfg);
    const auto cloud = sample_srg(*element, opt.n, opt.seed);

    const std::string path =
        opt.out_path.empty() ? "srg_cloud.csv" : opt.out_path;
    auto out = open_output(path);
    write_cloud_csv(out, cloud);

    double max_angle = 0.0, max_modulus = 0.0;
    std::size_t finite = 0;
    bool has_infinity = false;
    for (const auto& p : cloud) {
      if (p.at_infinity) {
        has_infinity = true;
        continue;
      }
      ++finite;
      const double mod = std::hypot(p.re, p.im);
      max_modulus = std::max(max_modulus, mod);
      if (mod > 0.0)
        max_angle = std::max(max_angle, std::atan2(std::abs(p.im), p.re));
    }
    std::printf("%s: %zu finite points -> %s\n", element->name().c_str(),
                finite, path.c_str());
    std::printf("max angle %.10g rad, max modulus %.10g, includes_infinity=%s\n",
                max_angle, max_modulus, has_infinity ? "true" : "false");
    return 0;
  } catch (const config_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const io_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

inline int cmd_check_stepsizes(const CliOptions& opt) {
  try {
    const RunConfig cfg = load_config_or_default(opt.config_path);
    if (cfg.method == "ppa") {
      const double floor = ppa_stepsize_floor(cfg.leakage_r);
      const bool pass = cfg.gamma > floor;
      std::printf("proximal-point window (leakage r = %g): gamma > %.10g\n",
                  cfg.leakage_r, floor);
      std::printf("  gamma = %.10g: %s\n", cfg.gamma, pass ? "PASS" : "FAIL");
      return pass ? 0 : 1;
    }
    if (cfg.tunnel_inverse) {
      const SemiWindow w = cpa_window_semi(cfg.leakage_r);
      const bool pass = w.contains(cfg.gamma, cfg.tau, cfg.lambda);
      std::printf(
          "semimonotone window (r = %g): gamma in (%.10g, %.10g), tau in "
          "(%.10g, 1/gamma), lambda < 2(1 - 1/(6 r gamma) - 9r/(10 tau))\n",
          w.r, w.gamma_lo, w.gamma_hi, w.tau_floor());
      std::printf("  gamma = %.10g, tau = %.10g (ceiling %.10g), lambda = "
                  "%.10g (ceiling %.10g): %s\n",
                  cfg.gamma, cfg.tau, w.tau_ceiling(cfg.gamma), cfg.lambda,
                  w.lambda_ceiling(cfg.gamma, cfg.tau), pass ? "PASS" : "FAIL");
      return pass ? 0 : 1;
    }
    const double sigma = std::min(cfg.r_e, cfg.r_c);
    bool pass = false;
    try {
      const MonotoneWindow w = cpa_window_monotone(sigma, cfg.leakage_r);
      pass = w.contains(cfg.gamma, cfg.tau, cfg.lambda);
      std::printf(
          "monotone window (sigma = %g, r = %g): tau > %.10g, gamma < 1/tau, "
          "lambda < 2(1 - tau_floor/tau)\n",
          sigma, cfg.leakage_r, w.tau_floor);
      std::printf("  gamma = %.10g (ceiling %.10g), tau = %.10g, lambda = "
                  "%.10g (ceiling %.10g): %s\n",
                  cfg.gamma, w.gamma_ceiling(cfg.tau), cfg.tau, cfg.lambda,
                  w.lambda_ceiling(cfg.tau), pass ? "PASS" : "FAIL");
    } catch (const infeasible_window_error& e) {
      std::printf("monotone window (sigma = %g, r = %g): infeasible (%s)\n",
                  sigma, cfg.leakage_r, e.what());
      std::printf("  FAIL\n");
    }
    return pass ? 0 : 1;
  } catch (const config_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

namespace detail {

inline void print_sweep_summary(const SweepResult& result) {
  std::vector<std::size_t> iters;
  std::size_t total = 0, converged = 0;
  for (const auto& rec : result.records) {
    iters.push_back(rec.iterations);
    total += rec.iterations;
    if (rec.status == SolveStatus::Converged) ++converged;
  }
  std::sort(iters.begin(), iters.end());
  const std::size_t n = iters.size();
  const double median =
      n == 0 ? 0.0
             : (n % 2 ? double(iters[n / 2])
                      : 0.5 * double(iters[n / 2 - 1] + iters[n / 2]));
  std::printf("%zu samples, %zu converged\n", n, converged);
  std::printf("iterations: total %zu, median %g, max %zu\n", total, median,
              n ? iters.back() : 0);
}

inline const SweepRecord* first_failure(const SweepResult& result) {
  for (const auto& rec : result.records)
    if (rec.status != SolveStatus::Converged) return &rec;
  return nullptr;
}

}  // namespace detail

inline int cmd_solve(const std::string& experiment, const CliOptions& opt) {
  try {
    const RunConfig cfg = load_config_or_default(opt.config_path);
    SweepResult result;

    if (experiment == "leaky-ppa") {
      if (cfg.method != "ppa")
        throw config_error("experiment leaky-ppa requires solver.method = ppa");
      const LeakyTransistor t(EbersMollTransistor(cfg.alpha_r, cfg.alpha_f),
                              cfg.leakage_r);
      PPAConfig pcfg;
      pcfg.gamma = cfg.gamma;
      pcfg.eps = cfg.eps;
      pcfg.max_iter = cfg.max_iter;
      const Waveform wave =
          quadrature_waveform(cfg.v_in_amplitude, cfg.v_in_frequency_hz,
                              cfg.t_end, cfg.n_samples);
      const auto family = [t](double, const Vec& s) {
        return assemble_leaky_inverse(t, s);
      };
      result = sweep(family, wave, pcfg, cfg.warm_start);
      if (!opt.trace_out.empty() && !result.records.empty()) {
        const std::size_t last = result.records.size() - 1;
        Vec x0 = (cfg.warm_start && last > 0) ? result.records[last - 1].v
                                              : Vec(2, 0.0);
        PPAConfig tcfg = pcfg;
        tcfg.record_iterates = opt.dump_iterates;
        const auto op = family(wave.t[last], wave.samples[last]);
        const SolverTrace tr = ppa_solve(*op, x0, tcfg);
        auto tout = open_output(opt.trace_out);
        write_trace_csv(tout, tr);
      }
    } else if (experiment == "amplifier" || experiment == "tunnel-amplifier") {
      if (cfg.method != "cpa")
        throw config_error("experiment " + experiment +
                           " requires solver.method = cpa");
      const bool tunnel = (experiment == "tunnel-amplifier");
      if (tunnel != cfg.tunnel_inverse)
        throw config_error(
            tunnel
                ? "experiment tunnel-amplifier requires resistors.tunnel_inverse = true"
                : "experiment amplifier requires resistors.tunnel_inverse = false");
      std::shared_ptr<const Element> rC;
      if (tunnel)
        rC = std::make_shared<TunnelDiodeInverseElement>(
            TunnelDiode(cfg.r1, cfg.r2, cfg.vbar));
      else
        rC = std::make_shared<LinearResistorElement>(LinearResistor(cfg.r_c));
      const auto rE =
          std::make_shared<LinearResistorElement>(LinearResistor(cfg.r_e));
      const LeakyTransistor t(EbersMollTransistor(cfg.alpha_r, cfg.alpha_f),
                              cfg.leakage_r);
      CPAConfig ccfg;
      ccfg.gamma = cfg.gamma;
      ccfg.tau = cfg.tau;
      ccfg.lambda = cfg.lambda;
      ccfg.eps = cfg.eps;
      ccfg.max_iter = cfg.max_iter;
      const Waveform wave =
          sinusoid_waveform(cfg.v_in_amplitude, cfg.v_in_frequency_hz,
                            cfg.t_end, cfg.n_samples);
      const double v_plus = cfg.v_plus;
      const auto family = [rC, rE, t, v_plus](double, const Vec& s) {
        return assemble_common_emitter(rC, rE, t, v_plus, s[0]);
      };
      result = sweep(family, wave, ccfg, cfg.warm_start);
      if (!opt.trace_out.empty() && !result.records.empty()) {
        const std::size_t last = result.records.size() - 1;
        Vec i0(2, 0.0), v0(2, 0.0);
        if (cfg.warm_start && last > 0) {
          i0 = result.records[last - 1].i;
          v0 = result.records[last - 1].v;
        }
        CPAConfig tcfg = ccfg;
        tcfg.record_iterates = opt.dump_iterates;
        const InclusionProblem prob = family(wave.t[last], wave.samples[last]);
        const auto rt = prob.rtilde();
        const auto gt = prob.gtilde();
        const SolverTrace tr = cpa_solve(*rt, *gt, prob.L, i0, v0, tcfg);
        auto tout = open_output(opt.trace_out);
        write_trace_csv(tout, tr);
      }
    } else {
      throw config_error("unknown experiment '" + experiment +
                         "' (expected leaky-ppa, amplifier, or "
                         "tunnel-amplifier)");
    }

    const std::string path = opt.out_path.empty() ? "sweep.csv" : opt.out_path;
    auto out = open_output(path);
    write_sweep_csv(out, result);
    std::printf("%s -> %s\n", experiment.c_str(), path.c_str());
    detail::print_sweep_summary(result);
    if (const SweepRecord* fail = detail::first_failure(result)) {
      std::printf("FAIL: first non-converged sample at t = %.10g (%s)\n",
                  fail->t, status_name(fail->status));
      return 1;
    }
    std::printf("all samples converged\n");
    return 0;
  } catch (const config_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const io_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace srgc
