#pragma once

// Proximal point and Chambolle-Pock iterations with a relative stopping
// rule, plus the stepsize-window validators for both schemes.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "srgc/elements.hpp"
#include "srgc/errors.hpp"
#include "srgc/linalg.hpp"

namespace srgc {

enum class SolveStatus { Converged, MaxIter, ResolventError, DivergenceDetected };

inline const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged:
      return "converged";
    case SolveStatus::MaxIter:
      return "max-iter";
    case SolveStatus::ResolventError:
      return "resolvent-error";
    case SolveStatus::DivergenceDetected:
      return "divergence";
  }
  return "unknown";
}

struct PPAConfig {
  double gamma = 1.0;
  double eps = 1e-8;
  std::size_t max_iter = 100000;
  bool record_iterates = false;

  void validate() const {
    if (!(gamma > 0.0)) throw precondition_error("PPAConfig: requires gamma > 0");
    if (!(eps > 0.0)) throw precondition_error("PPAConfig: requires eps > 0");
    if (max_iter < 1) throw precondition_error("PPAConfig: requires max_iter >= 1");
  }
};

struct CPAConfig {
  double gamma = 1.0;
  double tau = 1.0;
  double lambda = 1.0;
  double eps = 1e-8;
  std::size_t max_iter = 100000;
  bool record_iterates = false;

  void validate() const {
    if (!(gamma > 0.0 && tau > 0.0 && lambda > 0.0))
      throw precondition_error("CPAConfig: requires gamma, tau, lambda > 0");
    if (!(eps > 0.0)) throw precondition_error("CPAConfig: requires eps > 0");
    if (max_iter < 1) throw precondition_error("CPAConfig: requires max_iter >= 1");
  }
};

struct SolverTrace {
  SolveStatus status = SolveStatus::MaxIter;
  std::size_t iterations = 0;
  Vec x;  // final iterate; for the primal-dual scheme, stacked (i, v)
  Vec i;  // primal block (empty for proximal point)
  Vec v;  // dual block (empty for proximal point)
  std::vector<double> rel_steps;
  std::vector<Vec> iterates;  // recorded history of x when requested
  std::string message;
};

namespace detail {

inline double relative_step(const Vec& next, const Vec& prev) {
  return norm(sub(next, prev)) / (1.0 + norm(prev));
}

}  // namespace detail

// Proximal point iteration x^{k+1} = J_{gamma*T}(x^k), stopping when the
// relative step |x^{k+1}-x^k|/(1+|x^k|) drops below eps.
inline SolverTrace ppa_solve(const Element& op, const Vec& x0,
                             const PPAConfig& cfg) {
  cfg.validate();
  if (x0.size() != op.dim())
    throw dimension_error("ppa_solve: x0 dimension mismatch");
  SolverTrace trace;
  Vec x = x0;
  if (cfg.record_iterates) trace.iterates.push_back(x);
  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    Vec next;
    try {
      next = op.resolvent(cfg.gamma, x);
    } catch (const error& e) {
      trace.status = SolveStatus::ResolventError;
      trace.message = e.what();
      trace.x = x;
      return trace;
    }
    ++trace.iterations;
    if (!all_finite(next)) {
      trace.status = SolveStatus::DivergenceDetected;
      trace.x = next;
      return trace;
    }
    const double rel = detail::relative_step(next, x);
    trace.rel_steps.push_back(rel);
    x = std::move(next);
    if (cfg.record_iterates) trace.iterates.push_back(x);
    if (rel < cfg.eps) {
      trace.status = SolveStatus::Converged;
      break;
    }
  }
  trace.x = std::move(x);
  return trace;
}

// Relaxed Chambolle-Pock iteration on the skew-coupled pair:
//   ibar = J_{gamma*R}(i - gamma*L^T v)
//   vbar = J_{tau*G}(v + tau*L*(2*ibar - i))
//   i+   = i + lambda*(ibar - i)
//   v+   = v + lambda*(vbar - v)
// Stops on the joint relative step of the stacked (i, v). With lambda = 1
// the update is assigned directly from (ibar, vbar) so the unrelaxed
// iterates are reproduced exactly, not up to roundoff.
inline SolverTrace cpa_solve(const Element& rtilde, const Element& gtilde,
                             const Mat& L, const Vec& i0, const Vec& v0,
                             const CPAConfig& cfg) {
  cfg.validate();
  if (i0.size() != rtilde.dim() || v0.size() != gtilde.dim())
    throw dimension_error("cpa_solve: initial point dimension mismatch");
  if (L.rows != gtilde.dim() || L.cols != rtilde.dim())
    throw dimension_error("cpa_solve: coupling matrix dimension mismatch");

  SolverTrace trace;
  Vec i = i0, v = v0;
  auto stacked = [](const Vec& a, const Vec& b) {
    Vec s = a;
    s.insert(s.end(), b.begin(), b.end());
    return s;
  };
  if (cfg.record_iterates) trace.iterates.push_back(stacked(i, v));
  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    Vec ibar, vbar;
    try {
      ibar = rtilde.resolvent(cfg.gamma, sub(i, scaled(cfg.gamma, L.apply_transpose(v))));
      vbar = gtilde.resolvent(cfg.tau,
                              add(v, scaled(cfg.tau, L.apply(sub(scaled(2.0, ibar), i)))));
    } catch (const error& e) {
      trace.status = SolveStatus::ResolventError;
      trace.message = e.what();
      trace.i = std::move(i);
      trace.v = std::move(v);
      trace.x = stacked(trace.i, trace.v);
      return trace;
    }
    ++trace.iterations;
    Vec i_next, v_next;
    if (cfg.lambda == 1.0) {
      i_next = std::move(ibar);
      v_next = std::move(vbar);
    } else {
      i_next = add(i, scaled(cfg.lambda, sub(ibar, i)));
      v_next = add(v, scaled(cfg.lambda, sub(vbar, v)));
    }
    if (!all_finite(i_next) || !all_finite(v_next)) {
      trace.status = SolveStatus::DivergenceDetected;
      trace.i = std::move(i_next);
      trace.v = std::move(v_next);
      trace.x = stacked(trace.i, trace.v);
      return trace;
    }
    const Vec prev = stacked(i, v);
    const Vec next = stacked(i_next, v_next);
    const double rel = detail::relative_step(next, prev);
    trace.rel_steps.push_back(rel);
    i = std::move(i_next);
    v = std::move(v_next);
    if (cfg.record_iterates) trace.iterates.push_back(next);
    if (rel < cfg.eps) {
      trace.status = SolveStatus::Converged;
      break;
    }
  }
  trace.i = std::move(i);
  trace.v = std::move(v);
  trace.x = stacked(trace.i, trace.v);
  return trace;
}

// Smallest admissible proximal-point stepsize for the leaky transistor
// with leakage resistance r: gamma must exceed r(sqrt(2)-1).
inline double ppa_stepsize_floor(double r) {
  if (!(r > 0.0)) throw precondition_error("ppa_stepsize_floor: requires r > 0");
  return r * (std::numbers::sqrt2 - 1.0);
}

// Validated stepsize window for the primal-dual scheme when the resistive
// part is sigma-monotone: tau above tau_floor, gamma below 1/tau, lambda
// below a tau-dependent ceiling. All bounds are strict.
struct MonotoneWindow {
  double sigma = 0.0;
  double r = 0.0;
  double tau_floor = 0.0;

  double gamma_ceiling(double tau) const { return 1.0 / tau; }
  double lambda_ceiling(double tau) const {
    return 2.0 * (1.0 - tau_floor / tau);
  }
  bool contains(double gamma, double tau, double lambda) const {
    return tau > tau_floor && gamma > 0.0 && gamma < gamma_ceiling(tau) &&
           lambda > 0.0 && lambda < lambda_ceiling(tau);
  }
};

inline MonotoneWindow cpa_window_monotone(double sigma, double r) {
  if (!(r > 0.0)) throw precondition_error("cpa_window_monotone: requires r > 0");
  const double k = r * (1.0 - std::numbers::sqrt2);  // negative
  if (!(sigma > -k / 2.0))
    throw infeasible_window_error(
        "cpa_window_monotone: requires sigma > r*(sqrt(2)-1)/2");
  MonotoneWindow w;
  w.sigma = sigma;
  w.r = r;
  w.tau_floor = -sigma * r * (1.0 - std::numbers::sqrt2) / (k + 2.0 * sigma);
  return w;
}

// Validated stepsize window for the primal-dual scheme driven by the leaky
// transistor's semimonotone certificate: gamma inside a fixed interval,
// tau between 1/gamma_hi and 1/gamma, lambda below a (gamma, tau)-dependent
// ceiling. All bounds are strict.
struct SemiWindow {
  double r = 0.0;
  double gamma_lo = 0.0;
  double gamma_hi = 0.0;

  double tau_floor() const { return 1.0 / gamma_hi; }
  double tau_ceiling(double gamma) const { return 1.0 / gamma; }
  double lambda_ceiling(double gamma, double tau) const {
    return 2.0 * (1.0 - 1.0 / (6.0 * r * gamma) - 9.0 * r / (10.0 * tau));
  }
  bool contains(double gamma, double tau, double lambda) const {
    return gamma > gamma_lo && gamma < gamma_hi && tau > tau_floor() &&
           tau < tau_ceiling(gamma) && lambda > 0.0 &&
           lambda < lambda_ceiling(gamma, tau);
  }
};

inline SemiWindow cpa_window_semi(double r) {
  if (!(r > 0.0)) throw precondition_error("cpa_window_semi: requires r > 0");
  SemiWindow w;
  w.r = r;
  w.gamma_lo = (5.0 - std::sqrt(10.0)) / (9.0 * r);
  w.gamma_hi = (5.0 + std::sqrt(10.0)) / (9.0 * r);
  return w;
}

}  // namespace srgc
