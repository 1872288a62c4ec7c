#pragma once

// Incremental (pairwise) quantities of set-valued operators and the
// (mu, rho)-semimonotone / theta-angle-bounded parameter algebra.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "srgc/errors.hpp"
#include "srgc/linalg.hpp"

namespace srgc {

// One point (x, u) of an operator's graph: u is a value of A at x.
struct GraphPair {
  Vec x;
  Vec u;

  GraphPair() = default;
  GraphPair(Vec x, Vec u) : x(std::move(x)), u(std::move(u)) {
    if (this->x.size() != this->u.size())
      throw dimension_error("GraphPair: x and u must have equal dimension");
    if (this->x.empty())
      throw dimension_error("GraphPair: dimension must be at least 1");
    if (!all_finite(this->x) || !all_finite(this->u))
      throw invalid_input_error("GraphPair: entries must be finite");
  }
};

struct SemimonotoneParams {
  double mu = 0.0;
  double rho = 0.0;
};

enum class ClassStatus { Universal, Empty, Nontrivial };

// Declared class parameters carry whether they were proved or merely
// asserted by the user.
enum class Provenance { proved, asserted };

struct AngleBound {
  double theta = 0.0;

  AngleBound() = default;
  explicit AngleBound(double theta) : theta(theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
      throw precondition_error("AngleBound: theta must lie in [0, pi]");
  }
};

// Angle between the difference vectors x-y and u-v, in [0, pi].
// Defined as 0 when either difference vanishes. The cosine is clamped to
// [-1, 1] because floating-point inner products can exceed the
// Cauchy-Schwarz bound by an ulp.
inline double incremental_angle(const Vec& x, const Vec& u, const Vec& y,
                                const Vec& v) {
  if (!all_finite(x) || !all_finite(u) || !all_finite(y) || !all_finite(v))
    throw invalid_input_error("incremental_angle: non-finite input");
  require_same_dim(x, y, "incremental_angle: x/y dimension mismatch");
  require_same_dim(u, v, "incremental_angle: u/v dimension mismatch");
  const Vec dx = sub(x, y);
  const Vec du = sub(u, v);
  require_same_dim(dx, du, "incremental_angle: x/u dimension mismatch");
  const double nx = norm(dx);
  const double nu = norm(du);
  if (nx == 0.0 || nu == 0.0) return 0.0;
  const double c = std::clamp(dot(dx, du) / (nx * nu), -1.0, 1.0);
  return std::acos(c);
}

// <x-y, u-v> >= mu*|x-y|^2 + rho*|u-v|^2, with slack tol.
inline bool semimonotone_pair_check(const GraphPair& p, const GraphPair& q,
                                    const SemimonotoneParams& params,
                                    double tol = 1e-9) {
  require_same_dim(p.x, q.x, "semimonotone_pair_check: dimension mismatch");
  const Vec dx = sub(p.x, q.x);
  const Vec du = sub(p.u, q.u);
  return dot(dx, du) >=
         params.mu * dot(dx, dx) + params.rho * dot(du, du) - tol;
}

// <x-y, u-v> >= cos(theta)*|x-y|*|u-v|, with slack tol. Uses the product
// form rather than arccos so zero differences need no special case.
inline bool angle_pair_check(const GraphPair& p, const GraphPair& q,
                             const AngleBound& bound, double tol = 1e-9) {
  require_same_dim(p.x, q.x, "angle_pair_check: dimension mismatch");
  const Vec dx = sub(p.x, q.x);
  const Vec du = sub(p.u, q.u);
  return dot(dx, du) >=
         std::cos(bound.theta) * norm(dx) * norm(du) - tol;
}

// Class parameters of A + alpha*id given those of A.
// Requires 1 + 2*rho*alpha > 0.
inline SemimonotoneParams shift_params(const SemimonotoneParams& p,
                                       double alpha) {
  const double denom = 1.0 + 2.0 * p.rho * alpha;
  if (!(denom > 0.0))
    throw precondition_error("shift_params: requires 1 + 2*rho*alpha > 0");
  return {(p.mu + alpha * (1.0 + p.rho * alpha)) / denom, p.rho / denom};
}

// Class parameters of A^-1: the defining inequality is symmetric under
// swapping the roles of x-y and u-v, so mu and rho trade places.
inline SemimonotoneParams invert_params(const SemimonotoneParams& p) {
  return {p.rho, p.mu};
}

inline ClassStatus class_status(const SemimonotoneParams& p) {
  if (p.mu < 0.0 && p.rho < 0.0 && p.mu * p.rho >= 0.25)
    return ClassStatus::Universal;
  if (p.mu > 0.0 && p.rho > 0.0 && p.mu * p.rho > 0.25)
    return ClassStatus::Empty;
  return ClassStatus::Nontrivial;
}

// Certificate that every theta-angle-bounded operator plus alpha*id is
// (mu, rho)-semimonotone: 1 - 4*mu*rho <= (1 - 2*alpha*rho)^2 * sin^2(theta).
// Requires rho < 0, alpha >= 0 and theta in [pi/2, pi); theta = pi is
// rejected because sin(theta) = 0 makes the certificate vacuous.
inline bool angle_to_semimonotone(const AngleBound& theta, double alpha,
                                  const SemimonotoneParams& params,
                                  double tol = 1e-12) {
  if (!(params.rho < 0.0))
    throw precondition_error("angle_to_semimonotone: requires rho < 0");
  if (!(alpha >= 0.0))
    throw precondition_error("angle_to_semimonotone: requires alpha >= 0");
  if (!(theta.theta >= std::numbers::pi / 2.0 &&
        theta.theta < std::numbers::pi))
    throw precondition_error(
        "angle_to_semimonotone: requires theta in [pi/2, pi)");
  const double s = std::sin(theta.theta);
  const double lhs = 1.0 - 4.0 * params.mu * params.rho;
  const double rhs_factor = 1.0 - 2.0 * alpha * params.rho;
  return lhs <= rhs_factor * rhs_factor * s * s + tol;
}

// Largest comonotonicity constant certified for B_theta + alpha*id:
// rho = (1/(2*alpha)) * (1 - 1/sin(theta)), mu = 0.
inline SemimonotoneParams comonotone_from_angle(const AngleBound& theta,
                                                double alpha) {
  if (!(alpha > 0.0))
    throw precondition_error("comonotone_from_angle: requires alpha > 0");
  if (!(theta.theta >= std::numbers::pi / 2.0 &&
        theta.theta < std::numbers::pi))
    throw precondition_error(
        "comonotone_from_angle: requires theta in [pi/2, pi)");
  return {0.0, (1.0 - 1.0 / std::sin(theta.theta)) / (2.0 * alpha)};
}

}  // namespace srgc
