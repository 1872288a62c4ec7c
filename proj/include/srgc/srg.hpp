#pragma once

// Scaled relative graphs: point clouds sampled from operator graphs,
// analytical regions for operator classes, and the region calculus.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "srgc/elements.hpp"
#include "srgc/errors.hpp"
#include "srgc/linalg.hpp"
#include "srgc/semimonotone.hpp"

namespace srgc {

struct SRGPoint {
  double re = 0.0;
  double im = 0.0;
  bool at_infinity = false;

  static SRGPoint infinity() { return {0.0, 0.0, true}; }
};

// The conjugate pair z_+ and z_- for two graph points, with modulus
// |u-v|/|x-y| and argument +-incremental_angle. A pair with x = y carries
// no information and yields no points; u = v yields the origin twice.
// Angles of exactly 0 or pi are written with exact real parts so scalar
// clouds are exact difference quotients.
inline std::vector<SRGPoint> srg_points(const GraphPair& p,
                                        const GraphPair& q) {
  require_same_dim(p.x, q.x, "srg_points");
  const double nx = norm(sub(p.x, q.x));
  if (nx == 0.0) return {};
  const double mod = norm(sub(p.u, q.u)) / nx;
  const double ang = incremental_angle(p.x, p.u, q.x, q.u);
  if (ang == 0.0) return {{mod, 0.0}, {mod, 0.0}};
  if (ang == std::numbers::pi) return {{-mod, 0.0}, {-mod, 0.0}};
  const double re = mod * std::cos(ang);
  const double im = mod * std::sin(ang);
  return {{re, im}, {re, -im}};
}

// SRG cloud of consecutively paired graph points.
inline std::vector<SRGPoint> srg_cloud(const std::vector<GraphPair>& pairs) {
  std::vector<SRGPoint> cloud;
  cloud.reserve(pairs.size());
  for (std::size_t k = 0; k + 1 < pairs.size(); k += 2) {
    const auto pts = srg_points(pairs[k], pairs[k + 1]);
    cloud.insert(cloud.end(), pts.begin(), pts.end());
  }
  return cloud;
}

// Seeded SRG cloud of an element: at most 2*n_pairs finite points, plus the
// infinity point iff the element is declared multi-valued.
inline std::vector<SRGPoint> sample_srg(const Element& element,
                                        std::size_t n_pairs,
                                        std::uint64_t seed) {
  if (n_pairs < 1)
    throw precondition_error("sample_srg: requires n_pairs >= 1");
  auto cloud = srg_cloud(element.sample_graph(seed, 2 * n_pairs));
  if (element.multivalued()) cloud.push_back(SRGPoint::infinity());
  return cloud;
}

// A region of the extended complex plane, symmetric about the real axis.
// Closedness is implicit in the variant: ClosedDisk is closed,
// ComplementOfOpenDisk is the closed complement of an open disk.
struct SRGRegion {
  enum class Kind { ClosedDisk, ComplementOfOpenDisk, HalfPlane, Cone,
                    FullPlane, Empty };

  Kind kind = Kind::Empty;
  double c = 0.0;      // disk center (real)
  double r = 0.0;      // disk radius
  double mu = 0.0;     // half-plane bound: Re z >= mu
  double theta = 0.0;  // cone half-angle about the positive real axis
  bool includes_infinity = false;

  // Radius zero is allowed (a single point; slope intervals can collapse).
  static SRGRegion closed_disk(double c, double r,
                               bool includes_infinity = false) {
    if (!(std::isfinite(c) && r >= 0.0 && std::isfinite(r)))
      throw invalid_input_error("SRGRegion: closed disk needs finite c, r >= 0");
    SRGRegion g;
    g.kind = Kind::ClosedDisk;
    g.c = c;
    g.r = r;
    g.includes_infinity = includes_infinity;
    return g;
  }
  static SRGRegion complement_of_open_disk(double c, double r,
                                           bool includes_infinity = true) {
    if (!(std::isfinite(c) && r > 0.0 && std::isfinite(r)))
      throw invalid_input_error(
          "SRGRegion: open-disk complement needs finite c, r > 0");
    SRGRegion g;
    g.kind = Kind::ComplementOfOpenDisk;
    g.c = c;
    g.r = r;
    g.includes_infinity = includes_infinity;
    return g;
  }
  static SRGRegion half_plane(double mu, bool includes_infinity = true) {
    if (!std::isfinite(mu))
      throw invalid_input_error("SRGRegion: half plane needs finite mu");
    SRGRegion g;
    g.kind = Kind::HalfPlane;
    g.mu = mu;
    g.includes_infinity = includes_infinity;
    return g;
  }
  static SRGRegion cone(double theta, bool includes_infinity = true) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
      throw invalid_input_error("SRGRegion: cone half-angle must lie in [0, pi]");
    SRGRegion g;
    g.kind = Kind::Cone;
    g.theta = theta;
    g.includes_infinity = includes_infinity;
    return g;
  }
  static SRGRegion full_plane() {
    SRGRegion g;
    g.kind = Kind::FullPlane;
    g.includes_infinity = true;
    return g;
  }
  static SRGRegion empty() { return {}; }
};

// Analytical SRG of the (mu, rho)-semimonotone class.
inline SRGRegion region_semimonotone(const SemimonotoneParams& p) {
  switch (class_status(p)) {
    case ClassStatus::Universal:
      return SRGRegion::full_plane();
    case ClassStatus::Empty:
      return SRGRegion::empty();
    case ClassStatus::Nontrivial:
      break;
  }
  if (p.rho == 0.0) return SRGRegion::half_plane(p.mu);
  const double disc = std::sqrt(std::max(1.0 - 4.0 * p.mu * p.rho, 0.0));
  const double c = 1.0 / (2.0 * p.rho);
  if (p.rho > 0.0)
    return SRGRegion::closed_disk(c, disc / (2.0 * p.rho), false);
  return SRGRegion::complement_of_open_disk(c, disc / (2.0 * std::abs(p.rho)));
}

// Analytical SRG of the theta-angle-bounded class: the cone including the
// origin and infinity.
inline SRGRegion region_angle_bounded(const AngleBound& bound) {
  return SRGRegion::cone(bound.theta);
}

inline bool region_contains(const SRGRegion& g, const SRGPoint& p,
                            double tol = 1e-9) {
  if (p.at_infinity) return g.includes_infinity;
  switch (g.kind) {
    case SRGRegion::Kind::ClosedDisk:
      return std::hypot(p.re - g.c, p.im) <= g.r + tol;
    case SRGRegion::Kind::ComplementOfOpenDisk:
      return std::hypot(p.re - g.c, p.im) >= g.r - tol;
    case SRGRegion::Kind::HalfPlane:
      return p.re >= g.mu - tol;
    case SRGRegion::Kind::Cone:
      if (p.re == 0.0 && p.im == 0.0) return true;
      return std::atan2(std::abs(p.im), p.re) <= g.theta + tol;
    case SRGRegion::Kind::FullPlane:
      return true;
    case SRGRegion::Kind::Empty:
      return false;
  }
  return false;
}

struct RegionOp {
  enum class Kind { Scale, ShiftPlusOne, Invert };
  Kind kind = Kind::Invert;
  double alpha = 1.0;

  static RegionOp scale(double alpha) {
    if (!(alpha != 0.0) || !std::isfinite(alpha))
      throw precondition_error("RegionOp::scale: requires alpha != 0");
    return {Kind::Scale, alpha};
  }
  static RegionOp shift_plus_one() { return {Kind::ShiftPlusOne, 1.0}; }
  static RegionOp invert() { return {Kind::Invert, 1.0}; }
};

namespace detail {

// Whether the finite part of the region contains the origin.
inline bool zero_in_finite_shape(const SRGRegion& g) {
  switch (g.kind) {
    case SRGRegion::Kind::ClosedDisk:
      return std::abs(g.c) <= g.r;
    case SRGRegion::Kind::ComplementOfOpenDisk:
      return std::abs(g.c) >= g.r;
    case SRGRegion::Kind::HalfPlane:
      return g.mu <= 0.0;
    case SRGRegion::Kind::Cone:
    case SRGRegion::Kind::FullPlane:
      return true;
    case SRGRegion::Kind::Empty:
      return false;
  }
  return false;
}

// Inversion z -> (1/|z|)e^{i arg z} of a region, with 0 and infinity
// exchanged. Throws when the image leaves the variant vocabulary.
inline SRGRegion invert_region(const SRGRegion& g) {
  const bool zero_in_source = zero_in_finite_shape(g);
  SRGRegion out;
  switch (g.kind) {
    case SRGRegion::Kind::Empty:
      return SRGRegion::empty();
    case SRGRegion::Kind::FullPlane:
      return SRGRegion::full_plane();
    case SRGRegion::Kind::Cone:
      out = SRGRegion::cone(g.theta, true);
      break;
    case SRGRegion::Kind::HalfPlane: {
      const double mu = g.mu;
      if (mu > 0.0)
        out = SRGRegion::closed_disk(1.0 / (2.0 * mu), 1.0 / (2.0 * mu), false);
      else if (mu == 0.0)
        out = SRGRegion::half_plane(0.0, true);
      else
        out = SRGRegion::complement_of_open_disk(1.0 / (2.0 * mu),
                                                 -1.0 / (2.0 * mu), true);
      break;
    }
    case SRGRegion::Kind::ClosedDisk: {
      const double c = g.c, r = g.r;
      if (std::abs(c) > r) {
        const double d = c * c - r * r;
        out = SRGRegion::closed_disk(c / d, r / d, false);
      } else if (std::abs(c) < r) {
        const double d = r * r - c * c;
        out = SRGRegion::complement_of_open_disk(-c / d, r / d, true);
      } else if (c > 0.0) {
        out = SRGRegion::half_plane(1.0 / (2.0 * c), true);
      } else {
        throw unsupported_transform_error(
            "region_transform: inversion of this disk leaves the region "
            "vocabulary");
      }
      break;
    }
    case SRGRegion::Kind::ComplementOfOpenDisk: {
      const double c = g.c, r = g.r;
      if (std::abs(c) > r) {
        const double d = c * c - r * r;
        out = SRGRegion::complement_of_open_disk(c / d, r / d, true);
      } else if (std::abs(c) < r) {
        const double d = r * r - c * c;
        out = SRGRegion::closed_disk(-c / d, r / d, false);
      } else if (c < 0.0) {
        out = SRGRegion::half_plane(1.0 / (2.0 * c), true);
      } else {
        throw unsupported_transform_error(
            "region_transform: inversion of this disk complement leaves the "
            "region vocabulary");
      }
      break;
    }
  }
  out.includes_infinity = zero_in_source;
  if (g.includes_infinity && !zero_in_finite_shape(out))
    throw unsupported_transform_error(
        "region_transform: inverted region cannot represent the image of "
        "infinity");
  return out;
}

}  // namespace detail

inline SRGRegion region_transform(const SRGRegion& g, const RegionOp& op) {
  switch (op.kind) {
    case RegionOp::Kind::Invert:
      return detail::invert_region(g);
    case RegionOp::Kind::ShiftPlusOne:
      switch (g.kind) {
        case SRGRegion::Kind::ClosedDisk:
          return SRGRegion::closed_disk(g.c + 1.0, g.r, g.includes_infinity);
        case SRGRegion::Kind::ComplementOfOpenDisk:
          return SRGRegion::complement_of_open_disk(g.c + 1.0, g.r,
                                                    g.includes_infinity);
        case SRGRegion::Kind::HalfPlane:
          return SRGRegion::half_plane(g.mu + 1.0, g.includes_infinity);
        case SRGRegion::Kind::FullPlane:
        case SRGRegion::Kind::Empty:
          return g;
        case SRGRegion::Kind::Cone:
          throw unsupported_transform_error(
              "region_transform: a shifted cone leaves the region vocabulary");
      }
      break;
    case RegionOp::Kind::Scale: {
      const double a = op.alpha;
      switch (g.kind) {
        case SRGRegion::Kind::ClosedDisk:
          return SRGRegion::closed_disk(a * g.c, std::abs(a) * g.r,
                                        g.includes_infinity);
        case SRGRegion::Kind::ComplementOfOpenDisk:
          return SRGRegion::complement_of_open_disk(a * g.c, std::abs(a) * g.r,
                                                    g.includes_infinity);
        case SRGRegion::Kind::HalfPlane:
          if (a < 0.0)
            throw unsupported_transform_error(
                "region_transform: negative scaling of a half plane leaves "
                "the region vocabulary");
          return SRGRegion::half_plane(a * g.mu, g.includes_infinity);
        case SRGRegion::Kind::Cone:
          if (a < 0.0)
            throw unsupported_transform_error(
                "region_transform: negative scaling of a cone leaves the "
                "region vocabulary");
          return SRGRegion::cone(g.theta, g.includes_infinity);
        case SRGRegion::Kind::FullPlane:
        case SRGRegion::Kind::Empty:
          return g;
      }
      break;
    }
  }
  throw unsupported_transform_error("region_transform: unknown operation");
}

// Sampled points outside the region by more than tol. An empty result means
// "not falsified", never a proof of membership.
inline std::vector<SRGPoint> falsify_membership(
    const std::vector<SRGPoint>& cloud, const SRGRegion& region, double tol) {
  std::vector<SRGPoint> violations;
  for (const auto& p : cloud)
    if (!region_contains(region, p, tol)) violations.push_back(p);
  return violations;
}

}  // namespace srgc
