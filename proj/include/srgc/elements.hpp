#pragma once

// Concrete circuit elements: device laws, exact set-valued evaluation,
// exact resolvents, and seeded graph samplers.

#include <cmath>
#include <cstdint>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "srgc/errors.hpp"
#include "srgc/linalg.hpp"
#include "srgc/semimonotone.hpp"

namespace srgc {

// ---------------------------------------------------------------------------
// Device parameter bundles

struct LinearResistor {
  double resistance = 0.0;

  LinearResistor() = default;
  explicit LinearResistor(double resistance) : resistance(resistance) {
    if (!std::isfinite(resistance))
      throw invalid_input_error("LinearResistor: resistance must be finite");
  }
};

// Piecewise linear tunnel diode: slope 1/r1 outside [-vbar, vbar], slope
// -1/r2 (the negative resistance region) inside.
struct TunnelDiode {
  double r1 = 1.0;
  double r2 = 2.0;
  double vbar = 1.0;

  TunnelDiode() = default;
  TunnelDiode(double r1, double r2, double vbar) : r1(r1), r2(r2), vbar(vbar) {
    if (!(r1 > 0.0 && r2 > 0.0 && vbar > 0.0))
      throw precondition_error("TunnelDiode: r1, r2, vbar must be positive");
    if (!(r1 < r2)) throw precondition_error("TunnelDiode: requires r1 < r2");
  }
};

struct EbersMollTransistor {
  double alphaR = 0.0;
  double alphaF = 0.0;

  EbersMollTransistor() = default;
  EbersMollTransistor(double alphaR, double alphaF)
      : alphaR(alphaR), alphaF(alphaF) {
    if (!(alphaR >= 0.0 && alphaR < 1.0 && alphaF >= 0.0 && alphaF < 1.0))
      throw precondition_error(
          "EbersMollTransistor: alphas must lie in [0, 1)");
  }
};

struct LeakyTransistor {
  EbersMollTransistor transistor;
  double r = 1.0;  // leakage resistance

  LeakyTransistor() = default;
  LeakyTransistor(EbersMollTransistor transistor, double r)
      : transistor(transistor), r(r) {
    if (!(r > 0.0)) throw precondition_error("LeakyTransistor: requires r > 0");
  }
};

// ---------------------------------------------------------------------------
// Set descriptors

// Value set of the ideal diode at a voltage: {0}, the ray [0, inf), or empty.
struct DiodeValue {
  enum class Kind { Zero, Ray, Empty };
  Kind kind = Kind::Zero;

  bool empty() const { return kind == Kind::Empty; }
  bool contains(double u, double tol = 1e-9) const {
    switch (kind) {
      case Kind::Zero:
        return std::abs(u) <= tol;
      case Kind::Ray:
        return u >= -tol;
      case Kind::Empty:
        return false;
    }
    return false;
  }
  // Distance from u to the set (infinite for the empty set).
  double distance(double u) const {
    switch (kind) {
      case Kind::Zero:
        return std::abs(u);
      case Kind::Ray:
        return std::max(-u, 0.0);
      case Kind::Empty:
        return std::numeric_limits<double>::infinity();
    }
    return std::numeric_limits<double>::infinity();
  }
};

inline DiodeValue ideal_diode_eval(double v) {
  if (v < 0.0) return {DiodeValue::Kind::Zero};
  if (v == 0.0) return {DiodeValue::Kind::Ray};
  return {DiodeValue::Kind::Empty};
}

// Resolvent of the ideal diode: v = min(w, 0), with current u = max(w, 0)/gamma.
inline double ideal_diode_resolvent(double gamma, double w) {
  if (!(gamma > 0.0))
    throw precondition_error("ideal_diode_resolvent: requires gamma > 0");
  return std::min(w, 0.0);
}

// Current set {R*(u1,u2) | u_i in T_D(v_i)} of the two-port transistor at
// port voltages v. The mixing matrix R = [[1, -aR], [-aF, 1]] is invertible
// for alphas in [0,1), so membership reduces to per-diode membership of
// R^-1 * i.
struct EbersMollValue {
  DiodeValue d1, d2;
  double alphaR = 0.0, alphaF = 0.0;

  bool empty() const { return d1.empty() || d2.empty(); }

  // Distance from a candidate current vector to the set, measured in the
  // output space through the diode projections.
  double distance(const Vec& i) const {
    if (i.size() != 2)
      throw dimension_error("EbersMollValue::distance: expects a 2-vector");
    if (empty()) return std::numeric_limits<double>::infinity();
    const double det = 1.0 - alphaR * alphaF;
    const double u1 = (i[0] + alphaR * i[1]) / det;
    const double u2 = (alphaF * i[0] + i[1]) / det;
    auto proj = [](const DiodeValue& d, double u) {
      return d.kind == DiodeValue::Kind::Ray ? std::max(u, 0.0) : 0.0;
    };
    const double p1 = proj(d1, u1);
    const double p2 = proj(d2, u2);
    const Vec back{p1 - alphaR * p2, -alphaF * p1 + p2};
    return norm(sub(i, back));
  }

  bool contains(const Vec& i, double tol = 1e-9) const {
    return distance(i) <= tol;
  }
};

inline EbersMollValue ebers_moll_eval(const EbersMollTransistor& t,
                                      const Vec& v) {
  if (v.size() != 2)
    throw dimension_error("ebers_moll_eval: expects a 2-vector");
  return {ideal_diode_eval(v[0]), ideal_diode_eval(v[1]), t.alphaR, t.alphaF};
}

// ---------------------------------------------------------------------------
// Device laws and class parameters

inline double tunnel_eval(const TunnelDiode& d, double v) {
  if (v < -d.vbar) return (v + d.vbar) / d.r1 + d.vbar / d.r2;
  if (v > d.vbar) return (v - d.vbar) / d.r1 - d.vbar / d.r2;
  return -v / d.r2;
}

// Class parameters of a scalar map with slopes in [sigma, ell].
inline SemimonotoneParams slope_to_params(double sigma, double ell) {
  if (!(ell > 0.0)) throw precondition_error("slope_to_params: requires ell > 0");
  if (!(sigma > -ell && sigma <= ell))
    throw precondition_error("slope_to_params: requires sigma in (-ell, ell]");
  return {sigma * ell / (ell + sigma), 1.0 / (ell + sigma)};
}

// Tunnel diode class parameters, written in the exactly-representable form
// (1/(r1-r2), r1*r2/(r2-r1)) rather than through slope_to_params.
inline SemimonotoneParams tunnel_params(const TunnelDiode& d) {
  return {1.0 / (d.r1 - d.r2), d.r1 * d.r2 / (d.r2 - d.r1)};
}

// Worst-case incremental angle of the two-port transistor:
// pi/2 + max(arctan(alphaF), arctan(alphaR)), always below 3*pi/4.
inline AngleBound transistor_angle(const EbersMollTransistor& t) {
  return AngleBound(std::numbers::pi / 2.0 +
                    std::max(std::atan(t.alphaF), std::atan(t.alphaR)));
}

// The transistor's one-parameter family of certified classes.
inline SemimonotoneParams transistor_semimonotone(double rho) {
  if (!(rho < 0.0))
    throw precondition_error("transistor_semimonotone: requires rho < 0");
  return {1.0 / (8.0 * rho), rho};
}

// ---------------------------------------------------------------------------
// Resolvents

inline double linear_resistor_resolvent(const LinearResistor& res,
                                        double gamma, double w) {
  if (!(gamma > 0.0))
    throw precondition_error("linear_resistor_resolvent: requires gamma > 0");
  const double denom = 1.0 + gamma * res.resistance;
  if (std::abs(denom) <= 1e-12)
    throw precondition_error(
        "linear_resistor_resolvent: singular denominator 1 + gamma*resistance");
  return w / denom;
}

// Forward tunnel resolvent: the x solving x + delta*T(x) = y. Requires
// delta < r2 so the left-hand side is strictly increasing.
inline double tunnel_resolvent(const TunnelDiode& d, double delta, double y) {
  if (!(delta > 0.0))
    throw precondition_error("tunnel_resolvent: requires delta > 0");
  if (!(delta < d.r2))
    throw precondition_error("tunnel_resolvent: requires delta < r2");
  const double edge = d.vbar * (1.0 - delta / d.r2);
  if (y > edge)
    return (y + delta * d.vbar * (1.0 / d.r1 + 1.0 / d.r2)) /
           (1.0 + delta / d.r1);
  if (y < -edge)
    return (y - delta * d.vbar * (1.0 / d.r1 + 1.0 / d.r2)) /
           (1.0 + delta / d.r1);
  return y / (1.0 - delta / d.r2);
}

struct TunnelInverseSolution {
  double v;  // resolvent output (a current)
  double x;  // tunnel terminal voltage, the branch variable
};

// Resolvent of the multi-valued inverse tunnel characteristic. Solves the
// strictly increasing piecewise-linear equation T(x) + gamma*x = w; requires
// gamma > 1/r2 or the equation loses strict monotonicity and the resolvent
// may be multi-valued.
inline TunnelInverseSolution tunnel_inverse_resolvent_branch(
    const TunnelDiode& d, double gamma, double w) {
  if (!(gamma > 1.0 / d.r2))
    throw precondition_error(
        "tunnel_inverse_resolvent: requires gamma > 1/r2");
  const double edge = d.vbar * (gamma - 1.0 / d.r2);
  double x;
  if (w > edge)
    x = (w + d.vbar * (1.0 / d.r1 + 1.0 / d.r2)) / (1.0 / d.r1 + gamma);
  else if (w < -edge)
    x = (w - d.vbar * (1.0 / d.r1 + 1.0 / d.r2)) / (1.0 / d.r1 + gamma);
  else
    x = w / (gamma - 1.0 / d.r2);
  return {w - gamma * x, x};
}

inline double tunnel_inverse_resolvent(const TunnelDiode& d, double gamma,
                                       double w) {
  return tunnel_inverse_resolvent_branch(d, gamma, w).v;
}

namespace detail {

struct DiodeMixSolution {
  Vec v;  // port voltages, componentwise <= 0
  Vec u;  // internal diode currents, componentwise >= 0
};

// Solves w = beta*v + gamma*R*u with u_i in T_D(v_i) for ideal diodes, a
// 2-D linear complementarity system. The four active sets are enumerated
// with shared boundary expressions so adjacent feasibility cones cannot
// both reject a boundary input; ties prefer v_i = 0.
inline DiodeMixSolution diode_mix_resolvent(double alphaR, double alphaF,
                                            double beta, double gamma,
                                            const Vec& w) {
  if (w.size() != 2)
    throw dimension_error("diode_mix_resolvent: expects a 2-vector");
  const double e1 = w[0] + alphaR * w[1];
  const double e2 = alphaF * w[0] + w[1];
  const double det = 1.0 - alphaR * alphaF;

  if (e1 >= 0.0 && e2 >= 0.0) {
    // both ports at the breakpoint, currents from R^-1 * w
    return {{0.0, 0.0}, {e1 / (det * gamma), e2 / (det * gamma)}};
  }
  if (w[0] >= 0.0 && e2 <= 0.0) {
    // port 1 at the breakpoint, port 2 blocked
    return {{0.0, e2 / beta}, {w[0] / gamma, 0.0}};
  }
  if (w[1] >= 0.0 && e1 <= 0.0) {
    // port 2 at the breakpoint, port 1 blocked
    return {{e1 / beta, 0.0}, {0.0, w[1] / gamma}};
  }
  if (w[0] <= 0.0 && w[1] <= 0.0) {
    // both ports blocked
    return {{w[0] / beta, w[1] / beta}, {0.0, 0.0}};
  }
  throw resolvent_error("diode_mix_resolvent: no feasible active set", w,
                        gamma);
}

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 1));
}

}  // namespace detail

// Resolvent of the leaky transistor T_NPN + (1/r)*id.
inline Vec leaky_resolvent(const LeakyTransistor& lt, double gamma,
                           const Vec& w) {
  if (!(gamma > 0.0))
    throw precondition_error("leaky_resolvent: requires gamma > 0");
  if (!all_finite(w)) throw invalid_input_error("leaky_resolvent: non-finite w");
  const double beta = 1.0 + gamma / lt.r;
  return detail::diode_mix_resolvent(lt.transistor.alphaR,
                                     lt.transistor.alphaF, beta, gamma, w)
      .v;
}

// ---------------------------------------------------------------------------
// Sampled-element abstraction

// Operating box for graph samplers; value_max truncates multi-valued
// branches to [0, value_max].
struct SampleBox {
  double lo = -10.0;
  double hi = 10.0;
  double value_max = 10.0;
};

struct DeclaredParams {
  SemimonotoneParams params;
  Provenance provenance = Provenance::asserted;
};

struct DeclaredAngle {
  AngleBound bound;
  Provenance provenance = Provenance::asserted;
};

// A set-valued operator that can be sampled and whose resolvent can be
// evaluated. Samplers are deterministic for a fixed seed; resolvents return
// the v satisfying w in v + gamma*A(v).
class Element {
 public:
  virtual ~Element() = default;
  virtual std::size_t dim() const = 0;
  virtual bool multivalued() const = 0;
  virtual std::string name() const = 0;
  virtual std::vector<GraphPair> sample_graph(std::uint64_t seed,
                                              std::size_t count) const = 0;
  virtual Vec resolvent(double gamma, const Vec& w) const = 0;

  const std::optional<DeclaredParams>& declared_semimonotone() const {
    return declared_semimonotone_;
  }
  const std::optional<DeclaredAngle>& declared_angle() const {
    return declared_angle_;
  }

 protected:
  std::optional<DeclaredParams> declared_semimonotone_;
  std::optional<DeclaredAngle> declared_angle_;
};

class LinearResistorElement : public Element {
 public:
  explicit LinearResistorElement(LinearResistor r, SampleBox box = {})
      : r_(r), box_(box) {
    if (r.resistance > 0.0)
      declared_semimonotone_ = DeclaredParams{
          slope_to_params(r.resistance, r.resistance), Provenance::proved};
  }

  std::size_t dim() const override { return 1; }
  bool multivalued() const override { return false; }
  std::string name() const override {
    return "resistor(" + std::to_string(r_.resistance) + ")";
  }
  const LinearResistor& resistor() const { return r_; }

  std::vector<GraphPair> sample_graph(std::uint64_t seed,
                                      std::size_t count) const override {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(box_.lo, box_.hi);
    std::vector<GraphPair> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      const double x = box(rng);
      out.emplace_back(Vec{x}, Vec{r_.resistance * x});
    }
    return out;
  }

  Vec resolvent(double gamma, const Vec& w) const override {
    if (w.size() != 1)
      throw dimension_error("LinearResistorElement: expects a 1-vector");
    return {linear_resistor_resolvent(r_, gamma, w[0])};
  }

 private:
  LinearResistor r_;
  SampleBox box_;
};

class TunnelDiodeElement : public Element {
 public:
  explicit TunnelDiodeElement(TunnelDiode d, SampleBox box = {})
      : d_(d), box_(box) {
    declared_semimonotone_ = DeclaredParams{tunnel_params(d), Provenance::proved};
  }

  std::size_t dim() const override { return 1; }
  bool multivalued() const override { return false; }
  std::string name() const override { return "tunnel-diode"; }
  const TunnelDiode& diode() const { return d_; }

  std::vector<GraphPair> sample_graph(std::uint64_t seed,
                                      std::size_t count) const override {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(box_.lo, box_.hi);
    std::vector<GraphPair> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      const double x = box(rng);
      out.emplace_back(Vec{x}, Vec{tunnel_eval(d_, x)});
    }
    return out;
  }

  Vec resolvent(double gamma, const Vec& w) const override {
    if (w.size() != 1)
      throw dimension_error("TunnelDiodeElement: expects a 1-vector");
    return {tunnel_resolvent(d_, gamma, w[0])};
  }

 private:
  TunnelDiode d_;
  SampleBox box_;
};

// The inverse tunnel characteristic used as a (multi-valued) resistor: maps
// current to terminal voltage. Graph points are (T(x), x) for sampled x.
class TunnelDiodeInverseElement : public Element {
 public:
  explicit TunnelDiodeInverseElement(TunnelDiode d, SampleBox box = {})
      : d_(d), box_(box) {
    declared_semimonotone_ =
        DeclaredParams{invert_params(tunnel_params(d)), Provenance::proved};
  }

  std::size_t dim() const override { return 1; }
  bool multivalued() const override { return true; }
  std::string name() const override { return "tunnel-diode-inverse"; }
  const TunnelDiode& diode() const { return d_; }

  std::vector<GraphPair> sample_graph(std::uint64_t seed,
                                      std::size_t count) const override {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(box_.lo, box_.hi);
    std::vector<GraphPair> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      const double x = box(rng);
      out.emplace_back(Vec{tunnel_eval(d_, x)}, Vec{x});
    }
    return out;
  }

  Vec resolvent(double gamma, const Vec& w) const override {
    if (w.size() != 1)
      throw dimension_error("TunnelDiodeInverseElement: expects a 1-vector");
    return {tunnel_inverse_resolvent(d_, gamma, w[0])};
  }

  TunnelInverseSolution branch(double gamma, double w) const {
    return tunnel_inverse_resolvent_branch(d_, gamma, w);
  }

 private:
  TunnelDiode d_;
  SampleBox box_;
};

// Two-port transistor sampled over the diode domain v in [lo, 0]^2; at a
// breakpoint (v_i = 0) the internal current is drawn from [0, value_max].
class EbersMollElement : public Element {
 public:
  explicit EbersMollElement(EbersMollTransistor t,
                            SampleBox box = {-10.0, 0.0, 10.0})
      : t_(t), box_(box) {
    declared_angle_ = DeclaredAngle{transistor_angle(t), Provenance::proved};
  }

  std::size_t dim() const override { return 2; }
  bool multivalued() const override { return true; }
  std::string name() const override { return "ebers-moll"; }
  const EbersMollTransistor& transistor() const { return t_; }

  std::vector<GraphPair> sample_graph(std::uint64_t seed,
                                      std::size_t count) const override {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(box_.lo, box_.hi);
    std::uniform_real_distribution<double> ray(0.0, box_.value_max);
    std::bernoulli_distribution at_breakpoint(0.5);
    std::vector<GraphPair> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      double v1, v2, u1, u2;
      if (at_breakpoint(rng)) {
        v1 = 0.0;
        u1 = ray(rng);
      } else {
        v1 = box(rng);
        u1 = 0.0;
      }
      if (at_breakpoint(rng)) {
        v2 = 0.0;
        u2 = ray(rng);
      } else {
        v2 = box(rng);
        u2 = 0.0;
      }
      out.emplace_back(Vec{v1, v2}, Vec{u1 - t_.alphaR * u2,
                                        -t_.alphaF * u1 + u2});
    }
    return out;
  }

  Vec resolvent(double gamma, const Vec& w) const override {
    if (!(gamma > 0.0))
      throw precondition_error("EbersMollElement: requires gamma > 0");
    return detail::diode_mix_resolvent(t_.alphaR, t_.alphaF, 1.0, gamma, w).v;
  }

 private:
  EbersMollTransistor t_;
  SampleBox box_;
};

class LeakyTransistorElement : public Element {
 public:
  explicit LeakyTransistorElement(LeakyTransistor lt,
                                  SampleBox box = {-10.0, 0.0, 10.0})
      : lt_(lt), inner_(lt.transistor, box) {
    declared_semimonotone_ = DeclaredParams{
        {0.0, lt.r * (1.0 - std::numbers::sqrt2) / 2.0}, Provenance::proved};
  }

  std::size_t dim() const override { return 2; }
  bool multivalued() const override { return true; }
  std::string name() const override { return "leaky-transistor"; }
  const LeakyTransistor& device() const { return lt_; }

  std::vector<GraphPair> sample_graph(std::uint64_t seed,
                                      std::size_t count) const override {
    auto pairs = inner_.sample_graph(seed, count);
    for (auto& p : pairs) {
      p.u[0] += p.x[0] / lt_.r;
      p.u[1] += p.x[1] / lt_.r;
    }
    return pairs;
  }

  Vec resolvent(double gamma, const Vec& w) const override {
    return leaky_resolvent(lt_, gamma, w);
  }

 private:
  LeakyTransistor lt_;
  EbersMollElement inner_;
};

// Diagonal stack of independent elements.
class ProductElement : public Element {
 public:
  explicit ProductElement(std::vector<std::shared_ptr<const Element>> parts)
      : parts_(std::move(parts)) {
    if (parts_.empty())
      throw precondition_error("ProductElement: needs at least one part");
    for (const auto& p : parts_) dim_ += p->dim();
  }

  std::size_t dim() const override { return dim_; }
  bool multivalued() const override {
    for (const auto& p : parts_)
      if (p->multivalued()) return true;
    return false;
  }
  std::string name() const override {
    std::string s = "product(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ", ";
      s += parts_[i]->name();
    }
    return s + ")";
  }
  const std::vector<std::shared_ptr<const Element>>& parts() const {
    return parts_;
  }

  std::vector<GraphPair> sample_graph(std::uint64_t seed,
                                      std::size_t count) const override {
    std::vector<GraphPair> out(count);
    std::vector<Vec> xs(count), us(count);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      auto sub = parts_[i]->sample_graph(detail::mix_seed(seed, i), count);
      for (std::size_t k = 0; k < count; ++k) {
        xs[k].insert(xs[k].end(), sub[k].x.begin(), sub[k].x.end());
        us[k].insert(us[k].end(), sub[k].u.begin(), sub[k].u.end());
      }
    }
    for (std::size_t k = 0; k < count; ++k)
      out[k] = GraphPair(std::move(xs[k]), std::move(us[k]));
    return out;
  }

  Vec resolvent(double gamma, const Vec& w) const override {
    if (w.size() != dim_)
      throw dimension_error("ProductElement: dimension mismatch");
    Vec v;
    v.reserve(dim_);
    std::size_t off = 0;
    for (const auto& p : parts_) {
      const Vec block(w.begin() + off, w.begin() + off + p->dim());
      const Vec sol = p->resolvent(gamma, block);
      v.insert(v.end(), sol.begin(), sol.end());
      off += p->dim();
    }
    return v;
  }

 private:
  std::vector<std::shared_ptr<const Element>> parts_;
  std::size_t dim_ = 0;
};

// A + s for a constant offset s: outputs shift, the resolvent folds the
// shift into its input, and incremental properties are unchanged (so class
// declarations carry over).
class AffineShiftElement : public Element {
 public:
  AffineShiftElement(std::shared_ptr<const Element> inner, Vec offset)
      : inner_(std::move(inner)), offset_(std::move(offset)) {
    if (offset_.size() != inner_->dim())
      throw dimension_error("AffineShiftElement: offset dimension mismatch");
    if (!all_finite(offset_))
      throw invalid_input_error("AffineShiftElement: non-finite offset");
    declared_semimonotone_ = inner_->declared_semimonotone();
    declared_angle_ = inner_->declared_angle();
  }

  std::size_t dim() const override { return inner_->dim(); }
  bool multivalued() const override { return inner_->multivalued(); }
  std::string name() const override { return "shifted(" + inner_->name() + ")"; }
  const Element& inner() const { return *inner_; }
  const Vec& offset() const { return offset_; }

  std::vector<GraphPair> sample_graph(std::uint64_t seed,
                                      std::size_t count) const override {
    auto pairs = inner_->sample_graph(seed, count);
    for (auto& p : pairs) p.u = add(p.u, offset_);
    return pairs;
  }

  Vec resolvent(double gamma, const Vec& w) const override {
    return inner_->resolvent(gamma, sub(w, scaled(gamma, offset_)));
  }

 private:
  std::shared_ptr<const Element> inner_;
  Vec offset_;
};

// Graph pairs pinned to the transistor's worst-angle configurations: one
// port held at its breakpoint with distinct internal currents, the other
// blocked with distinct voltages, signs aligned so the incremental angle
// attains pi/2 + arctan(alpha). Both port roles are emitted because the
// attaining port is the one with the larger alpha.
inline std::vector<GraphPair> transistor_tight_pairs(
    const EbersMollTransistor& t, std::uint64_t seed, std::size_t n_pairs,
    SampleBox box = {-10.0, 0.0, 10.0}) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> volt(box.lo, 0.0);
  std::uniform_real_distribution<double> ray(0.0, box.value_max);
  std::vector<GraphPair> out;
  out.reserve(2 * n_pairs);
  for (std::size_t k = 0; k < n_pairs; ++k) {
    double a = volt(rng), b = volt(rng);
    double s = ray(rng), sp = ray(rng);
    if (a == b || s == sp) {
      --k;
      continue;
    }
    if ((a - b) * (s - sp) < 0.0) std::swap(s, sp);
    if (k % 2 == 0) {
      // port 2 at the breakpoint: angle pi/2 + arctan(alphaR)
      out.emplace_back(Vec{a, 0.0}, Vec{-t.alphaR * s, s});
      out.emplace_back(Vec{b, 0.0}, Vec{-t.alphaR * sp, sp});
    } else {
      // port 1 at the breakpoint: angle pi/2 + arctan(alphaF)
      out.emplace_back(Vec{0.0, a}, Vec{s, -t.alphaF * s});
      out.emplace_back(Vec{0.0, b}, Vec{sp, -t.alphaF * sp});
    }
  }
  return out;
}

}  // namespace srgc
