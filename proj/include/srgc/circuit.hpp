#pragma once

// Inclusion-problem assembly for the common-emitter amplifier and the
// leaky-transistor inverse problem, plus quasi-static time sweeps.

#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "srgc/elements.hpp"
#include "srgc/errors.hpp"
#include "srgc/linalg.hpp"
#include "srgc/solvers.hpp"

namespace srgc {

// 0 in [R(i); G(v)] + [[0, L^T], [-L, 0]](i; v) + [s_v; s_i].
// R maps currents to voltages, G maps voltages to currents; the constant
// sources fold into the resolvents through affine shifts.
struct InclusionProblem {
  std::shared_ptr<const Element> R;
  std::shared_ptr<const Element> G;
  Mat L;
  Vec s_v;
  Vec s_i;

  InclusionProblem(std::shared_ptr<const Element> R,
                   std::shared_ptr<const Element> G, Mat L, Vec s_v, Vec s_i)
      : R(std::move(R)),
        G(std::move(G)),
        L(std::move(L)),
        s_v(std::move(s_v)),
        s_i(std::move(s_i)) {
    if (!this->R || !this->G)
      throw invalid_input_error("InclusionProblem: missing element");
    if (this->L.rows != this->G->dim() || this->L.cols != this->R->dim())
      throw dimension_error("InclusionProblem: coupling matrix shape mismatch");
    if (this->s_v.size() != this->R->dim() ||
        this->s_i.size() != this->G->dim())
      throw dimension_error("InclusionProblem: source dimension mismatch");
    if (!this->L.finite() || !all_finite(this->s_v) || !all_finite(this->s_i))
      throw invalid_input_error("InclusionProblem: non-finite data");
  }

  std::shared_ptr<const Element> rtilde() const {
    return std::make_shared<AffineShiftElement>(R, s_v);
  }
  std::shared_ptr<const Element> gtilde() const {
    return std::make_shared<AffineShiftElement>(G, s_i);
  }
};

// Common-emitter amplifier: resistive elements in the collector and
// emitter branches, the leaky transistor as the conductive part, identity
// coupling, and sources s_v = (v_plus - v_in, -v_in), s_i = 0.
inline InclusionProblem assemble_common_emitter(
    std::shared_ptr<const Element> rC_element,
    std::shared_ptr<const Element> rE_element, const LeakyTransistor& t,
    double v_plus, double v_in) {
  if (!rC_element || !rE_element)
    throw invalid_input_error("assemble_common_emitter: missing element");
  if (rC_element->dim() != 1 || rE_element->dim() != 1)
    throw dimension_error(
        "assemble_common_emitter: branch elements must be one-dimensional");
  auto R = std::make_shared<ProductElement>(
      std::vector<std::shared_ptr<const Element>>{std::move(rC_element),
                                                  std::move(rE_element)});
  auto G = std::make_shared<LeakyTransistorElement>(t);
  return InclusionProblem(std::move(R), std::move(G), Mat::identity(2),
                          Vec{v_plus - v_in, -v_in}, Vec{0.0, 0.0});
}

// The inverse problem: find port voltages v with i_target in T(v) for the
// leaky transistor T. Returned element is T - i_target, whose resolvent is
// J(w) = leaky_resolvent(gamma, w + gamma*i_target); its zeros solve the
// inclusion.
inline std::shared_ptr<const Element> assemble_leaky_inverse(
    const LeakyTransistor& t, const Vec& i_target) {
  if (i_target.size() != 2)
    throw dimension_error("assemble_leaky_inverse: i_target must be a 2-vector");
  return std::make_shared<AffineShiftElement>(
      std::make_shared<LeakyTransistorElement>(t), scaled(-1.0, i_target));
}

// Uniform time grid with per-sample source values.
struct Waveform {
  std::vector<double> t;
  std::vector<Vec> samples;

  Waveform(std::vector<double> t, std::vector<Vec> samples)
      : t(std::move(t)), samples(std::move(samples)) {
    if (this->t.empty() || this->t.size() != this->samples.size())
      throw invalid_input_error("Waveform: needs one sample per grid point");
    for (std::size_t k = 1; k < this->t.size(); ++k)
      if (!(this->t[k] > this->t[k - 1]))
        throw invalid_input_error("Waveform: grid must be strictly increasing");
  }

  static std::vector<double> uniform_grid(double t_end, std::size_t n) {
    if (n < 1 || !(t_end > 0.0))
      throw invalid_input_error("Waveform: needs n >= 1 and t_end > 0");
    std::vector<double> t(n);
    for (std::size_t k = 0; k < n; ++k)
      t[k] = n == 1 ? 0.0 : t_end * double(k) / double(n - 1);
    return t;
  }
};

// Scalar input a*sin(2*pi*f*t), for the amplifier's v_in.
inline Waveform sinusoid_waveform(double amplitude, double freq, double t_end,
                                  std::size_t n) {
  auto grid = Waveform::uniform_grid(t_end, n);
  std::vector<Vec> samples(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k)
    samples[k] = {amplitude * std::sin(2.0 * std::numbers::pi * freq * grid[k])};
  return Waveform(std::move(grid), std::move(samples));
}

// Quadrature current pair a*(sin, cos)(2*pi*f*t), for the inverse problem's
// target current.
inline Waveform quadrature_waveform(double amplitude, double freq, double t_end,
                                    std::size_t n) {
  auto grid = Waveform::uniform_grid(t_end, n);
  std::vector<Vec> samples(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double phase = 2.0 * std::numbers::pi * freq * grid[k];
    samples[k] = {amplitude * std::sin(phase), amplitude * std::cos(phase)};
  }
  return Waveform(std::move(grid), std::move(samples));
}

struct Observables {
  double i_C = 0.0;
  double i_E = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
  std::optional<double> v_tunnel;
};

// Maps solver variables to plotted quantities: i_C = i_1, i_E = i_2, port
// voltages v_1, v_2. When the collector branch is the inverse tunnel
// characteristic, its terminal voltage is recovered from the branch state
// of the resolvent at the fixed point (input recomputed, not re-solved).
inline Observables observables(const InclusionProblem& prob, const Vec& i,
                               const Vec& v, double gamma) {
  if (i.size() != 2 || v.size() != 2)
    throw dimension_error("observables: expects 2-vectors");
  Observables o;
  o.i_C = i[0];
  o.i_E = i[1];
  o.v1 = v[0];
  o.v2 = v[1];
  if (const auto* prod = dynamic_cast<const ProductElement*>(prob.R.get())) {
    if (const auto* tun = dynamic_cast<const TunnelDiodeInverseElement*>(
            prod->parts()[0].get())) {
      const Vec w = sub(sub(i, scaled(gamma, prob.L.apply_transpose(v))),
                        scaled(gamma, prob.s_v));
      o.v_tunnel = tun->branch(gamma, w[0]).x;
    }
  }
  return o;
}

struct SweepRecord {
  double t = 0.0;
  Vec i;
  Vec v;
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::MaxIter;
  Observables obs;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  bool has_tunnel = false;
};

// Quasi-static primal-dual sweep: one independent static solve per time
// sample; warm starting seeds each sample with the previous final iterate,
// cold starting with zeros. Per-sample failures land in the record status
// and the sweep continues.
inline SweepResult sweep(
    const std::function<InclusionProblem(double, const Vec&)>& family,
    const Waveform& wave, const CPAConfig& cfg, bool warm_start) {
  SweepResult out;
  out.records.reserve(wave.t.size());
  Vec i_prev, v_prev;
  for (std::size_t k = 0; k < wave.t.size(); ++k) {
    const InclusionProblem prob = family(wave.t[k], wave.samples[k]);
    Vec i0 = (warm_start && !i_prev.empty()) ? i_prev
                                             : Vec(prob.R->dim(), 0.0);
    Vec v0 = (warm_start && !v_prev.empty()) ? v_prev
                                             : Vec(prob.G->dim(), 0.0);
    const auto rt = prob.rtilde();
    const auto gt = prob.gtilde();
    SolverTrace tr = cpa_solve(*rt, *gt, prob.L, i0, v0, cfg);
    SweepRecord rec;
    rec.t = wave.t[k];
    rec.i = tr.i;
    rec.v = tr.v;
    rec.iterations = tr.iterations;
    rec.status = tr.status;
    rec.obs = observables(prob, tr.i, tr.v, cfg.gamma);
    if (rec.obs.v_tunnel) out.has_tunnel = true;
    i_prev = std::move(tr.i);
    v_prev = std::move(tr.v);
    out.records.push_back(std::move(rec));
  }
  return out;
}

// Quasi-static proximal-point sweep over a family of shifted elements
// (the inverse problem): the iterate is the port-voltage vector, and the
// per-sample target current doubles as the recorded branch currents.
inline SweepResult sweep(
    const std::function<std::shared_ptr<const Element>(double, const Vec&)>&
        family,
    const Waveform& wave, const PPAConfig& cfg, bool warm_start) {
  SweepResult out;
  out.records.reserve(wave.t.size());
  Vec x_prev;
  for (std::size_t k = 0; k < wave.t.size(); ++k) {
    const auto op = family(wave.t[k], wave.samples[k]);
    Vec x0 = (warm_start && !x_prev.empty()) ? x_prev : Vec(op->dim(), 0.0);
    SolverTrace tr = ppa_solve(*op, x0, cfg);
    SweepRecord rec;
    rec.t = wave.t[k];
    rec.i = wave.samples[k];
    rec.v = tr.x;
    rec.iterations = tr.iterations;
    rec.status = tr.status;
    rec.obs.i_C = wave.samples[k].size() > 0 ? wave.samples[k][0] : 0.0;
    rec.obs.i_E = wave.samples[k].size() > 1 ? wave.samples[k][1] : 0.0;
    rec.obs.v1 = tr.x.size() > 0 ? tr.x[0] : 0.0;
    rec.obs.v2 = tr.x.size() > 1 ? tr.x[1] : 0.0;
    x_prev = std::move(tr.x);
    out.records.push_back(std::move(rec));
  }
  return out;
}

// Pearson correlation, used by the inverting-amplifier sanity check.
inline double correlation(const std::vector<double>& a,
                          const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw invalid_input_error("correlation: needs two equal series");
  const double n = double(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    ma += a[k];
    mb += b[k];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sab += (a[k] - ma) * (b[k] - mb);
    saa += (a[k] - ma) * (a[k] - ma);
    sbb += (b[k] - mb) * (b[k] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace srgc
