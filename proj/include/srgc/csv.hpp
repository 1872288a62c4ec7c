#pragma once

// CSV writers. All floating-point values use %.17g so outputs are
// byte-stable and round-trip exactly.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "srgc/circuit.hpp"
#include "srgc/errors.hpp"
#include "srgc/solvers.hpp"
#include "srgc/srg.hpp"

namespace srgc {

inline std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Point cloud: header re,im; one row per finite point; the infinity flag
// goes in a trailing summary line.
inline void write_cloud_csv(std::ostream& out,
                            const std::vector<SRGPoint>& cloud) {
  out << "re,im\n";
  bool has_infinity = false;
  for (const auto& p : cloud) {
    if (p.at_infinity) {
      has_infinity = true;
      continue;
    }
    out << csv_number(p.re) << "," << csv_number(p.im) << "\n";
  }
  out << "# includes_infinity=" << (has_infinity ? "true" : "false") << "\n";
}

// Iteration trace: one row per completed iteration with its relative step;
// when the trace carries recorded iterates, their components follow as
// columns x0, x1, ...
inline void write_trace_csv(std::ostream& out, const SolverTrace& trace) {
  const bool dump =
      !trace.iterates.empty() && trace.iterates.size() > trace.rel_steps.size();
  out << "k,rel_step";
  if (dump)
    for (std::size_t j = 0; j < trace.iterates.front().size(); ++j)
      out << ",x" << j;
  out << "\n";
  for (std::size_t k = 0; k < trace.rel_steps.size(); ++k) {
    out << (k + 1) << "," << csv_number(trace.rel_steps[k]);
    if (dump)
      for (double xj : trace.iterates[k + 1]) out << "," << csv_number(xj);
    out << "\n";
  }
}

inline void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "t,i_C,i_E,v1,v2";
  if (sweep.has_tunnel) out << ",v_tunnel";
  out << ",iters,status\n";
  for (const auto& rec : sweep.records) {
    out << csv_number(rec.t) << "," << csv_number(rec.obs.i_C) << ","
        << csv_number(rec.obs.i_E) << "," << csv_number(rec.obs.v1) << ","
        << csv_number(rec.obs.v2);
    if (sweep.has_tunnel)
      out << "," << csv_number(rec.obs.v_tunnel.value_or(0.0));
    out << "," << rec.iterations << "," << status_name(rec.status) << "\n";
  }
}

// Opens path for writing, throwing io_error on failure.
inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace srgc
