#pragma once

// Run configuration: a strict line-based `key = value` format under
// `[section]` headers, with `#` comments. Unknown sections or keys are
// errors; missing keys keep their defaults.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "srgc/errors.hpp"

namespace srgc {

struct RunConfig {
  // [circuit]
  double v_plus = 5.0;
  double v_in_amplitude = 1.0;
  double v_in_frequency_hz = 1.0;
  double t_end = 2.0;
  std::size_t n_samples = 500;
  // [transistor]
  double alpha_r = 110.0 / 111.0;
  double alpha_f = 10.0 / 11.0;
  double leakage_r = 100.0;
  // [tunnel]
  double r1 = 100.0;
  double r2 = 900.0;
  double vbar = 5.0;
  // [resistors]
  double r_e = 30.0;
  double r_c = 150.0;
  bool tunnel_inverse = false;
  // [solver]
  std::string method = "cpa";
  double gamma = 0.001;
  double tau = 700.0;
  double lambda = 1.0;
  double eps = 1e-8;
  std::size_t max_iter = 100000;
  bool warm_start = false;

  bool operator==(const RunConfig&) const = default;
};

namespace detail {

inline std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline double parse_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double x = std::strtod(value.c_str(), &end);
  if (end != value.c_str() + value.size() || value.empty())
    throw config_error("config: key '" + key + "' has non-numeric value '" +
                       value + "'");
  if (!std::isfinite(x))
    throw config_error("config: key '" + key + "' must be finite");
  return x;
}

inline std::size_t parse_count(const std::string& key,
                               const std::string& value) {
  for (char c : value)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw config_error("config: key '" + key +
                         "' must be a nonnegative integer, got '" + value + "'");
  if (value.empty())
    throw config_error("config: key '" + key + "' is empty");
  return static_cast<std::size_t>(std::strtoull(value.c_str(), nullptr, 10));
}

inline bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw config_error("config: key '" + key + "' must be true or false, got '" +
                     value + "'");
}

inline std::string format_value(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

// Parses the configuration text; throws config_error with the offending
// line number on any syntax problem or unknown name.
inline RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string line, section;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::strip(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw config_error("config line " + std::to_string(lineno) +
                           ": unterminated section header");
      section = line.substr(1, line.size() - 2);
      if (section != "circuit" && section != "transistor" &&
          section != "tunnel" && section != "resistors" && section != "solver")
        throw config_error("config line " + std::to_string(lineno) +
                           ": unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error("config line " + std::to_string(lineno) +
                         ": expected key = value");
    const std::string key = detail::strip(line.substr(0, eq));
    const std::string value = detail::strip(line.substr(eq + 1));
    const std::string qual = section + "." + key;

    if (qual == "circuit.v_plus")
      cfg.v_plus = detail::parse_double(qual, value);
    else if (qual == "circuit.v_in_amplitude")
      cfg.v_in_amplitude = detail::parse_double(qual, value);
    else if (qual == "circuit.v_in_frequency_hz")
      cfg.v_in_frequency_hz = detail::parse_double(qual, value);
    else if (qual == "circuit.t_end")
      cfg.t_end = detail::parse_double(qual, value);
    else if (qual == "circuit.n_samples")
      cfg.n_samples = detail::parse_count(qual, value);
    else if (qual == "transistor.alpha_r")
      cfg.alpha_r = detail::parse_double(qual, value);
    else if (qual == "transistor.alpha_f")
      cfg.alpha_f = detail::parse_double(qual, value);
    else if (qual == "transistor.leakage_r")
      cfg.leakage_r = detail::parse_double(qual, value);
    else if (qual == "tunnel.r1")
      cfg.r1 = detail::parse_double(qual, value);
    else if (qual == "tunnel.r2")
      cfg.r2 = detail::parse_double(qual, value);
    else if (qual == "tunnel.vbar")
      cfg.vbar = detail::parse_double(qual, value);
    else if (qual == "resistors.r_e")
      cfg.r_e = detail::parse_double(qual, value);
    else if (qual == "resistors.r_c")
      cfg.r_c = detail::parse_double(qual, value);
    else if (qual == "resistors.tunnel_inverse")
      cfg.tunnel_inverse = detail::parse_bool(qual, value);
    else if (qual == "solver.method") {
      if (value != "ppa" && value != "cpa")
        throw config_error("config line " + std::to_string(lineno) +
                           ": method must be ppa or cpa");
      cfg.method = value;
    } else if (qual == "solver.gamma")
      cfg.gamma = detail::parse_double(qual, value);
    else if (qual == "solver.tau")
      cfg.tau = detail::parse_double(qual, value);
    else if (qual == "solver.lambda")
      cfg.lambda = detail::parse_double(qual, value);
    else if (qual == "solver.eps")
      cfg.eps = detail::parse_double(qual, value);
    else if (qual == "solver.max_iter")
      cfg.max_iter = detail::parse_count(qual, value);
    else if (qual == "solver.warm_start")
      cfg.warm_start = detail::parse_bool(qual, value);
    else
      throw config_error("config line " + std::to_string(lineno) +
                         ": unknown key '" + key + "' in section [" + section +
                         "]");
  }
  return cfg;
}

inline RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("config: cannot open '" + path + "'");
  return parse_config(in);
}

// Writes every key, so the emitted text re-parses to an identical RunConfig.
inline std::string emit_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "# srgc run configuration\n";
  out << "[circuit]\n";
  out << "v_plus = " << detail::format_value(cfg.v_plus) << "\n";
  out << "v_in_amplitude = " << detail::format_value(cfg.v_in_amplitude) << "\n";
  out << "v_in_frequency_hz = " << detail::format_value(cfg.v_in_frequency_hz)
      << "\n";
  out << "t_end = " << detail::format_value(cfg.t_end) << "\n";
  out << "n_samples = " << cfg.n_samples << "\n";
  out << "\n[transistor]\n";
  out << "alpha_r = " << detail::format_value(cfg.alpha_r) << "\n";
  out << "alpha_f = " << detail::format_value(cfg.alpha_f) << "\n";
  out << "leakage_r = " << detail::format_value(cfg.leakage_r) << "\n";
  out << "\n[tunnel]\n";
  out << "r1 = " << detail::format_value(cfg.r1) << "\n";
  out << "r2 = " << detail::format_value(cfg.r2) << "\n";
  out << "vbar = " << detail::format_value(cfg.vbar) << "\n";
  out << "\n[resistors]\n";
  out << "r_e = " << detail::format_value(cfg.r_e) << "\n";
  out << "r_c = " << detail::format_value(cfg.r_c) << "\n";
  out << "tunnel_inverse = " << (cfg.tunnel_inverse ? "true" : "false") << "\n";
  out << "\n[solver]\n";
  out << "method = " << cfg.method << "\n";
  out << "gamma = " << detail::format_value(cfg.gamma) << "\n";
  out << "tau = " << detail::format_value(cfg.tau) << "\n";
  out << "lambda = " << detail::format_value(cfg.lambda) << "\n";
  out << "eps = " << detail::format_value(cfg.eps) << "\n";
  out << "max_iter = " << cfg.max_iter << "\n";
  out << "warm_start = " << (cfg.warm_start ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace srgc
