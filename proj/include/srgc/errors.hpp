#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace srgc {

// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite or otherwise malformed numeric input.
class invalid_input_error : public error {
 public:
  using error::error;
};

// Vector or matrix dimensions do not match.
class dimension_error : public error {
 public:
  using error::error;
};

// A documented precondition does not hold; the message names the
// failing inequality.
class precondition_error : public error {
 public:
  using error::error;
};

// A region transform whose image leaves the representable vocabulary.
class unsupported_transform_error : public error {
 public:
  using error::error;
};

// A stepsize-window construction with no feasible window.
class infeasible_window_error : public error {
 public:
  using error::error;
};

// A resolvent could not produce a feasible solution; carries the
// offending input and stepsize for diagnostics.
class resolvent_error : public error {
 public:
  resolvent_error(const std::string& what, std::vector<double> w, double gamma)
      : error(what), w(std::move(w)), gamma(gamma) {}
  std::vector<double> w;
  double gamma;
};

// Config file syntax or validation problems (CLI exit code 2).
class config_error : public error {
 public:
  using error::error;
};

// File read/write problems (CLI exit code 3).
class io_error : public error {
 public:
  using error::error;
};

}  // namespace srgc
