#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "srgc/errors.hpp"

namespace srgc {

using Vec = std::vector<double>;

inline bool all_finite(const Vec& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

inline void require_same_dim(const Vec& a, const Vec& b, const char* what) {
  if (a.size() != b.size()) throw dimension_error(what);
}

inline double dot(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Euclidean norm. The one-element fast path returns |x| exactly so that
// scalar SRG points come out as exact difference quotients.
inline double norm(const Vec& a) {
  if (a.size() == 1) return std::abs(a[0]);
  return std::sqrt(dot(a, a));
}

inline Vec sub(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "sub: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec add(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "add: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec scaled(double c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

// Small dense row-major matrix; all the circuits here need is I_2, but the
// inclusion problem type keeps the coupling map general.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;  // row-major, rows*cols entries

  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows(rows), cols(cols), a(rows * cols, 0.0) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }

  Vec apply(const Vec& x) const {
    if (x.size() != cols) throw dimension_error("Mat::apply: dimension mismatch");
    Vec y(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  Vec apply_transpose(const Vec& y) const {
    if (y.size() != rows)
      throw dimension_error("Mat::apply_transpose: dimension mismatch");
    Vec x(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) x[j] += (*this)(i, j) * y[i];
    return x;
  }

  bool finite() const {
    for (double v : a)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

}  // namespace srgc
