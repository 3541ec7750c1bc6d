#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace hadamard {

inline double sq(double v) { return v * v; }

// arccos with the argument clamped to [-1, 1]; floating-point triangle
// closure can overshoot the valid range by a few ulps.
inline double safe_acos(double v) { return std::acos(std::clamp(v, -1.0, 1.0)); }

// arcosh(1 + t) for t >= 0, accurate near t = 0.
inline double acosh1p(double t) {
  if (t < 0.0) t = 0.0;
  return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

// Golden-section search for the minimizer of a convex function on [lo, hi].
double golden_section_minimize(const std::function<double(double)>& f, double lo,
                               double hi, double tol, int max_iter = 300);

// Round-trip-exact decimal formatting, used for byte-stable trace files.
std::string format_double(double v);

}  // namespace hadamard
