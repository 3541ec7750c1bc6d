#include "hadamard/numeric.hpp"

#include <cstdio>

namespace hadamard {

double golden_section_minimize(const std::function<double(double)>& f, double lo,
                               double hi, double tol, int max_iter) {
  if (hi < lo) std::swap(lo, hi);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  // Endpoints may beat the interior probes when the minimum sits on the rim.
  double best_t = (fc <= fd) ? c : d;
  double best_f = std::min(fc, fd);
  if (f(lo) <= best_f) {
    best_f = f(lo);
    best_t = lo;
  }
  if (f(hi) < best_f) best_t = hi;
  return best_t;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace hadamard
