#pragma once

// Scalar maximization: coarse scan plus golden-section refinement.

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sievekernel {

struct MaxResult {
  double arg;
  double value;
};

// Scans 10^4 equispaced points of [a,b] (endpoints included), then refines
// the best bracket by golden section down to width tol.  The returned value
// is inflated by (1 + 1e-9) so that it stays an upper bound for the true
// maximum of a nonnegative function under float rounding.
template <class F>
MaxResult golden_max(F&& f, double a, double b, double tol = 1e-10) {
  if (!(a < b)) throw std::invalid_argument("golden_max: require a < b");
  constexpr int kScan = 10000;
  double best_x = a;
  double best_v = f(a);
  for (int i = 1; i <= kScan; ++i) {
    const double x = a + (b - a) * i / kScan;
    const double v = f(x);
    if (v > best_v) {
      best_v = v;
      best_x = x;
    }
  }
  double lo = std::max(a, best_x - (b - a) / kScan);
  double hi = std::min(b, best_x + (b - a) / kScan);
  constexpr double phi = 0.61803398874989484820458683436563812;
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double v1 = f(x1);
  double v2 = f(x2);
  while (hi - lo > tol) {
    if (v1 < v2) {
      lo = x1;
      x1 = x2;
      v1 = v2;
      x2 = lo + phi * (hi - lo);
      v2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      v2 = v1;
      x1 = hi - phi * (hi - lo);
      v1 = f(x1);
    }
  }
  double xm = 0.5 * (lo + hi);
  double vm = f(xm);
  if (v1 > vm) { vm = v1; xm = x1; }
  if (v2 > vm) { vm = v2; xm = x2; }
  if (best_v > vm) { vm = best_v; xm = best_x; }
  return {xm, vm * (1.0 + 1e-9)};
}

}  // namespace sievekernel
