#pragma once

// Closed forms for the comparison majorant h(s), its shifted tail integral
// H(s) = int_s^inf h(t-1) dt, the exponential integral E1 backing H on s >= 4,
// the first two sieve iterates f_1, f_2, and the constants alpha, gamma.

#include <cmath>
#include <stdexcept>

namespace sievekernel {

inline constexpr double kE = 2.71828182845904523536028747135266250;
inline constexpr double kE2 = 7.38905609893065022723042746057500781;

// gamma as fixed in the tau recursion and asserted as a ceiling for the
// computed e^2*H(3); the computed value is 0.921366...
inline constexpr double kGammaCeiling = 0.9214;

// h(s) = e^{-2}          1 <= s <= 2
//        e^{-s}          2 <= s <= 3
//        3 s^{-1} e^{-s}      s >= 3
inline double eval_h(double s) {
  if (!(s >= 1.0)) throw std::domain_error("eval_h: require s >= 1");
  if (s <= 2.0) return std::exp(-2.0);
  if (s <= 3.0) return std::exp(-s);
  return 3.0 * std::exp(-s) / s;
}

// E1(x) = int_x^inf e^{-u}/u du for x > 0.
//
// Power series below x = 1:
//   E1(x) = -euler - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k * k!)
// and the modified-Lentz continued fraction above:
//   E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...))))
// Both converge to well under 1e-13 relative error on their ranges.
inline double exp_integral_E1(double x) {
  if (!(x > 0.0)) throw std::domain_error("exp_integral_E1: require x > 0");
  if (x < 1.0) {
    constexpr double euler = 0.57721566490153286060651209008240243;
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k <= 48; ++k) {
      term *= x / k;
      const double add = term / k;
      sum += (k & 1) ? add : -add;
      if (add < 1e-18 * (1.0 + std::fabs(sum))) break;
    }
    return -euler - std::log(x) + sum;
  }
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double cf = d;
  for (int i = 1; i <= 300; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double delta = c * d;
    cf *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return cf * std::exp(-x);
}

namespace detail {
inline double H3_value() {
  static const double v =
      std::exp(-2.0) - std::exp(-3.0) + 3.0 * exp_integral_E1(3.0);
  return v;
}
}  // namespace detail

// H pieced from the branches of h(t-1):
//   s >= 4     : 3 E1(s-1)
//   3 <= s <= 4: e^{1-s} - e^{-3} + 3 E1(3)
//   2 <= s <= 3: (3-s) e^{-2} + H(3)
inline double eval_H(double s) {
  if (!(s >= 2.0)) throw std::domain_error("eval_H: require s >= 2");
  if (s >= 4.0) return 3.0 * exp_integral_E1(s - 1.0);
  if (s >= 3.0)
    return std::exp(1.0 - s) - std::exp(-3.0) + 3.0 * exp_integral_E1(3.0);
  return (3.0 - s) * std::exp(-2.0) + detail::H3_value();
}

struct AnalyticConstants {
  double alpha;  // e^2 H(2) / 2
  double gamma;  // e^2 H(3) = 2 alpha - 1
  double H3;
};

inline AnalyticConstants constants() {
  const double H3 = detail::H3_value();
  const double H2 = std::exp(-2.0) + H3;
  AnalyticConstants out{kE2 * H2 / 2.0, kE2 * H3, H3};
  if (out.gamma > kGammaCeiling)
    throw std::logic_error(
        "constants: computed gamma exceeds 0.9214, E1 evaluation is broken");
  return out;
}

// s f_1(s) = 3 - s on [1,3], 0 beyond.
inline double eval_f1(double s) {
  if (!(s >= 1.0)) throw std::domain_error("eval_f1: require s >= 1");
  if (s >= 3.0) return 0.0;
  return (3.0 - s) / s;
}

// s f_2(s) = s - 3 ln(s-1) + 3 ln 3 - 4 on [2,4], 0 beyond.
inline double eval_f2(double s) {
  if (!(s >= 2.0)) throw std::domain_error("eval_f2: require s >= 2");
  if (s >= 4.0) return 0.0;
  return (s - 3.0 * std::log(s - 1.0) + 3.0 * std::log(3.0) - 4.0) / s;
}

}  // namespace sievekernel
