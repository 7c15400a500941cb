#pragma once

// Piecewise Taylor tables for f_n(s), one truncated series per unit interval
// [k, k+1], recursed interval to interval and level to level.
//
// Writing s = k + 1/2 + z/2 with z in [-1,1], the integral form
//   s f_n(s) = int_s^inf f_{n-1}(t-1) dt
// turns into the polynomial identity
//   (C + z/2) P_new(z) = (k+1) P_prev(1) - (1/2) int_{-1}^{z} P_low(w) dw,
// C = k + 3/2, where P_prev is the level-n table on [k, k+1] and P_low the
// level-(n-1) table on the same interval.  Matching coefficients gives the
// extension recurrence; evaluating at z = -1 forces continuity at s = k+1.

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "analytic.hpp"

namespace sievekernel {

struct TaylorTable {
  int n = 0;
  int k = 0;
  double center = 0.0;  // k + 1/2
  std::vector<double> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  double eval_z(double z) const {
    double acc = 0.0;
    for (int i = order(); i >= 0; --i) acc = acc * z + coeffs[i];
    return acc;
  }
  double eval_s(double s) const { return eval_z(2.0 * (s - center)); }
  double value_left() const { return eval_z(-1.0); }   // f_n(k)
  double value_right() const { return eval_z(1.0); }   // f_n(k+1)

  // int_k^{k+1} f_n = (1/2) int_{-1}^{1} P(z) dz, exact on the stored series
  double integral_full() const {
    double acc = 0.0;
    for (int i = 0; i <= order(); i += 2) acc += coeffs[i] / (i + 1);
    return acc;
  }
  // int_k^{k+1/2} f_n = (1/2) int_{-1}^{0} P(z) dz
  double integral_left_half() const {
    double acc = 0.0;
    for (int i = 0; i <= order(); ++i) {
      const double c = coeffs[i] / (i + 1);
      acc += (i % 2 == 0) ? c : -c;
    }
    return 0.5 * acc;
  }
};

// f_1(s) = 3/s - 1 expanded about k + 1/2:
//   b_0 = 3/c - 1,  b_i = 3 (-1)^i / (c (2c)^i)   (alternating signs)
inline TaylorTable base_f1_table(int k, int order = 30) {
  if (k != 1 && k != 2)
    throw std::domain_error("base_f1_table: require k in {1, 2}");
  TaylorTable t;
  t.n = 1;
  t.k = k;
  t.center = k + 0.5;
  t.coeffs.resize(order + 1);
  t.coeffs[0] = 3.0 / t.center - 1.0;
  double cur = 3.0 / t.center;
  for (int i = 1; i <= order; ++i) {
    cur /= -(2.0 * t.center);
    t.coeffs[i] = cur;
  }
  return t;
}

namespace detail {

// A/s about k + 1/2 (the small-s form of odd levels n >= 3, A = 3 f_n(3))
inline TaylorTable reciprocal_table(int n, int k, double A, int order) {
  TaylorTable t;
  t.n = n;
  t.k = k;
  t.center = k + 0.5;
  t.coeffs.resize(order + 1);
  double cur = A / t.center;
  t.coeffs[0] = cur;
  for (int i = 1; i <= order; ++i) {
    cur /= -(2.0 * t.center);
    t.coeffs[i] = cur;
  }
  return t;
}

// Head table of an even level on [2,3], from
//   s f_n(s) = alpha + beta s + delta ln(s-1),
// n = 2: alpha = 3 ln 3 - 4, beta = 1, delta = -3;
// n >= 4: alpha = C4 + A ln 3, beta = 0, delta = -A with A = 3 f_{n-1}(3)
// and C4 = int_4^inf f_{n-1}(t-1) dt.
inline TaylorTable even_head_table(int n, double alpha, double beta,
                                   double delta, int order) {
  const double c = 2.5;
  // numerator series about c: alpha + beta (c + z/2) + delta ln(c-1 + z/2)
  std::vector<double> num(order + 1, 0.0);
  num[0] = alpha + beta * c + delta * std::log(c - 1.0);
  if (order >= 1) num[1] = beta * 0.5;
  double pw = 1.0;  // (1/(2(c-1)))^i
  for (int i = 1; i <= order; ++i) {
    pw /= 2.0 * (c - 1.0);
    const double term = delta * pw / i;  // ln(1+u) = sum (-1)^{i+1} u^i / i
    num[i] += (i % 2 == 1) ? term : -term;
  }
  // multiply by the 1/s series r_i = (1/c)(-1/(2c))^i
  std::vector<double> rec(order + 1);
  double cur = 1.0 / c;
  rec[0] = cur;
  for (int i = 1; i <= order; ++i) {
    cur /= -(2.0 * c);
    rec[i] = cur;
  }
  TaylorTable t;
  t.n = n;
  t.k = 2;
  t.center = c;
  t.coeffs.assign(order + 1, 0.0);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) t.coeffs[i + j] += num[i] * rec[j];
  return t;
}

}  // namespace detail

// Table for (n, k+1) from prev = (n, k) and lower = (n-1, k):
//   C b_0 = (k+1) P_prev(1) - (1/2) int_{-1}^{0} P_low
//   b_i = -(1/2) (b^low_{i-1}/i + b_{i-1}) / C       for i >= 1
inline TaylorTable extend_interval(const TaylorTable& prev,
                                   const TaylorTable& lower) {
  if (prev.k != lower.k)
    throw std::invalid_argument("extend_interval: interval index mismatch");
  if (prev.order() != lower.order())
    throw std::invalid_argument("extend_interval: order mismatch");
  const int ord = prev.order();
  TaylorTable out;
  out.n = prev.n;
  out.k = prev.k + 1;
  out.center = out.k + 0.5;
  out.coeffs.assign(ord + 1, 0.0);
  const double C = out.center;
  const double kp1 = prev.k + 1.0;
  out.coeffs[0] = (kp1 * prev.value_right() - lower.integral_left_half()) / C;
  for (int i = 1; i <= ord; ++i)
    out.coeffs[i] = -0.5 * (lower.coeffs[i - 1] / i + out.coeffs[i - 1]) / C;
  return out;
}

class TaylorFamily {
 public:
  int n_max() const { return n_max_; }
  int order() const { return order_; }

  bool has_table(int n, int k) const {
    return tables_.count({n, k}) != 0;
  }
  const TaylorTable& table(int n, int k) const {
    auto it = tables_.find({n, k});
    if (it == tables_.end())
      throw std::invalid_argument("TaylorFamily: missing table");
    return it->second;
  }
  // f_n(1) for odd n, f_n(2) for even n
  double anchor(int n) const {
    auto it = anchors_.find(n);
    if (it == anchors_.end())
      throw std::invalid_argument("TaylorFamily: missing anchor");
    return it->second;
  }

  double eval(int n, double s) const {
    if (n < 1 || n > n_max_)
      throw std::invalid_argument("TaylorFamily::eval: level out of range");
    if (!(s >= 1.0))
      throw std::domain_error("TaylorFamily::eval: require s >= 1");
    if (n % 2 == 0 && s < 2.0)
      throw std::domain_error("TaylorFamily::eval: even level needs s >= 2");
    if (s >= n + 2.0) return 0.0;
    int k = static_cast<int>(std::floor(s));
    const int k_min = (n % 2 == 1) ? 1 : 2;
    k = std::max(k_min, std::min(k, n + 1));
    return table(n, k).eval_s(s);
  }

  friend TaylorFamily build_family(int n_max, int order);
  friend double cross_boundary(TaylorFamily& fam, int n);

 private:
  int n_max_ = 0;
  int order_ = 0;
  std::map<std::pair<int, int>, TaylorTable> tables_;
  std::map<int, double> anchors_;

  double level_integral(int n, int k_from) const {
    double acc = 0.0;
    const int k_min = (n % 2 == 1) ? 1 : 2;
    for (int k = std::max(k_min, k_from); k <= n + 1; ++k)
      acc += table(n, k).integral_full();
    return acc;
  }
};

// Anchor of level n+1 from the completed level n, by exact integration of
// the stored series:
//   n even:  f_{n+1}(1) = 3 f_{n+1}(3) = int_2^inf f_n, and the [1,2], [2,3]
//            tables of 3 f_{n+1}(3)/s are installed;
//   n odd :  f_{n+1}(2) = (1/2) int_1^inf f_n.
inline double cross_boundary(TaylorFamily& fam, int n) {
  if (n < 1 || n > fam.n_max_)
    throw std::invalid_argument("cross_boundary: level out of range");
  const int k_min = (n % 2 == 1) ? 1 : 2;
  for (int k = k_min; k <= n + 1; ++k)
    if (!fam.has_table(n, k))
      throw std::invalid_argument("cross_boundary: level incomplete");
  double a;
  if (n % 2 == 0) {
    a = fam.level_integral(n, 2);
    fam.anchors_[n + 1] = a;
    if (n + 1 <= fam.n_max_) {
      fam.tables_[{n + 1, 1}] = detail::reciprocal_table(n + 1, 1, a, fam.order_);
      fam.tables_[{n + 1, 2}] = detail::reciprocal_table(n + 1, 2, a, fam.order_);
    }
  } else {
    a = 0.5 * fam.level_integral(n, 1);
    fam.anchors_[n + 1] = a;
  }
  return a;
}

inline TaylorFamily build_family(int n_max, int order = 30) {
  if (n_max < 1) throw std::invalid_argument("build_family: require n_max >= 1");
  if (order < 4) throw std::invalid_argument("build_family: require order >= 4");
  TaylorFamily fam;
  fam.n_max_ = n_max;
  fam.order_ = order;
  fam.tables_[{1, 1}] = base_f1_table(1, order);
  fam.tables_[{1, 2}] = base_f1_table(2, order);
  fam.anchors_[1] = fam.tables_[{1, 1}].value_left();  // f_1(1) = 2
  for (int n = 2; n <= n_max; ++n) {
    cross_boundary(fam, n - 1);
    if (n % 2 == 0) {
      if (n == 2) {
        fam.tables_[{2, 2}] = detail::even_head_table(
            2, 3.0 * std::log(3.0) - 4.0, 1.0, -3.0, order);
      } else {
        const double A = fam.anchors_.at(n - 1);        // 3 f_{n-1}(3)
        const double C4 = fam.level_integral(n - 1, 3);  // int_3^inf f_{n-1}
        fam.tables_[{n, 2}] = detail::even_head_table(
            n, C4 + A * std::log(3.0), 0.0, -A, order);
      }
    }
    for (int kb = 2; kb <= n; ++kb)
      fam.tables_[{n, kb + 1}] =
          extend_interval(fam.table(n, kb), fam.table(n - 1, kb));
  }
  return fam;
}

// Series evaluation of f_n at s; the covering table is located by floor(s).
inline double eval_fn(const TaylorFamily& fam, int n, double s) {
  return fam.eval(n, s);
}

}  // namespace sievekernel
