#pragma once

// Certified grid upper bounds U[j] >= s_j f_n(s_j) by backward upper Riemann
// sums, and extraction of the constants c_n with
//   f_n(s) <= 2 e^2 (c_n)^{n-1} h(s).
//
// f_{n-1} is nonincreasing, so a left-endpoint rectangle dominates each cell
// integral of s f_n(s) = int_s^inf f_{n-1}(t-1) dt; every stored value is
// additionally inflated by one (1 + 1e-9) factor per recurrence step, which
// absorbs float rounding and keeps the upper-bound contract.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "analytic.hpp"
#include "golden.hpp"

namespace sievekernel {

inline constexpr double kDefaultInflation = 1.0 + 1e-9;

struct GridMajorant {
  int n = 0;
  int m = 0;
  double start = 0.0;      // 3 for odd n, 2 for even n
  double inflation = kDefaultInflation;
  std::vector<double> values;  // values[j] >= s_j f_n(s_j), s_j = start + 2j/m

  double step() const { return 2.0 / m; }
  int top() const { return static_cast<int>(values.size()) - 1; }
  double grid_s(int j) const { return start + 2.0 * j / m; }
};

// Backward recurrence of one level.  For n = 3 pass pred = nullptr (the f_2
// closed form seeds the chain); otherwise pred must be the level n-1 grid.
//
// odd n, s_j = 3 + 2j/m:
//   U[j] = (g(s_j - 1) * 2/m + U[j+1]) * inflation,
//   g = f_2 closed form (n = 3) or pred.U[j]/(2 + 2j/m) (the grids align).
// even n, t_k = 2 + 2k/m:
//   k >= m: U[k] = (pred.U[k-m]/(3 + 2(k-m)/m) * 2/m + U[k+1]) * inflation
//   k <  m: U[k] = (pred.U[0] * (ln 3 - ln(t_k - 1)) + U[m]) * inflation
// the k < m branch being s f_n(s) = 3 f_{n-1}(3) ln(3/(s-1)) + 4 f_n(4).
inline GridMajorant build_majorant(int n, const GridMajorant* pred, int m,
                                   double inflation = kDefaultInflation) {
  if (n < 3) throw std::invalid_argument("build_majorant: require n >= 3");
  if (m < 100 || m % 2 != 0)
    throw std::invalid_argument("build_majorant: require even m >= 100");
  const bool odd = (n % 2 == 1);
  if (n == 3) {
    if (pred) throw std::invalid_argument("build_majorant: n = 3 takes no predecessor");
  } else {
    if (!pred || pred->n != n - 1 || pred->m != m)
      throw std::invalid_argument("build_majorant: predecessor level/density mismatch");
    const double want = odd ? 2.0 : 3.0;
    if (pred->start != want)
      throw std::invalid_argument("build_majorant: predecessor grid parity mismatch");
  }
  GridMajorant out;
  out.n = n;
  out.m = m;
  out.start = odd ? 3.0 : 2.0;
  out.inflation = inflation;
  const double delta = 2.0 / m;
  if (odd) {
    const int J = (n - 1) * m / 2;
    out.values.assign(J + 1, 0.0);
    for (int j = J - 1; j >= 0; --j) {
      const double x = 2.0 + 2.0 * j / m;  // s_j - 1
      const double g = (n == 3) ? eval_f2(x) : pred->values[j] / x;
      out.values[j] = (g * delta + out.values[j + 1]) * inflation;
    }
  } else {
    const int J = n * m / 2;
    out.values.assign(J + 1, 0.0);
    for (int k = J - 1; k >= m; --k) {
      const double x = 3.0 + 2.0 * (k - m) / m;
      out.values[k] =
          (pred->values[k - m] / x * delta + out.values[k + 1]) * inflation;
    }
    const double log3 = std::log(3.0);
    for (int k = m - 1; k >= 0; --k) {
      const double t = 2.0 + 2.0 * k / m;
      out.values[k] =
          (pred->values[0] * (log3 - std::log(t - 1.0)) + out.values[m]) *
          inflation;
    }
  }
  return out;
}

// c_n for odd n: B^{1/(n-1)} with
//   B = max( U[0]/2,  max_j U[j]/(6 e^2 s_j) * s_{j+1} e^{s_{j+1}} ).
// The first term covers 1 <= s <= 3 where s f_n = 3 f_n(3) <= U[0] and
// s h(s) is smallest at s = 1; the grid term covers each cell [s_j, s_{j+1}]
// with f_n at the left endpoint over h at the right one.
inline double c_bound_odd(const GridMajorant& maj) {
  if (maj.n % 2 == 0 || maj.start != 3.0)
    throw std::invalid_argument("c_bound_odd: parity mismatch");
  double B = maj.values[0] / 2.0;
  const int J = maj.top();
  for (int j = 0; j < J; ++j) {
    const double sj = 3.0 + 2.0 * j / maj.m;
    const double sj1 = 3.0 + 2.0 * (j + 1) / maj.m;
    B = std::max(B, maj.values[j] / (6.0 * kE2 * sj) * sj1 * std::exp(sj1));
  }
  return std::pow(B, 1.0 / (maj.n - 1));
}

// c_n for even n: the grid term runs over t_k >= 4; on [2,4] the continuous
// bound from the log form is maximized per h-branch, exponent 1/(n-1)
// throughout.
inline double c_bound_even(const GridMajorant& maj, const GridMajorant& pred) {
  if (maj.n % 2 == 1 || maj.start != 2.0)
    throw std::invalid_argument("c_bound_even: parity mismatch");
  if (pred.n != maj.n - 1 || pred.start != 3.0 || pred.m != maj.m)
    throw std::invalid_argument("c_bound_even: predecessor mismatch");
  const int m = maj.m;
  const int J = maj.top();
  double B = 0.0;
  for (int k = m; k < J; ++k) {
    const double tk = 2.0 + 2.0 * k / m;
    const double tk1 = 2.0 + 2.0 * (k + 1) / m;
    B = std::max(B, maj.values[k] / (6.0 * kE2 * tk) * tk1 * std::exp(tk1));
  }
  const double u0 = pred.values[0];
  const double um = maj.values[m];
  const auto head = [&](double s) { return u0 * std::log(3.0 / (s - 1.0)) + um; };
  B = std::max(B, golden_max([&](double s) {
                   return head(s) * std::exp(s) / (2.0 * kE2 * s);
                 }, 2.0, 3.0).value);
  B = std::max(B, golden_max([&](double s) {
                   return head(s) * std::exp(s) / (6.0 * kE2);
                 }, 3.0, 4.0).value);
  return std::pow(B, 1.0 / (maj.n - 1));
}

// c_2 = sup_{[2,4]} f_2(s) / (2 e^2 h(s)), from the closed form (exponent
// 1/(n-1) = 1).
inline double c2_bound() {
  const double b1 = golden_max([](double s) {
    return eval_f2(s) * std::exp(s) / (2.0 * kE2);
  }, 2.0, 3.0).value;
  const double b2 = golden_max([](double s) {
    return eval_f2(s) * s * std::exp(s) / (6.0 * kE2);
  }, 3.0, 4.0).value;
  return std::max(b1, b2);
}

struct CnTable {
  int n_max = 0;
  int m = 0;
  double inflation = kDefaultInflation;
  std::vector<double> entries;  // entries[n] valid for 2 <= n <= n_max

  double at(int n) const {
    if (n < 2 || n > n_max)
      throw std::invalid_argument("CnTable::at: n out of range");
    return entries[n];
  }
};

// Published-table comparison: round up to 2 decimals, with a 1e-10 guard so
// float noise a hair above a boundary does not bump the reported bound.
inline double round_up_2dp(double x) {
  return std::ceil((x - 1e-10) * 100.0) / 100.0;
}

// Chains majorants over n = 3..n_max keeping two levels live.
inline CnTable build_cn_table(int n_max, int m,
                              double inflation = kDefaultInflation) {
  if (n_max < 2) throw std::invalid_argument("build_cn_table: require n_max >= 2");
  CnTable table;
  table.n_max = n_max;
  table.m = m;
  table.inflation = inflation;
  table.entries.assign(n_max + 1, 0.0);
  table.entries[2] = c2_bound();
  GridMajorant prev;
  for (int n = 3; n <= n_max; ++n) {
    GridMajorant cur = build_majorant(n, n == 3 ? nullptr : &prev, m, inflation);
    table.entries[n] =
        (n % 2 == 1) ? c_bound_odd(cur) : c_bound_even(cur, prev);
    prev = std::move(cur);
  }
  return table;
}

}  // namespace sievekernel
