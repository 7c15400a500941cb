#pragma once

// The tau recursion
//   tau_1 = 3
//   tau_n = tau_{n-1} (gamma + (4e/3 + gamma) eps)
//           + (8e/3) c_{n-1}^{n-2} + 2 c_n^{n-1},        c_1 = 1,
// with gamma fixed at 0.9214, each step inflated by (1 + 1e-9) so the stored
// values remain upper bounds; geometric-tail summation of
//   F_1 = sum over odd n of tau_n,   f_1 = sum over even n of tau_n,
// and the Jurkat-Richert correction constants eps * F_1 * e^2 h(s).

#include <cmath>
#include <stdexcept>
#include <vector>

#include "analytic.hpp"
#include "majorant.hpp"
#include "rational.hpp"

namespace sievekernel {

struct divergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct tail_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kGammaTau = 0.9214;

// Published Lemma-5 integer bounds at eps = 1/200 and the published
// convergence threshold; computed bounds land below the integers (155.7 and
// 157.4 at eps = 1/200), so the published constants stay valid upper bounds.
inline constexpr int kPublishedF1Bound = 164;
inline constexpr int kPublishedSmallF1Bound = 162;
inline constexpr int kPublishedThresholdQ = 63;

inline double ratio_limit(double eps) {
  return kGammaTau + (4.0 * kE / 3.0 + kGammaTau) * eps;
}

struct TauSequence {
  Rational eps;
  double gamma_used = kGammaTau;
  double ratio_limit = 0.0;
  std::vector<double> values;  // 1-indexed, values[0] unused

  int size() const { return static_cast<int>(values.size()) - 1; }
  double at(int n) const {
    if (n < 1 || n > size())
      throw std::invalid_argument("TauSequence::at: n out of range");
    return values[n];
  }
};

inline TauSequence tau_sequence(const Rational& eps, const CnTable& cn, int N) {
  const double e = eps.value();
  if (!(e > 0.0)) throw std::invalid_argument("tau_sequence: require eps > 0");
  if (N < 1 || N > cn.n_max)
    throw std::invalid_argument("tau_sequence: N out of the c_n table range");
  TauSequence seq;
  seq.eps = eps;
  seq.ratio_limit = ratio_limit(e);
  if (seq.ratio_limit >= 1.0)
    throw divergence_error("tau_sequence: gamma + (4e/3 + gamma) eps >= 1");
  seq.values.assign(N + 1, 0.0);
  seq.values[1] = 3.0;
  const double rho = seq.ratio_limit;
  for (int n = 2; n <= N; ++n) {
    const double c_prev = (n - 1 == 1) ? 1.0 : cn.at(n - 1);
    const double t = rho * seq.values[n - 1] +
                     (8.0 * kE / 3.0) * std::pow(c_prev, n - 2) +
                     2.0 * std::pow(cn.at(n), n - 1);
    seq.values[n] = t * (1.0 + 1e-9);
  }
  return seq;
}

struct SieveBounds {
  double F1 = 0.0;  // odd-index sum bound
  double f1 = 0.0;  // even-index sum bound
  int k1 = 0;
  int k2 = 0;
  double tail_ratio_odd = 0.0;
  double tail_ratio_even = 0.0;
};

// F_1 <= sum_{odd n <= k1} tau_n + tau_{k1+1} r/(1 - r^2), r = tau_{k1+2}/
// tau_{k1+1}, and the even analogue; valid because the ratio sequence is
// nonincreasing past the cutoffs, which is validated here.
inline SieveBounds f1_F1_bounds(const TauSequence& tau, int k1, int k2) {
  const int N = tau.size();
  if (k1 % 2 != 1) throw std::invalid_argument("f1_F1_bounds: k1 must be odd");
  if (k2 % 2 != 0) throw std::invalid_argument("f1_F1_bounds: k2 must be even");
  if (k1 + 2 > N || k2 + 2 > N)
    throw std::invalid_argument("f1_F1_bounds: cutoff beyond the sequence");
  const int lo = std::min(k1, k2);
  for (int n = lo + 1; n + 1 <= N; ++n) {
    const double r_prev = tau.at(n) / tau.at(n - 1);
    const double r_next = tau.at(n + 1) / tau.at(n);
    if (r_next > r_prev * (1.0 + 1e-12))
      throw tail_error("f1_F1_bounds: tau ratios not nonincreasing past cutoff");
  }
  SieveBounds out;
  out.k1 = k1;
  out.k2 = k2;
  out.tail_ratio_odd = tau.at(k1 + 2) / tau.at(k1 + 1);
  out.tail_ratio_even = tau.at(k2 + 2) / tau.at(k2 + 1);
  if (out.tail_ratio_odd >= 1.0 || out.tail_ratio_even >= 1.0)
    throw tail_error("f1_F1_bounds: tail ratio >= 1");
  double F1 = 0.0;
  for (int n = 1; n <= k1; n += 2) F1 += tau.at(n);
  F1 += tau.at(k1 + 1) * out.tail_ratio_odd /
        (1.0 - out.tail_ratio_odd * out.tail_ratio_odd);
  double f1 = 0.0;
  for (int n = 2; n <= k2; n += 2) f1 += tau.at(n);
  f1 += tau.at(k2 + 1) * out.tail_ratio_even /
        (1.0 - out.tail_ratio_even * out.tail_ratio_even);
  out.F1 = F1;
  out.f1 = f1;
  return out;
}

// Largest valid cutoffs for a sequence of length N (tail ratios checked by
// f1_F1_bounds itself).
inline std::pair<int, int> auto_cutoffs(int N) {
  int k2 = N - 2;
  if (k2 % 2 != 0) --k2;
  int k1 = k2 - 1;
  if (k1 < 1 || k2 < 2)
    throw std::invalid_argument("auto_cutoffs: sequence too short");
  return {k1, k2};
}

enum class Parity { upper, lower };

// eps * F_1 * e^2 h(s) (upper) or eps * f_1 * e^2 h(s) (lower).
inline double jr_correction(const Rational& eps, double s, Parity parity,
                            const SieveBounds& bounds) {
  if (!(s >= 1.0)) throw std::domain_error("jr_correction: require s >= 1");
  const double bound = (parity == Parity::upper) ? bounds.F1 : bounds.f1;
  return eps.value() * bound * kE2 * eval_h(s);
}

// The published correction constants: sup_s e^2 h(s) = 1 (attained on
// [1,2]), so with the Lemma-5 integers the sup is the exact rational
// 164 eps (upper) / 162 eps (lower), e.g. 0.82 and 0.81 at eps = 1/200.
inline Rational jr_published_constant(Parity parity, const Rational& eps) {
  const int bound =
      (parity == Parity::upper) ? kPublishedF1Bound : kPublishedSmallF1Bound;
  return eps * bound;
}

struct EpsScanRow {
  Rational eps;
  bool converged = false;
  double F1 = 0.0;
  double f1 = 0.0;
};

// One row per eps; divergent rows are flagged, never dropped.
inline std::vector<EpsScanRow> eps_scan(const std::vector<Rational>& eps_list,
                                        const CnTable& cn) {
  std::vector<EpsScanRow> rows;
  rows.reserve(eps_list.size());
  for (const Rational& eps : eps_list) {
    EpsScanRow row;
    row.eps = eps;
    if (ratio_limit(eps.value()) >= 1.0) {
      rows.push_back(row);
      continue;
    }
    const TauSequence tau = tau_sequence(eps, cn, cn.n_max);
    const auto [k1, k2] = auto_cutoffs(tau.size());
    const SieveBounds b = f1_F1_bounds(tau, k1, k2);
    row.converged = true;
    row.F1 = b.F1;
    row.f1 = b.f1;
    rows.push_back(row);
  }
  return rows;
}

// The published operating threshold 1/63 (verified convergent).  The strict
// threshold under the ratio-limit formula above is smaller; both are exposed
// and the CLI reports the two side by side.
inline Rational convergence_threshold() {
  Rational t{1, kPublishedThresholdQ};
  if (ratio_limit(t.value()) >= 1.0)
    throw std::logic_error("convergence_threshold: published threshold diverges");
  return t;
}

// Smallest integer q with gamma + (4e/3 + gamma)/q < 1.
inline long long strict_convergence_threshold_q() {
  for (long long q = 2; q <= 100000; ++q)
    if (ratio_limit(1.0 / q) < 1.0) return q;
  throw std::logic_error("strict_convergence_threshold_q: no threshold found");
}

}  // namespace sievekernel
