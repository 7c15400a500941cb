// Acceptance suite: one pass/fail line per criterion, full desk scale
// (n_max = 450, m = 1000, eps = 1/200, oracle levels up to 6).
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "sievekernel/sievekernel.hpp"

using namespace sievekernel;

namespace {

int g_failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
  std::printf("[%4s] %s  %s\n", id.c_str(), ok ? "PASS" : "FAIL",
              detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// Table 1 band value for 15 <= n <= 450
double table1_band(int n) {
  if (n <= 18) return 0.66;
  if (n <= 20) return 0.67;
  if (n <= 24) return 0.68;
  if (n <= 32) return 0.69;
  if (n <= 46) return 0.70;
  if (n <= 80) return 0.71;
  if (n <= 308) return 0.72;
  return 0.73;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();

  // ---- constants -------------------------------------------------------
  const AnalyticConstants ac = constants();
  report("1", ac.alpha >= 0.96063 && ac.alpha <= 0.96073,
         "alpha = " + fmt(ac.alpha) + " in [0.96063, 0.96073]");
  report("2", ac.gamma >= 0.9213 && ac.gamma <= 0.9214,
         "gamma = " + fmt(ac.gamma) + " in [0.9213, 0.9214]");

  // ---- certified c_n ---------------------------------------------------
  const CnTable cn = build_cn_table(450, 1000);
  {
    const double expected[] = {0.33, 0.39, 0.45, 0.51, 0.54, 0.57, 0.58,
                               0.61, 0.61, 0.63, 0.63, 0.64, 0.65};
    bool ok = true;
    std::string bad;
    for (int n = 2; n <= 14; ++n) {
      if (std::fabs(round_up_2dp(cn.at(n)) - expected[n - 2]) > 1e-9) {
        ok = false;
        bad += " n=" + std::to_string(n) + ":" + fmt(round_up_2dp(cn.at(n)));
      }
    }
    for (int n = 15; n <= 450; ++n) {
      if (std::fabs(round_up_2dp(cn.at(n)) - table1_band(n)) > 0.01 + 1e-9) {
        ok = false;
        bad += " n=" + std::to_string(n);
      }
    }
    report("3", ok,
           ok ? "c_n rounded up matches the published table (2..14 exact, "
                "15..450 within 0.01)"
              : "mismatches:" + bad);
  }
  {
    double worst = 0.0;
    for (int n = 2; n <= 450; ++n) worst = std::max(worst, cn.at(n));
    report("4", worst <= 0.9214,
           "max certified c_n = " + fmt(worst) + " <= 0.9214");
  }

  // ---- tau at eps = 1/200 ---------------------------------------------
  const Rational eps{1, 200};
  const TauSequence tau = tau_sequence(eps, cn, 450);
  {
    bool ok = tau.at(1) == 3.0;
    ok = ok && std::ceil(tau.at(2)) == 11.0;
    for (int n = 4; n <= 6; ++n) ok = ok && tau.at(n) > 13.0 && tau.at(n) <= 14.0;
    for (int n = 55; n <= 96; ++n) ok = ok && tau.at(n) > 0.1 && tau.at(n) <= 1.0;
    for (int n = 429; n <= 450; ++n)
      ok = ok && tau.at(n) > 1e-10 && tau.at(n) <= 1e-9;
    report("5", ok,
           "tau_1 = 3, ceil(tau_2) = " + fmt(std::ceil(tau.at(2))) +
               ", band 14 on 4-6, band 1 on 55-96, band 1e-9 on 429-450");
    // informational: how much of the full published table the displayed
    // recursion reproduces (not part of the criterion)
    const struct { int lo, hi; double v; } bands[] = {
        {1, 1, 3},       {2, 2, 11},     {3, 3, 13},     {4, 6, 14},
        {7, 9, 13},      {10, 11, 12},   {12, 12, 11},   {13, 15, 10},
        {16, 17, 9},     {18, 19, 8},    {20, 22, 7},    {23, 25, 6},
        {26, 29, 5},     {30, 34, 4},    {35, 42, 3},    {43, 54, 2},
        {55, 96, 1},     {97, 137, 0.1}, {138, 179, 1e-2}, {180, 220, 1e-3},
        {221, 262, 1e-4}, {263, 303, 1e-5}, {304, 345, 1e-6},
        {346, 386, 1e-7}, {387, 428, 1e-8}, {429, 450, 1e-9}};
    int hit = 0, total = 0;
    for (const auto& b : bands) {
      ++total;
      bool all = true;
      for (int n = b.lo; n <= b.hi; ++n) {
        const bool in = (b.v >= 1.0) ? (std::ceil(tau.at(n) - 1e-9) == b.v)
                                     : (tau.at(n) > b.v / 10 && tau.at(n) <= b.v);
        all = all && in;
      }
      hit += all;
    }
    std::printf("       note: full published tau table: %d/%d bands match\n",
                hit, total);
  }

  // ---- Lemma 5 ----------------------------------------------------------
  const SieveBounds lb = f1_F1_bounds(tau, 447, 448);
  report("6",
         lb.F1 <= 164.0 && lb.F1 > 0.9 * 164.0 && lb.f1 <= 162.0 &&
             lb.f1 > 0.9 * 162.0,
         "F_1 = " + fmt(lb.F1) + " <= 164, f_1 = " + fmt(lb.f1) + " <= 162");

  // ---- published eps table rows -----------------------------------------
  {
    const struct { int q; long long f1, F1; long long slack; } rows[] = {
        {80, 514, 515, 0}, {99, 300, 300, 0}, {143, 200, 200, 0},
        {249, 150, 150, 0}, {63, 32881, 32875, 2}};
    bool ok = true;
    std::string detail;
    for (const auto& r : rows) {
      const TauSequence tq = tau_sequence(Rational{1, r.q}, cn, 450);
      const SieveBounds bq = f1_F1_bounds(tq, 447, 448);
      const long long cf = static_cast<long long>(std::ceil(bq.f1 - 1e-9));
      const long long cF = static_cast<long long>(std::ceil(bq.F1 - 1e-9));
      const bool row_ok = std::llabs(cf - r.f1) <= r.slack &&
                          std::llabs(cF - r.F1) <= r.slack;
      ok = ok && row_ok;
      detail += " 1/" + std::to_string(r.q) + ":(" + std::to_string(cf) + "," +
                std::to_string(cF) + ")vs(" + std::to_string(r.f1) + "," +
                std::to_string(r.F1) + ")";
    }
    report("7", ok, "published (f1, F1) rows:" + detail);
  }

  // ---- JR constants -----------------------------------------------------
  {
    const Rational up = jr_published_constant(Parity::upper, eps);
    const Rational lo = jr_published_constant(Parity::lower, eps);
    const bool ok = up == Rational(82, 100) && lo == Rational(81, 100);
    report("8", ok,
           "eps*164*sup(e^2 h) = " + up.str() + ", eps*162*sup(e^2 h) = " +
               lo.str() + " (exact rationals 0.82 / 0.81)");
  }

  // ---- oracle equivalence ------------------------------------------------
  OracleCache oracle;
  {
    const TaylorFamily fam = build_family(6, 30);
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n) {
      const double lo = (n % 2 == 1) ? 1.0 : 2.0;
      const long steps = std::lround((n + 2.0 - lo) * 100.0);
      for (long i = 0; i <= steps; ++i) {
        const double s = lo + i / 100.0;
        worst = std::max(worst, std::fabs(fam.eval(n, s) - oracle.fn(n, s)));
      }
    }
    report("9a", worst <= 1e-6,
           "max |taylor - oracle| on the 0.01 grid, n <= 5: " + fmt(worst));

    const double naive[] = {0.33, 0.39, 0.45, 0.51, 0.52};
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 6; ++n) {
      const double est = oracle.c_estimate(n);
      ok = ok && std::fabs(est - naive[n - 2]) <= 0.01;
      detail += " c" + std::to_string(n) + "=" + fmt(est);
    }
    report("9b", ok, "first-pass c estimates vs published +-0.01:" + detail);
    const double gap = cn.at(6) - oracle.c_estimate(6);
    std::printf("       note: certified c_6 = %s vs first-pass %s\n",
                fmt(cn.at(6)).c_str(), fmt(oracle.c_estimate(6)).c_str());
    (void)gap;
  }

  // ---- majorant certification against the oracle -------------------------
  {
    bool ok = true;
    int violations = 0;
    GridMajorant prev;
    for (int n = 3; n <= 6; ++n) {
      GridMajorant cur = build_majorant(n, n == 3 ? nullptr : &prev, 1000);
      for (int j = 0; j <= cur.top(); ++j) {
        const double s = cur.grid_s(j);
        if (cur.values[j] < s * oracle.fn(n, s)) {
          ok = false;
          ++violations;
        }
      }
      prev = std::move(cur);
    }
    report("10", ok,
           "U_n[j] >= s_j f_n(s_j) at every grid point, n <= 6: " +
               std::to_string(violations) + " violations");
  }

  // ---- property bundle ----------------------------------------------------
  {
    bool ok = true;
    std::string what;
    // shift inequality, equality at s = 4
    const double factor = 4.0 * kE / 3.0;
    for (int i = 0; i <= 2000; ++i) {
      const double s = 2.0 + 18.0 * i / 2000.0;
      if (eval_h(s - 1.0) > factor * eval_h(s) * (1.0 + 1e-12)) {
        ok = false;
        what += " h-shift";
        break;
      }
    }
    if (std::fabs(eval_h(3.0) - factor * eval_h(4.0)) > 1e-12) {
      ok = false;
      what += " h-shift-equality";
    }
    // H majorant on 2000 samples
    for (int i = 0; i <= 2000; ++i) {
      const double s = 3.0 + 17.0 * i / 2000.0;
      if (eval_H(s) > kGammaCeiling * s * eval_h(s)) {
        ok = false;
        what += " H-majorant";
        break;
      }
    }
    // branch continuity
    if (std::fabs(eval_h(2.0 - 1e-15) - eval_h(2.0 + 1e-15)) > 1e-12 ||
        std::fabs(eval_h(3.0 - 1e-15) - eval_h(3.0 + 1e-15)) > 1e-12 ||
        std::fabs(eval_H(3.0 - 1e-15) - eval_H(3.0 + 1e-15)) > 1e-12 ||
        std::fabs(eval_H(4.0 - 1e-15) - eval_H(4.0 + 1e-15)) > 1e-12) {
      ok = false;
      what += " continuity";
    }
    // Taylor vs f_2 closed form
    const TaylorFamily fam2 = build_family(25, 30);
    double worst2 = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double s = 2.0 + 2.0 * i / 400.0;
      worst2 = std::max(worst2, std::fabs(fam2.eval(2, s) - eval_f2(s)));
    }
    if (worst2 > 1e-9) {
      ok = false;
      what += " taylor-f2";
    }
    // support vanishing across the family
    for (int n = 1; n <= 25; ++n) {
      if (std::fabs(fam2.table(n, n + 1).value_right()) > 1e-9) {
        ok = false;
        what += " support-n" + std::to_string(n);
        break;
      }
    }
    // tau ratio converges to the ratio limit
    if (std::fabs(tau.at(450) / tau.at(449) - tau.ratio_limit) > 1e-6) {
      ok = false;
      what += " tau-ratio";
    }
    report("11", ok, ok ? "h-shift, H-majorant, continuity, taylor-vs-f2, "
                          "support, tau-ratio all hold"
                        : "failed:" + what);
  }

  const auto t1 = std::chrono::steady_clock::now();
  const double secs =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() /
      1000.0;
  std::printf("%d criterion(s) failed; wall time %.1f s\n", g_failures, secs);
  return g_failures;
}
