// Acceptance gate: one line per criterion, nonzero exit on any failure.
// All tolerances are pinned here.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "cubevar/dirichlet.hpp"
#include "cubevar/identities.hpp"
#include "cubevar/main_terms.hpp"
#include "cubevar/sieve.hpp"
#include "cubevar/variance_lab.hpp"

using namespace cubevar;

namespace {

int g_failures = 0;

void report(int n, const char* name, bool pass, const std::string& detail) {
  std::printf("criterion %2d [%s]: %s  %s\n", n, name, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;

  // ---- 1: exact identity suite, single-threaded, < 60 s --------------------
  {
    auto t0 = clock::now();
    IdentityConfig cfg;
    cfg.q_dft = 200;
    cfg.q_second_moment = 200;
    cfg.q_reduce = 2000;
    cfg.pp_max = 2000;
    cfg.mult_max = 500;
    cfg.dirichlet = false;
    cfg.threads = 1;
    std::vector<IdentityResult> rs = run_identity_suite(cfg, nullptr);
    double el = seconds_since(t0);
    bool all = true;
    std::string detail;
    for (const IdentityResult& r : rs) {
      all = all && r.pass;
      detail += fmt("%s=%.3g ", r.name.c_str(), r.max_dev);
    }
    bool pass = all && el < 60.0;
    report(1, "exact identity suite", pass,
           detail + fmt("elapsed=%.1fs (limit 60)", el));
  }

  // Shared heavyweight state for the remaining criteria.
  TMemo memo(100000, 0);
  ConstantSet cs = constants(10000, 100000, memo, 0);
  CubeRepTable table = sieve_r3(1000000, 0);

  // ---- 2: Dirichlet-series consistency ------------------------------------
  {
    bool pass = true;
    std::string detail;
    for (double s : {0.0, -0.5, -1.0}) {
      DirichletCheck c = check_dirichlet_identity(s, 100000, 10000, memo, 0);
      double budget = c.lhs_tail + c.rhs_tail;
      bool ok = std::abs(c.diff) <= budget;
      pass = pass && ok;
      detail += fmt("s=%.1f diff=%.3g budget=%.3g; ", s, c.diff, budget);
    }
    Kahan pow2;
    u64 pk = 1;
    for (int k = 0; k <= 60; ++k) {
      pow2.add(t_function(pk));
      if (k < 60) pk *= 2;
    }
    double dev2 = std::abs(pow2.value() - 64.0 / 63.0);
    pass = pass && dev2 < 1e-12;
    report(2, "dirichlet series consistency", pass,
           detail + fmt("pow2 dev=%.2g (tol 1e-12)", dev2));
  }

  // ---- 3: mean-value asymptotic -------------------------------------------
  {
    bool pass = true;
    std::string detail;
    double coeff = kGamma43 * kGamma43 / (2.0 * kGamma53);
    for (u64 x : {10000ull, 100000ull, 1000000ull}) {
      double xd = static_cast<double>(x);
      double err = static_cast<double>(sum_r3(table, x)) -
                   gamma43_cubed() * xd + coeff * std::cbrt(xd) * std::cbrt(xd);
      double norm = std::abs(err) / (std::pow(xd, 5.0 / 9.0) *
                                     std::cbrt(std::log(xd)));
      pass = pass && norm <= 10.0;
      detail += fmt("x=%llu norm=%.3f; ", static_cast<unsigned long long>(x),
                    norm);
    }
    report(3, "mean-value asymptotic", pass, detail + "(limit 10)");
  }

  // ---- 4: exponent window --------------------------------------------------
  {
    ExponentEstimate e =
        estimate_upper_exponent(table, {1000, 10000, 100000, 1000000});
    bool pass = true;
    std::string detail;
    for (const auto& [x, v] : e.per_point) {
      pass = pass && v >= 0.98 && v <= 1.20;
      detail += fmt("x=%llu a=%.4f; ", static_cast<unsigned long long>(x), v);
    }
    report(4, "exponent window [0.98,1.20]", pass, detail);
  }

  // ---- 5: W cross-validation ----------------------------------------------
  {
    double cmin = 1e300, cmax = 0.0;
    std::string detail;
    for (double X : {100.0, 1000.0, 10000.0}) {
      double c = std::abs(w_exact(X, memo) - w_asymptotic(X, cs)) /
                 std::sqrt(X);
      cmin = std::min(cmin, c);
      cmax = std::max(cmax, c);
      detail += fmt("X=%g c=%.3f; ", X, c);
    }
    bool stable = cmax / cmin <= 4.0;
    // piecewise forms, sampled
    bool piece = true;
    double x = 1000.0;
    for (double Q : {990.0, 750.0, 501.0}) {
      double expect = (x - Q) * (x - Q);
      piece = piece &&
              std::abs(q2w_exact(x, Q, memo) - expect) <= 1e-9 * expect + 1e-9;
    }
    for (double Q : {500.0, 400.0, 334.0}) {
      double expect = 1.5 * x * x - 4.0 * Q * x + 3.0 * Q * Q;
      piece = piece &&
              std::abs(q2w_exact(x, Q, memo) - expect) <= 1e-9 * expect + 1e-9;
    }
    report(5, "W cross-validation", stable && piece,
           detail + fmt("ratio=%.2f (limit 4) piecewise=%s", cmax / cmin,
                        piece ? "ok" : "bad"));
  }

  // ---- 6: S2/S3 residual trend --------------------------------------------
  {
    bool pass = true;
    std::string detail;
    u64 x = 10000;
    double xd = static_cast<double>(x);
    for (u64 Q : {10ull, 30ull, 100ull}) {
      double r = std::abs(s2_exact(table, x, Q) -
                          s3_exact(xd, Q, memo)) /
                 std::pow(xd, 5.0 / 3.0);
      pass = pass && r <= 10.0;
      detail += fmt("Q=%llu r=%.4f; ", static_cast<unsigned long long>(Q), r);
    }
    report(6, "S2-S3 residual trend", pass, detail + "(limit 10)");
  }

  // ---- 7: end-to-end variance residual ------------------------------------
  std::vector<u64> grid7 = {1000, 10000, 30000};
  std::vector<double> vemp7;
  {
    auto t0 = clock::now();
    bool pass = true;
    std::string detail;
    double prev = 1e300;
    double last = 0.0;
    for (u64 x : grid7) {
      VarianceReport rep = empirical_variance(table, x, x, 0);
      vemp7.push_back(rep.v_empirical);
      double s2 = static_cast<double>(sum_r3_squared(table, x));
      Prediction p = predict(FormulaId::corollary2, static_cast<double>(x),
                             static_cast<double>(x), s2, cs, memo);
      double r = std::abs(rep.v_empirical - p.total) /
                 (static_cast<double>(x) * static_cast<double>(x));
      pass = pass && r < prev;
      prev = r;
      last = r;
      detail += fmt("x=%llu r=%.4f; ", static_cast<unsigned long long>(x), r);
    }
    pass = pass && last < 0.5;
    double el = seconds_since(t0);
    pass = pass && el < 600.0;
    report(7, "variance residual trend", pass,
           detail + fmt("elapsed=%.0fs (limits: monotone, <0.5, <600s)", el));
  }

  // ---- 8: hand-computed golden case ---------------------------------------
  double v8base = empirical_variance(table, 10, 2, 0).v_empirical;
  report(8, "golden case V(10,2)", std::abs(v8base - 16.61) <= 0.01,
         fmt("v=%.6f (16.61 +- 0.01)", v8base));

  // ---- 9: major-arc diagnostic survey -------------------------------------
  {
    double maxes[2] = {0.0, 0.0};
    u64 xs[2] = {1000, 10000};
    for (int i = 0; i < 2; ++i) {
      u64 x = xs[i];
      double xd = static_cast<double>(x);
      for (u64 q = 1; q <= 32; ++q) {
        double qd = static_cast<double>(q);
        for (u64 a = 1; a <= q; ++a) {
          if ((a == q ? q : gcd_u64(q, a)) != 1) continue;
          for (double beta : {0.0, 0.5 / (qd * std::sqrt(xd)),
                              -0.5 / (qd * std::sqrt(xd)),
                              0.5 / (qd * (xd / qd)), -0.5 / (qd * (xd / qd))}) {
            ArcDiagnostic d = arc_diagnostic(table, x, q, a, beta);
            maxes[i] = std::max(maxes[i], d.bound_ratio);
          }
        }
      }
    }
    bool pass = maxes[1] <= 4.0 * maxes[0];
    report(9, "major-arc survey", pass,
           fmt("max@1e3=%.4f max@1e4=%.4f (limit 4x)", maxes[0], maxes[1]));
  }

  // ---- 10: determinism across worker counts -------------------------------
  {
    bool pass = true;
    std::string detail;
    for (size_t i = 0; i < grid7.size(); ++i) {
      u64 x = grid7[i];
      for (int workers : {1, 2, 8}) {
        double v = empirical_variance(table, x, x, workers).v_empirical;
        if (v != vemp7[i]) {
          pass = false;
          detail += fmt("x=%llu w=%d differs; ",
                        static_cast<unsigned long long>(x), workers);
        }
      }
    }
    double v81 = empirical_variance(table, 10, 2, 1).v_empirical;
    double v88 = empirical_variance(table, 10, 2, 8).v_empirical;
    pass = pass && v81 == v8base && v88 == v8base;
    report(10, "bit-identical determinism", pass,
           pass ? "all worker counts identical" : detail);
  }

  std::printf("%s (%d failure%s)\n", g_failures == 0 ? "ACCEPTED" : "REJECTED",
              g_failures, g_failures == 1 ? "" : "s");
  return g_failures == 0 ? 0 : 1;
}
