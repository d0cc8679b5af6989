#pragma once

#include <functional>
#include <vector>

#include "cubevar/main_terms.hpp"
#include "cubevar/sieve.hpp"

namespace cubevar {

struct VarianceReport {
  u64 x = 0;
  u64 Q = 0;
  double v_empirical = 0.0;
  Prediction prediction;
  double u0_residual = 0.0;  // v_empirical - prediction.total
  double normalized = 0.0;   // u0_residual / x^normalize_exponent
  double normalize_exponent = 16.0 / 9.0;
  std::vector<double> per_q_contributions;  // filled only on request
};

// Largest q for which rho tables are kept in the shared cache.
inline constexpr u64 kRhoCacheMax = 4096;

// V(x,Q) = sum_{q<=Q} sum_a |Upsilon(x;q,a) - Gamma(4/3)^3 x rho(q,a)/q^3|^2.
// Parallel over q with per-q slots and an index-ordered reduction, so the
// result is bit-identical for any worker count. Prediction fields left empty.
VarianceReport empirical_variance(const CubeRepTable& table, u64 x, u64 Q,
                                  int threads = 0, bool keep_per_q = false);

// G(alpha) = sum_{n<=x} r_3(n) e(n alpha).
cplx g_transform(const CubeRepTable& table, u64 x, double alpha);

// J(beta) = Gamma(4/3)^3 sum_{n<=x} e(beta n), closed geometric form.
cplx j_kernel(u64 x, double beta);

struct ArcDiagnostic {
  u64 q = 0;
  u64 a = 0;
  double beta = 0.0;
  cplx g_value;
  cplx approx;
  double delta_abs = 0.0;
  double bound_ratio = 0.0;  // delta_abs / (x^{2/3} q^{0.55} (1 + x|beta|))
};

ArcDiagnostic arc_diagnostic(const CubeRepTable& table, u64 x, u64 q, u64 a,
                             double beta);

// For each x in the grid: Q = q_policy(x), empirical variance plus the chosen
// prediction. normalize_exponent applies to every report.
std::vector<VarianceReport> scan(const CubeRepTable& table,
                                 const std::vector<u64>& x_grid,
                                 const std::function<u64(u64)>& q_policy,
                                 FormulaId formula, const ConstantSet& cs,
                                 const TMemo& memo, int threads = 0,
                                 double normalize_exponent = 16.0 / 9.0);

}  // namespace cubevar
