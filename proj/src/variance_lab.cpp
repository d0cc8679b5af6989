#include "cubevar/variance_lab.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "cubevar/exp_sums.hpp"
#include "cubevar/local_densities.hpp"
#include "cubevar/parallel.hpp"

namespace cubevar {

namespace {

std::shared_ptr<const LocalDensityTable> rho_cached(u64 q) {
  static std::mutex mu;
  static std::unordered_map<u64, std::shared_ptr<const LocalDensityTable>> cache;
  if (q > kRhoCacheMax)
    return std::make_shared<const LocalDensityTable>(rho_table(q));
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
  }
  auto t = std::make_shared<const LocalDensityTable>(rho_table(q));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(q, std::move(t)).first->second;
}

}  // namespace

VarianceReport empirical_variance(const CubeRepTable& table, u64 x, u64 Q,
                                  int threads, bool keep_per_q) {
  if (x > table.x_max)
    throw std::out_of_range("empirical_variance: x beyond table");
  if (Q > x) throw std::domain_error("empirical_variance: requires Q <= x");
  if (Q > kRhoCapacity)
    throw std::length_error("empirical_variance: Q beyond rho capacity");
  VarianceReport rep;
  rep.x = x;
  rep.Q = Q;
  std::vector<double> slot(Q, 0.0);
  double g3x = gamma43_cubed() * static_cast<double>(x);
  parallel_for(Q, threads, [&](size_t i) {
    u64 q = static_cast<u64>(i) + 1;
    auto rho = rho_cached(q);
    std::vector<u64> ups = progression_sums(table, x, q);
    double q3 = static_cast<double>(q) * q * q;
    Kahan acc;
    for (u64 a = 1; a <= q; ++a) {
      double d = static_cast<double>(ups[a - 1]) -
                 g3x * static_cast<double>(rho->at(a)) / q3;
      acc.add(d * d);
    }
    slot[i] = acc.value();
  });
  Kahan total;  // fixed q-order, independent of worker count
  for (double v : slot) total.add(v);
  rep.v_empirical = total.value();
  if (keep_per_q) rep.per_q_contributions = std::move(slot);
  return rep;
}

cplx g_transform(const CubeRepTable& table, u64 x, double alpha) {
  if (x > table.x_max) throw std::out_of_range("g_transform: x beyond table");
  KahanCplx acc;
  long double al = alpha;
  for (u64 n = 1; n <= x; ++n) {
    u32 c = table.r3(n);
    if (c == 0) continue;
    long double t = std::fmod(static_cast<long double>(n) * al, 1.0L);
    acc.add(static_cast<double>(c) * unit_phase(static_cast<double>(t)));
  }
  return acc.value();
}

cplx j_kernel(u64 x, double beta) {
  if (x < 1) throw std::invalid_argument("j_kernel: x must be >= 1");
  double g3 = gamma43_cubed();
  double N = static_cast<double>(x);
  double s = std::sin(kPi * beta);
  if (s == 0.0) return {g3 * N, 0.0};
  // sum_{n=1}^{N} e(beta n) = e(beta (N+1)/2) sin(pi beta N)/sin(pi beta)
  return g3 * std::sin(kPi * beta * N) / s * unit_phase(beta * (N + 1.0) / 2.0);
}

ArcDiagnostic arc_diagnostic(const CubeRepTable& table, u64 x, u64 q, u64 a,
                             double beta) {
  if (q < 1) throw std::invalid_argument("arc_diagnostic: q must be >= 1");
  u64 ar = a % q;
  if ((ar == 0 ? q : gcd_u64(q, ar)) != 1)
    throw std::invalid_argument("arc_diagnostic: requires gcd(a,q) = 1");
  ArcDiagnostic d;
  d.q = q;
  d.a = a;
  d.beta = beta;
  double aq = static_cast<double>(a) / static_cast<double>(q);
  d.g_value = g_transform(table, x, beta + aq);
  d.approx = nu(q, static_cast<i64>(a)) * j_kernel(x, beta);
  d.delta_abs = std::abs(d.g_value - d.approx);
  double xd = static_cast<double>(x);
  double env = std::pow(xd, 2.0 / 3.0) *
               std::pow(static_cast<double>(q), 0.55) *
               (1.0 + xd * std::abs(beta));
  d.bound_ratio = d.delta_abs / env;
  return d;
}

std::vector<VarianceReport> scan(const CubeRepTable& table,
                                 const std::vector<u64>& x_grid,
                                 const std::function<u64(u64)>& q_policy,
                                 FormulaId formula, const ConstantSet& cs,
                                 const TMemo& memo, int threads,
                                 double normalize_exponent) {
  std::vector<VarianceReport> out;
  out.reserve(x_grid.size());
  for (u64 x : x_grid) {
    u64 Q = q_policy(x);
    VarianceReport rep = empirical_variance(table, x, Q, threads);
    rep.normalize_exponent = normalize_exponent;
    if (formula != FormulaId::none) {
      double s2 = static_cast<double>(sum_r3_squared(table, x));
      rep.prediction = predict(formula, static_cast<double>(x),
                               static_cast<double>(Q), s2, cs, memo);
      rep.u0_residual = rep.v_empirical - rep.prediction.total;
      rep.normalized =
          rep.u0_residual / std::pow(static_cast<double>(x), normalize_exponent);
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace cubevar
