#include "cubevar/dirichlet.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "cubevar/exp_sums.hpp"
#include "cubevar/parallel.hpp"

namespace cubevar {

double gamma_real(double x) {
  // Lanczos, g = 7, 9 terms.
  static const double g = 7.0;
  static const double coef[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // reflection
    return kPi / (std::sin(kPi * x) * gamma_real(1.0 - x));
  }
  x -= 1.0;
  double a = coef[0];
  double t = x + g + 0.5;
  for (int i = 1; i < 9; ++i) a += coef[i] / (x + i);
  return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

namespace {

// Euler-Maclaurin zeta for s > 1/2 (absolute error well below 1e-12 with
// N = 24, corrections through B_12).
double zeta_em(double s) {
  const int N = 24;
  Kahan acc;
  for (int n = 1; n < N; ++n) acc.add(std::pow(n, -s));
  double Nd = N;
  acc.add(std::pow(Nd, 1.0 - s) / (s - 1.0));
  acc.add(0.5 * std::pow(Nd, -s));
  // B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  static const double b2k[6] = {1.0 / 6,  -1.0 / 30, 1.0 / 42,
                                -1.0 / 30, 5.0 / 66,  -691.0 / 2730};
  double rising = s;        // s(s+1)...(s+2k-2), starts at k=1 with just s
  double npow = std::pow(Nd, -s - 1.0);
  double fact = 2.0;        // (2k)!
  for (int k = 1; k <= 6; ++k) {
    acc.add(b2k[k - 1] / fact * rising * npow);
    // advance to k+1
    rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
    npow /= Nd * Nd;
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return acc.value();
}

}  // namespace

double zeta(double s) {
  if (s == 1.0) throw std::domain_error("zeta: pole at s = 1");
  if (s > 0.5) return zeta_em(s);
  // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
  return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) *
         gamma_real(1.0 - s) * zeta_em(1.0 - s);
}

double euler_factor(u64 p, double s) {
  if (s <= -2.0) throw std::domain_error("euler_factor: requires s > -2");
  double pd = static_cast<double>(p);
  if (p == 3)
    return 1.0 + u128_to_double(sixth_moment_nine()) *
                     std::pow(3.0, -(2.0 * s + 14.0)) -
           std::pow(3.0, -(3.0 * s + 7.0));
  double m6 = (p % 3 == 1) ? u128_to_double(sixth_moment_prime_cached(p)) : 0.0;
  return 1.0 + m6 * std::pow(pd, -(s + 7.0)) +
         (pd - 1.0) * std::pow(pd, -(2.0 * s + 7.0)) -
         std::pow(pd, -(3.0 * s + 7.0));
}

EulerProductValue d0(double s, u64 prime_cutoff, int threads) {
  if (s <= -2.0) throw std::domain_error("d0: requires s > -2");
  if (prime_cutoff < 3) throw std::invalid_argument("d0: prime_cutoff < 3");
  std::vector<u64> ps = primes_up_to(prime_cutoff);
  std::vector<double> logs(ps.size());
  parallel_for(ps.size(), threads,
               [&](size_t i) { logs[i] = std::log(euler_factor(ps[i], s)); });
  Kahan acc;  // fixed order, independent of thread count
  for (double l : logs) acc.add(l);
  EulerProductValue out;
  out.s = s;
  out.prime_cutoff = prime_cutoff;
  out.value = std::exp(acc.value());
  // |log factor| <= 64 p^{-(s+3)} + p^{-(2s+6)} + p^{-(3s+7)} for p > cutoff
  // (|S(p,c)| <= 2 sqrt p); sum over integers n > P bounded by integrals.
  double P = static_cast<double>(prime_cutoff);
  auto tail_pow = [&](double a) {
    // sum_{p > P} p^{-a} over primes: partial summation against
    // pi(t) <= 1.26 t/log t (t >= 17) gives <= 1.26 a P^{1-a}/((a-1) log P)
    return 1.26 * a * std::pow(P, 1.0 - a) / ((a - 1.0) * std::log(P));
  };
  double t = 64.0 * tail_pow(s + 3.0) + tail_pow(2.0 * s + 6.0) +
             tail_pow(3.0 * s + 7.0);
  out.tail_bound = std::exp(t) - 1.0;
  return out;
}

double octave_tail_estimate(double o1, double o2) {
  if (o1 <= 0.0) return 0.0;
  double r = (o2 > 0.0) ? o1 / o2 : 0.95;
  if (r > 0.95) r = 0.95;
  return o1 * r / (1.0 - r);
}

namespace {

struct WeightedSum {
  double value;
  double tail;  // octave-ratio truncation estimate
};

// sum_{2<=q<=N} T(q) w(q) with tail estimate from the last two octaves.
template <typename W>
WeightedSum t_weighted_sum(const TMemo& memo, W w) {
  u64 n = memo.bound();
  Kahan acc, o1, o2;
  for (u64 q = 2; q <= n; ++q) {
    double v = memo.at(q);
    if (v == 0.0) continue;
    double term = v * w(q);
    acc.add(term);
    if (q > n / 2)
      o1.add(term);
    else if (q > n / 4)
      o2.add(term);
  }
  return {acc.value(), octave_tail_estimate(o1.value(), o2.value())};
}

}  // namespace

DirichletCheck check_dirichlet_identity(double s, u64 q_max, u64 prime_cutoff,
                                        const TMemo& memo, int threads) {
  if (s <= -5.0 / 3.0)
    throw std::domain_error("check_dirichlet_identity: requires s > -5/3");
  if (q_max > memo.bound())
    throw std::length_error("check_dirichlet_identity: q_max beyond memo");
  Kahan acc, o1, o2;
  acc.add(1.0);  // q = 1
  for (u64 q = 2; q <= q_max; ++q) {
    double v = memo.at(q);
    if (v == 0.0) continue;
    double term = v * std::pow(static_cast<double>(q), -s);
    acc.add(term);
    if (q > q_max / 2)
      o1.add(term);
    else if (q > q_max / 4)
      o2.add(term);
  }
  EulerProductValue prod = d0(s, prime_cutoff, threads);
  DirichletCheck out;
  out.s = s;
  out.q_max = q_max;
  out.prime_cutoff = prime_cutoff;
  out.lhs = acc.value();
  out.rhs = zeta(3.0 * s + 6.0) * prod.value;
  out.diff = out.lhs - out.rhs;
  out.lhs_tail = octave_tail_estimate(o1.value(), o2.value());
  out.rhs_tail = std::abs(out.rhs) * prod.tail_bound;
  return out;
}

namespace {

// C2 = -11/12 - 2 int_1^inf B2(u)/u^3 du, per-interval closed form:
// on [n, n+1], B2(u) = u^2/2 - (2n+1)u/2 + c_n with c_n = (n^2+n)/2 + 1/12,
// so the antiderivative of B2(u)/u^3 is log(u)/2 + (2n+1)/(2u) - c_n/(2u^2).
double c2_exact(u64 n_intervals, double* err) {
  Kahan integral;
  for (u64 n = 1; n <= n_intervals; ++n) {
    double nd = static_cast<double>(n);
    double cn = (nd * nd + nd) / 2.0 + 1.0 / 12.0;
    auto F = [&](double u) {
      return 0.5 * std::log(u) + (2.0 * nd + 1.0) / (2.0 * u) -
             cn / (2.0 * u * u);
    };
    integral.add(F(nd + 1.0) - F(nd));
  }
  double N = static_cast<double>(n_intervals + 1);
  if (err) *err = 2.0 * (1.0 / 12.0) * (1.0 / (2.0 * N * N));
  return -11.0 / 12.0 - 2.0 * integral.value();
}

}  // namespace

ConstantSet constants(u64 prime_cutoff, u64 series_cutoff, const TMemo& memo,
                      int threads) {
  if (prime_cutoff < 1000 || series_cutoff < 1000)
    throw std::invalid_argument("constants: cutoffs must be >= 1000");
  if (series_cutoff > memo.bound())
    throw std::length_error("constants: series_cutoff beyond memo");
  ConstantSet cs;
  cs.prime_cutoff = prime_cutoff;
  cs.series_cutoff = series_cutoff;
  double g6 = gamma43_sixth();

  WeightedSum sumT = t_weighted_sum(memo, [](u64) { return 1.0; });
  WeightedSum sumTlog =
      t_weighted_sum(memo, [](u64 q) { return std::log(static_cast<double>(q)); });
  WeightedSum sumqT =
      t_weighted_sum(memo, [](u64 q) { return static_cast<double>(q); });
  sumT.value += 1.0;  // q = 1 terms (log q = 0 contributes nothing to C1)
  sumqT.value += 1.0;

  cs.C0 = g6 * sumT.value;
  cs.err_C0 = g6 * sumT.tail;
  cs.C1 = g6 * sumTlog.value;
  cs.err_C1 = g6 * sumTlog.tail;
  cs.C2 = c2_exact(series_cutoff, &cs.err_C2);

  cs.A1 = g6 * sumqT.value;
  cs.err_A1 = g6 * sumqT.tail;
  EulerProductValue dm1 = d0(-1.0, prime_cutoff, threads);
  cs.A1_alt = g6 * zeta(3.0) * dm1.value;
  cs.err_A1_alt = std::abs(cs.A1_alt) * dm1.tail_bound;

  EulerProductValue dm53 = d0(-5.0 / 3.0, prime_cutoff, threads);
  double z23 = zeta(-2.0 / 3.0);
  cs.A2 = -(9.0 / 5.0) * g6 * z23 * dm53.value;
  cs.err_A2 = std::abs(cs.A2) * dm53.tail_bound;

  cs.D1 = sumT.value / 2.0;
  cs.err_D1 = sumT.tail / 2.0;
  cs.D2 = (cs.C2 * sumT.value - sumTlog.value) / 2.0;
  cs.err_D2 = (std::abs(cs.C2) * sumT.tail + sumTlog.tail +
               cs.err_C2 * sumT.value) /
              2.0;
  cs.D3 = sumqT.value / 2.0;
  cs.err_D3 = sumqT.tail / 2.0;
  cs.D4 = (9.0 / 10.0) * z23 * dm53.value;
  cs.err_D4 = std::abs(cs.D4) * dm53.tail_bound;

  struct NV {
    const char* name;
    double v, e;
  };
  for (NV nv : {NV{"C0", cs.C0, cs.err_C0}, NV{"C1", cs.C1, cs.err_C1},
                NV{"A1", cs.A1, cs.err_A1}, NV{"A2", cs.A2, cs.err_A2}}) {
    if (nv.e > 1e-4 * std::abs(nv.v))
      std::fprintf(stderr,
                   "warning: %s tail estimate %.3g exceeds 1e-4 of value %.6g; "
                   "increase cutoffs\n",
                   nv.name, nv.e, nv.v);
  }
  return cs;
}

ConstantSet constants(u64 prime_cutoff, u64 series_cutoff, int threads) {
  TMemo memo(series_cutoff, threads);
  return constants(prime_cutoff, series_cutoff, memo, threads);
}

}  // namespace cubevar
