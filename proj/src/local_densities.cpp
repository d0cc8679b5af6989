#include "cubevar/local_densities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cubevar/exp_sums.hpp"
#include "cubevar/fft.hpp"
#include "cubevar/parallel.hpp"

namespace cubevar {

LocalDensityTable rho_table(u64 q) {
  if (q < 1) throw std::invalid_argument("rho_table: q must be >= 1");
  if (q > kRhoCapacity) throw std::length_error("rho_table: q beyond capacity");
  std::vector<double> h(q, 0.0);
  for (u64 m = 1; m <= q; ++m) h[mulmod(mulmod(m, m, q), m, q)] += 1.0;
  std::vector<i64> conv = cyclic_self_conv3(h);
  LocalDensityTable t;
  t.q = q;
  t.rho.resize(q);
  u128 total = 0;
  for (u64 a = 1; a <= q; ++a) {
    i64 v = conv[a % q];  // a = q denotes the class n == 0 (mod q)
    t.rho[a - 1] = v;
    total += static_cast<u128>(v);
  }
  u128 q3 = static_cast<u128>(q) * q * q;
  if (total != q3) throw std::runtime_error("rho_table: counts do not sum to q^3");
  return t;
}

double rho_via_dft(u64 q, u64 a) {
  if (q < 1) throw std::invalid_argument("rho_via_dft: q must be >= 1");
  Kahan acc;
  double invq = 1.0 / static_cast<double>(q);
  for (u64 b = 1; b <= q; ++b) {
    cplx s = s_reduce(q, static_cast<i64>(b));
    cplx s3 = s * s * s;
    u64 ba = mulmod(b, a % q, q);
    cplx ph = unit_phase(-static_cast<double>(ba) * invq);
    acc.add((ph * s3).real());
  }
  return acc.value() * invq;
}

std::pair<double, double> rho_second_moment(u64 q) {
  LocalDensityTable t = rho_table(q);
  u128 lhs = 0;
  for (i64 v : t.rho) lhs += static_cast<u128>(v) * static_cast<u128>(v);
  Kahan rhs;
  for (u64 r = 1; r * r <= q; ++r) {
    if (q % r) continue;
    rhs.add(static_cast<double>(r) * t_function(r));
    u64 r2 = q / r;
    if (r2 != r) rhs.add(static_cast<double>(r2) * t_function(r2));
  }
  double q5 = std::pow(static_cast<double>(q), 5.0);
  return {u128_to_double(lhs), q5 * rhs.value()};
}

namespace {

// T at a prime power p^alpha from the closed forms:
//   alpha = 3u+1: sixth_moment(p) / p^{6u+7}  (zero for p = 3 and p == 2 mod 3)
//   alpha = 3u+2: (p-1)/p^{6u+7}, except 393660/3^{6u+14} at p = 3
//   alpha = 3u+3: (p-1)/p^{6u+7}
double t_prime_power(u64 p, int alpha) {
  int u = (alpha - 1) / 3;
  int v = (alpha - 1) % 3 + 1;
  double pd = static_cast<double>(p);
  if (v == 1) {
    if (p == 3 || p % 3 == 2) return 0.0;
    return u128_to_double(sixth_moment_prime_cached(p)) /
           std::pow(pd, 6.0 * u + 7.0);
  }
  if (v == 2 && p == 3)
    return u128_to_double(sixth_moment_nine()) / std::pow(3.0, 6.0 * u + 14.0);
  // v == 2 (p != 3) and v == 3 share the form (p-1)/p^{6u+7}
  return (pd - 1.0) / std::pow(pd, 6.0 * u + 7.0);
}

}  // namespace

double t_function(u64 r) {
  if (r < 1) throw std::invalid_argument("t_function: r must be >= 1");
  double prod = 1.0;
  for (const auto& [p, k] : factorize(r)) {
    prod *= t_prime_power(p, k);
    if (prod == 0.0) return 0.0;
  }
  return prod;
}

double h_function(u64 l) {
  if (l < 1) throw std::invalid_argument("h_function: l must be >= 1");
  Kahan acc;
  for (u64 d = 1; d * d <= l; ++d) {
    if (l % d) continue;
    acc.add(static_cast<double>(d) * t_function(d));
    u64 d2 = l / d;
    if (d2 != d) acc.add(static_cast<double>(d2) * t_function(d2));
  }
  return acc.value();
}

TMemo::TMemo(u64 bound, int threads) : bound_(bound) {
  values_.assign(bound_ + 1, 0.0);
  if (bound_ >= 1) values_[1] = 1.0;
  if (bound_ < 2) {
    decay_constant_ = 0.0;
    return;
  }

  // smallest prime factor sieve
  std::vector<u32> spf(bound_ + 1, 0);
  std::vector<u64> primes;
  for (u64 i = 2; i <= bound_; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<u32>(i);
      primes.push_back(i);
    }
    for (u64 p : primes) {
      if (p > spf[i] || i * p > bound_) break;
      spf[i * p] = static_cast<u32>(p);
    }
  }

  // Sixth moments for p == 1 (mod 3) dominate the build cost (one FFT
  // convolution each); precompute them in parallel before the sieve fill.
  std::vector<u64> hard;
  for (u64 p : primes)
    if (p % 3 == 1) hard.push_back(p);
  parallel_for(hard.size(), threads,
               [&](size_t i) { sixth_moment_prime_cached(hard[i]); });

  for (u64 n = 2; n <= bound_; ++n) {
    u64 p = spf[n];
    u64 m = n;
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    double tp = t_prime_power(p, k);
    values_[n] = (tp == 0.0) ? 0.0 : tp * values_[m];
  }

  double dc = 0.0;
  for (u64 r = 2; r <= bound_; ++r)
    dc = std::max(dc, static_cast<double>(r) * static_cast<double>(r) * values_[r]);
  decay_constant_ = dc;
}

std::vector<double> TMemo::h_sieve(u64 n) const {
  if (n > bound_) throw std::length_error("TMemo::h_sieve: n beyond memo bound");
  std::vector<double> h(n + 1, 0.0);
  for (u64 q = 1; q <= n; ++q) {
    double qt = static_cast<double>(q) * values_[q];
    if (qt == 0.0) continue;
    for (u64 l = q; l <= n; l += q) h[l] += qt;
  }
  return h;
}

}  // namespace cubevar
