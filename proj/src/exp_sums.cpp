#include "cubevar/exp_sums.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "cubevar/fft.hpp"

namespace cubevar {

std::vector<PrimePower> factorize(u64 n) {
  std::vector<PrimePower> f;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    f.push_back({p, k});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  std::vector<bool> comp(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

CubePartFactorization cube_part_factorization(u64 r) {
  if (r < 1)
    throw std::invalid_argument("cube_part_factorization: r must be >= 1");
  CubePartFactorization f;
  for (const auto& [p, k] : factorize(r)) {
    int rem = k % 3;
    if (rem == 1) f.r1 *= p;
    if (rem == 2) f.r2 *= p;
    for (int i = 0; i < k / 3; ++i) f.r3 *= p;
  }
  return f;
}

namespace {

u64 reduce_mod(i64 a, u64 q) {
  i64 m = a % static_cast<i64>(q);
  if (m < 0) m += static_cast<i64>(q);
  return static_cast<u64>(m);
}

}  // namespace

cplx s_direct(u64 q, i64 a) {
  if (q < 1) throw std::invalid_argument("s_direct: q must be >= 1");
  u64 am = reduce_mod(a, q);
  KahanCplx acc;
  double invq = 1.0 / static_cast<double>(q);
  for (u64 m = 1; m <= q; ++m) {
    u64 c = mulmod(mulmod(m, m, q), m, q);  // m^3 mod q
    u64 r = mulmod(am, c, q);
    acc.add(unit_phase(static_cast<double>(r) * invq));
  }
  return acc.value();
}

cplx s_reduce(u64 q, i64 b) {
  if (q < 1) throw std::invalid_argument("s_reduce: q must be >= 1");
  u64 bm = reduce_mod(b, q);
  if (bm == 0) return {static_cast<double>(q), 0.0};  // all terms equal 1
  u64 g = gcd_u64(q, bm);
  u64 r = q / g;
  u64 c = bm / g;
  return static_cast<double>(g) * s_fast(r, static_cast<i64>(c));
}

cplx s_prime_power(u64 p, int alpha, i64 a) {
  if (!is_prime_u64(p)) throw std::invalid_argument("s_prime_power: p not prime");
  if (alpha < 1) throw std::invalid_argument("s_prime_power: alpha must be >= 1");
  u64 am = reduce_mod(a, p);
  if (am == 0) throw std::invalid_argument("s_prime_power: a not coprime to p");
  int u = (alpha - 1) / 3;
  int v = (alpha - 1) % 3 + 1;  // alpha = 3u + v, 1 <= v <= 3
  if (v == 3) return {std::pow(static_cast<double>(p), 2 * u + 2), 0.0};
  if (v == 2) {
    if (p != 3)
      return {std::pow(static_cast<double>(p), 2 * u + 1), 0.0};
    return std::pow(3.0, 2 * u) * s_direct(9, a % 9);
  }
  // v == 1
  return std::pow(static_cast<double>(p), 2 * u) *
         s_direct(p, static_cast<i64>(am));
}

cplx s_fast(u64 q, i64 a) {
  if (q < 1) throw std::invalid_argument("s_fast: q must be >= 1");
  if (q == 1) return {1.0, 0.0};
  u64 am = reduce_mod(a, q);
  if (gcd_u64(q, am) != 1)
    throw std::invalid_argument("s_fast: a not coprime to q");
  cplx prod(1.0, 0.0);
  for (const auto& [p, k] : factorize(q)) {
    u64 pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    u64 cof = q / pk;                       // coprime cofactor
    u64 ai = mulmod(am % pk, mulmod(cof % pk, cof % pk, pk), pk);
    prod *= s_prime_power(p, k, static_cast<i64>(ai));
  }
  return prod;
}

cplx nu(u64 q, i64 a) {
  cplx s = s_fast(q, a);
  double q3 = static_cast<double>(q) * q * q;
  return s * s * s / q3;
}

u128 sixth_moment_prime(u64 p) {
  if (!is_prime_u64(p))
    throw std::invalid_argument("sixth_moment_prime: p not prime");
  std::vector<double> h(p, 0.0);
  for (u64 m = 1; m <= p; ++m) h[mulmod(mulmod(m, m, p), m, p)] += 1.0;
  std::vector<i64> rho = cyclic_self_conv3(h);
  u128 sumsq = 0;
  for (i64 v : rho) sumsq += static_cast<u128>(v) * static_cast<u128>(v);
  u128 p6 = 1;
  for (int i = 0; i < 6; ++i) p6 *= p;
  u128 lhs = static_cast<u128>(p) * sumsq;
  if (lhs < p6) throw std::runtime_error("sixth_moment_prime: negative result");
  return lhs - p6;
}

u128 sixth_moment_prime_cached(u64 p) {
  static std::mutex mu;
  static std::unordered_map<u64, u128> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  u128 v = sixth_moment_prime(p);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(p, v);
  return v;
}

u128 sixth_moment_nine() {
  // sum over reduced residues c mod 9 of |S(9,c)|^6; integer by symmetry
  double s = 0.0;
  for (i64 c : {1, 2, 4, 5, 7, 8}) {
    double m = std::abs(s_direct(9, c));
    double m2 = m * m;
    s += m2 * m2 * m2;
  }
  return static_cast<u128>(std::llround(s));
}

}  // namespace cubevar
