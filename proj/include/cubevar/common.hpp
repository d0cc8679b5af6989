#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cubevar {

using cplx = std::complex<double>;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Fixed high-precision literals (universal constants, not computed here).
inline constexpr double kGamma43 = 0.89297951156924921122;   // Gamma(4/3)
inline constexpr double kGamma53 = 0.90274529295093361130;   // Gamma(5/3)
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kPi = 3.14159265358979323846;

inline double gamma43_cubed() { return kGamma43 * kGamma43 * kGamma43; }
inline double gamma43_sixth() {
  double c = gamma43_cubed();
  return c * c;
}

// e(t) = exp(2*pi*i*t), t expected already reduced to a small range.
inline cplx unit_phase(double t) {
  double a = 2.0 * kPi * t;
  return {std::cos(a), std::sin(a)};
}

// Kahan compensated accumulator.
struct Kahan {
  double sum = 0.0;
  double c = 0.0;
  void add(double v) {
    double y = v - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

struct KahanCplx {
  Kahan re, im;
  void add(cplx v) {
    re.add(v.real());
    im.add(v.imag());
  }
  cplx value() const { return {re.value(), im.value()}; }
};

inline u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// a*b mod m without overflow for m < 2^63.
inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // deterministic Miller-Rabin for 64-bit
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

struct PrimePower {
  u64 p;
  int k;
};

// Trial-division factorization; fine for the moduli sizes used here.
std::vector<PrimePower> factorize(u64 n);

// Primes in [2, n] by sieve of Eratosthenes.
std::vector<u64> primes_up_to(u64 n);

}  // namespace cubevar
