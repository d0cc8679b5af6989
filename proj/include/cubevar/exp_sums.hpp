#pragma once

#include <vector>

#include "cubevar/common.hpp"

namespace cubevar {

// Unique decomposition r = r1 * r2^2 * r3^3 with r1, r2 squarefree, coprime.
struct CubePartFactorization {
  u64 r1 = 1;
  u64 r2 = 1;
  u64 r3 = 1;
};

CubePartFactorization cube_part_factorization(u64 r);

// S(q,a) = sum_{m=1}^{q} e(a m^3 / q) by direct summation; exact modular
// reduction of a m^3 before any trig.
cplx s_direct(u64 q, i64 a);

// S(q,b) = (q/r) S(r,c) with r = q/gcd(q,b), c = b/gcd(q,b).
cplx s_reduce(u64 q, i64 b);

// Closed forms for S(p^alpha, a) with (a,p) = 1.
cplx s_prime_power(u64 p, int alpha, i64 a);

// Multiplicative assembly S(q1 q2, a) = S(q1, a q2^2) S(q2, a q1^2),
// prime-power pieces from s_prime_power. Requires gcd(a,q) = 1.
cplx s_fast(u64 q, i64 a);

// nu(q,a) = S(q,a)^3 / q^3 for (a,q) = 1.
cplx nu(u64 q, i64 a);

// sum_{c=1}^{p-1} |S(p,c)|^6 as an exact non-negative integer, via the
// cube-residue histogram h and the identity
//   sum_c |S(p,c)|^6 = p * sum_a rho(p,a)^2 - p^6,
// where rho(p,.) is the triple cyclic self-convolution of h.
u128 sixth_moment_prime(u64 p);

// Cached wrapper around sixth_moment_prime (thread-safe).
u128 sixth_moment_prime_cached(u64 p);

// sum over (c,3)=1, 1<=c<=9, of |S(9,c)|^6; exact integer (equals 393660).
u128 sixth_moment_nine();

inline double u128_to_double(u128 v) {
  return static_cast<double>(static_cast<long double>(v));
}

}  // namespace cubevar
