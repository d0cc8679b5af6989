#pragma once

#include <memory>

#include "cubevar/common.hpp"
#include "cubevar/local_densities.hpp"

namespace cubevar {

// Riemann zeta on the real line, s != 1. Euler-Maclaurin for s > 1/2,
// the symmetric functional equation otherwise.
double zeta(double s);

// Gamma(x) for real x (Lanczos; reflection for x < 1/2).
double gamma_real(double x);

struct EulerProductValue {
  double s = 0.0;
  double value = 1.0;
  u64 prime_cutoff = 0;
  double tail_bound = 0.0;  // relative: |true/value - 1| <= tail_bound
};

// One Euler factor of D_0(s) at p (the bracket, without 1/(1 - p^{-(3s+6)})).
double euler_factor(u64 p, double s);

// Truncated Euler product over p <= prime_cutoff with a tail bound from
// |S(p,c)| <= 2 sqrt(p) by integral comparison.
EulerProductValue d0(double s, u64 prime_cutoff, int threads = 0);

struct DirichletCheck {
  double s = 0.0;
  u64 q_max = 0;
  u64 prime_cutoff = 0;
  double lhs = 0.0;       // sum_{q<=q_max} T(q)/q^s
  double rhs = 0.0;       // zeta(3s+6) * d0(s)
  double diff = 0.0;      // lhs - rhs
  double lhs_tail = 0.0;  // extrapolated truncation estimate for the sum
  double rhs_tail = 0.0;  // |rhs| * product tail bound
};

// Both sides of sum_q T(q)/q^s = zeta(3s+6) D_0(s); needs s > -5/3.
DirichletCheck check_dirichlet_identity(double s, u64 q_max, u64 prime_cutoff,
                                        const TMemo& memo, int threads = 0);

struct ConstantSet {
  double C0 = 0, C1 = 0, C2 = 0;
  double A1 = 0;      // series route: Gamma(4/3)^6 sum qT(q)
  double A1_alt = 0;  // zeta(3) D_0(-1) route
  double A2 = 0;
  double D1 = 0, D2 = 0, D3 = 0, D4 = 0;
  double gamma_euler = kEulerGamma;
  double gamma_43 = kGamma43;
  u64 prime_cutoff = 0;
  u64 series_cutoff = 0;
  double err_C0 = 0, err_C1 = 0, err_C2 = 0;
  double err_A1 = 0, err_A1_alt = 0, err_A2 = 0;
  double err_D1 = 0, err_D2 = 0, err_D3 = 0, err_D4 = 0;
};

// All named constants with truncation-error estimates. The memo must cover
// series_cutoff.
ConstantSet constants(u64 prime_cutoff, u64 series_cutoff, const TMemo& memo,
                      int threads = 0);

// Convenience: builds its own memo.
ConstantSet constants(u64 prime_cutoff, u64 series_cutoff, int threads = 0);

// Truncation estimate for sum_{q>N} w(q) by octave-ratio extrapolation:
// with o1 = sum over (N/2, N] and o2 = sum over (N/4, N/2], the tail is
// estimated as o1 * r / (1 - r), r = o1/o2 (clamped below 0.95).
double octave_tail_estimate(double o1, double o2);

}  // namespace cubevar
