#pragma once

#include <memory>
#include <vector>

#include "cubevar/common.hpp"

namespace cubevar {

// rho(q,a) for fixed q; rho[a-1] with a in {1..q}, a = q meaning the class
// n == 0 (mod q). Sum over a equals q^3.
struct LocalDensityTable {
  u64 q = 0;
  std::vector<i64> rho;

  i64 at(u64 a) const { return rho[a - 1]; }  // a in 1..q
};

inline constexpr u64 kRhoCapacity = u64(1) << 20;

// Exact rho(q,.) via the cube-residue histogram and triple cyclic convolution.
LocalDensityTable rho_table(u64 q);

// Right side of the DFT identity rho(q,a) = (1/q) sum_b e(-ba/q) S(q,b)^3.
double rho_via_dft(u64 q, u64 a);

// Both sides of the second-moment identity
//   sum_a rho(q,a)^2 = q^5 sum_{r|q} r T(r).
// first = exact integer left side, second = divisor-sum right side.
std::pair<double, double> rho_second_moment(u64 q);

// T(r) = r^{-7} sum over reduced residues c of |S(r,c)|^6, assembled
// multiplicatively from prime-power closed forms.
double t_function(u64 r);

// h(l) = sum_{q|l} q T(q).
double h_function(u64 l);

// Memoized T over [0, bound], built by sieving prime powers; immutable after
// construction and safe for concurrent reads.
class TMemo {
 public:
  TMemo(u64 bound, int threads = 0);

  u64 bound() const { return bound_; }
  double at(u64 r) const { return values_[r]; }
  const std::vector<double>& values() const { return values_; }

  // max over 2 <= r <= bound of r^2 T(r); used for series tail bounds
  double decay_constant() const { return decay_constant_; }

  // h over [0, n] by divisor-sum sieve (n <= bound).
  std::vector<double> h_sieve(u64 n) const;

 private:
  u64 bound_;
  std::vector<double> values_;
  double decay_constant_;
};

}  // namespace cubevar
