#pragma once

#include <cstdint>
#include <vector>

#include "cubevar/common.hpp"

namespace cubevar {

// Table of r3(n) = #{(x1,x2,x3) in Z+^3 : x1^3+x2^3+x3^3 = n} for n <= x_max.
struct CubeRepTable {
  u64 x_max = 0;
  std::vector<std::uint32_t> counts;  // counts[n], index 0 unused

  std::uint32_t r3(u64 n) const { return counts[n]; }
};

// Largest x_max accepted by sieve_r3 (4 bytes per n).
inline constexpr u64 kMaxSieveSize = u64(1) << 31;

// Enumerates unordered triples x1 <= x2 <= x3 and adds the orbit size
// (1, 3 or 6) to counts[x1^3+x2^3+x3^3].
CubeRepTable sieve_r3(u64 x_max, int threads = 0);

// Exact sum of r3(n) over n <= x. Throws std::out_of_range for x > x_max.
u64 sum_r3(const CubeRepTable& table, u64 x);

// Exact sum of r3(n)^2 over n <= x.
u64 sum_r3_squared(const CubeRepTable& table, u64 x);

// Upsilon(x;q,a) for a = 1..q; entry [a-1], with a = q meaning n == 0 (mod q).
std::vector<u64> progression_sums(const CubeRepTable& table, u64 x, u64 q);

struct ExponentEstimate {
  double max_exponent;
  std::vector<std::pair<u64, double>> per_point;  // (x, log S2(x)/log x)
};

// Pointwise exponents log(sum_r3_squared(x))/log(x) over an ascending grid.
ExponentEstimate estimate_upper_exponent(const CubeRepTable& table,
                                         const std::vector<u64>& grid);

}  // namespace cubevar
