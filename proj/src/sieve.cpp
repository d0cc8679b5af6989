#include "cubevar/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "cubevar/parallel.hpp"

namespace cubevar {

CubeRepTable sieve_r3(u64 x_max, int threads) {
  if (x_max < 1) throw std::invalid_argument("sieve_r3: x_max must be >= 1");
  if (x_max > kMaxSieveSize)
    throw std::length_error("sieve_r3: x_max exceeds memory budget");

  CubeRepTable table;
  table.x_max = x_max;
  table.counts.assign(x_max + 1, 0);

  u64 c1_max = 0;
  while ((c1_max + 1) * (c1_max + 1) * (c1_max + 1) <= x_max) ++c1_max;
  if (c1_max == 0) return table;

  std::vector<u64> cube(c1_max + 1);
  for (u64 i = 0; i <= c1_max; ++i) cube[i] = i * i * i;

  auto sweep = [&](std::vector<std::uint32_t>& out, u64 start, u64 stride) {
    for (u64 x1 = start; x1 <= c1_max && cube[x1] * 3 <= x_max; x1 += stride) {
      for (u64 x2 = x1; cube[x1] + 2 * cube[x2] <= x_max; ++x2) {
        for (u64 x3 = x2; cube[x1] + cube[x2] + cube[x3] <= x_max; ++x3) {
          u64 n = cube[x1] + cube[x2] + cube[x3];
          std::uint32_t orbit = 6;
          if (x1 == x2 && x2 == x3) {
            orbit = 1;
          } else if (x1 == x2 || x2 == x3) {
            orbit = 3;
          }
          out[n] += orbit;
        }
      }
    }
  };

  int nt = resolve_threads(threads);
  nt = static_cast<int>(std::min<u64>(static_cast<u64>(nt), c1_max));
  if (nt <= 1) {
    sweep(table.counts, 1, 1);
    return table;
  }
  // Each worker takes x1 = t+1, t+1+nt, ... into a private accumulator;
  // integer addition commutes, so the merged table is independent of the
  // worker count.
  std::vector<std::vector<std::uint32_t>> priv(static_cast<std::size_t>(nt));
  std::vector<std::thread> pool;
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      priv[t].assign(x_max + 1, 0);
      sweep(priv[t], static_cast<u64>(t) + 1, static_cast<u64>(nt));
    });
  }
  for (auto& th : pool) th.join();
  for (auto& local : priv)
    for (u64 n = 0; n <= x_max; ++n) table.counts[n] += local[n];
  return table;
}

u64 sum_r3(const CubeRepTable& table, u64 x) {
  if (x < 1 || x > table.x_max)
    throw std::out_of_range("sum_r3: x outside table range");
  u64 s = 0;
  for (u64 n = 1; n <= x; ++n) s += table.counts[n];
  return s;
}

u64 sum_r3_squared(const CubeRepTable& table, u64 x) {
  if (x < 1 || x > table.x_max)
    throw std::out_of_range("sum_r3_squared: x outside table range");
  u128 s = 0;
  for (u64 n = 1; n <= x; ++n) {
    u64 c = table.counts[n];
    s += static_cast<u128>(c) * c;
  }
  if (s > static_cast<u128>(UINT64_MAX))
    throw std::overflow_error("sum_r3_squared: exceeds 64 bits");
  return static_cast<u64>(s);
}

std::vector<u64> progression_sums(const CubeRepTable& table, u64 x, u64 q) {
  if (x < 1 || x > table.x_max)
    throw std::out_of_range("progression_sums: x outside table range");
  if (q < 1) throw std::invalid_argument("progression_sums: q must be >= 1");
  std::vector<u64> ups(q, 0);
  for (u64 n = 1; n <= x; ++n) {
    u64 r = n % q;                 // class a = q holds the n == 0 (mod q) terms
    ups[r == 0 ? q - 1 : r - 1] += table.counts[n];
  }
  return ups;
}

ExponentEstimate estimate_upper_exponent(const CubeRepTable& table,
                                         const std::vector<u64>& grid) {
  if (grid.empty())
    throw std::invalid_argument("estimate_upper_exponent: empty grid");
  ExponentEstimate est;
  est.max_exponent = 0.0;
  for (u64 x : grid) {
    u64 s2 = sum_r3_squared(table, x);
    double e = std::log(static_cast<double>(s2)) /
               std::log(static_cast<double>(x));
    est.per_point.emplace_back(x, e);
    est.max_exponent = std::max(est.max_exponent, e);
  }
  return est;
}

}  // namespace cubevar
