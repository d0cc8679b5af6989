#include <cmath>
#include <vector>

#include "cubevar/local_densities.hpp"
#include "doctest.h"

using namespace cubevar;

namespace {

// O(q^3) oracle
std::vector<i64> brute_rho(u64 q) {
  std::vector<i64> out(q, 0);  // index = residue
  for (u64 l1 = 1; l1 <= q; ++l1)
    for (u64 l2 = 1; l2 <= q; ++l2)
      for (u64 l3 = 1; l3 <= q; ++l3)
        ++out[(l1 * l1 * l1 + l2 * l2 * l2 + l3 * l3 * l3) % q];
  return out;
}

}  // namespace

TEST_CASE("rho_table vs O(q^3) oracle up to 50") {
  for (u64 q = 1; q <= 50; ++q) {
    LocalDensityTable t = rho_table(q);
    std::vector<i64> oracle = brute_rho(q);
    for (u64 a = 1; a <= q; ++a) CHECK(t.at(a) == oracle[a % q]);
  }
}

TEST_CASE("rho_table examples") {
  LocalDensityTable t1 = rho_table(1);
  CHECK(t1.rho == std::vector<i64>{1});
  LocalDensityTable t2 = rho_table(2);
  CHECK(t2.at(1) == 4);
  CHECK(t2.at(2) == 4);
  LocalDensityTable t9 = rho_table(9);
  i64 total = 0;
  for (i64 v : t9.rho) total += v;
  CHECK(total == 729);
}

TEST_CASE("rho DFT identity") {
  CHECK(rho_via_dft(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rho_via_dft(2, 1) == doctest::Approx(4.0).epsilon(1e-9));
  for (u64 q : {7ull, 12ull, 45ull}) {
    LocalDensityTable t = rho_table(q);
    for (u64 a = 1; a <= q; ++a)
      CHECK(std::abs(rho_via_dft(q, a) - static_cast<double>(t.at(a))) < 0.25);
  }
}

TEST_CASE("second moment identity") {
  auto [l1, r1] = rho_second_moment(1);
  CHECK(l1 == 1.0);
  CHECK(r1 == doctest::Approx(1.0).epsilon(1e-12));
  auto [l2, r2] = rho_second_moment(2);
  CHECK(l2 == 32.0);
  CHECK(r2 == doctest::Approx(32.0).epsilon(1e-12));
  auto [l4, r4] = rho_second_moment(4);
  CHECK(r4 == doctest::Approx(1024.0 * (1.0 + 4.0 / 128.0)).epsilon(1e-12));
  CHECK(l4 == doctest::Approx(r4).epsilon(1e-9));
  for (u64 q = 1; q <= 60; ++q) {
    auto [lhs, rhs] = rho_second_moment(q);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
  }
}

TEST_CASE("t_function values") {
  CHECK(t_function(1) == 1.0);
  CHECK(t_function(2) == 0.0);
  CHECK(t_function(3) == 0.0);
  CHECK(t_function(8) == doctest::Approx(1.0 / 128.0).epsilon(1e-14));
  CHECK(t_function(4) == doctest::Approx(1.0 / 128.0).epsilon(1e-14));
  CHECK(t_function(9) ==
        doctest::Approx(393660.0 / 4782969.0).epsilon(1e-12));  // 3^{-14} sum
  for (u64 r = 1; r <= 500; ++r) {
    double v = t_function(r);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("t multiplicativity on coprime products") {
  for (u64 m = 2; m <= 20; ++m)
    for (u64 n = m + 1; m * n <= 200; ++n) {
      if (gcd_u64(m, n) != 1) continue;
      double lhs = t_function(m * n);
      double rhs = t_function(m) * t_function(n);
      if (rhs == 0.0)
        CHECK(lhs == 0.0);
      else
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("h_function values") {
  CHECK(h_function(1) == 1.0);
  CHECK(h_function(2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(h_function(3) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(h_function(4) == doctest::Approx(33.0 / 32.0).epsilon(1e-14));
}

TEST_CASE("TMemo agrees with t_function and h_function") {
  TMemo memo(2000, 2);
  for (u64 r = 1; r <= 2000; ++r)
    CHECK(memo.at(r) == doctest::Approx(t_function(r)).epsilon(1e-12));
  std::vector<double> h = memo.h_sieve(200);
  for (u64 l = 1; l <= 200; ++l)
    CHECK(h[l] == doctest::Approx(h_function(l)).epsilon(1e-12));
  CHECK(memo.decay_constant() > 0.0);
  // T(r) r^2 bounded
  CHECK(memo.decay_constant() < 50.0);
}
