#include <cmath>

#include "cubevar/exp_sums.hpp"
#include "cubevar/identities.hpp"
#include "doctest.h"

using namespace cubevar;

namespace {
double dist(cplx a, cplx b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("s_direct known values") {
  CHECK(dist(s_direct(1, 1), {1, 0}) < 1e-12);
  CHECK(dist(s_direct(3, 1), {0, 0}) < 1e-12);
  CHECK(dist(s_direct(3, 2), {0, 0}) < 1e-12);
  CHECK(dist(s_direct(4, 1), {2, 0}) < 1e-12);
  CHECK(dist(s_direct(2, 1), {0, 0}) < 1e-12);
}

TEST_CASE("cube part factorization") {
  CubePartFactorization f1 = cube_part_factorization(1);
  CHECK(f1.r1 == 1);
  CHECK(f1.r2 == 1);
  CHECK(f1.r3 == 1);
  CubePartFactorization f8 = cube_part_factorization(8);
  CHECK(f8.r1 == 1);
  CHECK(f8.r2 == 1);
  CHECK(f8.r3 == 2);
  CubePartFactorization f12 = cube_part_factorization(12);
  CHECK(f12.r1 == 3);
  CHECK(f12.r2 == 2);
  CHECK(f12.r3 == 1);
}

TEST_CASE("s_reduce examples") {
  CHECK(dist(s_reduce(6, 2), {0, 0}) < 1e-12);
  CHECK(dist(s_reduce(7, 7), {7, 0}) < 1e-12);
  CHECK(dist(s_reduce(4, 2), {0, 0}) < 1e-12);
}

TEST_CASE("prime power closed forms") {
  CHECK(dist(s_prime_power(2, 3, 1), {4, 0}) < 1e-12);
  CHECK(dist(s_prime_power(3, 4, 1), {0, 0}) < 1e-9);
  CHECK(dist(s_prime_power(5, 2, 1), {5, 0}) < 1e-12);
  CHECK_THROWS(s_prime_power(4, 1, 1));  // not prime
  CHECK_THROWS(s_prime_power(5, 1, 10));  // not coprime
}

TEST_CASE("s_fast agrees with s_direct") {
  CHECK(dist(s_fast(1, 1), {1, 0}) < 1e-12);
  CHECK(dist(s_fast(36, 1), s_direct(36, 1)) < 1e-9);
  CHECK(dist(s_fast(35, 2), s_direct(35, 2)) < 1e-9);
  for (u64 q = 1; q <= 120; ++q)
    for (u64 a = 1; a <= q; ++a) {
      if (gcd_u64(q, a) != 1) continue;
      CHECK(dist(s_fast(q, static_cast<i64>(a)), s_direct(q, static_cast<i64>(a))) <
            1e-9 * static_cast<double>(q));
    }
}

TEST_CASE("nu values") {
  CHECK(dist(nu(1, 1), {1, 0}) < 1e-12);
  CHECK(dist(nu(3, 1), {0, 0}) < 1e-12);
  CHECK(dist(nu(4, 1), {0.125, 0}) < 1e-12);
}

TEST_CASE("method equality and bounds over q <= 300") {
  for (u64 q = 1; q <= 300; ++q) {
    std::vector<cplx> direct = s_direct_all(q);
    double w = 3.0 * std::pow(static_cast<double>(q), 2.0 / 3.0);
    for (u64 b = 1; b <= q; ++b) {
      CHECK(dist(s_reduce(q, static_cast<i64>(b)), direct[b % q]) <
            1e-9 * static_cast<double>(q));
      if (gcd_u64(q, b) == 1 && b != q)
        CHECK(std::abs(direct[b]) <= w + 1e-9);
    }
  }
}

TEST_CASE("vanishing and conjugation") {
  for (u64 p : {2ull, 3ull, 5ull, 11ull, 17ull, 23ull}) {
    for (u64 a = 1; a < p; ++a)
      CHECK(std::abs(s_direct(p, static_cast<i64>(a))) < 1e-9);
  }
  for (u64 p : {7ull, 13ull, 31ull}) {
    for (u64 a = 1; a < p; ++a) {
      CHECK(std::abs(s_direct(p, static_cast<i64>(a))) <=
            2.0 * std::sqrt(static_cast<double>(p)) + 1e-9);
      cplx pos = s_direct(p, static_cast<i64>(a));
      cplx neg = s_direct(p, -static_cast<i64>(a));
      CHECK(dist(neg, std::conj(pos)) < 1e-12);
    }
  }
}

TEST_CASE("sixth moments") {
  CHECK(sixth_moment_prime(2) == 0);
  CHECK(sixth_moment_prime(5) == 0);
  CHECK(sixth_moment_prime(3) == 0);

  // direct oracle for p <= 200
  for (u64 p : {7ull, 13ull, 19ull, 31ull, 61ull, 127ull, 199ull}) {
    double direct = 0.0;
    for (u64 c = 1; c < p; ++c) {
      double m = std::abs(s_direct(p, static_cast<i64>(c)));
      double m2 = m * m;
      direct += m2 * m2 * m2;
    }
    double conv = u128_to_double(sixth_moment_prime(p));
    CHECK(std::abs(conv - direct) < 1e-6 * direct + 1e-6);
  }
  CHECK(u128_to_double(sixth_moment_prime(7)) <= 6.0 * 21952.0);

  // |S(9,c)| <= 9 and the reduced sixth-moment total
  double nine = 0.0;
  for (i64 c : {1, 2, 4, 5, 7, 8}) {
    double m = std::abs(s_direct(9, c));
    CHECK(m <= 9.0 + 1e-9);
    double m2 = m * m;
    nine += m2 * m2 * m2;
  }
  CHECK(std::abs(u128_to_double(sixth_moment_nine()) - nine) < 1e-6);
  CHECK(sixth_moment_prime_cached(31) == sixth_moment_prime(31));
}
