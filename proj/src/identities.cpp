#include "cubevar/identities.hpp"

#include <cmath>
#include <cstdlib>

#include "cubevar/dirichlet.hpp"
#include "cubevar/exp_sums.hpp"
#include "cubevar/parallel.hpp"

namespace cubevar {

std::vector<cplx> s_direct_all(u64 q) {
  std::vector<u64> hist(q, 0);
  for (u64 m = 1; m <= q; ++m) ++hist[mulmod(mulmod(m, m, q), m, q)];
  std::vector<cplx> phase(q);
  double invq = 1.0 / static_cast<double>(q);
  for (u64 j = 0; j < q; ++j) phase[j] = unit_phase(static_cast<double>(j) * invq);
  std::vector<u64> res;  // residues actually hit
  res.reserve(q);
  for (u64 r = 0; r < q; ++r)
    if (hist[r]) res.push_back(r);
  std::vector<cplx> out(q);
  for (u64 a = 0; a < q; ++a) {
    KahanCplx acc;
    for (u64 r : res)
      acc.add(static_cast<double>(hist[r]) * phase[mulmod(a, r, q)]);
    out[a] = acc.value();
  }
  return out;
}

namespace {

IdentityResult finish(std::string name, double dev, double tol) {
  return {std::move(name), dev, tol, dev <= tol};
}

IdentityResult check_rho_dft(u64 q_max, int threads) {
  std::vector<double> devs(q_max, 0.0);
  parallel_for(q_max, threads, [&](size_t i) {
    u64 q = static_cast<u64>(i) + 1;
    LocalDensityTable exact = rho_table(q);
    std::vector<cplx> sb3(q);
    for (u64 b = 1; b <= q; ++b) {
      cplx s = s_reduce(q, static_cast<i64>(b));
      sb3[b % q] = s * s * s;
    }
    double invq = 1.0 / static_cast<double>(q);
    double worst = 0.0;
    for (u64 a = 1; a <= q; ++a) {
      Kahan acc;
      for (u64 b = 0; b < q; ++b) {
        cplx ph = unit_phase(-static_cast<double>(mulmod(b, a % q, q)) * invq);
        acc.add((ph * sb3[b]).real());
      }
      double v = acc.value() * invq;
      worst = std::max(worst, std::abs(v - static_cast<double>(exact.at(a))));
    }
    devs[i] = worst;
  });
  double dev = 0.0;
  for (double d : devs) dev = std::max(dev, d);
  // must round to the exact integers; tolerance well below 1/2
  return finish("rho_dft_identity", dev, 0.25);
}

IdentityResult check_second_moment(u64 q_max, int threads) {
  std::vector<double> devs(q_max, 0.0);
  parallel_for(q_max, threads, [&](size_t i) {
    u64 q = static_cast<u64>(i) + 1;
    auto [lhs, rhs] = rho_second_moment(q);
    devs[i] = std::abs(lhs - rhs) / lhs;
  });
  double dev = 0.0;
  for (double d : devs) dev = std::max(dev, d);
  return finish("second_moment_identity", dev, 1e-6);
}

IdentityResult check_reduction(u64 q_max, int threads) {
  std::vector<double> devs(q_max, 0.0);
  parallel_for(q_max, threads, [&](size_t i) {
    u64 q = static_cast<u64>(i) + 1;
    std::vector<cplx> direct = s_direct_all(q);
    double worst = 0.0;
    for (u64 b = 1; b <= q; ++b) {
      cplx red = s_reduce(q, static_cast<i64>(b));
      worst = std::max(worst, std::abs(red - direct[b % q]));
    }
    devs[i] = worst / static_cast<double>(q);  // tolerance scales with q
  });
  double dev = 0.0;
  for (double d : devs) dev = std::max(dev, d);
  return finish("gauss_reduction", dev, 1e-9);
}

IdentityResult check_prime_powers(u64 pp_max, int threads) {
  std::vector<std::pair<u64, int>> pps;
  for (u64 p : primes_up_to(pp_max)) {
    u64 pk = p;
    int k = 1;
    while (pk <= pp_max) {
      pps.emplace_back(p, k);
      if (pk > pp_max / p) break;
      pk *= p;
      ++k;
    }
  }
  std::vector<double> devs(pps.size(), 0.0);
  parallel_for(pps.size(), threads, [&](size_t i) {
    auto [p, k] = pps[i];
    u64 pk = 1;
    for (int j = 0; j < k; ++j) pk *= p;
    std::vector<cplx> direct = s_direct_all(pk);
    double worst = 0.0;
    for (u64 a = 1; a < pk; ++a) {
      if (a % p == 0) continue;
      cplx cf = s_prime_power(p, k, static_cast<i64>(a));
      worst = std::max(worst, std::abs(cf - direct[a]) / static_cast<double>(pk));
    }
    devs[i] = worst;
  });
  double dev = 0.0;
  for (double d : devs) dev = std::max(dev, d);
  return finish("prime_power_forms", dev, 1e-9);
}

IdentityResult check_multiplicativity(u64 mult_max) {
  double dev = 0.0;
  for (u64 m = 2; m * 2 <= mult_max; ++m) {
    for (u64 n = m + 1; m * n <= mult_max; ++n) {
      if (gcd_u64(m, n) != 1) continue;
      double lhs = t_function(m * n);
      double rhs = t_function(m) * t_function(n);
      double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
      dev = std::max(dev, std::abs(lhs - rhs) / scale);
    }
  }
  return finish("t_multiplicativity", dev, 1e-10);
}

IdentityResult check_pow2_geometric() {
  // sum_k T(2^k) telescopes to 64/63
  Kahan acc;
  u64 pk = 1;
  for (int k = 0; k <= 60; ++k) {
    acc.add(t_function(pk));
    if (k < 60) pk *= 2;
  }
  double dev = std::abs(acc.value() - 64.0 / 63.0);
  return finish("t_pow2_geometric", dev, 1e-12);
}

IdentityResult check_dirichlet_at(double s, const char* name, const TMemo& memo,
                                  u64 prime_cutoff, int threads) {
  DirichletCheck c =
      check_dirichlet_identity(s, memo.bound(), prime_cutoff, memo, threads);
  return finish(name, std::abs(c.diff), c.lhs_tail + c.rhs_tail);
}

}  // namespace

std::vector<IdentityResult> run_identity_suite(const IdentityConfig& cfg,
                                               const TMemo* memo) {
  std::vector<IdentityResult> out;
  out.push_back(check_rho_dft(cfg.q_dft, cfg.threads));
  out.push_back(check_second_moment(cfg.q_second_moment, cfg.threads));
  out.push_back(check_reduction(cfg.q_reduce, cfg.threads));
  out.push_back(check_prime_powers(cfg.pp_max, cfg.threads));
  out.push_back(check_multiplicativity(cfg.mult_max));
  out.push_back(check_pow2_geometric());
  if (cfg.dirichlet && memo) {
    out.push_back(check_dirichlet_at(0.0, "dirichlet_s0", *memo,
                                     cfg.prime_cutoff, cfg.threads));
    out.push_back(check_dirichlet_at(-0.5, "dirichlet_s_minus_half", *memo,
                                     cfg.prime_cutoff, cfg.threads));
    out.push_back(check_dirichlet_at(-1.0, "dirichlet_s_minus_one", *memo,
                                     cfg.prime_cutoff, cfg.threads));
  }
  return out;
}

}  // namespace cubevar
