#pragma once

#include <string>
#include <vector>

#include "cubevar/local_densities.hpp"

namespace cubevar {

struct IdentityResult {
  std::string name;
  double max_dev = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct IdentityConfig {
  u64 q_dft = 200;            // rho DFT identity, all a
  u64 q_second_moment = 200;  // second-moment identity
  u64 q_reduce = 2000;        // gauss-sum reduction vs tabulated direct sums
  u64 pp_max = 2000;          // prime-power closed forms vs direct sums
  u64 mult_max = 500;         // T multiplicativity over coprime products
  bool dirichlet = true;      // series-vs-Euler-product checks (needs memo)
  u64 prime_cutoff = 10000;
  int threads = 0;
};

// S(q,a) for a = 0..q-1 from the cube-residue histogram and a shared phase
// table; O(q^2) but with trig amortized across all a.
std::vector<cplx> s_direct_all(u64 q);

// Runs the configured checks; memo (covering its own bound) is only needed
// when cfg.dirichlet is set. Each result carries its own pinned tolerance.
std::vector<IdentityResult> run_identity_suite(const IdentityConfig& cfg,
                                               const TMemo* memo = nullptr);

}  // namespace cubevar
