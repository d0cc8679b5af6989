#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubevar/dirichlet.hpp"
#include "cubevar/local_densities.hpp"
#include "cubevar/sieve.hpp"

namespace cubevar {

enum class FormulaId {
  none,
  theorem1,
  theorem2,
  corollary1i,   // x/3 < Q <= x/2
  corollary1ii,  // x/2 < Q <= x
  corollary2,    // Q = x
  corollary3,    // Q = x/m
};

const char* formula_name(FormulaId id);
FormulaId formula_from_name(const std::string& name);

struct Prediction {
  double x = 0.0;
  double Q = 0.0;
  FormulaId formula = FormulaId::none;
  std::vector<std::pair<std::string, double>> main_terms;
  double total = 0.0;  // sum of main_terms
};

// W(X) = sum_{l<=X} h(l)/l (X-l)^2.
double w_exact(double X, const TMemo& memo);

// (sum T) X^2 log X + 2 D2 X^2 + (sum qT) X + (9/5) zeta(-2/3) D0(-5/3) X^{1/3},
// written via the residue constants as 2D1 X^2 log X + 2D2 X^2 + 2D3 X + 2D4 X^{1/3}.
double w_asymptotic(double X, const ConstantSet& cs);

// Q^2 W(x/Q) = sum_{l <= x/Q} h(l)/l (x - lQ)^2.
double q2w_exact(double x, double Q, const TMemo& memo);

// Gamma(4/3)^6 x^2 sum_{q<=Q} (1/q) sum_{r|q} r T(r), by divisor-sum sieve.
double s3_exact(double x, u64 Q, const TMemo& memo);

// C0 x^2 log Q + (gamma C0 - C1) x^2.
double s3_asymptotic(double x, double Q, const ConstantSet& cs);

// Gamma(4/3)^3 x sum_{q<=Q} q^{-3} sum_a rho(q,a) Upsilon(x;q,a).
double s2_exact(const CubeRepTable& table, u64 x, u64 Q);

// Assembled variance prediction for the given closed form; sum_r3sq is
// sum_{n<=x} r_3(n)^2. Throws std::domain_error outside the formula's range.
Prediction predict(FormulaId id, double x, double Q, double sum_r3sq,
                   const ConstantSet& cs, const TMemo& memo);

// (exact, asymptotic) for sum_{m<=Y} (1/m)(Y-m)^2 vs Y^2 log Y + C2 Y^2 + Y.
std::pair<double, double> lemma9_sum(double Y, const ConstantSet& cs);

}  // namespace cubevar
