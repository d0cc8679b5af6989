#include "cubevar/main_terms.hpp"

#include <cmath>
#include <stdexcept>

#include "cubevar/local_densities.hpp"

namespace cubevar {

const char* formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::none: return "none";
    case FormulaId::theorem1: return "theorem1";
    case FormulaId::theorem2: return "theorem2";
    case FormulaId::corollary1i: return "corollary1i";
    case FormulaId::corollary1ii: return "corollary1ii";
    case FormulaId::corollary2: return "corollary2";
    case FormulaId::corollary3: return "corollary3";
  }
  return "none";
}

FormulaId formula_from_name(const std::string& name) {
  for (FormulaId id :
       {FormulaId::none, FormulaId::theorem1, FormulaId::theorem2,
        FormulaId::corollary1i, FormulaId::corollary1ii, FormulaId::corollary2,
        FormulaId::corollary3}) {
    if (name == formula_name(id)) return id;
  }
  throw std::invalid_argument("unknown formula: " + name);
}

double w_exact(double X, const TMemo& memo) {
  if (X < 0.0) throw std::domain_error("w_exact: X must be >= 0");
  u64 L = static_cast<u64>(std::floor(X));
  if (L > memo.bound()) throw std::length_error("w_exact: X beyond memo bound");
  std::vector<double> h = memo.h_sieve(L);
  Kahan acc;
  for (u64 l = 1; l <= L; ++l) {
    double d = X - static_cast<double>(l);
    acc.add(h[l] / static_cast<double>(l) * d * d);
  }
  return acc.value();
}

double w_asymptotic(double X, const ConstantSet& cs) {
  if (X < 1.0) throw std::domain_error("w_asymptotic: X must be >= 1");
  return 2.0 * cs.D1 * X * X * std::log(X) + 2.0 * cs.D2 * X * X +
         2.0 * cs.D3 * X + 2.0 * cs.D4 * std::cbrt(X);
}

double q2w_exact(double x, double Q, const TMemo& memo) {
  if (!(Q > 0.0) || Q > x) throw std::domain_error("q2w_exact: need 0 < Q <= x");
  u64 k = static_cast<u64>(std::floor(x / Q));
  // guard against floating floor at exact multiples; l = x/Q contributes 0
  if (static_cast<double>(k) * Q > x) --k;
  if (k > memo.bound()) throw std::length_error("q2w_exact: x/Q beyond memo");
  std::vector<double> h = memo.h_sieve(k);
  Kahan acc;
  for (u64 l = 1; l <= k; ++l) {
    double d = x - static_cast<double>(l) * Q;
    acc.add(h[l] / static_cast<double>(l) * d * d);
  }
  return acc.value();
}

double s3_exact(double x, u64 Q, const TMemo& memo) {
  if (Q < 1) throw std::invalid_argument("s3_exact: Q must be >= 1");
  if (Q > memo.bound()) throw std::length_error("s3_exact: Q beyond memo bound");
  // g[q] = sum_{r|q} r T(r) by divisor sieve
  std::vector<double> g(Q + 1, 0.0);
  for (u64 r = 1; r <= Q; ++r) {
    double rt = static_cast<double>(r) * memo.at(r);
    if (rt == 0.0) continue;
    for (u64 q = r; q <= Q; q += r) g[q] += rt;
  }
  Kahan acc;
  for (u64 q = 1; q <= Q; ++q) acc.add(g[q] / static_cast<double>(q));
  // (x*x) * base so that s3_exact(x,Q) == x*x*s3_exact(1,Q) holds bitwise
  return (x * x) * (gamma43_sixth() * acc.value());
}

double s3_asymptotic(double x, double Q, const ConstantSet& cs) {
  if (Q < 2.0) throw std::domain_error("s3_asymptotic: Q must be >= 2");
  return cs.C0 * x * x * std::log(Q) +
         (cs.gamma_euler * cs.C0 - cs.C1) * x * x;
}

double s2_exact(const CubeRepTable& table, u64 x, u64 Q) {
  if (x > table.x_max) throw std::out_of_range("s2_exact: x beyond table");
  Kahan acc;
  for (u64 q = 1; q <= Q; ++q) {
    LocalDensityTable rho = rho_table(q);
    std::vector<u64> ups = progression_sums(table, x, q);
    double q3 = static_cast<double>(q) * q * q;
    Kahan inner;
    for (u64 a = 1; a <= q; ++a)
      inner.add(static_cast<double>(rho.at(a)) * static_cast<double>(ups[a - 1]));
    acc.add(inner.value() / q3);
  }
  return gamma43_cubed() * static_cast<double>(x) * acc.value();
}

Prediction predict(FormulaId id, double x, double Q, double sum_r3sq,
                   const ConstantSet& cs, const TMemo& memo) {
  Prediction p;
  p.x = x;
  p.Q = Q;
  p.formula = id;
  double g6 = gamma43_sixth();
  double x2 = x * x;
  auto push = [&](const char* name, double v) {
    p.main_terms.emplace_back(name, v);
    p.total += v;
  };
  switch (id) {
    case FormulaId::none:
      break;
    case FormulaId::theorem1: {
      if (!(Q >= std::sqrt(x) * std::log(x)) || Q > x)
        throw std::domain_error("theorem1: requires sqrt(x) log x <= Q <= x");
      push("q_times_sum_r3sq", Q * sum_r3sq);
      push("a1_term", -cs.A1 * Q * x);
      push("a2_term", cs.A2 * std::pow(Q, 5.0 / 3.0) * std::cbrt(x));
      break;
    }
    case FormulaId::theorem2: {
      if (!(Q > 0.0) || Q > x)
        throw std::domain_error("theorem2: requires 0 < Q <= x");
      push("q_times_sum_r3sq", Q * sum_r3sq);
      push("log_term", x2 * (cs.C0 * std::log(x / Q) + cs.C0 * cs.C2 - cs.C1));
      push("exact_w_term", -g6 * q2w_exact(x, Q, memo));
      break;
    }
    case FormulaId::corollary1i: {
      if (!(Q > x / 3.0) || Q > x / 2.0)
        throw std::domain_error("corollary1i: requires x/3 < Q <= x/2");
      push("q_times_sum_r3sq", Q * sum_r3sq);
      push("log_term", x2 * (cs.C0 * std::log(x / Q) + cs.C0 * cs.C2 - cs.C1 -
                             1.5 * g6));
      push("qx_term", 4.0 * g6 * Q * x);
      push("q2_term", -3.0 * g6 * Q * Q);
      break;
    }
    case FormulaId::corollary1ii: {
      if (!(Q > x / 2.0) || Q > x)
        throw std::domain_error("corollary1ii: requires x/2 < Q <= x");
      push("q_times_sum_r3sq", Q * sum_r3sq);
      push("log_term",
           x2 * (cs.C0 * std::log(x / Q) + cs.C0 * cs.C2 - cs.C1 - g6));
      push("qx_term", 2.0 * g6 * Q * x);
      push("q2_term", -g6 * Q * Q);
      break;
    }
    case FormulaId::corollary2: {
      if (Q != x) throw std::domain_error("corollary2: requires Q = x");
      push("q_times_sum_r3sq", x * sum_r3sq);
      push("log_term", x2 * (cs.C0 * cs.C2 - cs.C1));
      break;
    }
    case FormulaId::corollary3: {
      if (!(Q > 0.0) || Q > x)
        throw std::domain_error("corollary3: requires 0 < Q <= x");
      double m = x / Q;
      u64 L = static_cast<u64>(std::floor(m));
      std::vector<double> h = memo.h_sieve(L);
      Kahan wsum;
      for (u64 l = 1; l <= L; ++l) {
        double d = m - static_cast<double>(l);
        wsum.add(h[l] / static_cast<double>(l) * d * d);
      }
      push("q_times_sum_r3sq", Q * sum_r3sq);
      push("log_term", x2 * (cs.C0 * std::log(m) + cs.C0 * cs.C2 - cs.C1 -
                             g6 / (m * m) * wsum.value()));
      break;
    }
  }
  return p;
}

std::pair<double, double> lemma9_sum(double Y, const ConstantSet& cs) {
  if (Y < 1.0) throw std::domain_error("lemma9_sum: Y must be >= 1");
  u64 M = static_cast<u64>(std::floor(Y));
  Kahan acc;
  for (u64 m = 1; m <= M; ++m) {
    double d = Y - static_cast<double>(m);
    acc.add(d * d / static_cast<double>(m));
  }
  double asym = Y * Y * std::log(Y) + cs.C2 * Y * Y + Y;
  return {acc.value(), asym};
}

}  // namespace cubevar
