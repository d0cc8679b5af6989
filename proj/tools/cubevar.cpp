#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cubevar/cache.hpp"
#include "cubevar/dirichlet.hpp"
#include "cubevar/exp_sums.hpp"
#include "cubevar/identities.hpp"
#include "cubevar/main_terms.hpp"
#include "cubevar/report.hpp"
#include "cubevar/sieve.hpp"
#include "cubevar/variance_lab.hpp"

using namespace cubevar;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitIdentity = 4;

struct Options {
  u64 x = 0;
  i64 a = 1;
  u64 q = 1;
  u64 q_max = 32;
  u64 x_max = 0;
  std::vector<u64> x_grid;
  std::string formula = "none";
  std::string q_policy = "x";
  u64 prime_cutoff = 10000;
  u64 series_cutoff = 100000;
  std::string format = "json";
  std::string cache_path = "r3.cache";
  int threads = 0;
  double normalize_exponent = 16.0 / 9.0;
};

CubeRepTable load_table(const Options& opt, u64 need_x) {
  CubeRepTable t = read_cache(opt.cache_path);
  if (t.x_max < need_x)
    throw std::domain_error("cache covers x_max=" + std::to_string(t.x_max) +
                            " but x=" + std::to_string(need_x) + " requested");
  return t;
}

int cmd_sieve(const Options& opt) {
  u64 have = probe_cache(opt.cache_path);
  if (have >= opt.x_max) {
    std::printf("cache hit: %s already covers x_max=%llu\n",
                opt.cache_path.c_str(), static_cast<unsigned long long>(have));
    return 0;
  }
  CubeRepTable t = sieve_r3(opt.x_max, opt.threads);
  write_cache(opt.cache_path, t);
  std::printf("wrote %s with x_max=%llu\n", opt.cache_path.c_str(),
              static_cast<unsigned long long>(t.x_max));
  return 0;
}

int cmd_constants(const Options& opt) {
  ConstantSet cs = constants(opt.prime_cutoff, opt.series_cutoff, opt.threads);
  std::printf("%s\n", constants_json(cs).c_str());
  return 0;
}

int cmd_gauss_sum(const Options& opt) {
  cplx d = s_direct(opt.q, opt.a);
  std::printf("{\"q\":%llu,\"a\":%lld,\"direct\":[%s,%s]",
              static_cast<unsigned long long>(opt.q),
              static_cast<long long>(opt.a), fmt_double(d.real()).c_str(),
              fmt_double(d.imag()).c_str());
  u64 ar = static_cast<u64>(((opt.a % static_cast<i64>(opt.q)) +
                             static_cast<i64>(opt.q)) %
                            static_cast<i64>(opt.q));
  if (ar != 0 && gcd_u64(opt.q, ar) == 1) {
    cplx f = s_fast(opt.q, opt.a);
    std::printf(",\"fast\":[%s,%s]", fmt_double(f.real()).c_str(),
                fmt_double(f.imag()).c_str());
  }
  cplx r = s_reduce(opt.q, opt.a);
  std::printf(",\"reduce\":[%s,%s]}\n", fmt_double(r.real()).c_str(),
              fmt_double(r.imag()).c_str());
  return 0;
}

int cmd_rho(const Options& opt, bool have_a) {
  LocalDensityTable t = rho_table(opt.q);
  if (have_a) {
    u64 a = static_cast<u64>(opt.a);
    if (a < 1 || a > opt.q) throw std::domain_error("rho: need 1 <= a <= q");
    std::printf("{\"q\":%llu,\"a\":%llu,\"rho\":%lld,\"dft\":%s}\n",
                static_cast<unsigned long long>(opt.q),
                static_cast<unsigned long long>(a),
                static_cast<long long>(t.at(a)),
                fmt_double(rho_via_dft(opt.q, a)).c_str());
    return 0;
  }
  std::printf("{\"q\":%llu,\"rho\":[", static_cast<unsigned long long>(opt.q));
  for (u64 a = 1; a <= opt.q; ++a)
    std::printf("%s%lld", a > 1 ? "," : "", static_cast<long long>(t.at(a)));
  std::printf("]}\n");
  return 0;
}

int cmd_identities(const Options& opt) {
  TMemo memo(opt.series_cutoff, opt.threads);
  IdentityConfig cfg;
  cfg.prime_cutoff = opt.prime_cutoff;
  cfg.threads = opt.threads;
  std::vector<IdentityResult> results = run_identity_suite(cfg, &memo);
  bool all = true;
  for (const IdentityResult& r : results) {
    std::printf("%-28s max_dev=%-12.5g tol=%-12.5g %s\n", r.name.c_str(),
                r.max_dev, r.tolerance, r.pass ? "pass" : "FAIL");
    all = all && r.pass;
  }
  return all ? 0 : kExitIdentity;
}

int cmd_predict(const Options& opt) {
  CubeRepTable table = load_table(opt, opt.x);
  FormulaId id = formula_from_name(opt.formula);
  TMemo memo(opt.series_cutoff, opt.threads);
  ConstantSet cs =
      constants(opt.prime_cutoff, opt.series_cutoff, memo, opt.threads);
  double s2 = static_cast<double>(sum_r3_squared(table, opt.x));
  Prediction p = predict(id, static_cast<double>(opt.x),
                         static_cast<double>(opt.q), s2, cs, memo);
  std::printf("{\"x\":%llu,\"Q\":%llu,\"formula\":\"%s\",\"total\":%s,"
              "\"main_terms\":{",
              static_cast<unsigned long long>(opt.x),
              static_cast<unsigned long long>(opt.q), formula_name(p.formula),
              fmt_double(p.total).c_str());
  for (size_t i = 0; i < p.main_terms.size(); ++i)
    std::printf("%s\"%s\":%s", i ? "," : "", p.main_terms[i].first.c_str(),
                fmt_double(p.main_terms[i].second).c_str());
  std::printf("}}\n");
  return 0;
}

int cmd_variance(const Options& opt) {
  if (opt.q > opt.x) throw std::domain_error("variance: requires Q <= x");
  CubeRepTable table = load_table(opt, opt.x);
  FormulaId id = formula_from_name(opt.formula);
  VarianceReport rep = empirical_variance(table, opt.x, opt.q, opt.threads);
  rep.normalize_exponent = opt.normalize_exponent;
  if (id != FormulaId::none) {
    TMemo memo(opt.series_cutoff, opt.threads);
    ConstantSet cs =
        constants(opt.prime_cutoff, opt.series_cutoff, memo, opt.threads);
    double s2 = static_cast<double>(sum_r3_squared(table, opt.x));
    rep.prediction = predict(id, static_cast<double>(opt.x),
                             static_cast<double>(opt.q), s2, cs, memo);
    rep.u0_residual = rep.v_empirical - rep.prediction.total;
    rep.normalized = rep.u0_residual /
                     std::pow(static_cast<double>(opt.x), opt.normalize_exponent);
  }
  std::printf("%s\n",
              reports_emit({rep}, format_from_name(opt.format)).c_str());
  return 0;
}

int cmd_scan(const Options& opt) {
  if (opt.x_grid.empty()) {
    std::printf("%s\n", reports_emit({}, format_from_name(opt.format)).c_str());
    return 0;
  }
  u64 need = 0;
  for (u64 x : opt.x_grid) need = std::max(need, x);
  CubeRepTable table = load_table(opt, need);
  FormulaId id = formula_from_name(opt.formula);
  std::function<u64(u64)> policy;
  if (opt.q_policy == "x")
    policy = [](u64 x) { return x; };
  else if (opt.q_policy == "x/2")
    policy = [](u64 x) { return x / 2; };
  else if (opt.q_policy == "sqrtxlogx")
    policy = [](u64 x) {
      double xd = static_cast<double>(x);
      return static_cast<u64>(std::ceil(std::sqrt(xd) * std::log(xd)));
    };
  else if (opt.q_policy == "fixed")
    policy = [&](u64) { return opt.q; };
  else
    throw std::invalid_argument("unknown q policy: " + opt.q_policy);
  TMemo memo(opt.series_cutoff, opt.threads);
  ConstantSet cs = (id != FormulaId::none)
                       ? constants(opt.prime_cutoff, opt.series_cutoff, memo,
                                   opt.threads)
                       : ConstantSet{};
  std::vector<VarianceReport> reps =
      scan(table, opt.x_grid, policy, id, cs, memo, opt.threads,
           opt.normalize_exponent);
  std::printf("%s\n", reports_emit(reps, format_from_name(opt.format)).c_str());
  return 0;
}

int cmd_diagnose(const Options& opt) {
  CubeRepTable table = load_table(opt, opt.x);
  double xd = static_cast<double>(opt.x);
  double max_ratio = 0.0;
  std::printf("q,a,beta,delta_abs,bound_ratio\n");
  for (u64 q = 1; q <= opt.q_max; ++q) {
    for (u64 a = 1; a <= q; ++a) {
      if ((a % q == 0 ? q : gcd_u64(q, a)) != 1) continue;
      double qd = static_cast<double>(q);
      std::vector<double> betas = {0.0, 0.5 / (qd * std::sqrt(xd)),
                                   -0.5 / (qd * std::sqrt(xd)),
                                   0.5 / (qd * (xd / qd)),
                                   -0.5 / (qd * (xd / qd))};
      for (double beta : betas) {
        ArcDiagnostic d = arc_diagnostic(table, opt.x, q, a, beta);
        max_ratio = std::max(max_ratio, d.bound_ratio);
        std::printf("%llu,%llu,%s,%s,%s\n", static_cast<unsigned long long>(q),
                    static_cast<unsigned long long>(a),
                    fmt_double(beta).c_str(), fmt_double(d.delta_abs).c_str(),
                    fmt_double(d.bound_ratio).c_str());
      }
    }
  }
  std::printf("# max_bound_ratio=%s\n", fmt_double(max_ratio).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variance laboratory for sums of three positive cubes"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", opt.threads, "worker count (0 = auto)");
    sub->add_option("--cache", opt.cache_path, "sieve cache path");
    sub->add_option("--prime-cutoff", opt.prime_cutoff);
    sub->add_option("--series-cutoff", opt.series_cutoff);
    sub->add_option("--format", opt.format)
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* sieve = app.add_subcommand("sieve", "build the r3 cache");
  sieve->add_option("--x-max", opt.x_max)->required();
  add_common(sieve);

  CLI::App* consts = app.add_subcommand("constants", "named constants");
  add_common(consts);

  CLI::App* gauss = app.add_subcommand("gauss-sum", "cubic exponential sum");
  gauss->add_option("--q", opt.q)->required();
  gauss->add_option("--a", opt.a)->required();

  CLI::App* rho = app.add_subcommand("rho", "local densities");
  rho->add_option("--q", opt.q)->required();
  CLI::Option* rho_a = rho->add_option("--a", opt.a);

  CLI::App* ident = app.add_subcommand("identities", "identity suites");
  add_common(ident);

  CLI::App* pred = app.add_subcommand("predict", "closed-form prediction");
  pred->add_option("--x", opt.x)->required();
  pred->add_option("--q", opt.q)->required();
  pred->add_option("--formula", opt.formula)->required();
  add_common(pred);

  CLI::App* var = app.add_subcommand("variance", "empirical variance");
  var->add_option("--x", opt.x)->required();
  var->add_option("--q", opt.q)->required();
  var->add_option("--formula", opt.formula);
  var->add_option("--normalize-exponent", opt.normalize_exponent);
  add_common(var);

  CLI::App* scan_cmd = app.add_subcommand("scan", "variance over an x grid");
  scan_cmd->add_option("--x", opt.x_grid, "grid points (repeatable)");
  scan_cmd->add_option("--q-policy", opt.q_policy,
                       "x, x/2, sqrtxlogx or fixed");
  scan_cmd->add_option("--q", opt.q, "Q for --q-policy fixed");
  scan_cmd->add_option("--formula", opt.formula);
  scan_cmd->add_option("--normalize-exponent", opt.normalize_exponent);
  add_common(scan_cmd);

  CLI::App* diag = app.add_subcommand("diagnose", "major-arc diagnostics");
  diag->add_option("--x", opt.x)->required();
  diag->add_option("--q-max", opt.q_max);
  add_common(diag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (sieve->parsed()) return cmd_sieve(opt);
    if (consts->parsed()) return cmd_constants(opt);
    if (gauss->parsed()) return cmd_gauss_sum(opt);
    if (rho->parsed()) return cmd_rho(opt, rho_a->count() > 0);
    if (ident->parsed()) return cmd_identities(opt);
    if (pred->parsed()) return cmd_predict(opt);
    if (var->parsed()) return cmd_variance(opt);
    if (scan_cmd->parsed()) return cmd_scan(opt);
    if (diag->parsed()) return cmd_diagnose(opt);
  } catch (const CacheIoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kExitIo;
  } catch (const CacheCorruptError& e) {
    std::fprintf(stderr, "cache error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
