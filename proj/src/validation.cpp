#include "kga/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>

#include "kga/asymptotics.hpp"
#include "kga/ber.hpp"
#include "kga/energy.hpp"
#include "kga/experiment.hpp"
#include "kga/optimize.hpp"
#include "kga/sim.hpp"
#include "kga/specfun.hpp"

namespace kga {

namespace {

CheckResult make_result(std::string name, double observed, double expected,
                        double tolerance, std::string detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.observed = observed;
  r.expected = expected;
  r.tolerance = tolerance;
  r.passed = std::abs(observed - expected) <= tolerance;
  r.detail = std::move(detail);
  return r;
}

CheckResult check_theorem1() {
  // |x^y B(x,y)/Gamma(y) - 1| is y(y-1)/(2x) to first order; check against
  // that bound with 5% slack. y = 1 is exact (x B(x,1) = 1).
  double worst_excess = 0.0;
  for (int y = 1; y <= 6; ++y) {
    const double err = std::abs(theorem1_ratio(1e3, y) - 1.0);
    const double bound = y * (y - 1.0) / (2.0 * 1e3);
    worst_excess = std::max(worst_excess, err - 1.05 * bound);
  }
  bool monotone = true;
  for (int y = 2; y <= 6; ++y) {
    const double e2 = std::abs(theorem1_ratio(1e2, y) - 1.0);
    const double e3 = std::abs(theorem1_ratio(1e3, y) - 1.0);
    const double e4 = std::abs(theorem1_ratio(1e4, y) - 1.0);
    monotone = monotone && e2 > e3 && e3 > e4;
  }
  auto r = make_result("theorem1-beta-ratio", worst_excess, 0.0, 1e-12);
  r.passed = worst_excess <= 1e-12 && monotone;
  if (!monotone) r.detail = "error not monotone in the first argument";
  return r;
}

CheckResult check_gamma_identities() {
  double worst = 0.0;
  for (double x : {0.1, 0.7, 1.5, 3.0, 10.0, 50.0}) {
    const double lhs = std::exp(specfun::log_gamma(x + 1.0));
    const double rhs = x * std::exp(specfun::log_gamma(x));
    worst = std::max(worst, std::abs(lhs - rhs) / rhs);
  }
  for (double x : {0.3, 1.2, 4.5}) {
    double sum = 0.0;
    for (int l = 0; l < 7; ++l) sum += 1.0 / (x + l);
    const double diff = specfun::digamma(x + 7.0) - specfun::digamma(x) - sum;
    worst = std::max(worst, std::abs(diff));
  }
  worst = std::max(
      worst, std::abs(specfun::beta(3.7, 2.2) - specfun::beta(2.2, 3.7)));
  worst = std::max(worst, std::abs(specfun::beta(1.0, 2.0) - 0.5));
  return make_result("gamma-identities", worst, 0.0, 1e-10);
}

CheckResult check_q_function() {
  double worst = 0.0;
  for (double x = 0.0; x <= 8.0; x += 0.25)
    worst = std::max(worst, std::abs(specfun::q_function(x) -
                                     specfun::q_function_craig(x)));
  return make_result("q-function-craig-agreement", worst, 0.0, 1e-9);
}

CheckResult check_rayleigh() {
  const Modulation mod = Modulation::qam(4);
  const double omega = 10.0;
  const double closed = 0.5 * (1.0 - std::sqrt(omega / (2.0 + omega)));
  const double computed = exact_ber(mod, 1, SnrPoint(omega));
  return make_result("single-user-rayleigh-closed-form",
                     computed / closed, 1.0, 1e-8);
}

CheckResult check_approx_identity(const ValidationHooks& hooks) {
  const Modulation mod = Modulation::qam(4);
  double worst = 0.0;
  for (double omega : {0.5, 2.0, 10.0, 100.0}) {
    const double value =
        hooks.approx_ber_scale * approx_ber(mod, 1.0, SnrPoint(omega));
    const double analytic = 0.2 / (1.0 + mod.approx_constant() * omega);
    worst = std::max(worst, std::abs(value - analytic) / analytic);
  }
  return make_result("approx-ber-k1-identity", worst, 0.0, 1e-12);
}

CheckResult check_d1_reduction(const ValidationHooks& hooks) {
  const Modulation mod = Modulation::qam(4);
  double worst = 0.0;
  for (int k : {1, 3, 10, 40}) {
    for (double db : {0.0, 10.0, 20.0}) {
      const SnrPoint omega = SnrPoint::from_db(db);
      const double general = multi_antenna_approx_ber(mod, k, omega, 1);
      const double single =
          hooks.approx_ber_scale * approx_ber(mod, k, omega);
      worst = std::max(worst, std::abs(general - single) / single);
    }
  }
  return make_result("multi-antenna-d1-reduction", worst, 0.0, 1e-8);
}

CheckResult check_solver_vs_exhaustive(std::uint64_t seed, int configs) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kbar_dist(5, 200);
  std::uniform_real_distribution<double> log_alpha(std::log(0.5),
                                                   std::log(32.0));
  std::uniform_real_distribution<double> snr_db(-5.0, 25.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Modulation mod = Modulation::qam(4);
  const BerEstimator est;

  int mismatches = 0;
  std::string detail;
  for (int c = 0; c < configs; ++c) {
    const int kbar = kbar_dist(rng);
    SystemConfig cfg = SystemConfig::make(
        kbar, std::exp(log_alpha(rng)),
        std::pow(10.0, snr_db(rng) / 10.0));
    if (unit(rng) < 0.3 && kbar > 4) {
      // Hardware-limited candidate sets: keep a random subset.
      std::vector<int> keep;
      for (int k = 1; k <= kbar; ++k)
        if (unit(rng) < 0.5) keep.push_back(k);
      if (keep.size() >= 2) cfg.candidate_set = keep;
    }
    const auto outcome = solve_kb_min_ber(cfg, mod, est);
    int best_k = cfg.candidate_set.front();
    double best_ber = approx_ber(
        mod, best_k, SnrPoint(cfg.omega * lambda_of_k(cfg, best_k)));
    for (int k : cfg.candidate_set) {
      const double ber =
          approx_ber(mod, k, SnrPoint(cfg.omega * lambda_of_k(cfg, k)));
      if (ber < best_ber) {
        best_ber = ber;
        best_k = k;
      }
    }
    if (outcome.k_star != best_k) {
      ++mismatches;
      if (detail.empty())
        detail = "first mismatch: kbar=" + std::to_string(kbar) +
                 " solver=" + std::to_string(outcome.k_star) +
                 " exhaustive=" + std::to_string(best_k);
    }
  }
  return make_result("solver-vs-exhaustive-" + std::to_string(configs),
                     mismatches, 0.0, 0.0, detail);
}

CheckResult check_eta_finite_difference(std::uint64_t seed, int configs,
                                        int grid) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kbar_dist(10, 150);
  std::uniform_real_distribution<double> log_alpha(std::log(0.5),
                                                   std::log(32.0));
  std::uniform_real_distribution<double> snr_db(-5.0, 20.0);
  const Modulation mod = Modulation::qam(4);
  double worst = 0.0;
  for (int c = 0; c < configs; ++c) {
    const int kbar = kbar_dist(rng);
    SystemConfig cfg = SystemConfig::make(
        kbar, std::exp(log_alpha(rng)), std::pow(10.0, snr_db(rng) / 10.0));
    const EtaContext ec = EtaContext::energy_constrained(cfg, mod);
    const EtaContext fp =
        EtaContext::fixed_power(mod, SnrPoint(cfg.omega_n()));
    const double h = 1e-4;
    for (int i = 0; i < grid; ++i) {
      const double k =
          1.0 + h + (kbar - 1.0 - 2 * h) * (i + 0.5) / grid;
      for (const EtaContext* ctx : {&ec, &fp}) {
        auto ln_ber = [&](double kk) {
          const double f = ctx->f(kk);
          return std::log(0.2) + std::log(kk) +
                 specfun::log_beta(kk, 1.0 + f);
        };
        const double fd = (ln_ber(k + h) - ln_ber(k - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(eta(*ctx, k) - fd));
      }
    }
  }
  return make_result("eta-vs-finite-difference", worst, 0.0, 1e-6);
}

CheckResult check_energy_balance() {
  SystemConfig cfg = SystemConfig::make(137, 3.25, 2.0);
  double worst = 0.0;
  const double ed_ga = cfg.ed_ga();
  for (int k = 1; k <= cfg.kbar; ++k) {
    const double lhs = k / cfg.alpha * ed_ga + data_energy_of_k(cfg, k, ed_ga);
    const double rhs = cfg.kbar / cfg.alpha * ed_ga + ed_ga;
    worst = std::max(worst, std::abs(lhs - rhs) / rhs);
  }
  return make_result("reallocation-energy-balance", worst, 0.0, 1e-9);
}

CheckResult check_mc_vs_exact(std::uint64_t seed, long symbols_per_cfg,
                              bool full_grid) {
  const Modulation mod = Modulation::qam(4);
  const std::vector<int> ks = full_grid ? std::vector<int>{1, 4, 10}
                                        : std::vector<int>{4};
  const std::vector<double> omegas_db =
      full_grid ? std::vector<double>{5.0, 10.0, 15.0}
                : std::vector<double>{10.0};
  double worst_sigma = 0.0;
  std::string detail;
  for (int k : ks) {
    for (double db : omegas_db) {
      SystemConfig cfg = SystemConfig::make(std::max(k, 8), 1.0, 1.0);
      const SnrPoint omega = SnrPoint::from_db(db);
      // One symbol per slot so the fading average happens at the bit level
      // and the binomial standard error is the real sampling error.
      const auto report = run_monte_carlo(cfg, mod, ChannelModel{}, k,
                                          omega.omega / cfg.omega,
                                          symbols_per_cfg, 1,
                                          seed ^ (k * 131 + int(db)));
      const double closed = exact_ber(mod, k, omega);
      // Scale by the sampling error under the closed-form rate (score
      // form): the reported Wald error degenerates to zero when no bit
      // errors occur.
      const long bits = symbols_per_cfg * mod.bits_per_symbol();
      const double se = std::sqrt(closed * (1.0 - closed) / bits);
      const double sigmas = std::abs(report.empirical_ber - closed) / se;
      if (sigmas > worst_sigma) {
        worst_sigma = sigmas;
        char buf[96];
        std::snprintf(buf, sizeof(buf), "k=%d omega=%.0fdB mc=%.3e closed=%.3e",
                      k, db, report.empirical_ber, closed);
        detail = buf;
      }
    }
  }
  return make_result(full_grid ? "mc-vs-exact-grid" : "mc-vs-exact",
                     worst_sigma, 0.0, 3.0, detail);
}

CheckResult check_fairness(std::uint64_t seed) {
  const int kbar = 20;
  const long slots = 200000;
  SystemConfig cfg = SystemConfig::make(kbar, 1.0, 1.0);
  const auto report = run_monte_carlo(cfg, Modulation::qam(4), ChannelModel{},
                                      5, 1.0, slots, 1, seed);
  const double p = 1.0 / kbar;
  const double sigma = std::sqrt(p * (1 - p) / slots);
  double worst = 0.0;
  double chi2 = 0.0;
  for (long count : report.access_counts) {
    const double freq = static_cast<double>(count) / slots;
    worst = std::max(worst, std::abs(freq - p) / sigma);
    const double expect = p * slots;
    chi2 += (count - expect) * (count - expect) / expect;
  }
  auto r = make_result("scheduling-fairness", worst, 0.0, 3.0);
  // 99.9% quantile of chi-squared with kbar - 1 = 19 dof.
  if (chi2 > 43.82) {
    r.passed = false;
    r.detail = "chi2=" + std::to_string(chi2) + " > 43.82";
  }
  return r;
}

CheckResult check_multi_antenna_mc(std::uint64_t seed) {
  const Modulation mod = Modulation::qam(4);
  const int k = 5, d = 2;
  const SnrPoint omega(std::pow(10.0, 0.5));
  const double closed = multi_antenna_approx_ber(mod, k, omega, d);
  std::mt19937_64 rng(seed);
  std::gamma_distribution<double> gamma_d(static_cast<double>(d), 1.0);
  const long draws = 1000000;
  const double g_omega = mod.approx_constant() * omega.omega;
  double sum = 0.0, sum_sq = 0.0;
  for (long i = 0; i < draws; ++i) {
    double best = 0.0;
    for (int j = 0; j < k; ++j) best = std::max(best, gamma_d(rng));
    const double value = 0.2 * std::exp(-g_omega * best);
    sum += value;
    sum_sq += value * value;
  }
  const double mean = sum / draws;
  const double se =
      std::sqrt((sum_sq / draws - mean * mean) / (draws - 1.0));
  return make_result("multi-antenna-d2-monte-carlo",
                     std::abs(mean - closed) / se, 0.0, 3.0);
}

CheckResult check_quoted_operating_point() {
  // Reproduction of the quoted optimum (kbar=100, alpha=1, baseline SNR
  // 4 dB -> k* ~ 67). The closed forms place the optimum near 52, so this
  // check documents the discrepancy rather than hiding it.
  SystemConfig cfg = SystemConfig::make(100, 1.0, std::pow(10.0, 0.4));
  const auto outcome =
      solve_kb_min_ber(cfg, Modulation::qam(4), BerEstimator{});
  return make_result("quoted-optimum-k67", outcome.k_star, 67.0, 3.0);
}

CheckResult check_dt_ds_trends(std::uint64_t seed) {
  const Modulation mod = Modulation::qam(4);
  std::vector<double> lambda_db;
  for (double db = 0.0; db <= 20.0; db += 2.0) lambda_db.push_back(db);
  const auto sweep =
      dt_ds_sweep(mod, 100, 1.0, 1e-3, lambda_db, ChannelModel{}, 500, seed);
  int violations = 0;
  std::string detail;
  double prev_dt = std::numeric_limits<double>::infinity();
  double prev_ds = std::numeric_limits<double>::infinity();
  for (const auto& pt : sweep) {
    if (!std::isnan(pt.avg_ber_dt) && pt.avg_ber_dt > 1e-3) ++violations;
    if (!std::isnan(pt.norm_pt_dt)) {
      if (pt.norm_pt_dt > prev_dt + 1e-9) ++violations;
      if (pt.norm_pt_dt > pt.norm_pt_ds + 1e-12) ++violations;
      prev_dt = pt.norm_pt_dt;
    }
    if (pt.norm_pt_ds > prev_ds + 1e-9) ++violations;
    prev_ds = pt.norm_pt_ds;
  }
  return make_result("dt-ds-trends", violations, 0.0, 0.0);
}

}  // namespace

std::vector<CheckResult> run_validation(ValidationLevel level,
                                        std::uint64_t seed,
                                        const ValidationHooks& hooks) {
  std::vector<CheckResult> results;
  results.push_back(check_theorem1());
  results.push_back(check_gamma_identities());
  results.push_back(check_q_function());
  results.push_back(check_rayleigh());
  results.push_back(check_approx_identity(hooks));
  results.push_back(check_d1_reduction(hooks));
  results.push_back(check_energy_balance());
  results.push_back(check_eta_finite_difference(seed, 5, 10));
  results.push_back(check_solver_vs_exhaustive(seed, 20));
  results.push_back(check_mc_vs_exact(seed, 200000, false));
  if (level == ValidationLevel::Full) {
    results.push_back(check_solver_vs_exhaustive(seed + 1, 100));
    results.push_back(check_eta_finite_difference(seed + 2, 20, 50));
    results.push_back(check_mc_vs_exact(seed + 3, 1000000, true));
    results.push_back(check_fairness(seed + 4));
    results.push_back(check_multi_antenna_mc(seed + 5));
    results.push_back(check_dt_ds_trends(seed + 6));
    results.push_back(check_quoted_operating_point());
  }
  return results;
}

void print_report(const std::vector<CheckResult>& results, std::ostream& out) {
  for (const auto& r : results) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%-34s %s  observed=%.6g expected=%.6g tol=%.3g",
                  r.name.c_str(), r.passed ? "PASS" : "FAIL", r.observed,
                  r.expected, r.tolerance);
    out << buf;
    if (!r.detail.empty()) out << "  [" << r.detail << "]";
    out << '\n';
  }
}

}  // namespace kga
