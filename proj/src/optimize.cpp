#include "kga/optimize.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kga/specfun.hpp"

namespace kga {

EtaContext EtaContext::energy_constrained(const SystemConfig& cfg,
                                          const Modulation& mod) {
  const double ga = mod.approx_constant();
  const double slope = -ga * cfg.omega * cfg.c_norm * cfg.lambda_ga / cfg.alpha;
  EtaContext ctx;
  ctx.f = [cfg, ga](double k) {
    return ga * cfg.omega *
           ((cfg.kbar - k) / cfg.alpha + 1.0) * cfg.c_norm * cfg.lambda_ga;
  };
  ctx.f_prime = [slope](double) { return slope; };
  return ctx;
}

EtaContext EtaContext::fixed_power(const Modulation& mod, SnrPoint omega_n) {
  const double value = mod.approx_constant() * omega_n.omega;
  EtaContext ctx;
  ctx.f = [value](double) { return value; };
  ctx.f_prime = [](double) { return 0.0; };
  return ctx;
}

double eta(const EtaContext& ctx, double k) {
  if (!(k >= 1.0)) throw std::domain_error("eta: k must be >= 1");
  const double f = ctx.f(k);
  const double fp = ctx.f_prime(k);
  if (!(k + 1.0 + f > 0.0))
    throw std::domain_error("eta: k + 1 + f(k) must be > 0");
  return 1.0 / k + specfun::digamma(k) -
         (1.0 + fp) * specfun::digamma(k + 1.0 + f) +
         fp * specfun::digamma(1.0 + f);
}

namespace {

// sign with sign(0) = +1.
int sign_of(double x) { return x < 0.0 ? -1 : 1; }

double ber_at(const SystemConfig& cfg, const Modulation& mod,
              const BerEstimator& estimator, int k) {
  const SnrPoint snr(cfg.omega * lambda_of_k(cfg, k));
  return system_ber(mod, k, snr, estimator);
}

// Unimodal integer search over candidate indices; exhaustive for small
// sets, ternary otherwise.
int argmin_unimodal(const std::vector<int>& candidates,
                    const std::function<double(int)>& value) {
  const int n = static_cast<int>(candidates.size());
  if (n <= 512) {
    int best = 0;
    double best_value = value(candidates[0]);
    for (int i = 1; i < n; ++i) {
      const double v = value(candidates[i]);
      if (v < best_value) {
        best_value = v;
        best = i;
      }
    }
    return candidates[best];
  }
  int lo = 0, hi = n - 1;
  while (hi - lo > 2) {
    const int m1 = lo + (hi - lo) / 3;
    const int m2 = hi - (hi - lo) / 3;
    if (value(candidates[m1]) <= value(candidates[m2]))
      hi = m2;
    else
      lo = m1;
  }
  int best = lo;
  double best_value = value(candidates[lo]);
  for (int i = lo + 1; i <= hi; ++i) {
    const double v = value(candidates[i]);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  return candidates[best];
}

OptimizationOutcome outcome_for_ber_min(const SystemConfig& cfg,
                                        const Modulation& mod,
                                        const BerEstimator& estimator,
                                        int k_star) {
  OptimizationOutcome out;
  out.k_star = k_star;
  out.feasible = true;
  out.achieved_ber = ber_at(cfg, mod, estimator, k_star);
  out.energy.k = k_star;
  out.energy.ef = cfg.ef();
  out.energy.ed = data_energy_of_k(cfg, k_star, cfg.ed_ga());
  out.energy.etotal = k_star * out.energy.ef + out.energy.ed;
  out.energy.pt = out.energy.etotal / (cfg.n_slots * cfg.ts);
  out.gain_vs_ga_db = 10.0 * std::log10(lambda_of_k(cfg, k_star) / cfg.lambda_ga);
  return out;
}

}  // namespace

OptimizationOutcome solve_kb_min_ber(const SystemConfig& cfg,
                                     const Modulation& mod,
                                     const BerEstimator& estimator) {
  cfg.validate();
  estimator.validate();
  const std::vector<int>& cands = cfg.candidate_set;

  if (estimator.kind != BerKind::Approximate || estimator.diversity_order > 1) {
    // No closed-form derivative; search the BER directly.
    const int k_star = argmin_unimodal(
        cands, [&](int k) { return ber_at(cfg, mod, estimator, k); });
    return outcome_for_ber_min(cfg, mod, estimator, k_star);
  }

  const EtaContext ctx = EtaContext::energy_constrained(cfg, mod);
  auto eta_sign = [&](int k) { return sign_of(eta(ctx, k)); };

  // Boundary rules first: still descending at the top, or already
  // ascending at the bottom.
  if (eta_sign(cands.back()) == -1)
    return outcome_for_ber_min(cfg, mod, estimator, cands.back());
  if (eta_sign(cands.front()) == 1)
    return outcome_for_ber_min(cfg, mod, estimator, cands.front());

  // Bisect for the adjacent candidate pair where the sign flips.
  int lo = 0, hi = static_cast<int>(cands.size()) - 1;
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (eta_sign(cands[mid]) == -1)
      lo = mid;
    else
      hi = mid;
  }
  const double ber_lo = ber_at(cfg, mod, estimator, cands[lo]);
  const double ber_hi = ber_at(cfg, mod, estimator, cands[hi]);
  // Ties go to the smaller count: same BER for less scheduling energy.
  const int k_star = ber_hi < ber_lo ? cands[hi] : cands[lo];
  return outcome_for_ber_min(cfg, mod, estimator, k_star);
}

namespace {

OptimizationOutcome solve_min_energy(const SystemConfig& cfg,
                                     const Modulation& mod,
                                     const BerEstimator& estimator,
                                     double ber_target, bool delay_sensitive) {
  cfg.validate();
  estimator.validate();
  if (!(ber_target > 0.0 && ber_target < 0.5))
    throw std::invalid_argument(
        "solve_min_energy: ber_target must lie in (0, 0.5)");

  const std::vector<int>& cands = cfg.candidate_set;
  const SnrPoint snr(cfg.omega_n());
  auto ber_of = [&](int k) { return system_ber(mod, k, snr, estimator); };

  OptimizationOutcome out;
  if (ber_of(cands.back()) > ber_target) {
    // Even full activation misses the target.
    out.feasible = false;
    if (delay_sensitive) {
      out.k_star = cands.back();
      out.achieved_ber = ber_of(out.k_star);
      out.energy = total_energy_fixed_ber(cfg, out.k_star, cfg.ed_ga());
      out.gain_vs_ga_db =
          10.0 * std::log10(cfg.total_energy_ga() / out.energy.etotal);
    } else {
      // Delay-tolerant outage: defer, spend nothing.
      out.k_star = 0;
      out.achieved_ber = ber_of(cands.back());
      out.energy = EnergyBreakdown{};
      out.gain_vs_ga_db = 0.0;
    }
    return out;
  }

  // BER is decreasing in k, so feasibility is monotone along the
  // candidate list: binary search for the first feasible entry.
  int lo = 0, hi = static_cast<int>(cands.size()) - 1;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (ber_of(cands[mid]) <= ber_target)
      hi = mid;
    else
      lo = mid + 1;
  }
  out.k_star = cands[lo];
  out.feasible = true;
  out.achieved_ber = ber_of(out.k_star);
  out.energy = total_energy_fixed_ber(cfg, out.k_star, cfg.ed_ga());
  out.gain_vs_ga_db =
      10.0 * std::log10(cfg.total_energy_ga() / out.energy.etotal);
  return out;
}

}  // namespace

OptimizationOutcome solve_kdt_min_energy(const SystemConfig& cfg,
                                         const Modulation& mod,
                                         const BerEstimator& estimator,
                                         double ber_target) {
  return solve_min_energy(cfg, mod, estimator, ber_target, false);
}

OptimizationOutcome solve_kds_min_energy(const SystemConfig& cfg,
                                         const Modulation& mod,
                                         const BerEstimator& estimator,
                                         double ber_target) {
  return solve_min_energy(cfg, mod, estimator, ber_target, true);
}

}  // namespace kga
