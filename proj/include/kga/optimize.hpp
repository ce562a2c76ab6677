#pragma once

#include <functional>

#include "kga/ber.hpp"
#include "kga/energy.hpp"
#include "kga/modulation.hpp"

namespace kga {

/// Context for the derivative of the log approximate BER with respect to a
/// real-valued active-user count. f(k) = g_a * omega * lambda(k) is the
/// SNR-scaled data power; f_prime its derivative in k.
struct EtaContext {
  std::function<double(double)> f;
  std::function<double(double)> f_prime;

  /// Fixed-total-energy problem: lambda(k) from the reallocation rule,
  /// f_prime = -g_a * omega * c * lambda_ga / alpha.
  static EtaContext energy_constrained(const SystemConfig& cfg,
                                       const Modulation& mod);

  /// Fixed transmit power: f is constant, f_prime = 0.
  static EtaContext fixed_power(const Modulation& mod, SnrPoint omega_n);
};

/// d/dk ln Pr_b for the single-beta approximate BER, in digamma form:
/// 1/k + psi(k) - (1 + f'(k)) psi(k + 1 + f(k)) + f'(k) psi(1 + f(k)).
/// Valid for real k >= 1 and non-integer f(k).
double eta(const EtaContext& ctx, double k);

/// Result of an optimal-active-user-count solve. k_star == 0 encodes a
/// delay-tolerant outage (no candidate meets the BER target).
///
/// gain_vs_ga_db is the power gain over the all-users-active baseline:
/// 10 log10(lambda(k*)/lambda_ga) for the BER-minimization problem and
/// 10 log10(E_ga / E(k*)) (energy saving) for the energy-minimization ones.
struct OptimizationOutcome {
  int k_star = 0;
  double achieved_ber = 0.0;
  EnergyBreakdown energy;
  double gain_vs_ga_db = 0.0;
  bool feasible = false;
};

/// Minimize the system BER over the candidate set subject to the total
/// energy staying at the all-active baseline. For the approximate
/// single-antenna estimator the solve runs on the sign of eta: take the
/// boundary when eta does not change sign inside the set, otherwise
/// bisect to the adjacent candidate pair with the sign flip and keep the
/// endpoint with the smaller BER (ties -> smaller k). Exact/UpperBound
/// and multi-antenna estimators fall back to a unimodal integer search
/// (exhaustive when the candidate set is small).
OptimizationOutcome solve_kb_min_ber(const SystemConfig& cfg,
                                     const Modulation& mod,
                                     const BerEstimator& estimator);

/// Minimize the total energy subject to BER <= ber_target at fixed data
/// power lambda_ga (the BER is then monotone decreasing in k, so the
/// smallest feasible candidate wins; binary search). Delay-tolerant:
/// if even the largest candidate misses the target, return k_star = 0,
/// feasible = false (defer transmission).
OptimizationOutcome solve_kdt_min_energy(const SystemConfig& cfg,
                                         const Modulation& mod,
                                         const BerEstimator& estimator,
                                         double ber_target);

/// Delay-sensitive variant: identical when feasible; when infeasible,
/// transmit anyway with every candidate active (k_star = max candidate,
/// feasible = false).
OptimizationOutcome solve_kds_min_energy(const SystemConfig& cfg,
                                         const Modulation& mod,
                                         const BerEstimator& estimator,
                                         double ber_target);

}  // namespace kga
