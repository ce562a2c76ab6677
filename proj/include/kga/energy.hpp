#pragma once

#include <vector>

namespace kga {

/// Static description of the uplink system: user population, energy split
/// between scheduling and data transmission, power control, and slot timing.
///
/// alpha is the ratio of the all-users-active data energy to the per-user
/// scheduling energy; it controls how much transmit power is recovered by
/// keeping fewer users active. lambda_ga is the all-users-active average
/// transmit power, so omega * lambda_ga is the baseline average receive SNR.
struct SystemConfig {
  int kbar = 1;                    // total users
  std::vector<int> candidate_set;  // sorted ascending, subset of [1, kbar]
  double alpha = 1.0;
  double omega = 1.0;     // desired average receive power per unit tx power
  double lambda_ga = 1.0;  // baseline average transmit power
  double c_norm = 1.0;    // power-normalization constant
  long n_slots = 10000;
  double ts = 1.0;                // symbol duration [s]
  std::vector<double> sigma_sq;   // per-user channel variances; empty = all 1

  /// Full candidate set {1..kbar}, unit channels, c = 1.
  static SystemConfig make(int kbar, double alpha, double lambda_ga);

  /// Installs per-user channel variances and recomputes c_norm as
  /// kbar / (omega * sum_k 1/sigma_k^2).
  void set_sigma_sq(std::vector<double> values);

  double omega_n() const { return omega * lambda_ga; }      // baseline SNR
  double ed_ga() const { return n_slots * ts * lambda_ga; } // baseline data energy
  double ef() const { return ed_ga() / alpha; }             // per-user scheduling energy
  double total_energy_ga() const { return kbar * ef() + ed_ga(); }

  /// True when slots per user are plentiful enough (n/kbar >= 100) for the
  /// averaged energy accounting to be trustworthy.
  bool slot_average_valid() const;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Energy totals for one choice of active-user count.
struct EnergyBreakdown {
  int k = 0;
  double ef = 0.0;      // per-user scheduling energy over n_slots
  double ed = 0.0;      // total data energy
  double etotal = 0.0;  // k * ef + ed
  double pt = 0.0;      // etotal / (n_slots * ts)
};

/// Per-user transmit power lambda_k = (omega / sigma_k^2) * lambda.
/// k is 1-based.
double transmit_power(const SystemConfig& cfg, int k, double lambda);

/// Data energy available when only k of kbar users stay active and the
/// total energy is held at the all-active baseline:
/// ((kbar - k)/alpha + 1) * ed_ga.
double data_energy_of_k(const SystemConfig& cfg, int k, double ed_ga);

/// Average data transmit power under the fixed-total-energy constraint:
/// lambda(k) = ((kbar - k)/alpha + 1) * c * lambda_ga.
double lambda_of_k(const SystemConfig& cfg, int k);

/// Energy accounting when the data power is held fixed (BER-constrained
/// problems): ed stays at ed_ga and the total shrinks with k.
EnergyBreakdown total_energy_fixed_ber(const SystemConfig& cfg, int k,
                                       double ed_ga);

/// Energy spent by user k in one slot: scheduling share ef/n plus, when
/// scheduled, the data symbol energy lambda_k * ts.
double per_slot_energy(const SystemConfig& cfg, int k, bool is_scheduled,
                       double lambda);

}  // namespace kga
