#pragma once

#include "kga/ber.hpp"
#include "kga/energy.hpp"
#include "kga/modulation.hpp"

namespace kga {

enum class AsymptoticRegime { LargeK, HighSnr };

struct ScalingReport {
  AsymptoticRegime regime;
  double predicted = 0.0;
  double measured = 0.0;
  double rel_err = 0.0;  // |measured - predicted| / |predicted|
};

/// x^y * B(x, y) / Gamma(y); tends to 1 as x -> infinity for fixed y.
/// Evaluated in log space so large x never overflows.
double theorem1_ratio(double x, double y);

/// Large-k tail of the approximate BER: 0.2 Gamma(1 + g_a Omega) k^(-g_a Omega).
double ber_large_k(const Modulation& mod, double k, SnrPoint omega);

/// High-SNR tail: 0.2 g_a^-k Gamma(k + 1) Omega^-k.
double ber_high_snr(const Modulation& mod, double k, SnrPoint omega);

/// Smallest user count able to meet ber_target in the large-k regime:
/// (0.2 Gamma(1 + g_a Omega))^(1/(g_a Omega)) * ber_target^(-1/(g_a Omega)).
double k_lower_bound_large_k(const Modulation& mod, SnrPoint omega,
                             double ber_target);

/// High-SNR counterpart log(1/ber_target) / log(g_a Omega);
/// requires g_a * Omega > 1.
double k_lower_bound_high_snr(const Modulation& mod, SnrPoint omega,
                              double ber_target);

/// Compares the reallocation-aware asymptotic prediction (the chosen
/// regime's tail evaluated at the boosted SNR omega * lambda(k)) against
/// the approximate BER at the same operating point.
ScalingReport energy_constrained_scaling(const SystemConfig& cfg,
                                         const Modulation& mod, int k,
                                         AsymptoticRegime regime);

}  // namespace kga
