#pragma once

#include "kga/modulation.hpp"

namespace kga {

/// Average receive SNR (linear scale), Omega = omega * lambda.
struct SnrPoint {
  double omega;

  explicit SnrPoint(double value);
  static SnrPoint from_db(double db);
  double db() const;
};

enum class BerKind { Exact, UpperBound, Approximate };

/// Convention for the no-integral upper bound. The printed closed form
/// carries a 1/pi prefactor; bounding the integrand by its maximum over
/// the integration range actually yields 1/2. Both are provided; only the
/// 1/2 form is a true upper bound at all SNRs.
enum class UbConvention { PaperPiInverse, StrictHalf };

struct BerEstimator {
  BerKind kind = BerKind::Approximate;
  int diversity_order = 1;  // 1 = single antenna
  UbConvention ub_convention = UbConvention::PaperPiInverse;

  /// Throws std::invalid_argument on unsupported combinations
  /// (Exact and UpperBound are derived for diversity_order == 1 only).
  void validate() const;
};

/// AWGN bit error rate of the constellation at receive SNR rho >= 0:
/// sum_i C_i Q(sqrt(c_i rho)).
double awgn_ber(const Modulation& mod, double rho);

/// Density of the scheduled (largest of k) receive SNR at y >= 0.
/// diversity_order D gives each user a chi-squared(2D)/2 shaped SNR with
/// per-degree scale Omega; D = 1 is the exponential case.
double kga_snr_pdf(int k, SnrPoint omega, int diversity_order, double y);

/// System BER of best-of-k scheduling, closed form with a finite-range
/// integral of beta functions; adaptive quadrature at 1e-10 relative
/// tolerance. Throws QuadratureError if the tolerance cannot be met.
double exact_ber(const Modulation& mod, int k, SnrPoint omega);

/// Chernoff-style bound: sum_i C_i * pref * k * B(k, 1 + c_i/2 * Omega)
/// with pref = 1/pi or 1/2 depending on the convention.
double ub_ber(const Modulation& mod, int k, SnrPoint omega,
              UbConvention convention = UbConvention::PaperPiInverse);

/// Single-beta approximation 0.2 * k * B(k, 1 + g_a * Omega). Accepts
/// real-valued k >= 1 so it can be differentiated in k.
double approx_ber(const Modulation& mod, double k, SnrPoint omega);

/// Approximate BER with diversity order D >= 1: 0.2 * k * int_0^inf
/// t^(D-1) e^(-(1+g_a Omega) t) gamma(D, t)^(k-1) / Gamma(D)^k dt.
/// Reduces to approx_ber at D = 1.
double multi_antenna_approx_ber(const Modulation& mod, int k, SnrPoint omega,
                                int diversity_order);

/// Dispatch on the estimator configuration.
double system_ber(const Modulation& mod, int k, SnrPoint omega,
                  const BerEstimator& estimator);

}  // namespace kga
