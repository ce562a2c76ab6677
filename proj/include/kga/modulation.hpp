#pragma once

#include <span>
#include <vector>

namespace kga {

/// One weighted Q-function term of the AWGN bit-error expression:
/// contributes weight * Q(sqrt(snr_scale * rho)).
struct QamTerm {
  double weight;     // C_i; weights sum to 1 so the BER at zero SNR is 0.5
  double snr_scale;  // c_i > 0
};

/// Gray-coded square QAM constellation with its AWGN BER constants.
class Modulation {
 public:
  /// Supported orders: 4 and 64.
  static Modulation qam(int order);

  int order() const { return order_; }
  int bits_per_symbol() const { return bits_per_symbol_; }
  std::span<const QamTerm> terms() const { return terms_; }

  /// Constant of the one-exponential BER approximation
  /// Pr_b(rho) ~ 0.2 exp(-g rho), g = 1.5 / (M - 1).
  double approx_constant() const { return 1.5 / (order_ - 1); }

 private:
  Modulation(int order, std::vector<QamTerm> terms);

  int order_;
  int bits_per_symbol_;
  std::vector<QamTerm> terms_;
};

}  // namespace kga
