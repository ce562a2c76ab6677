#include "kga/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "kga/specfun.hpp"

namespace kga {

double theorem1_ratio(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0))
    throw std::domain_error("theorem1_ratio: arguments must be > 0");
  return std::exp(y * std::log(x) + specfun::log_beta(x, y) -
                  specfun::log_gamma(y));
}

double ber_large_k(const Modulation& mod, double k, SnrPoint omega) {
  if (!(k >= 1.0)) throw std::domain_error("ber_large_k: k must be >= 1");
  const double y = mod.approx_constant() * omega.omega;
  return std::exp(std::log(0.2) + specfun::log_gamma(1.0 + y) -
                  y * std::log(k));
}

double ber_high_snr(const Modulation& mod, double k, SnrPoint omega) {
  if (!(k >= 1.0)) throw std::domain_error("ber_high_snr: k must be >= 1");
  const double ga = mod.approx_constant();
  return std::exp(std::log(0.2) - k * std::log(ga) +
                  specfun::log_gamma(k + 1.0) - k * std::log(omega.omega));
}

double k_lower_bound_large_k(const Modulation& mod, SnrPoint omega,
                             double ber_target) {
  if (!(ber_target > 0.0 && ber_target < 0.5))
    throw std::domain_error(
        "k_lower_bound_large_k: ber_target must lie in (0, 0.5)");
  const double y = mod.approx_constant() * omega.omega;
  return std::exp((std::log(0.2) + specfun::log_gamma(1.0 + y) -
                   std::log(ber_target)) /
                  y);
}

double k_lower_bound_high_snr(const Modulation& mod, SnrPoint omega,
                              double ber_target) {
  if (!(ber_target > 0.0 && ber_target < 0.5))
    throw std::domain_error(
        "k_lower_bound_high_snr: ber_target must lie in (0, 0.5)");
  const double y = mod.approx_constant() * omega.omega;
  if (!(y > 1.0))
    throw std::domain_error("k_lower_bound_high_snr: needs g_a * Omega > 1");
  return std::log(1.0 / ber_target) / std::log(y);
}

ScalingReport energy_constrained_scaling(const SystemConfig& cfg,
                                         const Modulation& mod, int k,
                                         AsymptoticRegime regime) {
  cfg.validate();
  const SnrPoint boosted(cfg.omega * lambda_of_k(cfg, k));
  ScalingReport report;
  report.regime = regime;
  report.predicted = regime == AsymptoticRegime::LargeK
                         ? ber_large_k(mod, k, boosted)
                         : ber_high_snr(mod, k, boosted);
  report.measured = approx_ber(mod, static_cast<double>(k), boosted);
  report.rel_err =
      std::abs(report.measured - report.predicted) / std::abs(report.predicted);
  return report;
}

}  // namespace kga
