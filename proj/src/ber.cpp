#include "kga/ber.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kga/quadrature.hpp"
#include "kga/specfun.hpp"

namespace kga {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

SnrPoint::SnrPoint(double value) : omega(value) {
  if (!(omega > 0.0))
    throw std::invalid_argument("SnrPoint: Omega must be > 0");
}

SnrPoint SnrPoint::from_db(double db) {
  return SnrPoint(std::pow(10.0, db / 10.0));
}

double SnrPoint::db() const { return 10.0 * std::log10(omega); }

void BerEstimator::validate() const {
  if (diversity_order < 1)
    throw std::invalid_argument("BerEstimator: diversity_order must be >= 1");
  if (diversity_order > 1 && kind != BerKind::Approximate)
    throw std::invalid_argument(
        "BerEstimator: Exact and UpperBound are single-antenna only");
}

double awgn_ber(const Modulation& mod, double rho) {
  if (rho < 0.0) throw std::domain_error("awgn_ber: rho must be >= 0");
  double sum = 0.0;
  for (const auto& term : mod.terms())
    sum += term.weight * specfun::q_function(std::sqrt(term.snr_scale * rho));
  return sum;
}

double kga_snr_pdf(int k, SnrPoint omega, int diversity_order, double y) {
  if (k < 1) throw std::domain_error("kga_snr_pdf: k must be >= 1");
  if (diversity_order < 1)
    throw std::domain_error("kga_snr_pdf: diversity_order must be >= 1");
  if (y < 0.0) return 0.0;
  const double w = omega.omega;
  const double t = y / w;
  if (diversity_order == 1) {
    if (k == 1) return std::exp(-t) / w;
    return k * std::exp(-t) / w * std::pow(-std::expm1(-t), k - 1);
  }
  // Largest of k i.i.d. gamma(D, Omega) variables: density written with the
  // regularized incomplete gamma so large k stays in range.
  const double d = diversity_order;
  const double p = specfun::reg_lower_inc_gamma(d, t);
  if (t == 0.0) return 0.0;
  const double log_pdf = std::log(static_cast<double>(k)) - t - std::log(w) +
                         (d - 1.0) * std::log(t) - specfun::log_gamma(d) +
                         (k - 1.0) * std::log(p > 0.0 ? p : 0.0);
  if (p <= 0.0) return 0.0;
  return std::exp(log_pdf);
}

double exact_ber(const Modulation& mod, int k, SnrPoint omega) {
  if (k < 1) throw std::domain_error("exact_ber: k must be >= 1");
  const double w = omega.omega;
  const double log_gamma_k = specfun::log_gamma(static_cast<double>(k));
  double sum = 0.0;
  for (const auto& term : mod.terms()) {
    auto integrand = [&](double theta) {
      const double s = std::sin(theta);
      const double g_theta = term.snr_scale / (2.0 * s * s);
      // B(k, 1 + g_theta * Omega); vanishes as theta -> 0.
      const double yy = 1.0 + g_theta * w;
      return std::exp(log_gamma_k + specfun::log_gamma(yy) -
                      specfun::log_gamma(k + yy));
    };
    const double integral =
        integrate(integrand, 1e-12, kPi / 2, 1e-10, 1e-300, 4000).value;
    sum += term.weight * k * integral / kPi;
  }
  return sum;
}

double ub_ber(const Modulation& mod, int k, SnrPoint omega,
              UbConvention convention) {
  if (k < 1) throw std::domain_error("ub_ber: k must be >= 1");
  const double pref =
      convention == UbConvention::PaperPiInverse ? 1.0 / kPi : 0.5;
  double sum = 0.0;
  for (const auto& term : mod.terms()) {
    const double y = 1.0 + 0.5 * term.snr_scale * omega.omega;
    sum += term.weight * pref * k *
           std::exp(specfun::log_beta(static_cast<double>(k), y));
  }
  return sum;
}

double approx_ber(const Modulation& mod, double k, SnrPoint omega) {
  if (!(k >= 1.0)) throw std::domain_error("approx_ber: k must be >= 1");
  const double y = 1.0 + mod.approx_constant() * omega.omega;
  return 0.2 * k * std::exp(specfun::log_beta(k, y));
}

double multi_antenna_approx_ber(const Modulation& mod, int k, SnrPoint omega,
                                int diversity_order) {
  if (k < 1)
    throw std::domain_error("multi_antenna_approx_ber: k must be >= 1");
  if (diversity_order < 1)
    throw std::domain_error(
        "multi_antenna_approx_ber: diversity_order must be >= 1");
  const double d = diversity_order;
  const double decay = 1.0 + mod.approx_constant() * omega.omega;
  const double log_gamma_d = specfun::log_gamma(d);
  auto integrand = [&](double t) {
    if (t <= 0.0) return d == 1.0 ? 1.0 : 0.0;
    const double p = specfun::reg_lower_inc_gamma(d, t);
    if (p <= 0.0) return 0.0;
    return std::exp((d - 1.0) * std::log(t) - decay * t +
                    (k - 1.0) * std::log(p) - log_gamma_d);
  };
  // Truncation point: the integrand decays at least like e^-t past the
  // order-statistic peak near ln(k) + D.
  const double t_max =
      std::max(50.0, 20.0 * d + 10.0 * std::log(k + 1.0));
  const double integral =
      integrate(integrand, 0.0, t_max, 1e-8, 1e-300, 4000).value;
  return 0.2 * k * integral;
}

double system_ber(const Modulation& mod, int k, SnrPoint omega,
                  const BerEstimator& estimator) {
  estimator.validate();
  switch (estimator.kind) {
    case BerKind::Exact:
      return exact_ber(mod, k, omega);
    case BerKind::UpperBound:
      return ub_ber(mod, k, omega, estimator.ub_convention);
    case BerKind::Approximate:
      if (estimator.diversity_order == 1)
        return approx_ber(mod, static_cast<double>(k), omega);
      return multi_antenna_approx_ber(mod, k, omega,
                                      estimator.diversity_order);
  }
  throw std::logic_error("system_ber: unknown estimator kind");
}

}  // namespace kga
