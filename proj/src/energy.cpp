#include "kga/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kga {

SystemConfig SystemConfig::make(int kbar, double alpha, double lambda_ga) {
  SystemConfig cfg;
  cfg.kbar = kbar;
  cfg.alpha = alpha;
  cfg.lambda_ga = lambda_ga;
  cfg.candidate_set.resize(kbar > 0 ? kbar : 0);
  std::iota(cfg.candidate_set.begin(), cfg.candidate_set.end(), 1);
  cfg.validate();
  return cfg;
}

void SystemConfig::set_sigma_sq(std::vector<double> values) {
  if (static_cast<int>(values.size()) != kbar)
    throw std::invalid_argument("sigma_sq: need one variance per user");
  double inv_sum = 0.0;
  for (double v : values) {
    if (!(v > 0.0))
      throw std::invalid_argument("sigma_sq: variances must be > 0");
    inv_sum += 1.0 / v;
  }
  sigma_sq = std::move(values);
  c_norm = kbar / (inv_sum * omega);
}

bool SystemConfig::slot_average_valid() const {
  return n_slots / static_cast<long>(kbar) >= 100;
}

void SystemConfig::validate() const {
  if (kbar < 1) throw std::invalid_argument("kbar: must be >= 1");
  if (candidate_set.empty())
    throw std::invalid_argument("candidate_set: must be non-empty");
  if (!std::is_sorted(candidate_set.begin(), candidate_set.end()))
    throw std::invalid_argument("candidate_set: must be sorted ascending");
  if (candidate_set.front() < 1 || candidate_set.back() > kbar)
    throw std::invalid_argument("candidate_set: entries must lie in [1, kbar]");
  if (std::adjacent_find(candidate_set.begin(), candidate_set.end()) !=
      candidate_set.end())
    throw std::invalid_argument("candidate_set: entries must be distinct");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha: must be > 0");
  if (!(omega > 0.0)) throw std::invalid_argument("omega: must be > 0");
  if (!(lambda_ga > 0.0)) throw std::invalid_argument("lambda_ga: must be > 0");
  if (!(c_norm > 0.0)) throw std::invalid_argument("c_norm: must be > 0");
  if (n_slots < 1) throw std::invalid_argument("n_slots: must be >= 1");
  if (!(ts > 0.0)) throw std::invalid_argument("ts: must be > 0");
  if (!sigma_sq.empty()) {
    if (static_cast<int>(sigma_sq.size()) != kbar)
      throw std::invalid_argument("sigma_sq: need one variance per user");
    double inv_sum = 0.0;
    for (double v : sigma_sq) {
      if (!(v > 0.0))
        throw std::invalid_argument("sigma_sq: variances must be > 0");
      inv_sum += 1.0 / v;
    }
    const double expected = kbar / (inv_sum * omega);
    if (std::abs(expected - c_norm) > 1e-12 * std::max(1.0, expected))
      throw std::invalid_argument(
          "c_norm: inconsistent with sigma_sq and omega");
  }
}

namespace {

void check_user_range(const SystemConfig& cfg, int k, const char* where) {
  if (k < 1 || k > cfg.kbar)
    throw std::out_of_range(std::string(where) + ": user index out of range");
}

}  // namespace

double transmit_power(const SystemConfig& cfg, int k, double lambda) {
  check_user_range(cfg, k, "transmit_power");
  if (!(lambda > 0.0))
    throw std::domain_error("transmit_power: lambda must be > 0");
  const double sigma2 = cfg.sigma_sq.empty() ? 1.0 : cfg.sigma_sq[k - 1];
  return cfg.omega / sigma2 * lambda;
}

double data_energy_of_k(const SystemConfig& cfg, int k, double ed_ga) {
  check_user_range(cfg, k, "data_energy_of_k");
  return ((cfg.kbar - k) / cfg.alpha + 1.0) * ed_ga;
}

double lambda_of_k(const SystemConfig& cfg, int k) {
  check_user_range(cfg, k, "lambda_of_k");
  return ((cfg.kbar - k) / cfg.alpha + 1.0) * cfg.c_norm * cfg.lambda_ga;
}

EnergyBreakdown total_energy_fixed_ber(const SystemConfig& cfg, int k,
                                       double ed_ga) {
  check_user_range(cfg, k, "total_energy_fixed_ber");
  EnergyBreakdown out;
  out.k = k;
  out.ef = ed_ga / cfg.alpha;
  out.ed = ed_ga;
  out.etotal = k * out.ef + out.ed;
  out.pt = out.etotal / (cfg.n_slots * cfg.ts);
  return out;
}

double per_slot_energy(const SystemConfig& cfg, int k, bool is_scheduled,
                       double lambda) {
  check_user_range(cfg, k, "per_slot_energy");
  const double scheduling = cfg.ef() / cfg.n_slots;
  if (!is_scheduled) return scheduling;
  return scheduling + transmit_power(cfg, k, lambda) * cfg.ts;
}

}  // namespace kga
