#include "kga/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace kga {

std::vector<double> generate_channels(const ChannelModel& model, int kbar,
                                      std::uint64_t seed) {
  if (kbar < 1) throw std::invalid_argument("generate_channels: kbar >= 1");
  if (model.per_user_variance) {
    if (static_cast<int>(model.per_user_variance->size()) != kbar)
      throw std::invalid_argument(
          "generate_channels: explicit variance list has wrong length");
    return *model.per_user_variance;
  }
  if (model.shadow_std_db < 0.0)
    throw std::invalid_argument("generate_channels: negative shadowing std");

  std::mt19937_64 rng(seed);
  std::vector<double> out(kbar);
  if (!model.linear_domain) {
    // Gains drawn in dB: sigma^2 = 10^((G - L)/10), G ~ N(mean, std^2).
    std::normal_distribution<double> gain_db(model.shadow_mean_db,
                                             model.shadow_std_db);
    for (auto& v : out)
      v = std::pow(10.0, (gain_db(rng) - model.pathloss_db) / 10.0);
  } else {
    // Log-normal with the requested mean and std in linear units.
    const double mean = model.shadow_mean_db;
    const double sd = model.shadow_std_db;
    if (!(mean > 0.0))
      throw std::invalid_argument(
          "generate_channels: linear-domain mean must be > 0");
    const double s2 = std::log1p(sd * sd / (mean * mean));
    const double mu = std::log(mean) - 0.5 * s2;
    std::normal_distribution<double> normal(mu, std::sqrt(s2));
    const double pathloss = std::pow(10.0, -model.pathloss_db / 10.0);
    for (auto& v : out) v = std::exp(normal(rng)) * pathloss;
  }
  return out;
}

GrayQamMapper::GrayQamMapper(int order) : order_(order) {
  if (order < 4) throw std::invalid_argument("GrayQamMapper: order >= 4");
  const int bits = static_cast<int>(std::lround(std::log2(order)));
  if ((1 << bits) != order || bits % 2 != 0)
    throw std::invalid_argument(
        "GrayQamMapper: order must be an even power of two (square QAM)");
  bits_per_symbol_ = bits;
  axis_bits_ = bits / 2;
  levels_ = 1 << axis_bits_;
  // Average energy of the unscaled constellation is 2(M-1)/3.
  scale_ = std::sqrt(3.0 / (2.0 * (order_ - 1)));
  bits_to_level_.assign(levels_, 0.0);
  for (int i = 0; i < levels_; ++i) {
    const int gray = i ^ (i >> 1);
    bits_to_level_[gray] = level(i);
  }
}

std::complex<double> GrayQamMapper::map(std::uint32_t bits) const {
  const std::uint32_t mask = levels_ - 1;
  const std::uint32_t i_bits = (bits >> axis_bits_) & mask;
  const std::uint32_t q_bits = bits & mask;
  return {bits_to_level_[i_bits] * scale_, bits_to_level_[q_bits] * scale_};
}

int GrayQamMapper::axis_demap(double coordinate) const {
  const double idx = (coordinate / scale_ + (levels_ - 1)) / 2.0;
  const int i = std::clamp(static_cast<int>(std::lround(idx)), 0, levels_ - 1);
  return i ^ (i >> 1);
}

std::uint32_t GrayQamMapper::demap(std::complex<double> symbol) const {
  const std::uint32_t i_bits = axis_demap(symbol.real());
  const std::uint32_t q_bits = axis_demap(symbol.imag());
  return (i_bits << axis_bits_) | q_bits;
}

int schedule_slot(std::span<const int> active_set,
                  std::span<const double> snr) {
  if (active_set.empty() || active_set.size() != snr.size())
    throw std::invalid_argument("schedule_slot: mismatched active set");
  std::size_t best = 0;
  for (std::size_t i = 1; i < active_set.size(); ++i) {
    if (snr[i] > snr[best] ||
        (snr[i] == snr[best] && active_set[i] < active_set[best]))
      best = i;
  }
  return active_set[best];
}

std::string to_json_string(const SimulationReport& report) {
  nlohmann::json j;
  j["empirical_ber"] = report.empirical_ber;
  j["std_err"] = report.std_err;
  j["access_counts"] = report.access_counts;
  j["energy"] = {{"k", report.energy.k},
                 {"ef", report.energy.ef},
                 {"ed", report.energy.ed},
                 {"etotal", report.energy.etotal},
                 {"pt", report.energy.pt}};
  j["slots"] = report.slots;
  j["seed"] = report.seed;
  return j.dump();
}

SimulationReport run_monte_carlo(const SystemConfig& cfg,
                                 const Modulation& mod,
                                 const ChannelModel& model, int k,
                                 double lambda, long slots,
                                 int symbols_per_slot, std::uint64_t seed) {
  cfg.validate();
  if (k < 1 || k > cfg.kbar)
    throw std::invalid_argument("run_monte_carlo: k must lie in [1, kbar]");
  if (slots < 1) throw std::invalid_argument("run_monte_carlo: slots >= 1");
  if (symbols_per_slot < 1)
    throw std::invalid_argument("run_monte_carlo: symbols_per_slot >= 1");
  if (!(lambda > 0.0))
    throw std::invalid_argument("run_monte_carlo: lambda must be > 0");

  SystemConfig local = cfg;
  if (local.sigma_sq.empty())
    local.set_sigma_sq(generate_channels(model, cfg.kbar, seed ^ 0x9e3779b97f4a7c15ull));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal_half(0.0, std::sqrt(0.5));
  std::uniform_int_distribution<std::uint32_t> bit_word(
      0, (1u << mod.bits_per_symbol()) - 1);

  const GrayQamMapper mapper(mod.order());
  const double avg_receive = local.omega * lambda;
  const double scheduling_per_slot = local.ef() / local.n_slots;

  std::vector<int> order(local.kbar);
  std::iota(order.begin(), order.end(), 1);
  std::vector<int> active(k);
  std::vector<double> rho(k);

  SimulationReport report;
  report.access_counts.assign(local.kbar, 0);
  report.slots = slots;
  report.seed = seed;

  long bit_errors = 0;
  long total_bits = 0;
  double data_energy = 0.0;

  for (long slot = 0; slot < slots; ++slot) {
    // Uniform random k-subset by partial Fisher-Yates.
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<int> pick(i, local.kbar - 1);
      std::swap(order[i], order[pick(rng)]);
      active[i] = order[i];
    }
    for (int i = 0; i < k; ++i) {
      const double re = normal_half(rng);
      const double im = normal_half(rng);
      rho[i] = (re * re + im * im) * avg_receive;
    }
    const int scheduled = schedule_slot(active, rho);
    double rho_star = 0.0;
    for (int i = 0; i < k; ++i)
      if (active[i] == scheduled) rho_star = rho[i];
    report.access_counts[scheduled - 1] += 1;
    data_energy += transmit_power(local, scheduled, lambda) * local.ts;

    const double amp = std::sqrt(rho_star);
    for (int s = 0; s < symbols_per_slot; ++s) {
      const std::uint32_t bits = bit_word(rng);
      const std::complex<double> tx = mapper.map(bits);
      const std::complex<double> rx =
          amp * tx + std::complex<double>(normal_half(rng), normal_half(rng));
      const std::uint32_t decided = mapper.demap(rx / amp);
      bit_errors += std::popcount(bits ^ decided);
      total_bits += mod.bits_per_symbol();
    }
  }

  report.empirical_ber = static_cast<double>(bit_errors) / total_bits;
  report.std_err = std::sqrt(report.empirical_ber *
                             (1.0 - report.empirical_ber) / total_bits);
  report.energy.k = k;
  report.energy.ef = scheduling_per_slot * slots;
  report.energy.ed = data_energy;
  report.energy.etotal = k * report.energy.ef + report.energy.ed;
  report.energy.pt = report.energy.etotal / (slots * local.ts);
  return report;
}

double awgn_only_ber(const Modulation& mod, double rho, long symbols,
                     std::uint64_t seed) {
  if (rho < 0.0) throw std::invalid_argument("awgn_only_ber: rho >= 0");
  if (symbols < 1) throw std::invalid_argument("awgn_only_ber: symbols >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal_half(0.0, std::sqrt(0.5));
  std::uniform_int_distribution<std::uint32_t> bit_word(
      0, (1u << mod.bits_per_symbol()) - 1);
  const GrayQamMapper mapper(mod.order());
  const double amp = std::sqrt(rho);
  long bit_errors = 0;
  for (long s = 0; s < symbols; ++s) {
    const std::uint32_t bits = bit_word(rng);
    const std::complex<double> rx =
        amp * mapper.map(bits) +
        std::complex<double>(normal_half(rng), normal_half(rng));
    // At rho = 0 the received point is pure noise; demap it directly.
    const std::uint32_t decided =
        mapper.demap(amp > 0.0 ? rx / amp : rx);
    bit_errors += std::popcount(bits ^ decided);
  }
  return static_cast<double>(bit_errors) / (symbols * mod.bits_per_symbol());
}

}  // namespace kga
