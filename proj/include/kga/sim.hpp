#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kga/energy.hpp"
#include "kga/modulation.hpp"

namespace kga {

/// Log-normal shadowing description. By default mean/std parametrize the
/// dB value of the channel variance; linear_domain switches to a
/// log-normal with the given mean and standard deviation in linear units.
struct ChannelModel {
  double shadow_mean_db = 1.0;
  double shadow_std_db = 5.0;
  double pathloss_db = 0.0;
  std::optional<std::vector<double>> per_user_variance;
  bool linear_domain = false;
};

/// Per-user channel variances sigma_k^2, deterministic in the seed.
/// An explicit per_user_variance list overrides the stochastic draw.
std::vector<double> generate_channels(const ChannelModel& model, int kbar,
                                      std::uint64_t seed);

/// Gray-coded square QAM with unit average symbol energy. Bits are split
/// evenly between the I and Q axes; adjacent amplitude levels differ in
/// exactly one bit per axis.
class GrayQamMapper {
 public:
  explicit GrayQamMapper(int order);

  int order() const { return order_; }
  int bits_per_symbol() const { return bits_per_symbol_; }

  std::complex<double> map(std::uint32_t bits) const;
  std::uint32_t demap(std::complex<double> symbol) const;

  /// Amplitude of level index i (ascending), before unit-energy scaling.
  double level(int index) const { return 2.0 * index - (levels_ - 1); }
  int levels_per_axis() const { return levels_; }
  double scale() const { return scale_; }

 private:
  int axis_demap(double coordinate) const;

  int order_;
  int bits_per_symbol_;
  int levels_;        // per axis
  int axis_bits_;
  double scale_;      // unit-energy normalization
  std::vector<double> bits_to_level_;  // axis bit pattern -> amplitude
};

/// Index (into active_set) of the scheduled user: the argmax of the
/// post-power-control SNRs, ties broken toward the lowest user index.
/// Returns the user id, not the position.
int schedule_slot(std::span<const int> active_set,
                  std::span<const double> snr);

struct SimulationReport {
  double empirical_ber = 0.0;
  double std_err = 0.0;
  std::vector<long> access_counts;  // per user, sums to slots
  EnergyBreakdown energy;           // measured over the simulated slots
  long slots = 0;
  std::uint64_t seed = 0;
};

/// JSON object with fields empirical_ber, std_err, access_counts, energy,
/// slots, seed.
std::string to_json_string(const SimulationReport& report);

/// Slot-level link simulation: per slot draw a uniform random k-subset of
/// the kbar users, i.i.d. unit channel gains on top of average power
/// control, schedule the best active user, and push symbols_per_slot
/// Gray-QAM symbols through AWGN at the scheduled SNR with hard-decision
/// demapping. lambda is the pre-power-control transmit power; energy is
/// accounted per slot (one data symbol energy lambda_k * ts per slot plus
/// the per-slot scheduling share of each active user).
SimulationReport run_monte_carlo(const SystemConfig& cfg,
                                 const Modulation& mod,
                                 const ChannelModel& model, int k,
                                 double lambda, long slots,
                                 int symbols_per_slot, std::uint64_t seed);

/// Fixed-SNR AWGN link (no fading, no scheduling): empirical BER of the
/// Gray mapper at receive SNR rho over the given number of symbols.
double awgn_only_ber(const Modulation& mod, double rho, long symbols,
                     std::uint64_t seed);

}  // namespace kga
