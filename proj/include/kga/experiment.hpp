#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "kga/ber.hpp"
#include "kga/energy.hpp"
#include "kga/modulation.hpp"
#include "kga/sim.hpp"

namespace kga {

enum class Preset {
  BerCurves,     // exact/UB/approximate BER versus SNR for several k
  EtaCurve,      // eta(k) across the candidate range
  OptKvsPt,      // optimal k versus total average power
  BerVsPt,       // BER of the optimal-k and all-active curves versus power
  DtDsSweep,     // delay-tolerant/delay-sensitive averages over shadowing
  MultiAntenna,  // optimal k and BER versus diversity order
  Custom,        // single-estimator BER over an (snr, k) grid
};

enum class OutputFormat { Csv, Json };

struct ExperimentSpec {
  std::string name;
  Preset preset = Preset::BerCurves;
  std::map<std::string, std::string> params;  // string overrides, see presets
  std::string out_path;                       // empty = caller handles output
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::Csv;
};

/// Column-named numeric table; one row per grid point, in grid order.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Evaluates the preset over its (possibly overridden) parameter grid.
/// Deterministic for a fixed spec and seed. Throws std::invalid_argument
/// naming the offending parameter on bad input.
ResultTable run_experiment(const ExperimentSpec& spec);

void write_csv(const ResultTable& table, std::ostream& out);
void write_json(const ResultTable& table, std::ostream& out);

/// One point of a BER-minimization sweep.
struct BerMinSweepPoint {
  double pt_db = 0.0;      // total average power of the all-active baseline
  double omega_n_db = 0.0; // baseline receive SNR
  int kbar = 0;
  int k_star = 0;
  double ber_opt = 0.0;    // BER at the solved k (with reallocated power)
  double ber_ga = 0.0;     // BER with every user active
};

/// Grows the user population at a fixed baseline SNR; the total energy
/// budget grows with kbar.
std::vector<BerMinSweepPoint> sweep_kbar(const Modulation& mod, double alpha,
                                         double omega_n_db, int kbar_min,
                                         int kbar_max,
                                         const BerEstimator& estimator);

/// Fixed population, growing baseline power.
std::vector<BerMinSweepPoint> sweep_power(const Modulation& mod, int kbar,
                                          double alpha,
                                          const std::vector<double>& lambda_db,
                                          const BerEstimator& estimator);

/// Shadowing-averaged delay-tolerant / delay-sensitive operating point at
/// one data power. DT averages run over the feasible draws only (an outage
/// defers transmission and spends nothing); DS averages run over all draws.
struct DtDsPoint {
  double lambda_db = 0.0;
  double k_dt = 0.0;        // mean over feasible draws; NaN if none
  double k_ds = 0.0;
  double avg_ber_dt = 0.0;  // NaN if no feasible draw
  double avg_ber_ds = 0.0;
  double norm_pt_dt = 0.0;  // mean total power over the all-active baseline
  double norm_pt_ds = 0.0;
  double feasible_fraction = 0.0;
};

/// Sweeps the fixed data power with common shadowing draws across points
/// (one channel-mean draw per realization).
std::vector<DtDsPoint> dt_ds_sweep(const Modulation& mod, int kbar,
                                   double alpha, double ber_target,
                                   const std::vector<double>& lambda_db,
                                   const ChannelModel& shadowing, int draws,
                                   std::uint64_t seed);

}  // namespace kga
