#include "kga/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "kga/optimize.hpp"

namespace kga {

namespace {

double parse_double(const std::string& preset, const std::string& key,
                    const std::string& text) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(preset + ": invalid value '" + text +
                                "' for parameter '" + key + "'");
  }
}

class Params {
 public:
  Params(std::string preset, const std::map<std::string, std::string>& map)
      : preset_(std::move(preset)), map_(map) {}

  double get(const std::string& key, double fallback) const {
    auto it = map_.find(key);
    if (it == map_.end()) return fallback;
    return parse_double(preset_, key, it->second);
  }

  int get_int(const std::string& key, int fallback) const {
    const double v = get(key, static_cast<double>(fallback));
    const int i = static_cast<int>(std::lround(v));
    if (std::abs(v - i) > 1e-9)
      throw std::invalid_argument(preset_ + ": parameter '" + key +
                                  "' must be an integer");
    return i;
  }

  std::vector<double> get_list(const std::string& key,
                               std::vector<double> fallback) const {
    auto it = map_.find(key);
    if (it == map_.end()) return fallback;
    std::vector<double> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ','))
      out.push_back(parse_double(preset_, key, item));
    if (out.empty())
      throw std::invalid_argument(preset_ + ": parameter '" + key +
                                  "' must be a non-empty list");
    return out;
  }

  std::vector<int> get_int_list(const std::string& key,
                                std::vector<int> fallback) const {
    auto it = map_.find(key);
    if (it == map_.end()) return fallback;
    std::vector<int> out;
    for (double v : get_list(key, {})) {
      const int i = static_cast<int>(std::lround(v));
      if (std::abs(v - i) > 1e-9)
        throw std::invalid_argument(preset_ + ": parameter '" + key +
                                    "' must hold integers");
      out.push_back(i);
    }
    return out;
  }

  std::string get_string(const std::string& key, std::string fallback) const {
    auto it = map_.find(key);
    return it == map_.end() ? std::move(fallback) : it->second;
  }

 private:
  std::string preset_;
  const std::map<std::string, std::string>& map_;
};

std::vector<double> db_range(double lo, double hi, double step) {
  std::vector<double> out;
  for (double v = lo; v <= hi + 1e-9; v += step) out.push_back(v);
  return out;
}

BerEstimator estimator_from(const Params& p) {
  const std::string kind = p.get_string("estimator", "approx");
  BerEstimator est;
  if (kind == "exact")
    est.kind = BerKind::Exact;
  else if (kind == "ub")
    est.kind = BerKind::UpperBound;
  else if (kind == "approx")
    est.kind = BerKind::Approximate;
  else
    throw std::invalid_argument("invalid value '" + kind +
                                "' for parameter 'estimator'");
  est.diversity_order = p.get_int("d", 1);
  return est;
}

ResultTable ber_curves(const Params& p) {
  const Modulation mod = Modulation::qam(p.get_int("m", 4));
  const std::vector<int> ks = p.get_int_list("k", {1, 10, 50});
  const std::vector<double> snr =
      db_range(p.get("snr_min_db", 0.0), p.get("snr_max_db", 30.0),
               p.get("snr_step_db", 1.0));
  ResultTable table;
  table.columns = {"snr_db", "k", "ber_exact", "ber_ub", "ber_approx"};
  for (double s : snr) {
    const SnrPoint omega = SnrPoint::from_db(s);
    for (int k : ks) {
      table.rows.push_back({s, static_cast<double>(k), exact_ber(mod, k, omega),
                            ub_ber(mod, k, omega),
                            approx_ber(mod, k, omega)});
    }
  }
  return table;
}

ResultTable eta_curve(const Params& p) {
  const Modulation mod = Modulation::qam(p.get_int("m", 4));
  const int kbar = p.get_int("kbar", 100);
  const double alpha = p.get("alpha", 1.0);
  const double omega_n_db = p.get("snr_db", 4.0);
  SystemConfig cfg = SystemConfig::make(
      kbar, alpha, std::pow(10.0, omega_n_db / 10.0));
  const EtaContext ctx = EtaContext::energy_constrained(cfg, mod);
  ResultTable table;
  table.columns = {"k", "eta"};
  for (int k = 1; k <= kbar; ++k)
    table.rows.push_back({static_cast<double>(k), eta(ctx, k)});
  return table;
}

ResultTable opt_k_vs_pt(const Params& p, bool emit_ber) {
  const Modulation mod = Modulation::qam(p.get_int("m", 4));
  const BerEstimator est = estimator_from(p);
  const std::string sweep = p.get_string("sweep", "kbar");
  ResultTable table;
  table.columns = emit_ber
                      ? std::vector<std::string>{"omega_n_db", "alpha", "kbar",
                                                 "pt_db", "k_star", "ber_opt",
                                                 "ber_ga"}
                      : std::vector<std::string>{"omega_n_db", "alpha", "kbar",
                                                 "pt_db", "k_star", "gain_db"};
  auto emit = [&](const BerMinSweepPoint& pt, double alpha) {
    if (emit_ber) {
      table.rows.push_back({pt.omega_n_db, alpha, static_cast<double>(pt.kbar),
                            pt.pt_db, static_cast<double>(pt.k_star),
                            pt.ber_opt, pt.ber_ga});
    } else {
      const double gain =
          10.0 * std::log10((pt.kbar - pt.k_star) / alpha + 1.0);
      table.rows.push_back({pt.omega_n_db, alpha, static_cast<double>(pt.kbar),
                            pt.pt_db, static_cast<double>(pt.k_star), gain});
    }
  };

  if (sweep == "kbar") {
    const double alpha = p.get("alpha", 2.0);
    const std::vector<double> omegas = p.get_list("snr_db", {5.0, 10.0});
    const int kbar_min = p.get_int("kbar_min", 2);
    const int kbar_max = p.get_int("kbar_max", 1000);
    for (double omega_n_db : omegas)
      for (const auto& pt :
           sweep_kbar(mod, alpha, omega_n_db, kbar_min, kbar_max, est))
        emit(pt, alpha);
  } else if (sweep == "snr") {
    const int kbar = p.get_int("kbar", 50);
    const std::vector<double> alphas = p.get_list("alpha", {7.8125, 31.25});
    const std::vector<double> lambda_db =
        db_range(p.get("snr_min_db", -10.0), p.get("snr_max_db", 60.0),
                 p.get("snr_step_db", 0.5));
    for (double alpha : alphas)
      for (const auto& pt : sweep_power(mod, kbar, alpha, lambda_db, est))
        emit(pt, alpha);
  } else {
    throw std::invalid_argument("invalid value '" + sweep +
                                "' for parameter 'sweep' (kbar|snr)");
  }
  return table;
}

ResultTable dt_ds_table(const Params& p, std::uint64_t seed) {
  const Modulation mod = Modulation::qam(p.get_int("m", 4));
  const int kbar = p.get_int("kbar", 100);
  const double alpha = p.get("alpha", 1.0);
  const double ber_target = p.get("ber_target", 1e-3);
  const std::vector<double> lambda_db =
      db_range(p.get("snr_min_db", 0.0), p.get("snr_max_db", 20.0),
               p.get("snr_step_db", 1.0));
  ChannelModel shadowing;
  shadowing.shadow_mean_db = p.get("shadow_mean", 1.0);
  shadowing.shadow_std_db = p.get("shadow_std", 5.0);
  const int draws = p.get_int("draws", 2000);

  ResultTable table;
  table.columns = {"lambda_db",  "k_dt",       "k_ds",
                   "avg_ber_dt", "avg_ber_ds", "norm_pt_dt",
                   "norm_pt_ds"};
  for (const auto& pt :
       dt_ds_sweep(mod, kbar, alpha, ber_target, lambda_db, shadowing, draws,
                   seed)) {
    table.rows.push_back({pt.lambda_db, pt.k_dt, pt.k_ds, pt.avg_ber_dt,
                          pt.avg_ber_ds, pt.norm_pt_dt, pt.norm_pt_ds});
  }
  return table;
}

ResultTable multi_antenna_table(const Params& p) {
  const Modulation mod = Modulation::qam(p.get_int("m", 4));
  const int kbar = p.get_int("kbar", 5);
  const double alpha = p.get("alpha", 1.0);
  const double omega_n_db = p.get("snr_db", 5.0);
  const std::vector<int> orders = p.get_int_list("d", {1, 2, 4});
  SystemConfig cfg = SystemConfig::make(
      kbar, alpha, std::pow(10.0, omega_n_db / 10.0));
  ResultTable table;
  table.columns = {"d", "k_star", "ber_opt", "ber_ga"};
  for (int d : orders) {
    BerEstimator est{BerKind::Approximate, d, UbConvention::PaperPiInverse};
    const auto outcome = solve_kb_min_ber(cfg, mod, est);
    const double ber_ga =
        system_ber(mod, kbar, SnrPoint(cfg.omega_n()), est);
    table.rows.push_back({static_cast<double>(d),
                          static_cast<double>(outcome.k_star),
                          outcome.achieved_ber, ber_ga});
  }
  return table;
}

ResultTable custom_table(const Params& p) {
  const Modulation mod = Modulation::qam(p.get_int("m", 4));
  const BerEstimator est = estimator_from(p);
  const std::vector<int> ks = p.get_int_list("k", {1});
  const std::vector<double> snr =
      db_range(p.get("snr_min_db", 0.0), p.get("snr_max_db", 30.0),
               p.get("snr_step_db", 1.0));
  ResultTable table;
  table.columns = {"snr_db", "k", "ber"};
  for (double s : snr)
    for (int k : ks)
      table.rows.push_back({s, static_cast<double>(k),
                            system_ber(mod, k, SnrPoint::from_db(s), est)});
  return table;
}

}  // namespace

ResultTable run_experiment(const ExperimentSpec& spec) {
  switch (spec.preset) {
    case Preset::BerCurves:
      return ber_curves(Params("ber-curve", spec.params));
    case Preset::EtaCurve:
      return eta_curve(Params("eta", spec.params));
    case Preset::OptKvsPt:
      return opt_k_vs_pt(Params("optimize-k", spec.params), false);
    case Preset::BerVsPt:
      return opt_k_vs_pt(Params("sweep-pt", spec.params), true);
    case Preset::DtDsSweep:
      return dt_ds_table(Params("dt-ds", spec.params), spec.seed);
    case Preset::MultiAntenna:
      return multi_antenna_table(Params("multi-antenna", spec.params));
    case Preset::Custom:
      return custom_table(Params("custom", spec.params));
  }
  throw std::logic_error("run_experiment: unknown preset");
}

void write_csv(const ResultTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    out << table.columns[i];
  }
  out << '\n';
  char buf[64];
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::snprintf(buf, sizeof(buf), "%.12g", row[i]);
      out << buf;
    }
    out << '\n';
  }
}

void write_json(const ResultTable& table, std::ostream& out) {
  nlohmann::json j;
  j["columns"] = table.columns;
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) rows.push_back(row);
  out << j.dump(2) << '\n';
}

std::vector<BerMinSweepPoint> sweep_kbar(const Modulation& mod, double alpha,
                                         double omega_n_db, int kbar_min,
                                         int kbar_max,
                                         const BerEstimator& estimator) {
  if (kbar_min < 1 || kbar_max < kbar_min)
    throw std::invalid_argument("sweep_kbar: bad kbar range");
  const double lambda_ga = std::pow(10.0, omega_n_db / 10.0);
  std::vector<BerMinSweepPoint> out;
  out.reserve(kbar_max - kbar_min + 1);
  for (int kbar = kbar_min; kbar <= kbar_max; ++kbar) {
    SystemConfig cfg = SystemConfig::make(kbar, alpha, lambda_ga);
    const auto outcome = solve_kb_min_ber(cfg, mod, estimator);
    BerMinSweepPoint pt;
    pt.kbar = kbar;
    pt.omega_n_db = omega_n_db;
    pt.pt_db = 10.0 * std::log10((kbar / alpha + 1.0) * lambda_ga);
    pt.k_star = outcome.k_star;
    pt.ber_opt = outcome.achieved_ber;
    pt.ber_ga = system_ber(mod, kbar, SnrPoint(cfg.omega_n()), estimator);
    out.push_back(pt);
  }
  return out;
}

std::vector<BerMinSweepPoint> sweep_power(const Modulation& mod, int kbar,
                                          double alpha,
                                          const std::vector<double>& lambda_db,
                                          const BerEstimator& estimator) {
  std::vector<BerMinSweepPoint> out;
  out.reserve(lambda_db.size());
  for (double db : lambda_db) {
    const double lambda_ga = std::pow(10.0, db / 10.0);
    SystemConfig cfg = SystemConfig::make(kbar, alpha, lambda_ga);
    const auto outcome = solve_kb_min_ber(cfg, mod, estimator);
    BerMinSweepPoint pt;
    pt.kbar = kbar;
    pt.omega_n_db = db;
    pt.pt_db = 10.0 * std::log10((kbar / alpha + 1.0) * lambda_ga);
    pt.k_star = outcome.k_star;
    pt.ber_opt = outcome.achieved_ber;
    pt.ber_ga = system_ber(mod, kbar, SnrPoint(cfg.omega_n()), estimator);
    out.push_back(pt);
  }
  return out;
}

std::vector<DtDsPoint> dt_ds_sweep(const Modulation& mod, int kbar,
                                   double alpha, double ber_target,
                                   const std::vector<double>& lambda_db,
                                   const ChannelModel& shadowing, int draws,
                                   std::uint64_t seed) {
  if (draws < 1) throw std::invalid_argument("dt_ds_sweep: draws >= 1");
  // One channel-mean multiplier per realization, shared across the whole
  // sweep so the curves vary smoothly in lambda.
  const std::vector<double> omega_draws =
      generate_channels(shadowing, draws, seed);
  const BerEstimator est{BerKind::Approximate, 1, UbConvention::PaperPiInverse};
  const double nan = std::numeric_limits<double>::quiet_NaN();

  std::vector<DtDsPoint> out;
  out.reserve(lambda_db.size());
  for (double db : lambda_db) {
    const double lambda = std::pow(10.0, db / 10.0);
    DtDsPoint pt;
    pt.lambda_db = db;
    double k_dt = 0, k_ds = 0, ber_dt = 0, ber_ds = 0, pt_dt = 0, pt_ds = 0;
    int feasible = 0;
    for (double omega : omega_draws) {
      SystemConfig cfg = SystemConfig::make(kbar, alpha, lambda);
      cfg.omega = omega;
      const auto dt = solve_kdt_min_energy(cfg, mod, est, ber_target);
      const auto ds = solve_kds_min_energy(cfg, mod, est, ber_target);
      const double ga_total = cfg.total_energy_ga();
      if (dt.feasible) {
        ++feasible;
        k_dt += dt.k_star;
        ber_dt += dt.achieved_ber;
        pt_dt += dt.energy.etotal / ga_total;
      }
      k_ds += ds.k_star;
      ber_ds += ds.achieved_ber;
      pt_ds += ds.energy.etotal / ga_total;
    }
    pt.feasible_fraction = static_cast<double>(feasible) / draws;
    pt.k_dt = feasible ? k_dt / feasible : nan;
    pt.avg_ber_dt = feasible ? ber_dt / feasible : nan;
    pt.norm_pt_dt = feasible ? pt_dt / feasible : nan;
    pt.k_ds = k_ds / draws;
    pt.avg_ber_ds = ber_ds / draws;
    pt.norm_pt_ds = pt_ds / draws;
    out.push_back(pt);
  }
  return out;
}

}  // namespace kga
