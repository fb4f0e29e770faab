#include "catpop/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "catpop/baselines.hpp"
#include "catpop/distributions.hpp"
#include "catpop/moments.hpp"
#include "catpop/point_process.hpp"
#include "catpop/population.hpp"
#include "catpop/replicas.hpp"
#include "catpop/stats.hpp"

namespace catpop {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Strict reader: every key must be consumed exactly once, leftovers are
// configuration errors.
class ConfigView {
 public:
  explicit ConfigView(const json& j) : j_(j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
  }

  double number(const std::string& key) {
    const json& v = get(key);
    if (!v.is_number()) throw ConfigError("key `" + key + "` must be a number");
    return v.get<double>();
  }

  std::uint64_t uinteger(const std::string& key) {
    const json& v = get(key);
    if (!v.is_number_unsigned()) {
      throw ConfigError("key `" + key + "` must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
  }

  std::string text(const std::string& key) {
    const json& v = get(key);
    if (!v.is_string()) throw ConfigError("key `" + key + "` must be a string");
    return v.get<std::string>();
  }

  std::vector<std::uint64_t> uinteger_array(const std::string& key) {
    const json& v = get(key);
    if (!v.is_array() || v.empty()) {
      throw ConfigError("key `" + key + "` must be a non-empty array");
    }
    std::vector<std::uint64_t> out;
    for (const json& e : v) {
      if (!e.is_number_unsigned()) {
        throw ConfigError("key `" + key + "` must hold non-negative integers");
      }
      out.push_back(e.get<std::uint64_t>());
    }
    return out;
  }

  std::vector<double> number_array(const std::string& key) {
    const json& v = get(key);
    if (!v.is_array() || v.empty()) {
      throw ConfigError("key `" + key + "` must be a non-empty array");
    }
    std::vector<double> out;
    for (const json& e : v) {
      if (!e.is_number()) {
        throw ConfigError("key `" + key + "` must hold numbers");
      }
      out.push_back(e.get<double>());
    }
    return out;
  }

  void done() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) {
        throw ConfigError("unknown key `" + it.key() + "`");
      }
    }
  }

 private:
  const json& get(const std::string& key) {
    auto it = j_.find(key);
    if (it == j_.end()) throw ConfigError("missing key `" + key + "`");
    seen_.insert(key);
    return *it;
  }

  const json& j_;
  std::set<std::string> seen_;
};

double require_open_unit(double v, const std::string& key) {
  if (!(v > 0.0 && v < 1.0)) {
    throw ConfigError("key `" + key + "` must lie in (0,1)");
  }
  return v;
}

std::uint64_t require_min(std::uint64_t v, std::uint64_t lo,
                          const std::string& key) {
  if (v < lo) {
    throw ConfigError("key `" + key + "` must be >= " + std::to_string(lo));
  }
  return v;
}

SummaryRow two_sided(std::string metric, double value, double expected,
                     double tolerance) {
  return {std::move(metric), value, expected, tolerance,
          std::fabs(value - expected) <= tolerance};
}

SummaryRow at_most(std::string metric, double value, double bound) {
  return {std::move(metric), value, bound, std::nullopt, value <= bound};
}

SummaryRow at_least(std::string metric, double value, double bound) {
  return {std::move(metric), value, bound, std::nullopt, value >= bound};
}

SummaryRow info(std::string metric, double value) {
  return {std::move(metric), value, std::nullopt, std::nullopt, std::nullopt};
}

MeanCI mean_ci_of(const std::vector<double>& samples) {
  return mc_mean_ci(std::span<const double>(samples));
}

// --- growth: trajectories for several founder counts plus a
// mean-vs-formula table for the heterogeneous model. ---
ExperimentResult run_growth(ConfigView& cfg, int threads) {
  const std::uint64_t seed = cfg.uinteger("seed");
  const double a = require_open_unit(cfg.number("a"), "a");
  const std::uint64_t horizon = require_min(cfg.uinteger("horizon"), 1, "horizon");
  const auto initial_sizes = cfg.uinteger_array("initial_sizes");
  const std::uint64_t replicas = require_min(cfg.uinteger("replicas"), 2, "replicas");
  const auto checkpoints = cfg.uinteger_array("checkpoints");
  cfg.done();
  for (std::uint64_t m : initial_sizes) {
    if (m < 1) throw ConfigError("key `initial_sizes` must hold positive sizes");
  }
  for (std::uint64_t t : checkpoints) {
    if (t < 1 || t > horizon) {
      throw ConfigError("key `checkpoints` must lie in [1, horizon]");
    }
  }

  const CModel model = CModel::uniform(a);
  ExperimentResult result;
  result.experiment = "growth";

  for (std::size_t i = 0; i < initial_sizes.size(); ++i) {
    const SimConfig sim{horizon, initial_sizes[i], seed, i, false};
    result.files.emplace_back(
        "trajectory_m" + std::to_string(initial_sizes[i]) + ".csv",
        trajectory_csv(simulate_forward(sim, model)));
  }

  const auto checkpoint_sizes = run_replicas(
      replicas, seed, kReplicaStreamBase, threads,
      [&](std::size_t, RngStream& rng) {
        const Trajectory traj = simulate_tilde(horizon, false, model, rng);
        std::vector<double> at;
        at.reserve(checkpoints.size());
        for (std::uint64_t t : checkpoints) {
          at.push_back(static_cast<double>(traj.sizes[t]));
        }
        return at;
      });

  for (std::size_t ci = 0; ci < checkpoints.size(); ++ci) {
    std::vector<double> sizes(replicas);
    for (std::size_t r = 0; r < replicas; ++r) sizes[r] = checkpoint_sizes[r][ci];
    const MeanCI ci95 = mean_ci_of(sizes);
    const double expected = expected_size_uniform(checkpoints[ci], a);
    result.summary.push_back(two_sided(
        "mean_size_n" + std::to_string(checkpoints[ci]), ci95.mean, expected,
        3.0 * ci95.stderr_));
  }
  return result;
}

// --- compare: the two positive-recurrent baselines against the
// heterogeneous model. ---
ExperimentResult run_compare(ConfigView& cfg, int threads) {
  const std::uint64_t seed = cfg.uinteger("seed");
  const std::uint64_t horizon = require_min(cfg.uinteger("horizon"), 10, "horizon");
  const double constant_c = require_open_unit(cfg.number("constant_c"), "constant_c");
  const double env_a = require_open_unit(cfg.number("env_a"), "env_a");
  const double het_a = require_open_unit(cfg.number("het_a"), "het_a");
  const std::uint64_t replicas = require_min(cfg.uinteger("replicas"), 2, "replicas");
  cfg.done();

  ExperimentResult result;
  result.experiment = "compare";

  const FmsConfig constant_cfg{ConstantEnv{constant_c}, horizon, seed, 0};
  const Trajectory constant_traj = simulate_fms(constant_cfg);
  const FmsConfig env_cfg{RandomEnv{CModel::uniform(env_a)}, horizon, seed, 1};
  const Trajectory env_traj = simulate_fms(env_cfg);
  const CModel het_model = CModel::uniform(het_a);
  const SimConfig het_cfg{horizon, 1, seed, 2, false};
  const Trajectory het_traj = simulate_forward(het_cfg, het_model);

  result.files.emplace_back("trajectory_fms_constant.csv",
                            trajectory_csv(constant_traj));
  result.files.emplace_back("trajectory_fms_random_env.csv",
                            trajectory_csv(env_traj));
  result.files.emplace_back("trajectory_het.csv", trajectory_csv(het_traj));

  const double fixed_point = 1.0 / constant_c;
  result.summary.push_back(two_sided("fms_constant_time_avg",
                                     recurrence_stats(constant_traj, 1).time_avg,
                                     fixed_point, 0.25 * fixed_point));
  result.summary.push_back(at_most("fms_random_env_time_avg",
                                   recurrence_stats(env_traj, 1).time_avg,
                                   10.0 * fixed_point));

  // Heterogeneous growth between horizon/10 and horizon, against the exact
  // expectation increment.
  const std::uint64_t mid = horizon / 10;
  const auto finals = run_replicas(
      replicas, seed, kReplicaStreamBase, threads,
      [&](std::size_t, RngStream& rng) {
        const Trajectory traj = simulate_tilde(horizon, false, het_model, rng);
        return std::pair<double, double>{static_cast<double>(traj.sizes[mid]),
                                         static_cast<double>(traj.sizes[horizon])};
      });
  std::vector<double> at_mid(replicas);
  std::vector<double> at_end(replicas);
  std::vector<double> gain(replicas);
  for (std::size_t r = 0; r < replicas; ++r) {
    at_mid[r] = finals[r].first;
    at_end[r] = finals[r].second;
    gain[r] = finals[r].second - finals[r].first;
  }
  const MeanCI mid_ci = mean_ci_of(at_mid);
  const MeanCI end_ci = mean_ci_of(at_end);
  const MeanCI gain_ci = mean_ci_of(gain);
  result.summary.push_back(two_sided("het_mean_n" + std::to_string(mid),
                                     mid_ci.mean, expected_size_uniform(mid, het_a),
                                     3.0 * mid_ci.stderr_));
  result.summary.push_back(two_sided("het_mean_n" + std::to_string(horizon),
                                     end_ci.mean,
                                     expected_size_uniform(horizon, het_a),
                                     3.0 * end_ci.stderr_));
  const double increment = expected_size_uniform(horizon, het_a) -
                           expected_size_uniform(mid, het_a);
  result.summary.push_back(
      at_least("het_mean_increase", gain_ci.mean, 0.5 * increment));
  return result;
}

// --- dist-eq: two-sample KS between the forward and lifetime
// constructions. ---
ExperimentResult run_dist_eq(ConfigView& cfg, int threads) {
  const std::uint64_t seed = cfg.uinteger("seed");
  const std::uint64_t horizon = require_min(cfg.uinteger("horizon"), 1, "horizon");
  const double a = require_open_unit(cfg.number("a"), "a");
  const std::uint64_t replicas = require_min(cfg.uinteger("replicas"), 2, "replicas");
  const std::uint64_t permutations =
      require_min(cfg.uinteger("permutations"), 100, "permutations");
  cfg.done();

  const CModel model = CModel::uniform(a);
  const auto forward_sizes = run_replicas(
      replicas, seed, kReplicaStreamBase, threads,
      [&](std::size_t, RngStream& rng) {
        return static_cast<std::int64_t>(
            simulate_forward(horizon, 1, false, model, rng).sizes[horizon]);
      });
  const auto tilde_sizes = run_replicas(
      replicas, seed, kReplicaStreamBase + replicas, threads,
      [&](std::size_t, RngStream& rng) {
        return static_cast<std::int64_t>(
            simulate_tilde(horizon, false, model, rng).sizes[horizon]);
      });

  RngStream perm_rng(seed, 1);
  const KsResult ks =
      two_sample_ks_discrete(forward_sizes, tilde_sizes, perm_rng, permutations);

  ExperimentResult result;
  result.experiment = "dist-eq";
  result.summary.push_back(info("ks_distance", ks.distance));
  result.summary.push_back(at_least("ks_p_value", ks.p_value, 0.01));
  return result;
}

// --- poisson-gof: rescaled box counts against the limit intensity. ---
ExperimentResult run_poisson_gof(ConfigView& cfg, int threads) {
  const std::uint64_t seed = cfg.uinteger("seed");
  const std::string law = cfg.text("law");
  const std::uint64_t replicas = require_min(cfg.uinteger("replicas"), 100, "replicas");
  const auto scales = cfg.uinteger_array("scales");
  const double time_lo = cfg.number("time_lo");
  const double time_hi = cfg.number("time_hi");
  const double c_lo = cfg.number("c_lo");
  const double c_hi = cfg.number("c_hi");

  ExperimentResult result;
  result.experiment = "poisson-gof";

  if (law == "uniform") {
    cfg.done();
    const CModel model = CModel::uniform(1.0);
    const std::uint64_t max_scale = *std::max_element(scales.begin(), scales.end());
    for (std::size_t si = 0; si < scales.size(); ++si) {
      const UniformBox box{time_lo, time_hi, c_lo, c_hi, scales[si]};
      double intensity = 0.0;
      double prelimit = 0.0;
      try {
        intensity = intensity_uniform_box(box);
        prelimit = uniform_box_prelimit_mean(box);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid box geometry: ") + e.what());
      }
      const auto counts = run_replicas(
          replicas, seed, kReplicaStreamBase + si * replicas, threads,
          [&](std::size_t, RngStream& rng) {
            return count_in_uniform_box(model, box, rng);
          });
      std::vector<double> as_double(counts.begin(), counts.end());
      const MeanCI ci = mean_ci_of(as_double);
      const GofReport gof = poisson_gof(counts, intensity);
      const std::string suffix = "_L" + std::to_string(scales[si]);

      result.summary.push_back(two_sided("count_mean_vs_prelimit" + suffix,
                                         ci.mean, prelimit, 3.0 * ci.stderr_));
      if (scales[si] == max_scale) {
        result.summary.push_back(two_sided("count_mean_vs_intensity" + suffix,
                                           ci.mean, intensity, 0.05 * intensity));
      } else {
        result.summary.push_back(info("count_mean_vs_intensity" + suffix,
                                      ci.mean - intensity));
      }
      result.summary.push_back(
          two_sided("dispersion" + suffix, gof.dispersion_index, 1.0, 0.1));
      result.summary.push_back(at_least("gof_p_value" + suffix, gof.p_value, 0.01));
      result.files.emplace_back("gof_L" + std::to_string(scales[si]) + ".csv",
                                gof_csv(gof));
    }
    return result;
  }

  if (law != "powerlaw") {
    throw ConfigError("key `law` must be \"uniform\" or \"powerlaw\"");
  }
  const double alpha = require_open_unit(cfg.number("alpha"), "alpha");
  const auto locations = cfg.number_array("locations");
  cfg.done();

  const std::uint64_t max_scale = *std::max_element(scales.begin(), scales.end());
  for (std::size_t si = 0; si < scales.size(); ++si) {
    std::vector<PowerLawBox> boxes;
    boxes.reserve(locations.size());
    try {
      for (double location : locations) {
        boxes.push_back(make_powerlaw_box(alpha, location, time_lo, time_hi,
                                          c_lo, c_hi, scales[si]));
      }
      validate_independence_boxes(boxes);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("invalid box geometry: ") + e.what());
    }
    const auto joint = run_replicas(
        replicas, seed, kReplicaStreamBase + si * replicas, threads,
        [&](std::size_t, RngStream& rng) {
          return independence_counts(
              alpha, std::span<const PowerLawBox>(boxes), rng);
        });

    const double intensity = intensity_powerlaw_box(alpha, boxes[0]);
    const double prelimit = powerlaw_box_prelimit_mean(alpha, boxes[0]);
    std::vector<std::uint64_t> first_counts(replicas);
    std::vector<double> as_double(replicas);
    for (std::size_t r = 0; r < replicas; ++r) {
      first_counts[r] = joint[r][0];
      as_double[r] = static_cast<double>(joint[r][0]);
    }
    const MeanCI ci = mean_ci_of(as_double);
    const GofReport gof = poisson_gof(first_counts, intensity);
    const std::string suffix = "_L" + std::to_string(scales[si]);

    result.summary.push_back(two_sided("count_mean_vs_prelimit" + suffix,
                                       ci.mean, prelimit, 3.0 * ci.stderr_));
    if (scales[si] == max_scale) {
      result.summary.push_back(two_sided("count_mean_vs_intensity" + suffix,
                                         ci.mean, intensity, 0.05 * intensity));
    } else {
      result.summary.push_back(info("count_mean_vs_intensity" + suffix,
                                    ci.mean - intensity));
    }
    result.summary.push_back(
        two_sided("dispersion" + suffix, gof.dispersion_index, 1.0, 0.1));
    result.files.emplace_back("gof_L" + std::to_string(scales[si]) + ".csv",
                              gof_csv(gof));

    if (locations.size() >= 2) {
      double mean0 = 0.0;
      double mean1 = 0.0;
      for (std::size_t r = 0; r < replicas; ++r) {
        mean0 += static_cast<double>(joint[r][0]);
        mean1 += static_cast<double>(joint[r][1]);
      }
      mean0 /= static_cast<double>(replicas);
      mean1 /= static_cast<double>(replicas);
      double cov = 0.0;
      double v0 = 0.0;
      double v1 = 0.0;
      for (std::size_t r = 0; r < replicas; ++r) {
        const double d0 = static_cast<double>(joint[r][0]) - mean0;
        const double d1 = static_cast<double>(joint[r][1]) - mean1;
        cov += d0 * d1;
        v0 += d0 * d0;
        v1 += d1 * d1;
      }
      const double corr =
          (v0 > 0.0 && v1 > 0.0) ? cov / std::sqrt(v0 * v1) : 0.0;
      result.summary.push_back(
          two_sided("count_correlation" + suffix, corr, 0.0,
                    3.0 / std::sqrt(static_cast<double>(replicas))));
    }
  }
  return result;
}

// --- accumulation: tail counts above a threshold stay bounded while the
// mass below it keeps growing. ---
ExperimentResult run_accumulation(ConfigView& cfg, int threads) {
  const std::uint64_t seed = cfg.uinteger("seed");
  const std::uint64_t truncation =
      require_min(cfg.uinteger("truncation"), 1000, "truncation");
  const double threshold = require_open_unit(cfg.number("threshold"), "threshold");
  const std::uint64_t replicas = require_min(cfg.uinteger("replicas"), 2, "replicas");
  cfg.done();

  const CModel model = CModel::uniform(1.0);
  const std::uint64_t early = truncation / 100;

  struct Tally {
    double tail = 0.0;       // index >= 1, c > threshold
    double low_early = 0.0;  // c <= threshold, index <= truncation/100
    double low_late = 0.0;   // c <= threshold, index <= truncation
  };
  const auto tallies = run_replicas(
      replicas, seed, kReplicaStreamBase, threads,
      [&](std::size_t, RngStream& rng) {
        const PointSet set = sample_point_set(model, truncation, rng);
        Tally tally;
        for (const auto& [k, c] : set.points) {
          if (c > threshold) {
            if (k >= 1) tally.tail += 1.0;
          } else {
            if (k <= early) tally.low_early += 1.0;
            tally.low_late += 1.0;
          }
        }
        return tally;
      });

  std::vector<double> tail(replicas);
  double low_growth = 0.0;
  double tail_max = 0.0;
  for (std::size_t r = 0; r < replicas; ++r) {
    tail[r] = tallies[r].tail;
    tail_max = std::max(tail_max, tallies[r].tail);
    low_growth += tallies[r].low_late - tallies[r].low_early;
  }
  low_growth /= static_cast<double>(replicas);
  const MeanCI tail_ci = mean_ci_of(tail);
  const double bound = tail_count_bound(model, threshold);

  ExperimentResult result;
  result.experiment = "accumulation";
  result.summary.push_back(
      two_sided("tail_count_mean", tail_ci.mean, bound, 3.0 * tail_ci.stderr_));
  result.summary.push_back(at_most("tail_count_max", tail_max, 1.0 / threshold));
  result.summary.push_back(at_least(
      "low_count_growth", low_growth,
      0.9 * std::log(static_cast<double>(truncation) / static_cast<double>(early))));
  // Indices beyond the truncation contribute at most this much to the tail.
  result.summary.push_back(info(
      "truncation_tail_bound",
      std::pow(1.0 - threshold, static_cast<double>(truncation)) / threshold));

  RngStream sample_rng(seed, 0);
  result.files.emplace_back(
      "points_sample.csv",
      point_set_csv(sample_point_set(model, truncation, sample_rng)));
  return result;
}

// --- fms: one baseline run with recurrence statistics. ---
ExperimentResult run_fms(ConfigView& cfg) {
  const std::uint64_t seed = cfg.uinteger("seed");
  const std::string mode = cfg.text("mode");
  const std::uint64_t horizon = require_min(cfg.uinteger("horizon"), 1, "horizon");
  const std::uint64_t level = require_min(cfg.uinteger("level"), 1, "level");

  FmsConfig fms;
  fms.horizon = horizon;
  fms.seed = seed;
  fms.stream = 0;
  if (mode == "constant") {
    const double c = cfg.number("c");
    if (!(c >= 0.0 && c <= 1.0)) throw ConfigError("key `c` must lie in [0,1]");
    fms.env = ConstantEnv{c};
  } else if (mode == "random-env") {
    fms.env = RandomEnv{CModel::uniform(require_open_unit(cfg.number("a"), "a"))};
  } else {
    throw ConfigError("key `mode` must be \"constant\" or \"random-env\"");
  }
  cfg.done();

  const Trajectory traj = simulate_fms(fms);
  const RecurrenceStats stats = recurrence_stats(traj, level);

  ExperimentResult result;
  result.experiment = "fms";
  result.summary.push_back(info("fms_visits", static_cast<double>(stats.visits)));
  result.summary.push_back(info("fms_max_size", static_cast<double>(stats.max_size)));
  result.summary.push_back(info("fms_time_avg", stats.time_avg));
  result.files.emplace_back("trajectory_fms.csv", trajectory_csv(traj));
  return result;
}

}  // namespace

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out = "metric,value,expected,tolerance,pass\n";
  for (const SummaryRow& row : rows) {
    out += row.metric;
    out += ',';
    out += format_double(row.value);
    out += ',';
    if (row.expected) out += format_double(*row.expected);
    out += ',';
    if (row.tolerance) out += format_double(*row.tolerance);
    out += ',';
    if (row.pass) out += *row.pass ? '1' : '0';
    out += '\n';
  }
  return out;
}

ExperimentResult run_experiment(const std::string& config_text, int threads) {
  json parsed;
  try {
    parsed = json::parse(config_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  ConfigView cfg(parsed);
  const std::string name = cfg.text("experiment");

  ExperimentResult result;
  if (name == "growth") {
    result = run_growth(cfg, threads);
  } else if (name == "compare") {
    result = run_compare(cfg, threads);
  } else if (name == "dist-eq") {
    result = run_dist_eq(cfg, threads);
  } else if (name == "poisson-gof") {
    result = run_poisson_gof(cfg, threads);
  } else if (name == "accumulation") {
    result = run_accumulation(cfg, threads);
  } else if (name == "fms") {
    result = run_fms(cfg);
  } else {
    throw ConfigError("key `experiment` names an unknown experiment: " + name);
  }
  result.files.emplace_back("summary.csv", summary_csv(result.summary));
  return result;
}

void write_result_files(const ExperimentResult& result,
                        const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  try {
    for (const auto& [name, contents] : result.files) {
      const std::filesystem::path path = out_dir / name;
      std::ofstream stream(path, std::ios::binary | std::ios::trunc);
      if (!stream) throw std::runtime_error("cannot open " + path.string());
      written.push_back(path);
      stream << contents;
      if (!stream) throw std::runtime_error("write failed for " + path.string());
    }
  } catch (...) {
    for (const auto& path : written) {
      std::error_code ec;
      std::filesystem::remove(path, ec);
    }
    throw;
  }
}

int run_cli(int argc, const char* const* argv) {
  const auto usage = [&]() {
    std::cerr << "usage: " << (argc > 0 ? argv[0] : "catpop")
              << " run <config.json> [--out DIR] [--threads N]\n";
  };
  if (argc < 3 || std::string(argv[1]) != "run") {
    usage();
    return 1;
  }
  std::string config_path = argv[2];
  std::filesystem::path out_dir = ".";
  int threads = 0;
  for (int i = 3; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--out" && i + 1 < argc) {
      out_dir = argv[++i];
    } else if (arg == "--threads" && i + 1 < argc) {
      try {
        threads = std::stoi(argv[++i]);
      } catch (...) {
        std::cerr << "error: --threads expects an integer\n";
        return 1;
      }
    } else {
      std::cerr << "error: unknown argument `" << arg << "`\n";
      usage();
      return 1;
    }
  }

  std::ifstream file(config_path);
  if (!file) {
    std::cerr << "error: cannot read config file " << config_path << "\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();

  try {
    const ExperimentResult result = run_experiment(buffer.str(), threads);
    write_result_files(result, out_dir);
    std::size_t checks = 0;
    std::size_t passed = 0;
    for (const SummaryRow& row : result.summary) {
      if (row.pass) {
        ++checks;
        if (*row.pass) ++passed;
      }
    }
    std::cout << result.experiment << ": wrote " << result.files.size()
              << " files to " << out_dir.string() << " (" << passed << "/"
              << checks << " checks passed)\n";
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace catpop
