#include "catpop/population.hpp"

#include <cmath>
#include <stdexcept>

namespace catpop {

Trajectory simulate_forward(std::uint64_t horizon, std::uint64_t initial_size,
                            bool record_alive, const CModel& model,
                            RngStream& rng) {
  if (initial_size < 1) {
    throw std::invalid_argument("simulate_forward: initial_size must be >= 1");
  }
  std::vector<Individual> alive;
  alive.reserve(initial_size + 16);
  for (std::uint64_t i = 0; i < initial_size; ++i) {
    alive.push_back({0, model.sample(rng)});
  }

  Trajectory traj;
  traj.sizes.reserve(horizon + 1);
  traj.sizes.push_back(alive.size());

  for (std::uint64_t t = 1; t <= horizon; ++t) {
    // Deaths first (newest resident, born at t-1, is exempt), then the
    // arrival of the time-t immigrant. Survivors keep birth order.
    std::size_t kept = 0;
    for (const Individual& ind : alive) {
      const bool at_risk = ind.birth_time + 1 < t;
      if (!at_risk || !rng.bernoulli(ind.c)) {
        alive[kept++] = ind;
      }
    }
    alive.resize(kept);
    alive.push_back({t, model.sample(rng)});
    traj.sizes.push_back(alive.size());
  }

  if (record_alive) traj.alive = std::move(alive);
  return traj;
}

Trajectory simulate_forward(const SimConfig& config, const CModel& model) {
  RngStream rng(config.seed, config.stream);
  return simulate_forward(config.horizon, config.initial_size,
                          config.record_alive, model, rng);
}

Trajectory simulate_tilde(std::uint64_t horizon, bool record_alive,
                          const CModel& model, RngStream& rng) {
  Trajectory traj;
  traj.sizes.reserve(horizon + 1);
  std::vector<Individual> members;

  members.push_back({0, model.sample(rng)});
  traj.sizes.push_back(1);

  std::uint64_t count = 1;
  for (std::uint64_t k = 1; k <= horizon; ++k) {
    const double c = model.sample(rng);
    const double p = std::pow(1.0 - c, static_cast<double>(k - 1));
    if (rng.bernoulli(p)) {
      ++count;
      if (record_alive) members.push_back({k, c});
    }
    traj.sizes.push_back(count);
  }

  if (record_alive) traj.alive = std::move(members);
  return traj;
}

Trajectory simulate_tilde(const SimConfig& config, const CModel& model) {
  if (config.initial_size != 1) {
    throw std::invalid_argument(
        "simulate_tilde: defined for a single start individual");
  }
  RngStream rng(config.seed, config.stream);
  return simulate_tilde(config.horizon, config.record_alive, model, rng);
}

const std::vector<Individual>& alive_set(const Trajectory& traj) {
  if (!traj.alive) {
    throw std::logic_error(
        "alive_set: trajectory was not recorded with alive-set tracking");
  }
  return *traj.alive;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t,size\n";
  out.reserve(out.size() + traj.sizes.size() * 12);
  for (std::size_t t = 0; t < traj.sizes.size(); ++t) {
    out += std::to_string(t);
    out += ',';
    out += std::to_string(traj.sizes[t]);
    out += '\n';
  }
  return out;
}

}  // namespace catpop
