#include "catpop/baselines.hpp"

#include <stdexcept>

namespace catpop {

Trajectory simulate_fms(const std::variant<ConstantEnv, RandomEnv>& env,
                        std::uint64_t horizon, RngStream& rng) {
  if (const auto* constant = std::get_if<ConstantEnv>(&env)) {
    if (!(constant->c >= 0.0 && constant->c <= 1.0)) {
      throw std::invalid_argument("simulate_fms: constant c must lie in [0,1]");
    }
  }

  Trajectory traj;
  traj.sizes.reserve(horizon + 1);
  std::uint64_t size = 1;
  traj.sizes.push_back(size);

  for (std::uint64_t t = 1; t <= horizon; ++t) {
    const double c = std::visit(
        [&rng](const auto& e) -> double {
          using E = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<E, ConstantEnv>) {
            return e.c;
          } else {
            return e.model.sample(rng);
          }
        },
        env);
    std::uint64_t survivors = 0;
    if (c == 0.0) {
      survivors = size;
    } else {
      for (std::uint64_t i = 0; i < size; ++i) {
        if (!rng.bernoulli(c)) ++survivors;
      }
    }
    size = survivors + 1;  // Z = 1 immigrant
    traj.sizes.push_back(size);
  }
  return traj;
}

Trajectory simulate_fms(const FmsConfig& config) {
  RngStream rng(config.seed, config.stream);
  return simulate_fms(config.env, config.horizon, rng);
}

RecurrenceStats recurrence_stats(const Trajectory& traj, std::uint64_t level) {
  if (traj.sizes.empty()) {
    throw std::invalid_argument("recurrence_stats: empty trajectory");
  }
  RecurrenceStats stats;
  double total = 0.0;
  for (std::uint64_t size : traj.sizes) {
    if (size <= level) ++stats.visits;
    if (size > stats.max_size) stats.max_size = size;
    total += static_cast<double>(size);
  }
  stats.time_avg = total / static_cast<double>(traj.sizes.size());
  return stats;
}

}  // namespace catpop
