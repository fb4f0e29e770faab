#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catpop/distributions.hpp"

namespace catpop {

struct Individual {
  std::uint64_t birth_time;
  double c;
};

struct Trajectory {
  std::vector<std::uint64_t> sizes;  // population size at t = 0..horizon
  std::optional<std::vector<Individual>> alive;  // final alive set, if recorded
};

struct SimConfig {
  std::uint64_t horizon = 0;
  std::uint64_t initial_size = 1;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  bool record_alive = false;
};

// Forward dynamics: one immigrant per step, each resident dies independently
// with its own c. An individual is exempt during the transition right after
// its birth, so the first possible death is two steps after birth and the
// alive-at-t probability of someone born at j < t is (1-c)^{t-j-1}.
Trajectory simulate_forward(const SimConfig& config, const CModel& model);

// Lifetime construction: index k enters the limit set iff G_k >= k, sampled
// as one Bernoulli((1-c_k)^{k-1}) per index. Sizes are non-decreasing.
// Requires initial_size == 1.
Trajectory simulate_tilde(const SimConfig& config, const CModel& model);

// Stream-level cores; the SimConfig overloads seed RngStream(seed, stream)
// and forward here, so replica runners can drive them directly.
Trajectory simulate_forward(std::uint64_t horizon, std::uint64_t initial_size,
                            bool record_alive, const CModel& model,
                            RngStream& rng);
Trajectory simulate_tilde(std::uint64_t horizon, bool record_alive,
                          const CModel& model, RngStream& rng);

// Final alive set of a run recorded with record_alive; throws otherwise.
const std::vector<Individual>& alive_set(const Trajectory& traj);

// CSV with header "t,size", one row per step.
std::string trajectory_csv(const Trajectory& traj);

}  // namespace catpop
