#pragma once

#include <cstdint>
#include <variant>

#include "catpop/distributions.hpp"
#include "catpop/population.hpp"

namespace catpop {

// Death-probability regimes for the binomial-thinning comparison chain.
struct ConstantEnv {
  double c;  // shared fixed death probability; c = 0 means no deaths
};

struct RandomEnv {
  CModel model;  // one fresh shared c per step
};

struct FmsConfig {
  std::variant<ConstantEnv, RandomEnv> env;
  std::uint64_t horizon = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// X_0 = 1; X_n = Binomial(X_{n-1}, 1 - c_n) + 1, the binomial sampled as
// X_{n-1} independent Bernoulli survivals. With the unit immigrant the chain
// never drops below 1.
Trajectory simulate_fms(const FmsConfig& config);

Trajectory simulate_fms(const std::variant<ConstantEnv, RandomEnv>& env,
                        std::uint64_t horizon, RngStream& rng);

struct RecurrenceStats {
  std::uint64_t visits = 0;    // steps with X_t <= level
  std::uint64_t max_size = 0;  // running maximum
  double time_avg = 0.0;
};

RecurrenceStats recurrence_stats(const Trajectory& traj, std::uint64_t level);

}  // namespace catpop
