#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "catpop/distributions.hpp"

namespace catpop {

// Truncated sample of the limit point measure: indices k <= truncation with
// G_k >= k, together with their markers c_k.
struct PointSet {
  std::vector<std::pair<std::uint64_t, double>> points;  // increasing k
  std::uint64_t truncation = 0;
};

// Rectangle for the uniform-law rescaling: time window stretched by L,
// c-window shrunk by 1/L.
struct UniformBox {
  double time_lo = 0.0;  // w > 0
  double time_hi = 0.0;  // z > w
  double c_lo = 0.0;     // a_k > 0
  double c_hi = 0.0;     // b_k > a_k
  std::uint64_t scale = 1;  // L
};

// Rectangle for the power-law rescaling: c-window centered at location/L with
// width shrunk by 1/L^beta.
struct PowerLawBox {
  double location = 1.0;  // a > 0
  double time_lo = 0.0;
  double time_hi = 0.0;
  double c_lo = 0.0;  // b, may be negative
  double c_hi = 0.0;  // d > b
  std::uint64_t scale = 1;
  double beta = 0.0;  // rescaling exponent, > 1
};

// Box with beta derived from alpha. The width exponent 1+alpha is the one
// under which box counts converge to the (1-alpha) a^{-alpha} exp(-as) ds dy
// intensity; see the exact pre-limit means for how fast.
PowerLawBox make_powerlaw_box(double alpha, double location, double time_lo,
                              double time_hi, double c_lo, double c_hi,
                              std::uint64_t scale);

// Rescaled c-interval endpoints (location/L + c/L^beta).
std::pair<double, double> rescaled_interval(const PowerLawBox& box);

// One Bernoulli((1-c_k)^{k-1}) per index k in [0, K]; index 0 always enters.
PointSet sample_point_set(const CModel& model, std::uint64_t truncation,
                          RngStream& rng);

// Points of one realization inside the rescaled box, visiting only indices in
// [L w, L z] and using the {G_l > l} convention (success prob (1-c)^l).
// Requires the Uniform(1) law.
std::uint64_t count_in_uniform_box(const CModel& model, const UniformBox& box,
                                   RngStream& rng);

// Limit intensity int int exp(-s y) ds dy over the box, via the analytic
// inner integral and 1-D adaptive quadrature.
double intensity_uniform_box(const UniformBox& box);

// Exact mean of count_in_uniform_box at finite L:
// sum_l ((1-lo)^{l+1} - (1-hi)^{l+1}) / (l+1).
double uniform_box_prelimit_mean(const UniformBox& box);

std::uint64_t count_in_powerlaw_box(double alpha, const PowerLawBox& box,
                                    RngStream& rng);

// Closed-form limit intensity (d-b) (1-alpha) a^{-alpha} (e^{-aw}-e^{-az})/a.
double intensity_powerlaw_box(double alpha, const PowerLawBox& box);

// Exact mean of count_in_powerlaw_box at finite L.
double powerlaw_box_prelimit_mean(double alpha, const PowerLawBox& box);

// Joint counts over one shared realization, for independence tests across
// locations. Boxes must share L, have distinct locations and pairwise
// disjoint rescaled c-intervals.
std::vector<std::uint64_t> independence_counts(
    double alpha, std::span<const PowerLawBox> boxes, RngStream& rng);

// The geometry checks of independence_counts alone; lets callers fail fast
// before spawning replicas.
void validate_independence_boxes(std::span<const PowerLawBox> boxes);

// CSV with header "k,c", one row per point.
std::string point_set_csv(const PointSet& set);

}  // namespace catpop
