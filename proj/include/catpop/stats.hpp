#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "catpop/rng.hpp"

namespace catpop {

struct MeanCI {
  double mean = 0.0;
  double stderr_ = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
};

struct GofReport {
  double chi_square = 0.0;
  std::uint64_t dof = 1;
  double p_value = 1.0;
  double dispersion_index = 0.0;  // sample variance / sample mean
};

struct KsResult {
  double distance = 0.0;
  double p_value = 1.0;
};

// Sample mean with standard error and 95% CI (mean +- 1.96 stderr).
// Requires at least two samples.
MeanCI mc_mean_ci(std::span<const double> samples);

// Chi-square goodness of fit of integer counts against Poisson(lambda).
// Bins {0},...,{m},{>= m+1} with m chosen so every expected bin count is
// >= 5 (tail merged); dof = bins - 1. Requires >= 100 counts and lambda > 0.
GofReport poisson_gof(std::span<const std::uint64_t> counts, double lambda);

// Two-sample sup-distance of empirical CDFs with a permutation p-value
// (exact-test semantics, valid for discrete data with ties).
KsResult two_sample_ks_discrete(std::span<const std::int64_t> xs,
                                std::span<const std::int64_t> ys,
                                RngStream& rng,
                                std::size_t permutations = 1000);

// Upper-tail probability of the chi-square distribution, computed through
// the regularized upper incomplete gamma (series / continued fraction).
double chi_square_sf(double x, std::uint64_t dof);

double regularized_gamma_q(double a, double x);

// CSV with header "chi_square,dof,p_value,dispersion" and one row.
std::string gof_csv(const GofReport& report);

}  // namespace catpop
