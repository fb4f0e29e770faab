#pragma once

#include <cstdint>

#include "catpop/distributions.hpp"

namespace catpop {

// The survival dichotomy: the population diverges in probability exactly when
// E(1/C) is infinite, otherwise its size converges in distribution.
enum class SurvivalClass {
  DivergesInProbability,
  ConvergesInDistribution,
};

// E(|A_n|) = 1 + sum_{k=1..n} E((1-C)^{k-1}); equals 1 at n=0.
double expected_size(std::uint64_t n, const CModel& model);

// Harmonic-sum form of E(|A_n|) for Uniform(a):
// 1 + (1/a) sum 1/k - (1/a) sum (1-a)^k / k.
double expected_size_uniform(std::uint64_t n, double a);

// Var(|A_n|) = sum_{k=1..n} p_k (1 - p_k) with p_k = E((1-C)^{k-1}).
double variance_size(std::uint64_t n, const CModel& model);

SurvivalClass classify(const CModel& model);

// expected_size_uniform(n, a) / ((1/a) ln n); tends to 1 from below.
// Requires n >= 2.
double growth_ratio(std::uint64_t n, double a);

// int_b^1 f(x)/x dx: the expected number of indices i >= 1 with G_i >= i and
// c_i > b. Always <= 1/b. Requires a density.
double tail_count_bound(const CModel& model, double b);

}  // namespace catpop
