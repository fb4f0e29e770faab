#pragma once

// Test-only reference implementations, kept independent of the library's
// computation paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "catpop/rng.hpp"

namespace oracles {

// Composite Simpson on a fixed fine grid (n panels, n even).
template <class F>
double simpson_grid(F&& f, double a, double b, int panels = 1 << 16) {
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) {
    sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

// Same quadrature after x = e^t, which resolves power-type behavior at 0.
// Requires 0 < a < b.
template <class F>
double simpson_log(F&& f, double a, double b, int panels = 1 << 16) {
  return simpson_grid([&](double t) { return f(std::exp(t)) * std::exp(t); },
                      std::log(a), std::log(b), panels);
}

// E((1-C)^m) for the power law via the Beta function:
// (1-alpha) B(1-alpha, m+1).
inline double powerlaw_survival_moment(double alpha, std::uint64_t m) {
  const double a = 1.0 - alpha;
  const double b = static_cast<double>(m) + 1.0;
  return a * std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

// Knuth's product-of-uniforms Poisson sampler.
inline std::uint64_t poisson_sample(double lambda, catpop::RngStream& rng) {
  const double limit = std::exp(-lambda);
  std::uint64_t k = 0;
  double prod = rng.uniform01();
  while (prod > limit) {
    ++k;
    prod *= rng.uniform01();
  }
  return k;
}

// One-sample Kolmogorov distance sup_x |F_n(x) - F(x)|.
template <class Cdf>
double ks_one_sample(std::vector<double> samples, Cdf&& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double dist = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double fx = cdf(samples[i]);
    dist = std::max(dist, std::fabs(static_cast<double>(i + 1) / n - fx));
    dist = std::max(dist, std::fabs(fx - static_cast<double>(i) / n));
  }
  return dist;
}

inline double mean_of(std::span<const double> xs) {
  double m = 0.0;
  for (double x : xs) m += x;
  return m / static_cast<double>(xs.size());
}

inline double sample_variance(std::span<const double> xs) {
  const double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / static_cast<double>(xs.size() - 1);
}

inline double stderr_of(std::span<const double> xs) {
  return std::sqrt(sample_variance(xs) / static_cast<double>(xs.size()));
}

}  // namespace oracles
