#include "catpop/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace catpop {

namespace {

constexpr double kGammaEps = 1e-14;
constexpr int kGammaMaxIter = 500;

// Lower regularized gamma P(a,x) by power series, for x < a+1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int i = 0; i < kGammaMaxIter; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kGammaEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized gamma Q(a,x) by modified Lentz continued fraction,
// for x >= a+1.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kGammaMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kGammaEps) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double ks_distance_sorted(const std::vector<std::int64_t>& xs,
                          const std::vector<std::int64_t>& ys) {
  const double nx = static_cast<double>(xs.size());
  const double ny = static_cast<double>(ys.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double dist = 0.0;
  while (i < xs.size() && j < ys.size()) {
    const std::int64_t v = std::min(xs[i], ys[j]);
    while (i < xs.size() && xs[i] == v) ++i;
    while (j < ys.size() && ys[j] == v) ++j;
    dist = std::max(dist, std::fabs(static_cast<double>(i) / nx -
                                    static_cast<double>(j) / ny));
  }
  return std::max(dist, 1.0 - std::min(static_cast<double>(i) / nx,
                                       static_cast<double>(j) / ny));
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) {
    throw std::invalid_argument("regularized_gamma_q: need a > 0 and x >= 0");
  }
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_sf(double x, std::uint64_t dof) {
  if (dof == 0) throw std::invalid_argument("chi_square_sf: dof must be >= 1");
  if (x <= 0.0) return 1.0;
  return regularized_gamma_q(0.5 * static_cast<double>(dof), 0.5 * x);
}

MeanCI mc_mean_ci(std::span<const double> samples) {
  if (samples.size() < 2) {
    throw std::invalid_argument("mc_mean_ci: need at least 2 samples");
  }
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= n;
  double ss = 0.0;
  for (double s : samples) ss += (s - mean) * (s - mean);
  const double stderr_ = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  return {mean, stderr_, mean - 1.96 * stderr_, mean + 1.96 * stderr_};
}

GofReport poisson_gof(std::span<const std::uint64_t> counts, double lambda) {
  if (counts.size() < 100) {
    throw std::invalid_argument("poisson_gof: need at least 100 counts");
  }
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("poisson_gof: lambda must be positive");
  }
  const double n = static_cast<double>(counts.size());

  // Largest m with every head bin {0..m} and the merged tail both expected
  // >= 5; m = 0 when even that is infeasible.
  std::vector<double> pmf;
  pmf.push_back(std::exp(-lambda));
  double head = pmf[0];
  std::size_t m = 0;
  for (std::size_t i = 1;; ++i) {
    const double next = pmf.back() * lambda / static_cast<double>(i);
    if (n * next < 5.0 || n * (1.0 - head - next) < 5.0) break;
    pmf.push_back(next);
    head += next;
    m = i;
  }

  std::vector<double> observed(m + 2, 0.0);
  for (std::uint64_t c : counts) {
    observed[c <= m ? static_cast<std::size_t>(c) : m + 1] += 1.0;
  }
  double chi = 0.0;
  double tail_expected = n;
  for (std::size_t i = 0; i <= m; ++i) {
    const double expected = n * pmf[i];
    tail_expected -= expected;
    chi += (observed[i] - expected) * (observed[i] - expected) / expected;
  }
  if (tail_expected > 0.0) {
    chi += (observed[m + 1] - tail_expected) * (observed[m + 1] - tail_expected) /
           tail_expected;
  }

  const std::uint64_t dof = m + 1;  // bins - 1

  double mean = 0.0;
  for (std::uint64_t c : counts) mean += static_cast<double>(c);
  mean /= n;
  double var = 0.0;
  for (std::uint64_t c : counts) {
    const double d = static_cast<double>(c) - mean;
    var += d * d;
  }
  var /= n - 1.0;

  return {chi, dof, chi_square_sf(chi, dof), mean > 0.0 ? var / mean : 0.0};
}

KsResult two_sample_ks_discrete(std::span<const std::int64_t> xs,
                                std::span<const std::int64_t> ys,
                                RngStream& rng, std::size_t permutations) {
  if (xs.empty() || ys.empty()) {
    throw std::invalid_argument("two_sample_ks_discrete: empty sample");
  }
  std::vector<std::int64_t> sx(xs.begin(), xs.end());
  std::vector<std::int64_t> sy(ys.begin(), ys.end());
  std::sort(sx.begin(), sx.end());
  std::sort(sy.begin(), sy.end());
  const double observed = ks_distance_sorted(sx, sy);

  std::vector<std::int64_t> pooled;
  pooled.reserve(xs.size() + ys.size());
  pooled.insert(pooled.end(), xs.begin(), xs.end());
  pooled.insert(pooled.end(), ys.begin(), ys.end());

  std::size_t at_least = 0;
  std::vector<std::int64_t> px(xs.size());
  std::vector<std::int64_t> py(ys.size());
  for (std::size_t p = 0; p < permutations; ++p) {
    for (std::size_t i = pooled.size() - 1; i > 0; --i) {
      std::swap(pooled[i], pooled[rng.below(i + 1)]);
    }
    px.assign(pooled.begin(), pooled.begin() + static_cast<std::ptrdiff_t>(xs.size()));
    py.assign(pooled.begin() + static_cast<std::ptrdiff_t>(xs.size()), pooled.end());
    std::sort(px.begin(), px.end());
    std::sort(py.begin(), py.end());
    if (ks_distance_sorted(px, py) >= observed - 1e-12) ++at_least;
  }
  const double p_value = static_cast<double>(at_least + 1) /
                         static_cast<double>(permutations + 1);
  return {observed, p_value};
}

std::string gof_csv(const GofReport& report) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "chi_square,dof,p_value,dispersion\n%.12g,%llu,%.12g,%.12g\n",
                report.chi_square, static_cast<unsigned long long>(report.dof),
                report.p_value, report.dispersion_index);
  return buf;
}

}  // namespace catpop
