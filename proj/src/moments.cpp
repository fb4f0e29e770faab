#include "catpop/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace catpop {

double expected_size(std::uint64_t n, const CModel& model) {
  double total = 1.0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    total += model.survival_moment(k - 1);
  }
  return total;
}

double expected_size_uniform(std::uint64_t n, double a) {
  if (n < 1) throw std::invalid_argument("expected_size_uniform: n must be >= 1");
  if (!(a > 0.0 && a < 1.0)) {
    throw std::invalid_argument("expected_size_uniform: a must lie in (0,1)");
  }
  double harmonic = 0.0;
  double geom_sum = 0.0;
  double pw = 1.0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    harmonic += 1.0 / static_cast<double>(k);
    pw *= 1.0 - a;
    geom_sum += pw / static_cast<double>(k);
  }
  return 1.0 + harmonic / a - geom_sum / a;
}

double variance_size(std::uint64_t n, const CModel& model) {
  double total = 0.0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const double p = model.survival_moment(k - 1);
    total += p * (1.0 - p);
  }
  return total;
}

SurvivalClass classify(const CModel& model) {
  return std::isinf(model.mean_inverse()) ? SurvivalClass::DivergesInProbability
                                          : SurvivalClass::ConvergesInDistribution;
}

double growth_ratio(std::uint64_t n, double a) {
  if (n < 2) throw std::invalid_argument("growth_ratio: n must be >= 2");
  return expected_size_uniform(n, a) /
         (std::log(static_cast<double>(n)) / a);
}

double tail_count_bound(const CModel& model, double b) {
  if (!(b > 0.0 && b < 1.0)) {
    throw std::invalid_argument("tail_count_bound: b must lie in (0,1)");
  }
  if (!model.has_density()) {
    throw std::domain_error("tail_count_bound: model has no density");
  }
  if (const auto* u = std::get_if<Uniform>(&model.law())) {
    return b >= u->a ? 0.0 : std::log(u->a / b) / u->a;
  }
  const auto& p = std::get<PowerLaw>(model.law());
  // (1-alpha) int_b^1 x^{-alpha-1} dx
  return (1.0 - p.alpha) / p.alpha * (std::pow(b, -p.alpha) - 1.0);
}

}  // namespace catpop
