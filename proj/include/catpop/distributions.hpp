#pragma once

#include <cstdint>
#include <variant>

#include "catpop/rng.hpp"

namespace catpop {

// Death-probability laws. Each individual draws one c at birth and keeps it
// for life; the law's shape decides the fate of the whole population.
struct Uniform {
  double a;  // density 1/a on (0,a), 0 < a <= 1
};

struct PowerLaw {
  double alpha;  // density (1-alpha) x^{-alpha} on (0,1), 0 < alpha < 1
};

struct Constant {
  double c;  // point mass, 0 < c <= 1
};

class CModel {
 public:
  static CModel uniform(double a);
  static CModel power_law(double alpha);
  static CModel constant(double c);

  // Inverse-CDF sample: a deterministic function of one uniform draw
  // (Constant consumes no draw).
  double sample(RngStream& rng) const;

  bool has_density() const;

  // f(x); zero outside the support. Throws for the Constant variant.
  double density(double x) const;

  // P(C <= x).
  double cdf(double x) const;

  // E(1/C); +infinity for Uniform and PowerLaw, 1/c for Constant.
  double mean_inverse() const;

  // E((1-C)^m), the probability that a lifetime exceeds m at-risk steps.
  // Closed form for Uniform/Constant, adaptive quadrature for PowerLaw.
  double survival_moment(std::uint64_t m) const;

  const std::variant<Uniform, PowerLaw, Constant>& law() const { return law_; }

 private:
  explicit CModel(std::variant<Uniform, PowerLaw, Constant> law)
      : law_(law) {}

  std::variant<Uniform, PowerLaw, Constant> law_;
};

// Geometric lifetime on {1,2,...} with P(G=m) = c(1-c)^{m-1}, sampled by
// inverting the CDF on one uniform draw. c=1 always returns 1.
std::uint64_t sample_geometric(double c, RngStream& rng);

}  // namespace catpop
