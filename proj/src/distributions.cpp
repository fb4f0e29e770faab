#include "catpop/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "catpop/quadrature.hpp"

namespace catpop {

CModel CModel::uniform(double a) {
  if (!(a > 0.0 && a <= 1.0)) {
    throw std::invalid_argument("Uniform: a must lie in (0,1]");
  }
  return CModel{Uniform{a}};
}

CModel CModel::power_law(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("PowerLaw: alpha must lie in (0,1)");
  }
  return CModel{PowerLaw{alpha}};
}

CModel CModel::constant(double c) {
  if (!(c > 0.0 && c <= 1.0)) {
    throw std::invalid_argument("Constant: c must lie in (0,1]");
  }
  return CModel{Constant{c}};
}

double CModel::sample(RngStream& rng) const {
  return std::visit(
      [&rng](const auto& law) -> double {
        using L = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<L, Uniform>) {
          return law.a * rng.uniform01();
        } else if constexpr (std::is_same_v<L, PowerLaw>) {
          // CDF(x) = x^{1-alpha}, so x = u^{1/(1-alpha)}.
          return std::pow(rng.uniform01(), 1.0 / (1.0 - law.alpha));
        } else {
          return law.c;
        }
      },
      law_);
}

bool CModel::has_density() const {
  return !std::holds_alternative<Constant>(law_);
}

double CModel::density(double x) const {
  return std::visit(
      [x](const auto& law) -> double {
        using L = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<L, Uniform>) {
          return (x > 0.0 && x < law.a) ? 1.0 / law.a : 0.0;
        } else if constexpr (std::is_same_v<L, PowerLaw>) {
          return (x > 0.0 && x < 1.0)
                     ? (1.0 - law.alpha) * std::pow(x, -law.alpha)
                     : 0.0;
        } else {
          throw std::domain_error("Constant law has no density");
        }
      },
      law_);
}

double CModel::cdf(double x) const {
  return std::visit(
      [x](const auto& law) -> double {
        using L = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<L, Uniform>) {
          if (x <= 0.0) return 0.0;
          return x >= law.a ? 1.0 : x / law.a;
        } else if constexpr (std::is_same_v<L, PowerLaw>) {
          if (x <= 0.0) return 0.0;
          return x >= 1.0 ? 1.0 : std::pow(x, 1.0 - law.alpha);
        } else {
          return x >= law.c ? 1.0 : 0.0;
        }
      },
      law_);
}

double CModel::mean_inverse() const {
  return std::visit(
      [](const auto& law) -> double {
        using L = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<L, Constant>) {
          return 1.0 / law.c;
        } else {
          // int f(x)/x dx diverges at 0 for both density variants.
          (void)law;
          return std::numeric_limits<double>::infinity();
        }
      },
      law_);
}

double CModel::survival_moment(std::uint64_t m) const {
  if (m == 0) return 1.0;
  return std::visit(
      [m](const auto& law) -> double {
        using L = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<L, Uniform>) {
          const double md = static_cast<double>(m);
          return (1.0 - std::pow(1.0 - law.a, md + 1.0)) / (law.a * (md + 1.0));
        } else if constexpr (std::is_same_v<L, PowerLaw>) {
          // Substituting u = x^{1-alpha} removes the endpoint singularity:
          // E((1-C)^m) = int_0^1 (1 - u^{1/(1-alpha)})^m du.
          const double inv = 1.0 / (1.0 - law.alpha);
          const double md = static_cast<double>(m);
          return integrate(
              [inv, md](double u) {
                return std::pow(1.0 - std::pow(u, inv), md);
              },
              0.0, 1.0, 1e-10);
        } else {
          return std::pow(1.0 - law.c, static_cast<double>(m));
        }
      },
      law_);
}

std::uint64_t sample_geometric(double c, RngStream& rng) {
  if (!(c > 0.0 && c <= 1.0)) {
    throw std::invalid_argument("sample_geometric: c must lie in (0,1]");
  }
  if (c == 1.0) return 1;
  const double u = rng.uniform01();
  const double g = std::ceil(std::log(u) / std::log1p(-c));
  return g < 1.0 ? 1 : static_cast<std::uint64_t>(g);
}

}  // namespace catpop
