#include "catpop/point_process.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "catpop/quadrature.hpp"

namespace catpop {

namespace {

// Integer index window [ceil(L w), floor(L z)]; empty when first > last.
std::pair<std::uint64_t, std::uint64_t> index_window(double time_lo,
                                                     double time_hi,
                                                     std::uint64_t scale) {
  const double lw = static_cast<double>(scale) * time_lo;
  const double lz = static_cast<double>(scale) * time_hi;
  const double first = std::ceil(lw);
  const double last = std::floor(lz);
  if (first > last) return {1, 0};
  return {static_cast<std::uint64_t>(first), static_cast<std::uint64_t>(last)};
}

// Zero-width intervals are tolerated (they carry zero intensity); only
// inverted ones are rejected.
void validate_uniform_box(const UniformBox& box) {
  if (!(box.time_lo > 0.0 && box.time_hi >= box.time_lo)) {
    throw std::invalid_argument("UniformBox: need 0 < w <= z");
  }
  if (!(box.c_lo > 0.0 && box.c_hi >= box.c_lo)) {
    throw std::invalid_argument("UniformBox: need 0 < a_k <= b_k");
  }
  if (box.scale < 1) throw std::invalid_argument("UniformBox: scale must be >= 1");
  const double hi = box.c_hi / static_cast<double>(box.scale);
  if (hi >= 1.0) {
    throw std::invalid_argument("UniformBox: rescaled c-interval escapes (0,1)");
  }
}

void validate_powerlaw_box(const PowerLawBox& box) {
  if (!(box.location > 0.0)) {
    throw std::invalid_argument("PowerLawBox: location must be positive");
  }
  if (!(box.time_lo > 0.0 && box.time_hi >= box.time_lo)) {
    throw std::invalid_argument("PowerLawBox: need 0 < w <= z");
  }
  if (!(box.c_hi >= box.c_lo)) {
    throw std::invalid_argument("PowerLawBox: need b <= d");
  }
  if (box.scale < 1) throw std::invalid_argument("PowerLawBox: scale must be >= 1");
  if (!(box.beta > 1.0)) {
    throw std::invalid_argument("PowerLawBox: beta must exceed 1");
  }
  const auto [lo, hi] = rescaled_interval(box);
  if (!(lo > 0.0 && hi < 1.0)) {
    throw std::invalid_argument("PowerLawBox: rescaled c-interval escapes (0,1)");
  }
}

bool require_uniform_one(const CModel& model) {
  const auto* u = std::get_if<Uniform>(&model.law());
  return u != nullptr && u->a == 1.0;
}

}  // namespace

PowerLawBox make_powerlaw_box(double alpha, double location, double time_lo,
                              double time_hi, double c_lo, double c_hi,
                              std::uint64_t scale) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("make_powerlaw_box: alpha must lie in (0,1)");
  }
  PowerLawBox box{location, time_lo, time_hi, c_lo, c_hi, scale, 1.0 + alpha};
  validate_powerlaw_box(box);
  return box;
}

std::pair<double, double> rescaled_interval(const PowerLawBox& box) {
  const double L = static_cast<double>(box.scale);
  const double center = box.location / L;
  const double unit = std::pow(L, -box.beta);
  return {center + box.c_lo * unit, center + box.c_hi * unit};
}

PointSet sample_point_set(const CModel& model, std::uint64_t truncation,
                          RngStream& rng) {
  PointSet set;
  set.truncation = truncation;
  set.points.emplace_back(0, model.sample(rng));
  for (std::uint64_t k = 1; k <= truncation; ++k) {
    const double c = model.sample(rng);
    const double p = std::pow(1.0 - c, static_cast<double>(k - 1));
    if (rng.bernoulli(p)) set.points.emplace_back(k, c);
  }
  return set;
}

std::uint64_t count_in_uniform_box(const CModel& model, const UniformBox& box,
                                   RngStream& rng) {
  validate_uniform_box(box);
  if (!require_uniform_one(model)) {
    throw std::invalid_argument(
        "count_in_uniform_box: law must be Uniform(1)");
  }
  const auto [first, last] = index_window(box.time_lo, box.time_hi, box.scale);
  const double L = static_cast<double>(box.scale);
  const double lo = box.c_lo / L;
  const double hi = box.c_hi / L;

  std::uint64_t count = 0;
  for (std::uint64_t l = first; l <= last; ++l) {
    // One (c, u) pair per visited index, whether or not c lands in the box.
    const double c = model.sample(rng);
    const double u = rng.uniform01();
    if (c > lo && c < hi && u < std::pow(1.0 - c, static_cast<double>(l))) {
      ++count;
    }
  }
  return count;
}

double intensity_uniform_box(const UniformBox& box) {
  validate_uniform_box(box);
  const double w = box.time_lo;
  const double z = box.time_hi;
  return integrate(
      [w, z](double y) { return (std::exp(-y * w) - std::exp(-y * z)) / y; },
      box.c_lo, box.c_hi, 1e-9);
}

double uniform_box_prelimit_mean(const UniformBox& box) {
  validate_uniform_box(box);
  const auto [first, last] = index_window(box.time_lo, box.time_hi, box.scale);
  if (first > last) return 0.0;
  const double L = static_cast<double>(box.scale);
  const double qlo = 1.0 - box.c_lo / L;
  const double qhi = 1.0 - box.c_hi / L;
  double pw_lo = std::pow(qlo, static_cast<double>(first + 1));
  double pw_hi = std::pow(qhi, static_cast<double>(first + 1));
  double total = 0.0;
  for (std::uint64_t l = first; l <= last; ++l) {
    total += (pw_lo - pw_hi) / static_cast<double>(l + 1);
    pw_lo *= qlo;
    pw_hi *= qhi;
  }
  return total;
}

std::uint64_t count_in_powerlaw_box(double alpha, const PowerLawBox& box,
                                    RngStream& rng) {
  validate_powerlaw_box(box);
  const CModel model = CModel::power_law(alpha);
  const auto [first, last] = index_window(box.time_lo, box.time_hi, box.scale);
  const auto [lo, hi] = rescaled_interval(box);

  std::uint64_t count = 0;
  for (std::uint64_t l = first; l <= last; ++l) {
    const double c = model.sample(rng);
    const double u = rng.uniform01();
    if (c > lo && c < hi && u < std::pow(1.0 - c, static_cast<double>(l))) {
      ++count;
    }
  }
  return count;
}

double intensity_powerlaw_box(double alpha, const PowerLawBox& box) {
  validate_powerlaw_box(box);
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("intensity_powerlaw_box: alpha must lie in (0,1)");
  }
  const double a = box.location;
  return (box.c_hi - box.c_lo) * (1.0 - alpha) * std::pow(a, -alpha) *
         (std::exp(-a * box.time_lo) - std::exp(-a * box.time_hi)) / a;
}

double powerlaw_box_prelimit_mean(double alpha, const PowerLawBox& box) {
  validate_powerlaw_box(box);
  const auto [first, last] = index_window(box.time_lo, box.time_hi, box.scale);
  if (first > last) return 0.0;
  const auto [lo, hi] = rescaled_interval(box);
  // sum_l (1-x)^l telescopes to ((1-x)^first - (1-x)^{last+1}) / x.
  const double e0 = static_cast<double>(first);
  const double e1 = static_cast<double>(last + 1);
  return integrate(
      [alpha, e0, e1](double x) {
        const double geom = (std::pow(1.0 - x, e0) - std::pow(1.0 - x, e1)) / x;
        return geom * (1.0 - alpha) * std::pow(x, -alpha);
      },
      lo, hi, 1e-10);
}

void validate_independence_boxes(std::span<const PowerLawBox> boxes) {
  for (const PowerLawBox& box : boxes) validate_powerlaw_box(box);
  for (std::size_t i = 1; i < boxes.size(); ++i) {
    if (boxes[i].scale != boxes[0].scale) {
      throw std::invalid_argument("independence_counts: boxes must share L");
    }
  }
  std::vector<std::pair<double, double>> intervals;
  intervals.reserve(boxes.size());
  for (const PowerLawBox& box : boxes) intervals.push_back(rescaled_interval(box));
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      if (boxes[i].location == boxes[j].location) {
        throw std::invalid_argument("independence_counts: locations must be distinct");
      }
      if (intervals[i].first < intervals[j].second &&
          intervals[j].first < intervals[i].second) {
        throw std::invalid_argument(
            "independence_counts: rescaled c-intervals overlap");
      }
    }
  }
}

std::vector<std::uint64_t> independence_counts(
    double alpha, std::span<const PowerLawBox> boxes, RngStream& rng) {
  if (boxes.empty()) return {};
  validate_independence_boxes(boxes);
  std::vector<std::pair<double, double>> intervals;
  intervals.reserve(boxes.size());
  for (const PowerLawBox& box : boxes) intervals.push_back(rescaled_interval(box));

  std::uint64_t first = UINT64_MAX;
  std::uint64_t last = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> windows;
  windows.reserve(boxes.size());
  for (const PowerLawBox& box : boxes) {
    const auto w = index_window(box.time_lo, box.time_hi, box.scale);
    windows.push_back(w);
    if (w.first <= w.second) {
      first = std::min(first, w.first);
      last = std::max(last, w.second);
    }
  }
  std::vector<std::uint64_t> counts(boxes.size(), 0);
  if (first > last) return counts;

  const CModel model = CModel::power_law(alpha);
  for (std::uint64_t l = first; l <= last; ++l) {
    // One realization: a single (c_l, G_l) pair shared by every box.
    const double c = model.sample(rng);
    const double u = rng.uniform01();
    const bool survives = u < std::pow(1.0 - c, static_cast<double>(l));
    if (!survives) continue;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      if (l >= windows[i].first && l <= windows[i].second &&
          c > intervals[i].first && c < intervals[i].second) {
        ++counts[i];
      }
    }
  }
  return counts;
}

std::string point_set_csv(const PointSet& set) {
  std::string out = "k,c\n";
  char buf[48];
  for (const auto& [k, c] : set.points) {
    std::snprintf(buf, sizeof(buf), "%llu,%.17g\n",
                  static_cast<unsigned long long>(k), c);
    out += buf;
  }
  return out;
}

}  // namespace catpop
