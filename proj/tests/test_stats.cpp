#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "catpop/population.hpp"
#include "catpop/replicas.hpp"
#include "catpop/stats.hpp"
#include "oracles.hpp"

using namespace catpop;

TEST_CASE("chi-square survival function against closed forms") {
  // Even dof have elementary forms; dof = 1 reduces to erfc.
  for (double x : {0.1, 1.0, 3.5, 10.0, 30.0}) {
    CHECK(chi_square_sf(x, 2) == doctest::Approx(std::exp(-x / 2)).epsilon(1e-12));
    CHECK(chi_square_sf(x, 4) ==
          doctest::Approx(std::exp(-x / 2) * (1 + x / 2)).epsilon(1e-12));
    CHECK(chi_square_sf(x, 6) ==
          doctest::Approx(std::exp(-x / 2) * (1 + x / 2 + x * x / 8)).epsilon(1e-12));
    CHECK(chi_square_sf(x, 1) ==
          doctest::Approx(std::erfc(std::sqrt(x / 2))).epsilon(1e-12));
  }
  CHECK(chi_square_sf(0.0, 3) == 1.0);
  CHECK(chi_square_sf(3.5, 5) == doctest::Approx(0.6233876277).epsilon(1e-9));
  CHECK_THROWS_AS(chi_square_sf(1.0, 0), std::invalid_argument);
}

TEST_CASE("mc_mean_ci pins") {
  const std::vector<double> flat{1, 1, 1, 1};
  const MeanCI a = mc_mean_ci(flat);
  CHECK(a.mean == 1.0);
  CHECK(a.stderr_ == 0.0);

  const std::vector<double> pair{0, 2};
  const MeanCI b = mc_mean_ci(pair);
  CHECK(b.mean == doctest::Approx(1.0));
  CHECK(b.stderr_ == doctest::Approx(1.0));
  CHECK(b.ci_lo == doctest::Approx(-0.96));
  CHECK(b.ci_hi == doctest::Approx(2.96));

  const std::vector<double> one{1};
  CHECK_THROWS_AS(mc_mean_ci(one), std::invalid_argument);
}

TEST_CASE("CI covers the true mean about 95% of the time") {
  const double lambda = 5.0;
  const int batches = 1000;
  const int batch_size = 200;
  int covered = 0;
  RngStream rng(17, 0);
  for (int b = 0; b < batches; ++b) {
    std::vector<double> xs(batch_size);
    for (double& x : xs) {
      x = static_cast<double>(oracles::poisson_sample(lambda, rng));
    }
    const MeanCI ci = mc_mean_ci(xs);
    if (ci.ci_lo <= lambda && lambda <= ci.ci_hi) ++covered;
  }
  CHECK(covered >= 920);
  CHECK(covered <= 980);
}

TEST_CASE("poisson_gof validation and degenerate input") {
  std::vector<std::uint64_t> few(50, 1);
  CHECK_THROWS_AS(poisson_gof(few, 1.0), std::invalid_argument);
  std::vector<std::uint64_t> counts(1000, 1);
  CHECK_THROWS_AS(poisson_gof(counts, 0.0), std::invalid_argument);

  // Constant counts at round(lambda): zero dispersion, decisively rejected.
  const GofReport constant = poisson_gof(counts, 1.0);
  CHECK(constant.dispersion_index == 0.0);
  CHECK(constant.p_value < 0.01);
}

TEST_CASE("poisson_gof accepts its own sampler") {
  const double lambda = 2.0;
  const int trials = 100;
  const auto p_values = run_replicas(
      trials, 23, kReplicaStreamBase, 0, [&](std::size_t, RngStream& rng) {
        std::vector<std::uint64_t> counts(1000);
        for (auto& c : counts) c = oracles::poisson_sample(lambda, rng);
        return poisson_gof(counts, lambda).p_value;
      });
  int accepted = 0;
  for (double p : p_values) {
    if (p > 0.01) ++accepted;
  }
  CHECK(accepted >= 98);
}

TEST_CASE("poisson_gof rejects a doubled rate") {
  RngStream rng(29, 1);
  const double lambda = 0.125;
  std::vector<std::uint64_t> counts(1000);
  for (auto& c : counts) c = oracles::poisson_sample(2 * lambda, rng);
  CHECK(poisson_gof(counts, lambda).p_value < 0.01);
}

TEST_CASE("null p-values are roughly uniform") {
  const double lambda = 1.5;
  const int batches = 200;
  const auto p_values = run_replicas(
      batches, 31, kReplicaStreamBase, 0, [&](std::size_t, RngStream& rng) {
        std::vector<std::uint64_t> counts(500);
        for (auto& c : counts) c = oracles::poisson_sample(lambda, rng);
        return poisson_gof(counts, lambda).p_value;
      });
  double below = 0.0;
  for (double p : p_values) {
    if (p < 0.05) below += 1.0;
  }
  const double fraction = below / batches;
  CHECK(fraction >= 0.01);
  CHECK(fraction <= 0.12);
}

TEST_CASE("dispersion index of genuine Poisson batches stays near 1") {
  for (double lambda : {0.1, 1.0, 5.0}) {
    RngStream rng(37, static_cast<std::uint64_t>(lambda * 10));
    std::vector<std::uint64_t> counts(10000);
    for (auto& c : counts) c = oracles::poisson_sample(lambda, rng);
    const GofReport report = poisson_gof(counts, lambda);
    CHECK(report.dispersion_index > 0.9);
    CHECK(report.dispersion_index < 1.1);
  }
}

TEST_CASE("ks: pins and validation") {
  RngStream rng(41, 0);
  const std::vector<std::int64_t> xs{1, 2, 2, 3};
  const std::vector<std::int64_t> ys{1, 2, 2, 3};
  const KsResult same = two_sample_ks_discrete(xs, ys, rng, 200);
  CHECK(same.distance == 0.0);
  CHECK(same.p_value == 1.0);

  const std::vector<std::int64_t> zeros(20, 0);
  const std::vector<std::int64_t> ones(20, 1);
  const KsResult apart = two_sample_ks_discrete(zeros, ones, rng, 200);
  CHECK(apart.distance == 1.0);
  CHECK(apart.p_value < 0.01);

  const std::vector<std::int64_t> empty;
  CHECK_THROWS_AS(two_sample_ks_discrete(empty, ones, rng, 100),
                  std::invalid_argument);
}

TEST_CASE("ks distance handles unequal lengths and ties") {
  RngStream rng(43, 0);
  // F_x jumps to 1 at 0; F_y has 1/3 mass at 0 -> sup gap 2/3.
  const std::vector<std::int64_t> xs{0, 0};
  const std::vector<std::int64_t> ys{0, 5, 7};
  const KsResult r = two_sample_ks_discrete(xs, ys, rng, 100);
  CHECK(r.distance == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("ks permutation p-values are deterministic given the seed") {
  std::vector<std::int64_t> xs;
  std::vector<std::int64_t> ys;
  RngStream gen(47, 0);
  for (int i = 0; i < 400; ++i) {
    xs.push_back(static_cast<std::int64_t>(gen.below(6)));
    ys.push_back(static_cast<std::int64_t>(gen.below(6) + gen.below(2)));
  }
  RngStream rng_a(51, 3);
  RngStream rng_b(51, 3);
  const KsResult a = two_sample_ks_discrete(xs, ys, rng_a, 500);
  const KsResult b = two_sample_ks_discrete(xs, ys, rng_b, 500);
  CHECK(a.distance == b.distance);
  CHECK(a.p_value == b.p_value);
}

TEST_CASE("ks self-consistency on the population model") {
  // Two independent batches of |A~_50| should look identical; accept in at
  // least 98 of 100 trials.
  const CModel model = CModel::uniform(0.1);
  const int trials = 100;
  const std::size_t batch = 2000;
  const auto p_values = run_replicas(
      trials, 53, kReplicaStreamBase, 0, [&](std::size_t trial, RngStream& rng) {
        std::vector<std::int64_t> xs(batch);
        std::vector<std::int64_t> ys(batch);
        RngStream sim(53, (1ULL << 40) + trial * 2 * batch);
        for (auto& x : xs) {
          x = static_cast<std::int64_t>(simulate_tilde(50, false, model, sim).sizes[50]);
        }
        for (auto& y : ys) {
          y = static_cast<std::int64_t>(simulate_tilde(50, false, model, sim).sizes[50]);
        }
        return two_sample_ks_discrete(xs, ys, rng, 400).p_value;
      });
  int accepted = 0;
  for (double p : p_values) {
    if (p > 0.01) ++accepted;
  }
  CHECK(accepted >= 98);
}

TEST_CASE("gof CSV format") {
  const GofReport report{1.5, 3, 0.25, 1.0};
  CHECK(gof_csv(report) == "chi_square,dof,p_value,dispersion\n1.5,3,0.25,1\n");
}
