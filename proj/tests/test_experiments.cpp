#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "catpop/experiments.hpp"

using namespace catpop;

namespace {

std::map<std::string, std::string> files_of(const ExperimentResult& result) {
  return {result.files.begin(), result.files.end()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("config validation: missing, unknown and malformed keys") {
  CHECK_THROWS_AS(run_experiment("not json", 1), ConfigError);
  CHECK_THROWS_AS(run_experiment("[1,2]", 1), ConfigError);
  CHECK_THROWS_AS(run_experiment(R"({"experiment":"nope","seed":1})", 1),
                  ConfigError);

  // Missing seed names the key.
  try {
    run_experiment(
        R"({"experiment":"fms","mode":"constant","c":0.1,"horizon":10,"level":1})",
        1);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("seed") != std::string::npos);
  }

  // Unknown keys are rejected and named.
  try {
    run_experiment(
        R"({"experiment":"fms","seed":1,"mode":"constant","c":0.1,"horizon":10,"level":1,"bogus":3})",
        1);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }

  CHECK_THROWS_AS(
      run_experiment(
          R"({"experiment":"fms","seed":1,"mode":"wat","c":0.1,"horizon":10,"level":1})",
          1),
      ConfigError);
  CHECK_THROWS_AS(
      run_experiment(
          R"({"experiment":"growth","seed":1,"a":1.5,"horizon":10,"initial_sizes":[1],"replicas":10,"checkpoints":[10]})",
          1),
      ConfigError);
  CHECK_THROWS_AS(
      run_experiment(
          R"({"experiment":"growth","seed":1,"a":0.1,"horizon":10,"initial_sizes":[1],"replicas":10,"checkpoints":[20]})",
          1),
      ConfigError);
  CHECK_THROWS_AS(
      run_experiment(
          R"({"experiment":"growth","seed":-4,"a":0.1,"horizon":10,"initial_sizes":[1],"replicas":10,"checkpoints":[10]})",
          1),
      ConfigError);

  // Bad box geometry is a config error, not a runtime failure.
  CHECK_THROWS_AS(
      run_experiment(
          R"({"experiment":"poisson-gof","seed":1,"law":"uniform","replicas":200,"scales":[50],"time_lo":1,"time_hi":2,"c_lo":1,"c_hi":60})",
          1),
      ConfigError);
  CHECK_THROWS_AS(
      run_experiment(
          R"({"experiment":"poisson-gof","seed":1,"law":"powerlaw","alpha":0.5,"replicas":200,"scales":[200],"time_lo":1,"time_hi":2,"c_lo":0,"c_hi":1,"locations":[1,1.001]})",
          1),
      ConfigError);
}

TEST_CASE("summary CSV shape") {
  CHECK(summary_csv({}) == "metric,value,expected,tolerance,pass\n");
  const SummaryRow info{"metric_a", 2.0, std::nullopt, std::nullopt, std::nullopt};
  const SummaryRow checked{"metric_b", 2.0, 2.5, 1.0, true};
  CHECK(summary_csv({info, checked}) ==
        "metric,value,expected,tolerance,pass\n"
        "metric_a,2,,,\n"
        "metric_b,2,2.5,1,1\n");
}

TEST_CASE("fms experiment emits a trajectory and info rows") {
  const ExperimentResult result = run_experiment(
      R"({"experiment":"fms","seed":9,"mode":"constant","c":0.2,"horizon":50,"level":1})",
      1);
  const auto files = files_of(result);
  REQUIRE(files.count("trajectory_fms.csv") == 1);
  REQUIRE(files.count("summary.csv") == 1);
  CHECK(files.at("trajectory_fms.csv").substr(0, 7) == "t,size\n");
  CHECK(result.summary.size() == 3);
}

TEST_CASE("growth experiment produces one trajectory per founder count") {
  const ExperimentResult result = run_experiment(
      R"({"experiment":"growth","seed":5,"a":0.1,"horizon":200,"initial_sizes":[1,10],"replicas":200,"checkpoints":[100,200]})",
      0);
  const auto files = files_of(result);
  CHECK(files.count("trajectory_m1.csv") == 1);
  CHECK(files.count("trajectory_m10.csv") == 1);
  REQUIRE(result.summary.size() == 2);
  for (const SummaryRow& row : result.summary) {
    REQUIRE(row.pass.has_value());
    CHECK(*row.pass);
  }
}

TEST_CASE("dist-eq experiment reports a passing KS row") {
  const ExperimentResult result = run_experiment(
      R"({"experiment":"dist-eq","seed":3,"horizon":30,"a":0.2,"replicas":2000,"permutations":300})",
      0);
  REQUIRE(result.summary.size() == 2);
  CHECK(result.summary[0].metric == "ks_distance");
  CHECK(result.summary[1].metric == "ks_p_value");
  CHECK(result.summary[1].value > 0.01);
}

TEST_CASE("accumulation experiment emits points and bound rows") {
  const ExperimentResult result = run_experiment(
      R"({"experiment":"accumulation","seed":8,"truncation":5000,"threshold":0.1,"replicas":100})",
      0);
  const auto files = files_of(result);
  REQUIRE(files.count("points_sample.csv") == 1);
  CHECK(files.at("points_sample.csv").substr(0, 4) == "k,c\n");
  REQUIRE(result.summary.size() == 4);
  CHECK(result.summary[0].metric == "tail_count_mean");
  CHECK(*result.summary[0].pass);
  CHECK(*result.summary[1].pass);  // tail_count_max <= 1/b
  CHECK(*result.summary[2].pass);  // low_count_growth
}

TEST_CASE("poisson-gof experiment emits one gof file per scale") {
  const ExperimentResult result = run_experiment(
      R"({"experiment":"poisson-gof","seed":4,"law":"uniform","replicas":2000,"scales":[50,100],"time_lo":1,"time_hi":2,"c_lo":1,"c_hi":2})",
      0);
  const auto files = files_of(result);
  CHECK(files.count("gof_L50.csv") == 1);
  CHECK(files.count("gof_L100.csv") == 1);
  bool saw_prelimit = false;
  for (const SummaryRow& row : result.summary) {
    if (row.metric.rfind("count_mean_vs_prelimit", 0) == 0) {
      saw_prelimit = true;
      CHECK(*row.pass);
    }
  }
  CHECK(saw_prelimit);
}

TEST_CASE("experiment outputs are byte-identical across reruns and thread counts") {
  const std::string config =
      R"({"experiment":"poisson-gof","seed":6,"law":"powerlaw","alpha":0.5,"replicas":500,"scales":[100],"time_lo":1,"time_hi":2,"c_lo":0,"c_hi":1,"locations":[1,2]})";
  const ExperimentResult once = run_experiment(config, 1);
  const ExperimentResult twice = run_experiment(config, 1);
  const ExperimentResult threaded = run_experiment(config, 4);
  CHECK(once.files == twice.files);
  CHECK(once.files == threaded.files);

  const std::string growth =
      R"({"experiment":"growth","seed":5,"a":0.1,"horizon":100,"initial_sizes":[1,3],"replicas":100,"checkpoints":[100]})";
  CHECK(run_experiment(growth, 1).files == run_experiment(growth, 3).files);
}

TEST_CASE("write_result_files round trip") {
  const ExperimentResult result = run_experiment(
      R"({"experiment":"fms","seed":9,"mode":"random-env","a":0.05,"horizon":40,"level":2})",
      1);
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "catpop_test_out";
  std::filesystem::remove_all(dir);
  write_result_files(result, dir);
  for (const auto& [name, contents] : result.files) {
    CHECK(read_file(dir / name) == contents);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("partial outputs are removed when a write fails") {
  const ExperimentResult result = run_experiment(
      R"({"experiment":"fms","seed":9,"mode":"constant","c":0.3,"horizon":20,"level":1})",
      1);
  REQUIRE(result.files.size() == 2);  // trajectory first, then summary.csv
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "catpop_partial_out";
  std::filesystem::remove_all(dir);
  // A directory squatting on the summary name makes the second write fail.
  std::filesystem::create_directories(dir / "summary.csv");
  CHECK_THROWS(write_result_files(result, dir));
  CHECK(!std::filesystem::exists(dir / result.files[0].first));
  std::filesystem::remove_all(dir);
}

TEST_CASE("run_cli maps errors to exit codes") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "catpop_cli_out";
  std::filesystem::remove_all(dir);
  const std::filesystem::path config_path = dir / "config.json";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(config_path);
    out << R"({"experiment":"fms","seed":2,"mode":"constant","c":0.5,"horizon":20,"level":1})";
  }
  const std::string out_dir = (dir / "results").string();
  const std::string config = config_path.string();

  {
    const char* argv[] = {"catpop", "run", config.c_str(), "--out",
                          out_dir.c_str()};
    CHECK(run_cli(5, argv) == 0);
    CHECK(std::filesystem::exists(dir / "results" / "summary.csv"));
    CHECK(std::filesystem::exists(dir / "results" / "trajectory_fms.csv"));
  }
  {
    const char* argv[] = {"catpop", "run", "/nonexistent/config.json"};
    CHECK(run_cli(3, argv) == 1);
  }
  {
    const char* argv[] = {"catpop"};
    CHECK(run_cli(1, argv) == 1);
  }
  {
    std::ofstream out(config_path);
    out << R"({"experiment":"fms","seed":2})";
    const char* argv[] = {"catpop", "run", config.c_str()};
    CHECK(run_cli(3, argv) == 1);
  }
  {
    // Valid config but the output directory collides with a regular file:
    // runtime failure, exit 2.
    std::ofstream out(config_path);
    out << R"({"experiment":"fms","seed":2,"mode":"constant","c":0.5,"horizon":20,"level":1})";
    out.close();
    const std::filesystem::path blocked = dir / "blocked";
    std::ofstream(blocked) << "x";
    const std::string blocked_str = blocked.string();
    const char* argv[] = {"catpop", "run", config.c_str(), "--out",
                          blocked_str.c_str()};
    CHECK(run_cli(5, argv) == 2);
  }
  std::filesystem::remove_all(dir);
}
