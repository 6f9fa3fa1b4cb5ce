#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "commands.hpp"
#include "synthetic.hpp"

namespace ccbench {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result ccbench(std::vector<std::string> args) {
  args.insert(args.begin(), "ccbench");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Small gray-world dataset: `single` one-light scenes and `two` two-light
// scenes whose faces differ by 10 degrees.
fs::path make_dataset(const std::string& name, int single, int two) {
  const fs::path dir = testing::fresh_temp_dir(name);
  std::mt19937_64 rng(71);
  for (int i = 0; i < single; ++i) {
    const Chromaticity light = testing::random_chromaticity(rng, 0.3);
    write_record(dir, testing::gray_world_scene("s" + std::to_string(i), 24, 16, light, rng));
  }
  for (int i = 0; i < two; ++i) {
    const Chromaticity left = testing::random_chromaticity(rng, 0.3);
    const Chromaticity right = testing::rotate_towards(left, 10.0);
    write_record(dir, testing::two_light_scene("t" + std::to_string(i), 24, 16, left, right, rng));
  }
  return dir;
}

TEST(Cli, SplitPlacesRecordsByFaceAngle) {
  const fs::path dir = testing::fresh_temp_dir("cli_split");
  const Chromaticity base = normalize({0.4, 0.5, 0.3});
  const std::pair<const char*, double> planted[] = {{"a", 0.5}, {"b", 1.9}, {"c", 3.0}};
  for (const auto& [id, angle] : planted) {
    SceneRecord rec = testing::uniform_record(id, 4, 4, {3000, 4000, 2500});
    rec.annotation.left_gt = base;
    rec.annotation.right_gt = testing::rotate_towards(base, angle);
    write_record(dir, rec);
  }
  const fs::path out = dir / "tracks";
  const Result r = ccbench({"--dataset", dir.string(), "split", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("general: 2 images"), std::string::npos);
  EXPECT_NE(r.out.find("two: 1 images"), std::string::npos);
  EXPECT_EQ(slurp(out / "two.csv"), "image_id,arity\nc,2\n");
  EXPECT_EQ(slurp(out / "general.csv"), "image_id,arity\na,1\nb,1\n");

  const fs::path again = dir / "tracks2";
  ASSERT_EQ(ccbench({"--dataset", dir.string(), "split", "--out", again.string()}).code, 0);
  for (const char* f : {"general.csv", "indoor.csv", "two.csv"}) EXPECT_EQ(slurp(out / f), slurp(again / f));
}

TEST(Cli, EmptyDatasetIsDataError) {
  const fs::path dir = testing::fresh_temp_dir("cli_empty");
  const Result r = ccbench({"--dataset", dir.string(), "split", "--out", (dir / "o").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("no records"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  const fs::path dir = make_dataset("cli_usage", 2, 0);
  EXPECT_EQ(ccbench({"--dataset", dir.string(), "run", "--estimator", "nope", "--out", "-"}).code, 2);
  EXPECT_EQ(ccbench({"--track", "outdoor", "split", "--out", "x"}).code, 2);
  EXPECT_EQ(ccbench({}).code, 2);
  EXPECT_EQ(ccbench({"--help"}).code, 0);
}

TEST(Cli, SingleEstimatorOnTwoTrackNeedsDuplicate) {
  const fs::path dir = make_dataset("cli_arity", 1, 2);
  const std::string out = (dir / "sub.csv").string();
  const Result r = ccbench({"--dataset", dir.string(), "--track", "two", "run", "--estimator", "gray_world", "--out", out});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("--duplicate"), std::string::npos);
  EXPECT_EQ(
      ccbench({"--dataset", dir.string(), "--track", "two", "run", "--estimator", "gray_world", "--duplicate", "--out", out})
          .code,
      0);
  EXPECT_EQ(ccbench({"--dataset", dir.string(), "--track", "general", "run", "--estimator", "split_gray_world", "--out",
                     out})
                .code,
            3);
}

TEST(Cli, RunEvaluateReportPipeline) {
  const fs::path dir = make_dataset("cli_pipeline", 12, 3);
  const std::string sub = (dir / "me__gray.csv").string();
  const std::string constant = (dir / "base__const.csv").string();
  ASSERT_EQ(ccbench({"--dataset", dir.string(), "run", "--estimator", "gray_world", "--out", sub}).code, 0);
  ASSERT_EQ(ccbench({"--dataset", dir.string(), "run", "--estimator", "constant", "--out", constant}).code, 0);

  const std::string json_path = (dir / "board.json").string();
  const Result eval =
      ccbench({"--dataset", dir.string(), "--format", "json", "evaluate", sub, constant, "--output", json_path});
  ASSERT_EQ(eval.code, 0) << eval.err;
  const auto board = nlohmann::json::parse(slurp(json_path));
  ASSERT_EQ(board["rows"].size(), 2u);
  EXPECT_EQ(board["rows"][0]["team"], "me");
  EXPECT_EQ(board["rows"][0]["algorithm"], "gray");
  EXPECT_LT(board["rows"][0]["summary"]["mean"].get<double>(), 0.1);
  EXPECT_EQ(board["rows"][0]["summary"]["n"].get<std::size_t>(), 12u);

  const fs::path per_image = dir / "per_image";
  const Result rep = ccbench({"report", "--leaderboard", json_path, "--per-image-dir", per_image.string()});
  ASSERT_EQ(rep.code, 0) << rep.err;
  std::ifstream first(per_image / "001_me_gray.csv");
  std::string line;
  std::getline(first, line);
  EXPECT_EQ(line, "image_id,error,squared");
  std::size_t rows = 0;
  double sum = 0;
  while (std::getline(first, line)) {
    ++rows;
    sum += std::stod(line.substr(line.find(',') + 1));
  }
  EXPECT_EQ(rows, 12u);
  EXPECT_NEAR(sum / 12, board["rows"][0]["summary"]["mean"].get<double>(), 1e-9);
}

TEST(Cli, EvaluateIsThreadCountInvariant) {
  const fs::path dir = make_dataset("cli_threads", 40, 0);
  const std::string sub = (dir / "a__b.csv").string();
  ASSERT_EQ(ccbench({"--dataset", dir.string(), "run", "--estimator", "max_rgb", "--threads", "3", "--out", sub}).code, 0);
  const Result one = ccbench({"--dataset", dir.string(), "--format", "json", "--threads", "1", "evaluate", sub});
  const Result eight = ccbench({"--dataset", dir.string(), "--format", "json", "--threads", "8", "evaluate", sub});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, eight.out);
}

TEST(Cli, EvaluateRejectsIncompleteSubmission) {
  const fs::path dir = make_dataset("cli_incomplete", 3, 0);
  const fs::path sub = dir / "x.csv";
  std::ofstream(sub) << "image_id,r,g,b\ns0,1,1,1\ns1,1,1,1\n";
  const Result r = ccbench({"--dataset", dir.string(), "evaluate", sub.string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("s2"), std::string::npos);
}

TEST(Cli, ConfigFileLosesToFlags) {
  const fs::path dir = make_dataset("cli_config", 4, 0);
  const std::string sub = (dir / "a__b.csv").string();
  ASSERT_EQ(ccbench({"--dataset", dir.string(), "run", "--estimator", "gray_world", "--out", sub}).code, 0);
  const fs::path cfg = dir / "bench.toml";
  std::ofstream(cfg) << "dataset = \"" << dir.string() << "\"\nformat = \"json\"\nrank-by = \"mean\"\n";

  const Result from_file = ccbench({"--config", cfg.string(), "evaluate", sub});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_EQ(nlohmann::json::parse(from_file.out)["rank_by"], "mean");

  const Result overridden = ccbench({"--config", cfg.string(), "--format", "csv", "evaluate", sub});
  ASSERT_EQ(overridden.code, 0) << overridden.err;
  EXPECT_EQ(overridden.out.rfind("rank,", 0), 0u);
}

}  // namespace
}  // namespace ccbench
