// Copyright 2026 The barystable Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "barystable/error.hpp"
#include "barystable/node_io.hpp"
#include "cli/commands.hpp"
#include "cli/run_config.hpp"

namespace barystable::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "barystable");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Rows of a CSV without quoted commas, keyed by the header.
std::vector<std::map<std::string, std::string>> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> fields;
    std::stringstream ss(s);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!s.empty() && s.back() == ',') fields.emplace_back();
    return fields;
  };
  std::getline(in, line);
  const std::vector<std::string> header = split(line);
  std::vector<std::map<std::string, std::string>> rows;
  while (std::getline(in, line)) {
    const std::vector<std::string> fields = split(line);
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < header.size() && i < fields.size(); ++i) row[header[i]] = fields[i];
    rows.push_back(row);
  }
  return rows;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("barystable_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const auto p = path_ / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

TEST(Cli, NodesToStdout) {
  const Result r = invoke({"nodes", "--n", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "# barystable-nodes v1 n=2\n-0x1p+0\n0x0p+0\n0x1p+0\n");
  const auto rows = parse_csv(r.err);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].at("command"), "nodes");
  EXPECT_EQ(rows[0].at("n"), "2");
  EXPECT_EQ(rows[0].at("oracle_bits"), "106");
  EXPECT_EQ(rows[0].at("exact_sum_failures"), "0");
  EXPECT_EQ(rows[0].at("max_relative_deviation"), "0");
}

TEST(Cli, NodesToFileWithWeights) {
  TempDir dir;
  const std::string nodes_path = dir.file("nodes.txt");
  const std::string weights_path = dir.file("weights.txt");
  const Result r = invoke({"nodes", "--n", "4", "-o", nodes_path, "--weights-output", weights_path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_LE(std::stod(rows[0].at("deviation_in_2^-52")), 2.54);
  EXPECT_EQ(load_nodes(nodes_path)[2], 0.0);
  EXPECT_EQ(load_weights(weights_path).variant(), WeightVariant::kNu);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"nodes"}).code, kExitUsage);
  EXPECT_EQ(invoke({"nodes", "--n", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"nodes", "--n", "abc"}).code, kExitUsage);
  EXPECT_EQ(invoke({"nodes", "--n", "4", "--oracle-bits", "64"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "--n", "4", "--method", "bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "--n", "4", "--points", "grid:1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "--n", "4", "--points", "near-nodes:4:1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"errors", "--n", "4", "--function", "samples-file:x", "--reference",
                    "function"})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"bench-products", "--n", "4", "--strategy", "magic"}).code, kExitUsage);
  EXPECT_EQ(invoke({"diagnose", "--n", "4", "--t", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"nodes", "--help"}).code, kExitOk);
}

TEST(Cli, IoErrors) {
  EXPECT_EQ(invoke({"eval", "--nodes-file", "/nonexistent/nodes.txt"}).code, kExitIo);
  EXPECT_EQ(invoke({"eval", "--n", "4", "--function", "samples-file:/nonexistent"}).code, kExitIo);
}

TEST(Cli, NumericFailure) {
  // The first formula's sum overflows next to the node at 0.
  TempDir dir;
  const std::string points = dir.file("points.txt", "5e-324\n");
  const Result r = invoke({"eval", "--n", "4", "--method", "first-simplified", "--function",
                           "runge", "--points", "file:" + points});
  EXPECT_EQ(r.code, kExitNumeric) << r.err;
  // The stable evaluator handles the same point.
  EXPECT_EQ(invoke({"eval", "--n", "4", "--function", "runge", "--points", "file:" + points}).code,
            kExitOk);
}

TEST(Cli, EvalRows) {
  const Result r = invoke({"eval", "--n", "8", "--points", "grid:5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].at("t"), "-1");
  EXPECT_EQ(rows[0].at("t_hex"), "-0x1p+0");
  EXPECT_EQ(rows[2].at("value"), "0");
  EXPECT_EQ(rows[4].at("method"), "stable");
  EXPECT_EQ(rows[4].at("points"), "grid:5");
  EXPECT_NEAR(std::stod(rows[3].at("value")), std::sin(0.5), 1e-6);
  EXPECT_EQ(parse_double(rows[3].at("value_hex")), std::stod(rows[3].at("value")));
}

TEST(Cli, ErrorsAreIndependentOfThreadCount) {
  const std::vector<std::string> base{"errors", "--n", "300", "--points", "random:3000:9",
                                      "--method", "first-nu"};
  std::vector<std::string> one = base;
  one.insert(one.end(), {"--threads", "1"});
  std::vector<std::string> four = base;
  four.insert(four.end(), {"--threads", "4"});
  const Result a = invoke(one);
  const Result b = invoke(four);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SecondNaiveOnConstantSamples) {
  TempDir dir;
  std::string ones;
  for (int i = 0; i <= 64; ++i) ones += "1\n";
  const std::string samples = dir.file("ones.txt", ones);
  const Result r = invoke({"errors", "--n", "64", "--method", "second-naive", "--function",
                           "samples-file:" + samples, "--points", "random:2000:4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].at("count"), "2000");
  EXPECT_LE(std::stod(rows[0].at("max")), 1e-14);
}

TEST(Cli, ErrorsAgainstTheFunction) {
  const Result r = invoke({"errors", "--n", "60", "--function", "sin", "--reference", "function",
                           "--measure", "absolute", "--points", "grid:200"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_LE(std::stod(parse_csv(r.out)[0].at("max")), 1e-15);
}

TEST(Cli, BenchProducts) {
  const Result r = invoke({"bench-products", "--n", "1000", "--strategy", "scaling,naive",
                           "--points", "random:200:3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].at("strategy"), "scaling");
  EXPECT_LE(std::stod(rows[0].at("max")), 1e-13);
  EXPECT_EQ(rows[0].at("degenerate_count"), "0");
  EXPECT_EQ(rows[1].at("strategy"), "naive");
}

TEST(Cli, NaiveProductDegeneratesAtLargeDegree) {
  const Result r = invoke({"bench-products", "--n", "1000000", "--strategy", "naive",
                           "--points", "random:20:5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  EXPECT_EQ(rows[0].at("degenerate_count"), "20");
  EXPECT_EQ(rows[0].at("max"), "inf");
}

TEST(Cli, DiagnoseReportsBadIndicesPerRow) {
  const Result r = invoke({"diagnose", "--n", "4", "--function", "sin", "--k", "2", "--k", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].at("k"), "2");
  EXPECT_FALSE(rows[0].at("error").empty());
  EXPECT_EQ(rows[1].at("k"), "3");
  EXPECT_TRUE(rows[1].count("error") == 0 || rows[1].at("error").empty());
  EXPECT_FALSE(rows[1].at("s").empty());
}

TEST(Cli, NodesFileInput) {
  TempDir dir;
  const std::string path = dir.file("nodes.txt");
  ASSERT_EQ(invoke({"nodes", "--n", "16", "-o", path}).code, kExitOk);
  const Result r = invoke({"eval", "--nodes-file", path, "--points", "grid:3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(parse_csv(r.out)[0].at("n"), "file:" + path);
}

TEST(ResolveOracleBits, Precedence) {
  EXPECT_EQ(resolve_oracle_bits(200, "300"), 200);
  EXPECT_EQ(resolve_oracle_bits(std::nullopt, "300"), 300);
  EXPECT_EQ(resolve_oracle_bits(std::nullopt, nullptr), 106);
  EXPECT_EQ(resolve_oracle_bits(std::nullopt, ""), 106);
  EXPECT_THROW(resolve_oracle_bits(std::nullopt, "lots"), ConfigurationError);
}

TEST(PointSpecTest, Parse) {
  const PointSpec near = PointSpec::parse("near-nodes:10:200");
  EXPECT_EQ(near.kind, PointSpec::Kind::kNearNodes);
  EXPECT_EQ(near.count, 10u);
  EXPECT_EQ(near.radius, 200u);
  const PointSpec random = PointSpec::parse("random:5:42");
  EXPECT_EQ(random.seed, 42u);
  EXPECT_EQ(PointSpec::parse("file:a:b").path, "a:b");
  for (const char* bad : {"grid", "grid:x", "grid:1", "near-nodes:1", "near-nodes:0:3",
                          "random:5", "file:", "mesh:4"}) {
    EXPECT_THROW(PointSpec::parse(bad), ConfigurationError) << bad;
  }
}

TEST(GeneratePoints, Grid) {
  const NodeSet nodes = generate_rounded_chebyshev(4);
  EXPECT_EQ(generate_points(PointSpec::parse("grid:5"), nodes),
            (std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0}));
}

TEST(GeneratePoints, NearNodes) {
  const NodeSet nodes = generate_rounded_chebyshev(10);
  const std::vector<double> points = generate_points(PointSpec::parse("near-nodes:2:3"), nodes);
  ASSERT_EQ(points.size(), 12u);
  for (std::size_t c = 0; c < 2; ++c) {
    const double x = nodes[8 + c];
    const double* block = points.data() + 6 * c;
    EXPECT_EQ(block[2], std::nextafter(x, -2.0));
    EXPECT_EQ(block[3], std::nextafter(x, 2.0));
    for (std::size_t j = 0; j + 1 < 6; ++j) EXPECT_LT(block[j], block[j + 1]);
    for (std::size_t j = 0; j < 6; ++j) EXPECT_NE(block[j], x);
  }
}

TEST(GeneratePoints, RandomIsDeterministic) {
  const NodeSet nodes = generate_rounded_chebyshev(4);
  const auto a = generate_points(PointSpec::parse("random:100:7"), nodes);
  const auto b = generate_points(PointSpec::parse("random:100:7"), nodes);
  const auto c = generate_points(PointSpec::parse("random:100:8"), nodes);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  for (double t : a) {
    EXPECT_GE(t, -1.0);
    EXPECT_LT(t, 1.0);
  }
}

TEST(GeneratePoints, FileOutsideTheInterval) {
  TempDir dir;
  const std::string path = dir.file("points.txt", "0.5\n1.5\n");
  EXPECT_THROW(generate_points(PointSpec::parse("file:" + path), generate_rounded_chebyshev(4)),
               ConfigurationError);
}

TEST(RunConfigTest, EchoColumns) {
  RunConfig cfg;
  cfg.command = Command::kErrors;
  cfg.n = 10;
  std::vector<std::string> names;
  for (const auto& [name, value] : cfg.echo()) names.push_back(name);
  EXPECT_EQ(names, (std::vector<std::string>{"command", "n", "oracle_bits", "method", "summation",
                                             "function", "points", "reference", "measure"}));
  EXPECT_NO_THROW(cfg.validate());
  cfg.n = 0;
  EXPECT_THROW(cfg.validate(), ConfigurationError);
}

}  // namespace
}  // namespace barystable::cli
