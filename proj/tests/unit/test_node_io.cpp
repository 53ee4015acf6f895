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

#include "barystable/node_io.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "barystable/error.hpp"

namespace barystable {
namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         ("barystable_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
          name);
}

TEST(FormatHex, Examples) {
  EXPECT_EQ(format_hex(1.0), "0x1p+0");
  EXPECT_EQ(format_hex(-3.0), "-0x1.8p+1");
  EXPECT_EQ(format_hex(0.0), "0x0p+0");
  EXPECT_EQ(format_hex(-0.0), "-0x0p+0");
  EXPECT_EQ(format_hex(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_hex(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_hex(std::nan("")), "nan");
}

TEST(ParseDouble, Examples) {
  EXPECT_EQ(parse_double("0x1.8p+1"), 3.0);
  EXPECT_EQ(parse_double("-0x1p-1074"), -5e-324);
  EXPECT_EQ(parse_double("0.25"), 0.25);
  EXPECT_EQ(parse_double(" -1.5\r"), -1.5);
  for (const char* bad : {"", "-", "0x", "1.5x", "--1", "0x-1p0", "abc"}) {
    EXPECT_THROW(parse_double(bad), DomainError) << bad;
  }
}

TEST(ParseDouble, RoundTripsEveryBitPattern) {
  std::mt19937_64 rng(71);
  for (int j = 0; j < 200'000; ++j) {
    const double x = std::bit_cast<double>(rng());
    if (!std::isfinite(x)) continue;
    ASSERT_EQ(std::bit_cast<std::uint64_t>(parse_double(format_hex(x))),
              std::bit_cast<std::uint64_t>(x));
  }
}

TEST(NodeFile, RoundTrip) {
  const NodeSet nodes = generate_rounded_chebyshev(37);
  std::stringstream buffer;
  write_nodes(buffer, nodes);
  EXPECT_EQ(buffer.str().substr(0, buffer.str().find('\n')), "# barystable-nodes v1 n=37");
  const NodeSet back = read_nodes(buffer);
  ASSERT_EQ(back.degree(), 37u);
  for (std::size_t i = 0; i <= 37; ++i) EXPECT_EQ(back[i], nodes[i]);
  EXPECT_TRUE(back.has_exact_sums());

  const auto path = temp_path("nodes.txt");
  save_nodes(path, nodes);
  EXPECT_EQ(load_nodes(path)[5], nodes[5]);
  std::filesystem::remove(path);
}

TEST(NodeFile, MalformedInput) {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return read_nodes(in, "mem");
  };
  EXPECT_THROW(read(""), IoError);
  EXPECT_THROW(read("# something else\n"), IoError);
  EXPECT_THROW(read("# barystable-nodes v1\n-0x1p+0\n0x1p+0\n"), IoError);
  EXPECT_THROW(read("# barystable-nodes v1 n=2\n-0x1p+0\n0x1p+0\n"), IoError);
  EXPECT_THROW(read("# barystable-nodes v1 n=1\n-0x1p+0\nbogus\n"), IoError);
  EXPECT_THROW(read("# barystable-nodes v1 n=1\n0x1p+0\n-0x1p+0\n"), DomainError);
  EXPECT_EQ(read("# barystable-nodes v1 n=1\n-0x1p+0\n0x1p+0\n").degree(), 1u);
  try {
    read("# barystable-nodes v1 n=1\n-0x1p+0\nbogus\n");
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("mem:3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(load_nodes("/nonexistent/dir/nodes.txt"), IoError);
}

TEST(WeightFile, RoundTrip) {
  const WeightScheme nu = compute_nu(generate_rounded_chebyshev(12));
  std::stringstream buffer;
  write_weights(buffer, nu);
  EXPECT_EQ(buffer.str().substr(0, buffer.str().find('\n')),
            "# barystable-weights v1 variant=nu n=12");
  const WeightScheme back = read_weights(buffer);
  EXPECT_EQ(back.variant(), WeightVariant::kNu);
  EXPECT_EQ(back.to_vector(), nu.to_vector());

  std::stringstream simple;
  write_weights(simple, simplified(5));
  EXPECT_EQ(read_weights(simple).variant(), WeightVariant::kSimplified);

  const auto path = temp_path("weights.txt");
  save_weights(path, lambda_exact_chebyshev(6));
  EXPECT_EQ(load_weights(path).to_vector(), lambda_exact_chebyshev(6).to_vector());
  std::filesystem::remove(path);
}

TEST(WeightFile, RejectsWrongSimplifiedValues) {
  std::istringstream in("# barystable-weights v1 variant=simplified n=1\n0x1p-1\n0x1p-1\n");
  EXPECT_THROW(read_weights(in), IoError);
  std::istringstream unknown("# barystable-weights v1 variant=odd n=1\n0x1p-1\n0x1p-1\n");
  EXPECT_THROW(read_weights(unknown), IoError);
}

TEST(LoadValues, SkipsCommentsAndBlanks) {
  const auto path = temp_path("values.txt");
  {
    std::ofstream out(path);
    out << "# points\n0.5\n\n-0x1p-2\n# end\n";
  }
  EXPECT_EQ(load_values(path), (std::vector<double>{0.5, -0.25}));
  {
    std::ofstream out(path);
    out << "0.5\nnope\n";
  }
  EXPECT_THROW(load_values(path), IoError);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace barystable
