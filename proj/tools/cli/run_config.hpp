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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "barystable/nodes.hpp"
#include "barystable/oracle.hpp"
#include "barystable/summation.hpp"
#include "barystable/weights.hpp"

namespace barystable::cli {

enum class Command { kNodes, kEval, kErrors, kBenchProducts, kDiagnose };
enum class Method { kStable, kSecondNaive, kFirstSimplified, kFirstNu };
enum class ProductStrategy { kNaive, kScaling, kLogSum, kGroupedLogs };
enum class Reference { kInterpolant, kFunction };

std::string_view to_string(Command command);
std::string_view to_string(Method method);
std::string_view to_string(ProductStrategy strategy);
std::string_view to_string(Reference reference);

Method parse_method(std::string_view text);
ProductStrategy parse_strategy(std::string_view text);
SummationMethod parse_summation(std::string_view text);
Reference parse_reference(std::string_view text);
ErrorMeasure parse_measure(std::string_view text);

/// grid:<M> | near-nodes:<node-count>:<radius-ulps> | file:<path> | random:<M>:<seed>
struct PointSpec {
  enum class Kind { kGrid, kNearNodes, kFile, kRandom };

  Kind kind = Kind::kGrid;
  std::size_t count = 0;   ///< points (grid, random) or nodes (near-nodes)
  std::size_t radius = 0;  ///< near-nodes: representable numbers on each side
  std::uint64_t seed = 0;
  std::string path;
  std::string text;

  static PointSpec parse(std::string_view text);
};

/// sin | sin-scaled:<omega> | runge | samples-file:<path>
struct FunctionSpec {
  std::optional<TestFunction> function;  ///< empty for samples-file
  std::string samples_path;
  std::string text;

  static FunctionSpec parse(std::string_view text);
};

struct RunConfig {
  Command command = Command::kNodes;
  std::size_t n = 0;
  std::string nodes_file;
  Method method = Method::kStable;
  std::vector<ProductStrategy> strategies;
  SummationMethod summation = SummationMethod::naive();
  FunctionSpec function = FunctionSpec::parse("sin");
  PointSpec points = PointSpec::parse("grid:1000");
  Reference reference = Reference::kInterpolant;
  ErrorMeasure measure = ErrorMeasure::kAbsolute;
  int oracle_bits = HiPrec::kMinReferenceBits;
  std::string output;
  std::string weights_output;
  WeightVariant weights = WeightVariant::kNu;
  unsigned threads = 0;
  std::vector<std::size_t> k;
  std::optional<double> t;

  /// ConfigurationError describing the first problem found.
  void validate() const;

  /// (column, value) pairs echoed on every CSV row.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

/// --oracle-bits wins over BARYSTABLE_ORACLE_BITS, which wins over 106.
/// `env_value` is the environment variable's content or null.
int resolve_oracle_bits(std::optional<int> flag, const char* env_value);

/// Deterministic evaluation points in [-1, 1].
///
/// grid: M equispaced points including both ends. near-nodes: for each of
/// the top node-count interior nodes x_{n-c}..x_{n-1}, the `radius` nearest
/// binary64 numbers on each side (the node itself excluded). file: one
/// number per line. random: t = -1 + 2 u with u a uniform 53-bit fraction
/// from mt19937_64(seed).
std::vector<double> generate_points(const PointSpec& spec, const NodeSet& nodes);

}  // namespace barystable::cli
