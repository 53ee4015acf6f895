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

#include "cli/run_config.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <system_error>

#include "barystable/error.hpp"
#include "barystable/node_io.hpp"

namespace barystable::cli {
namespace {

template <class T>
T parse_unsigned(std::string_view text, std::string_view what) {
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw ConfigurationError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_colon(std::string_view text, std::size_t max_parts) {
  std::vector<std::string_view> parts;
  while (parts.size() + 1 < max_parts) {
    const std::size_t at = text.find(':');
    if (at == std::string_view::npos) break;
    parts.push_back(text.substr(0, at));
    text.remove_prefix(at + 1);
  }
  parts.push_back(text);
  return parts;
}

}  // namespace

std::string_view to_string(Command command) {
  switch (command) {
    case Command::kNodes: return "nodes";
    case Command::kEval: return "eval";
    case Command::kErrors: return "errors";
    case Command::kBenchProducts: return "bench-products";
    case Command::kDiagnose: return "diagnose";
  }
  return "unknown";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kStable: return "stable";
    case Method::kSecondNaive: return "second-naive";
    case Method::kFirstSimplified: return "first-simplified";
    case Method::kFirstNu: return "first-nu";
  }
  return "unknown";
}

std::string_view to_string(ProductStrategy strategy) {
  switch (strategy) {
    case ProductStrategy::kNaive: return "naive";
    case ProductStrategy::kScaling: return "scaling";
    case ProductStrategy::kLogSum: return "logsum";
    case ProductStrategy::kGroupedLogs: return "grouped-logs";
  }
  return "unknown";
}

std::string_view to_string(Reference reference) {
  return reference == Reference::kFunction ? "function" : "interpolant";
}

Method parse_method(std::string_view text) {
  for (Method m : {Method::kStable, Method::kSecondNaive, Method::kFirstSimplified,
                   Method::kFirstNu}) {
    if (text == to_string(m)) return m;
  }
  throw ConfigurationError("unknown method '" + std::string(text) + "'");
}

ProductStrategy parse_strategy(std::string_view text) {
  for (ProductStrategy s : {ProductStrategy::kNaive, ProductStrategy::kScaling,
                            ProductStrategy::kLogSum, ProductStrategy::kGroupedLogs}) {
    if (text == to_string(s)) return s;
  }
  throw ConfigurationError("unknown product strategy '" + std::string(text) + "'");
}

SummationMethod parse_summation(std::string_view text) {
  if (text == "naive") return SummationMethod::naive();
  if (text == "kahan") return SummationMethod::kahan();
  throw ConfigurationError("unknown summation '" + std::string(text) + "'");
}

Reference parse_reference(std::string_view text) {
  if (text == "interpolant") return Reference::kInterpolant;
  if (text == "function") return Reference::kFunction;
  throw ConfigurationError("unknown reference '" + std::string(text) + "'");
}

ErrorMeasure parse_measure(std::string_view text) {
  if (text == "absolute") return ErrorMeasure::kAbsolute;
  if (text == "relative") return ErrorMeasure::kRelative;
  throw ConfigurationError("unknown error measure '" + std::string(text) + "'");
}

PointSpec PointSpec::parse(std::string_view text) {
  PointSpec spec;
  spec.text = std::string(text);
  const std::vector<std::string_view> parts = split_colon(text, 3);
  const std::string_view kind = parts[0];
  if (kind == "grid" && parts.size() == 2) {
    spec.kind = Kind::kGrid;
    spec.count = parse_unsigned<std::size_t>(parts[1], "grid size");
    if (spec.count < 2) throw ConfigurationError("grid needs at least two points");
  } else if (kind == "near-nodes" && parts.size() == 3) {
    spec.kind = Kind::kNearNodes;
    spec.count = parse_unsigned<std::size_t>(parts[1], "node count");
    spec.radius = parse_unsigned<std::size_t>(parts[2], "radius");
    if (spec.count == 0 || spec.radius == 0) {
      throw ConfigurationError("near-nodes needs positive node count and radius");
    }
  } else if (kind == "random" && parts.size() == 3) {
    spec.kind = Kind::kRandom;
    spec.count = parse_unsigned<std::size_t>(parts[1], "point count");
    spec.seed = parse_unsigned<std::uint64_t>(parts[2], "seed");
  } else if (kind == "file" && parts.size() >= 2) {
    spec.kind = Kind::kFile;
    spec.path = std::string(text.substr(5));
    if (spec.path.empty()) throw ConfigurationError("file: needs a path");
  } else {
    throw ConfigurationError("invalid point spec '" + std::string(text) +
                             "' (expected grid:M, near-nodes:C:R, file:PATH or random:M:SEED)");
  }
  return spec;
}

FunctionSpec FunctionSpec::parse(std::string_view text) {
  FunctionSpec spec;
  spec.text = std::string(text);
  constexpr std::string_view kSamples = "samples-file:";
  if (text.starts_with(kSamples)) {
    spec.samples_path = std::string(text.substr(kSamples.size()));
    if (spec.samples_path.empty()) throw ConfigurationError("samples-file: needs a path");
  } else {
    spec.function = TestFunction::parse(text);
  }
  return spec;
}

void RunConfig::validate() const {
  if (nodes_file.empty() && (n == 0 || n > kMaxDegree)) {
    throw ConfigurationError("--n must be between 1 and 10^9 (or give --nodes-file)");
  }
  if (oracle_bits < HiPrec::kMinReferenceBits || oracle_bits > (1 << 20)) {
    throw ConfigurationError("oracle precision must be between 106 and 2^20 bits");
  }
  if (command == Command::kErrors && reference == Reference::kFunction && !function.function) {
    throw ConfigurationError("--reference function needs an analytic --function");
  }
  if (command == Command::kBenchProducts && strategies.empty()) {
    throw ConfigurationError("bench-products needs at least one strategy");
  }
  if (command == Command::kDiagnose && !function.function && function.samples_path.empty()) {
    throw ConfigurationError("diagnose needs --function");
  }
  if (!weights_output.empty() && command != Command::kNodes) {
    throw ConfigurationError("--weights-output belongs to the nodes command");
  }
  if (t && !(*t >= -1.0 && *t <= 1.0)) throw ConfigurationError("--t must lie in [-1, 1]");
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
  std::vector<std::pair<std::string, std::string>> columns;
  columns.emplace_back("command", std::string(to_string(command)));
  columns.emplace_back("n", nodes_file.empty() ? std::to_string(n) : "file:" + nodes_file);
  columns.emplace_back("oracle_bits", std::to_string(oracle_bits));
  switch (command) {
    case Command::kNodes:
      break;
    case Command::kEval:
    case Command::kErrors:
      columns.emplace_back("method", std::string(to_string(method)));
      columns.emplace_back("summation", std::string(summation.name()));
      columns.emplace_back("function", function.text);
      columns.emplace_back("points", points.text);
      if (command == Command::kErrors) {
        columns.emplace_back("reference", std::string(to_string(reference)));
        columns.emplace_back("measure",
                             measure == ErrorMeasure::kRelative ? "relative" : "absolute");
      }
      break;
    case Command::kBenchProducts:
      columns.emplace_back("points", points.text);
      break;
    case Command::kDiagnose:
      columns.emplace_back("function", function.text);
      break;
  }
  return columns;
}

int resolve_oracle_bits(std::optional<int> flag, const char* env_value) {
  if (flag) return *flag;
  if (env_value != nullptr && *env_value != '\0') {
    return parse_unsigned<int>(env_value, "BARYSTABLE_ORACLE_BITS");
  }
  return HiPrec::kMinReferenceBits;
}

std::vector<double> generate_points(const PointSpec& spec, const NodeSet& nodes) {
  std::vector<double> points;
  switch (spec.kind) {
    case PointSpec::Kind::kGrid: {
      points.reserve(spec.count);
      const auto last = static_cast<double>(spec.count - 1);
      for (std::size_t j = 0; j < spec.count; ++j) {
        points.push_back(-1.0 + (2.0 * static_cast<double>(j)) / last);
      }
      points.back() = 1.0;
      break;
    }
    case PointSpec::Kind::kNearNodes: {
      const std::size_t n = nodes.degree();
      if (spec.count >= n) {
        throw ConfigurationError("near-nodes count must be below n = " + std::to_string(n));
      }
      points.reserve(2 * spec.count * spec.radius);
      std::vector<double> left(spec.radius);
      for (std::size_t i = n - spec.count; i < n; ++i) {
        double t = nodes[i];
        for (std::size_t j = 0; j < spec.radius; ++j) {
          t = std::nextafter(t, -2.0);
          left[spec.radius - 1 - j] = t;
        }
        points.insert(points.end(), left.begin(), left.end());
        t = nodes[i];
        for (std::size_t j = 0; j < spec.radius; ++j) {
          t = std::nextafter(t, 2.0);
          points.push_back(t);
        }
      }
      break;
    }
    case PointSpec::Kind::kFile: {
      points = load_values(spec.path);
      for (double t : points) {
        if (!(t >= -1.0 && t <= 1.0)) {
          throw ConfigurationError("point file '" + spec.path + "' has a value outside [-1, 1]");
        }
      }
      break;
    }
    case PointSpec::Kind::kRandom: {
      std::mt19937_64 engine(spec.seed);
      points.reserve(spec.count);
      for (std::size_t j = 0; j < spec.count; ++j) {
        const std::uint64_t u = engine() >> 11;
        points.push_back(-1.0 + static_cast<double>(u) * 0x1p-52);
      }
      break;
    }
  }
  return points;
}

}  // namespace barystable::cli
