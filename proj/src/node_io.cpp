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

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include "barystable/error.hpp"

namespace barystable {
namespace {

constexpr std::string_view kNodesTag = "# barystable-nodes v1";
constexpr std::string_view kWeightsTag = "# barystable-weights v1";

std::string location(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line);
}

// Value of `key=` within a header line, or empty.
std::string_view header_field(std::string_view header, std::string_view key) {
  const std::string needle = " " + std::string(key) + "=";
  const std::size_t at = header.find(needle);
  if (at == std::string_view::npos) return {};
  std::string_view rest = header.substr(at + needle.size());
  return rest.substr(0, rest.find(' '));
}

std::size_t parse_degree(std::string_view header, std::string_view source) {
  const std::string_view field = header_field(header, "n");
  std::size_t n = 0;
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), n);
  if (field.empty() || ec != std::errc() || end != field.data() + field.size() || n == 0) {
    throw IoError(location(source, 1) + ": header lacks a valid n=<degree>");
  }
  return n;
}

std::vector<double> read_body(std::istream& in, std::size_t expected, std::string_view source) {
  std::vector<double> values;
  values.reserve(expected);
  std::string line;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      values.push_back(parse_double(line));
    } catch (const DomainError& e) {
      throw IoError(location(source, line_number) + ": " + e.what());
    }
  }
  if (values.size() != expected) {
    throw IoError(std::string(source) + ": expected " + std::to_string(expected) +
                  " values, found " + std::to_string(values.size()));
  }
  return values;
}

std::string read_header(std::istream& in, std::string_view tag, std::string_view source) {
  std::string header;
  if (!std::getline(in, header) || !header.starts_with(tag)) {
    throw IoError(location(source, 1) + ": expected a header starting with '" + std::string(tag) +
                  "'");
  }
  return header;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

std::string format_hex(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::hex);
  std::string_view digits(buf, static_cast<std::size_t>(end - buf));
  if (digits.starts_with('-')) return "-0x" + std::string(digits.substr(1));
  return "0x" + std::string(digits);
}

double parse_double(std::string_view text) {
  while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  std::string_view body = text;
  bool negative = false;
  if (body.starts_with('-')) {
    negative = true;
    body.remove_prefix(1);
  } else if (body.starts_with('+')) {
    body.remove_prefix(1);
  }
  double value = 0.0;
  std::from_chars_result result{};
  if (body.starts_with("0x") || body.starts_with("0X")) {
    body.remove_prefix(2);
    result = std::from_chars(body.data(), body.data() + body.size(), value,
                             std::chars_format::hex);
  } else {
    result = std::from_chars(body.data(), body.data() + body.size(), value);
  }
  if (body.empty() || body.starts_with('-') || body.starts_with('+') ||
      result.ec != std::errc() || result.ptr != body.data() + body.size()) {
    throw DomainError("malformed number '" + std::string(text) + "'");
  }
  return negative ? -value : value;
}

void write_nodes(std::ostream& out, const NodeSet& nodes) {
  out << kNodesTag << " n=" << nodes.degree() << '\n';
  for (double x : nodes.values()) out << format_hex(x) << '\n';
}

NodeSet read_nodes(std::istream& in, std::string_view source) {
  const std::string header = read_header(in, kNodesTag, source);
  const std::size_t n = parse_degree(header, source);
  return NodeSet::from_values(read_body(in, n + 1, source));
}

void write_weights(std::ostream& out, const WeightScheme& weights) {
  out << kWeightsTag << " variant=" << to_string(weights.variant()) << " n=" << weights.degree()
      << '\n';
  for (double w : weights.to_vector()) out << format_hex(w) << '\n';
}

WeightScheme read_weights(std::istream& in, std::string_view source) {
  const std::string header = read_header(in, kWeightsTag, source);
  const std::size_t n = parse_degree(header, source);
  const std::string_view variant = header_field(header, "variant");
  std::vector<double> values = read_body(in, n + 1, source);
  if (variant == "simplified") {
    WeightScheme simplified_weights = WeightScheme::simplified(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (values[i] != simplified_weights[i]) {
        throw IoError(std::string(source) + ": value " + std::to_string(i) +
                      " is not a simplified weight");
      }
    }
    return simplified_weights;
  }
  if (variant == "lambda") return WeightScheme(WeightVariant::kLambda, std::move(values));
  if (variant == "nu") return WeightScheme(WeightVariant::kNu, std::move(values));
  throw IoError(location(source, 1) + ": unknown weight variant '" + std::string(variant) + "'");
}

void save_nodes(const std::filesystem::path& path, const NodeSet& nodes) {
  std::ofstream out = open_output(path);
  write_nodes(out, nodes);
  finish_output(out, path);
}

NodeSet load_nodes(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return read_nodes(in, path.string());
}

void save_weights(const std::filesystem::path& path, const WeightScheme& weights) {
  std::ofstream out = open_output(path);
  write_weights(out, weights);
  finish_output(out, path);
}

WeightScheme load_weights(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return read_weights(in, path.string());
}

std::vector<double> load_values(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::vector<double> values;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line.starts_with('#')) continue;
    try {
      values.push_back(parse_double(line));
    } catch (const DomainError& e) {
      throw IoError(location(path.string(), line_number) + ": " + e.what());
    }
  }
  return values;
}

}  // namespace barystable
