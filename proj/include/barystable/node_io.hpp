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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "barystable/nodes.hpp"
#include "barystable/weights.hpp"

// Line-oriented text formats with bit-exact round trips:
//
//   # barystable-nodes v1 n=<degree>
//   -0x1p+0
//   ...
//
//   # barystable-weights v1 variant=<name> n=<degree>
//   0x1p-1
//   ...
//
// One lowercase hexadecimal floating-point literal per LF-terminated line.

namespace barystable {

/// Lowercase hex literal such as -0x1.8p+1 or 0x0p+0; "inf", "-inf" or
/// "nan" for non-finite values.
std::string format_hex(double value);
/// Parses a hex literal as written by format_hex, or a decimal number.
/// DomainError on malformed input.
double parse_double(std::string_view text);

void write_nodes(std::ostream& out, const NodeSet& nodes);
/// IoError on a missing or malformed header, wrong count or bad literal;
/// DomainError when the values do not form a valid node set.
NodeSet read_nodes(std::istream& in, std::string_view source = "<stream>");

void write_weights(std::ostream& out, const WeightScheme& weights);
WeightScheme read_weights(std::istream& in, std::string_view source = "<stream>");

void save_nodes(const std::filesystem::path& path, const NodeSet& nodes);
NodeSet load_nodes(const std::filesystem::path& path);
void save_weights(const std::filesystem::path& path, const WeightScheme& weights);
WeightScheme load_weights(const std::filesystem::path& path);

/// One number per line (hex or decimal); blank lines and lines starting
/// with '#' are skipped.
std::vector<double> load_values(const std::filesystem::path& path);

}  // namespace barystable
