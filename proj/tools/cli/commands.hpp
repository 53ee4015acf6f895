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

#include <iosfwd>

#include "cli/run_config.hpp"

namespace barystable::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

/// Runs a validated configuration, writing CSV to `out` (or cfg.output) and
/// human-oriented notes to `err`. Library errors propagate.
void execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses the command line, runs it and maps failures to exit codes: usage
/// and configuration problems give 2, numeric invariant or range failures
/// give 3, I/O failures give 1.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace barystable::cli
