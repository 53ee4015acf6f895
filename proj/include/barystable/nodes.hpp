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
#include <span>
#include <vector>

#include "barystable/hiprec.hpp"

namespace barystable {

enum class NodeKind { kRoundedChebyshev, kUserSupplied };

/// Result of scanning a node set for the exact-sum property: every binary64
/// sum of adjacent nodes is exact, and so are 2 + x[1] and 2 - x[n-1].
struct ExactSumReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  /// Index i of the first failing pair (x[i], x[i+1]); n for the 2 + x[1]
  /// check and n + 1 for 2 - x[n-1]. Meaningful only when failures > 0.
  std::size_t first_failure = 0;

  bool ok() const { return failures == 0; }
};

ExactSumReport verify_exact_sums(std::span<const double> values);

/// Sorted interpolation nodes -1 = x[0] < x[1] < ... < x[n] = 1 in binary64.
/// Immutable once built; share by const reference or copy.
class NodeSet {
 public:
  /// Wraps user-supplied nodes. Throws DomainError unless the values are
  /// finite, strictly increasing, start at -1, end at 1 and n >= 1.
  static NodeSet from_values(std::vector<double> values);

  std::size_t degree() const { return values_.size() - 1; }
  std::size_t size() const { return values_.size(); }
  NodeKind kind() const { return kind_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Cached result of verify_exact_sums on these values.
  const ExactSumReport& exact_sums() const { return exact_sums_; }
  bool has_exact_sums() const { return exact_sums_.ok(); }

 private:
  friend NodeSet generate_rounded_chebyshev(std::size_t n, int reference_bits);
  NodeSet(std::vector<double> values, NodeKind kind);

  std::vector<double> values_;
  NodeKind kind_;
  ExactSumReport exact_sums_;
};

inline constexpr std::size_t kMaxDegree = 1'000'000'000;

/// Chebyshev points of the second kind -cos(i pi / n), rounded so that all
/// adjacent sums and 2 + x[1], 2 - x[n-1] are binary64 numbers.
///
/// The positive half is built from the top down. y_i = sin((2i - n) pi / 2n)
/// is evaluated with `reference_bits` of precision; a power-of-two threshold
/// starts at 1 and each time y_i falls below it the threshold is halved and
/// y_i is rounded to a significand that is a multiple of four, otherwise to
/// the nearest even significand. Negative nodes mirror the positive ones and
/// the middle node is 0 when n is even.
///
/// Throws DomainError for n == 0 or n > 10^9 and ConfigurationError when
/// reference_bits < 106.
NodeSet generate_rounded_chebyshev(std::size_t n,
                                   int reference_bits = HiPrec::kMinReferenceBits);

/// Nearest binary64 with an even 53-bit significand at y's binade. y > 0.
double round_to_even(const HiPrec& y);
/// Nearest binary64 whose 53-bit significand is a multiple of four at y's
/// binade. Remainders 1, 2, 3 of the truncated significand go down by one,
/// up by two and up by one respectively. y > 0.
double round_to_multiple_of_four(const HiPrec& y);

/// Position of t among the nodes.
struct BracketIndex {
  /// Node index when node_hit, else k with x[k] < t < x[k+1].
  std::size_t index = 0;
  bool node_hit = false;
};

/// Binary search; t must lie in [-1, 1] (DomainError otherwise).
BracketIndex bracket(double t, const NodeSet& nodes);

}  // namespace barystable
