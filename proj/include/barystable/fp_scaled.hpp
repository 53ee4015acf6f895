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

#include "barystable/nodes.hpp"

namespace barystable {

/// significand * 2^exponent with 0.5 <= |significand| < 1, or (0, 0).
/// Used to carry products whose magnitude is far outside binary64 range.
struct ScaledValue {
  double significand = 0.0;
  std::int64_t exponent = 0;

  /// x * 2^extra_exponent in normalized form. x must be finite.
  static ScaledValue normalized(double x, std::int64_t extra_exponent = 0);

  bool is_zero() const { return significand == 0.0; }
  /// Exact conversion; RangeError if the value does not fit binary64
  /// without rounding.
  double to_double() const;

  friend bool operator==(const ScaledValue&, const ScaledValue&) = default;
};

/// frexp-style decomposition. DomainError for NaN or infinity.
ScaledValue split(double x);

/// 2^k * x without rounding. RangeError when the result overflows, or when
/// it would underflow to zero or lose bits as a subnormal.
double scale_exact(double x, std::int64_t k);

/// Factors multiplied between renormalizations.
inline constexpr std::size_t kProductGroupSize = 20;
/// Factors on each side of t handled one by one.
inline constexpr std::size_t kProductSlack = 6;

/// 2^(n-1) * prod_{i=0..n} (t - x[i]) with no spurious overflow or underflow.
///
/// Finds x[k] <= t < x[k+1] by binary search, then multiplies the factors to
/// the left of t from x[k] downward and those to the right from x[k+1]
/// upward. On each side the nearest factors (at least kProductSlack of them,
/// plus the remainder modulo kProductGroupSize) are renormalized one at a
/// time; the rest are multiplied in groups of kProductGroupSize with one
/// renormalization per group. Exponents are tracked in 64 bits.
///
/// Requires t in [-1, 1] and nodes within 0.99|x_i| of the exact Chebyshev
/// points. A node hit returns the exact zero.
ScaledValue scaled_product(double t, const NodeSet& nodes);

/// 2^(n-1) * prod_{j != i} (x[i] - x[j]), the same factor ordering and
/// scaling as scaled_product with the zero factor removed.
ScaledValue scaled_product_at_node(std::size_t i, const NodeSet& nodes);

enum class FactorOrder {
  kAscending,       ///< i = 0, 1, ..., n
  kBracketOutward,  ///< the scaled_product order
};

/// Plain binary64 loop: prod = 2^(n-1), then prod *= t - x_i for every
/// node. Overflows and underflows freely (the prefactor alone is infinite
/// once n > 1024); it exists as a baseline. A node hit returns 0.
double naive_product(double t, const NodeSet& nodes, FactorOrder order = FactorOrder::kAscending);

/// Sum of log|t - x_i| over all factors, exponentiated at the end. The
/// exponent part floor(s / ln 2) is split off so the result never overflows.
ScaledValue logsum_product(double t, const NodeSet& nodes);

/// scaled_product with frexp replaced by log: one log per group of
/// kProductGroupSize factors, one per individually handled factor.
ScaledValue grouped_logs_product(double t, const NodeSet& nodes);

}  // namespace barystable
