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
#include <string_view>
#include <vector>

#include "barystable/nodes.hpp"

namespace barystable {

enum class WeightVariant { kSimplified, kLambda, kNu };

std::string_view to_string(WeightVariant variant);

/// Simplified Chebyshev weight: 1/2 at i = 0, (-1)^n / 2 at i = n and
/// (-1)^i in between.
constexpr double simplified_weight(std::size_t i, std::size_t n) {
  const double sign = (i % 2 == 0) ? 1.0 : -1.0;
  return (i == 0 || i == n) ? 0.5 * sign : sign;
}

/// Barycentric weights for a degree-n node set. Simplified weights are
/// generated on demand; the other variants are materialized.
class WeightScheme {
 public:
  WeightScheme(WeightVariant variant, std::vector<double> values);
  static WeightScheme simplified(std::size_t n);

  WeightVariant variant() const { return variant_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return degree_ + 1; }

  double operator[](std::size_t i) const {
    return variant_ == WeightVariant::kSimplified ? simplified_weight(i, degree_) : values_[i];
  }

  /// All n + 1 weights (materializes the simplified ones).
  std::vector<double> to_vector() const;

 private:
  explicit WeightScheme(std::size_t degree) : variant_(WeightVariant::kSimplified), degree_(degree) {}

  WeightVariant variant_;
  std::size_t degree_;
  std::vector<double> values_;
};

/// The simplified weights. DomainError for n == 0.
WeightScheme simplified(std::size_t n);

/// Closed-form 1 / prod_{j != i}(x_i - x_j) at the exact Chebyshev points:
/// lambda_0 = (-1)^n 2^(n-2) / n, lambda_n = 2^(n-2) / n and
/// lambda_i = (-1)^(n-i) 2^(n-1) / n. RangeError once 2^(n-1)/n leaves the
/// binary64 range; meant for cross-checks at small n.
WeightScheme lambda_exact_chebyshev(std::size_t n);

/// nu_i = (-1)^n n / (2^(n-1) prod_{j != i}(x_i - x_j)) for the given
/// (rounded) nodes, via scaled_product_at_node so no intermediate overflows.
/// Theta(n^2); the per-node products run in parallel.
WeightScheme compute_nu(const NodeSet& nodes);

}  // namespace barystable
