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

#include "barystable/weights.hpp"

#include <cmath>

#include "barystable/error.hpp"
#include "barystable/fp_scaled.hpp"
#include "barystable/parallel.hpp"

namespace barystable {

std::string_view to_string(WeightVariant variant) {
  switch (variant) {
    case WeightVariant::kSimplified: return "simplified";
    case WeightVariant::kLambda: return "lambda";
    case WeightVariant::kNu: return "nu";
  }
  return "unknown";
}

WeightScheme::WeightScheme(WeightVariant variant, std::vector<double> values)
    : variant_(variant), degree_(values.empty() ? 0 : values.size() - 1), values_(std::move(values)) {
  if (variant_ == WeightVariant::kSimplified) {
    throw DomainError("simplified weights are generated, use WeightScheme::simplified");
  }
  if (values_.size() < 2) throw DomainError("a weight scheme needs at least two weights");
}

WeightScheme WeightScheme::simplified(std::size_t n) {
  if (n == 0) throw DomainError("weights need degree n >= 1");
  return WeightScheme(n);
}

std::vector<double> WeightScheme::to_vector() const {
  if (variant_ != WeightVariant::kSimplified) return values_;
  std::vector<double> w(size());
  for (std::size_t i = 0; i <= degree_; ++i) w[i] = simplified_weight(i, degree_);
  return w;
}

WeightScheme simplified(std::size_t n) { return WeightScheme::simplified(n); }

WeightScheme lambda_exact_chebyshev(std::size_t n) {
  if (n == 0) throw DomainError("weights need degree n >= 1");
  const double inv_n = 1.0 / static_cast<double>(n);
  const auto ni = static_cast<std::int64_t>(n);
  const double end = ScaledValue::normalized(inv_n, ni - 2).to_double();
  const double interior = ScaledValue::normalized(inv_n, ni - 1).to_double();
  std::vector<double> lambda(n + 1);
  lambda[0] = (n % 2 == 0) ? end : -end;
  lambda[n] = end;
  for (std::size_t i = 1; i < n; ++i) lambda[i] = ((n - i) % 2 == 0) ? interior : -interior;
  return WeightScheme(WeightVariant::kLambda, std::move(lambda));
}

WeightScheme compute_nu(const NodeSet& nodes) {
  const std::size_t n = nodes.degree();
  const double numerator = (n % 2 == 0) ? static_cast<double>(n) : -static_cast<double>(n);
  std::vector<double> nu(n + 1);
  parallel_for(n + 1, 0, [&](std::size_t i) {
    const ScaledValue denominator = scaled_product_at_node(i, nodes);
    if (denominator.is_zero()) throw DomainError("duplicate nodes make nu undefined");
    nu[i] = scale_exact(numerator / denominator.significand, -denominator.exponent);
  });
  return WeightScheme(WeightVariant::kNu, std::move(nu));
}

}  // namespace barystable
