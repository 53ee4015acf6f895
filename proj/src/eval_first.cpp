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

#include "barystable/eval_first.hpp"

#include <cmath>
#include <limits>

namespace barystable {

double eval_first(double t, const NodeSet& nodes, const SampleVector& f, const WeightScheme& w,
                  SummationMethod method) {
  if (f.size() != nodes.size() || w.size() != nodes.size()) {
    throw DomainError("nodes, samples and weights must have the same length");
  }
  if (w.variant() == WeightVariant::kLambda) {
    throw DomainError("the first formula takes simplified or nu weights");
  }
  const BracketIndex b = bracket(t, nodes);
  if (b.node_hit) return f[b.index];

  const auto x = nodes.values();
  const std::size_t n = nodes.degree();
  const double s = with_accumulator(method, [&](auto acc) {
    for (std::size_t i = 0; i <= n; ++i) acc.add((w[i] * f[i]) / (t - x[i]));
    return acc.result();
  });
  if (!std::isfinite(s)) throw EvaluationError("first formula sum overflowed");
  const ScaledValue product = scaled_product(t, nodes);
  const double signed_n = (n % 2 == 0) ? static_cast<double>(n) : -static_cast<double>(n);
  const double m = (product.significand * s) / signed_n;
  if (m == 0.0) return m;

  const ScaledValue value = ScaledValue::normalized(m, product.exponent);
  if (value.exponent > std::numeric_limits<double>::max_exponent) {
    throw ScaledRangeError("first formula value overflows binary64", value);
  }
  if (value.exponent < std::numeric_limits<double>::min_exponent - 53) {
    throw ScaledRangeError("first formula value underflows binary64", value);
  }
  // In range, so this rounds at most once (only for subnormal results).
  return std::ldexp(value.significand, static_cast<int>(value.exponent));
}

}  // namespace barystable
