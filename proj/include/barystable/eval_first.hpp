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

#include <string>

#include "barystable/error.hpp"
#include "barystable/eval_second.hpp"
#include "barystable/fp_scaled.hpp"
#include "barystable/nodes.hpp"
#include "barystable/summation.hpp"
#include "barystable/weights.hpp"

namespace barystable {

/// Raised when the first formula's value does not fit binary64; carries the
/// value in scaled form.
class ScaledRangeError : public RangeError {
 public:
  ScaledRangeError(const std::string& what, ScaledValue value) : RangeError(what), value_(value) {}
  const ScaledValue& value() const { return value_; }

 private:
  ScaledValue value_;
};

/// The first barycentric formula
///
///   a(t) = ((-1)^n / n) * 2^(n-1) prod (t - x_i) * sum w_i f_i / (t - x_i)
///
/// with the product from scaled_product and the sum taken with `method`.
/// Only the final collapse to binary64 can leave the range (ScaledRangeError).
/// w must be simplified or nu weights (DomainError otherwise). A node hit
/// returns f_i exactly.
double eval_first(double t, const NodeSet& nodes, const SampleVector& f, const WeightScheme& w,
                  SummationMethod method);

}  // namespace barystable
