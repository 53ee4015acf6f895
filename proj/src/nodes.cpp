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

#include "barystable/nodes.hpp"

#include <cfloat>
#include <cmath>
#include <cstdint>
#include <string>

#include "barystable/error.hpp"

namespace barystable {
namespace {

// Knuth's TwoSum: the rounding error of a + b, exact barring overflow.
double two_sum_error(double a, double b) {
  double s = a + b;
  double bv = s - a;
  double av = s - bv;
  return (a - av) + (b - bv);
}

// Truncated 53-bit integer significand and the matching exponent:
// y >= ix * 2^exponent with ix in [2^52, 2^53).
struct TruncatedSignificand {
  std::uint64_t ix;
  int exponent;
};

TruncatedSignificand truncate_significand(const HiPrec& y) {
  if (!(y > 0.0) || !y.is_finite()) {
    throw DomainError("node rounding needs a positive finite value");
  }
  double truncated = y.to_double_truncated();
  if (truncated < DBL_MIN) throw DomainError("node rounding needs a normal-range value");
  int exp = 0;
  double fraction = std::frexp(truncated, &exp);
  return {static_cast<std::uint64_t>(std::ldexp(fraction, 53)), exp - 53};
}

}  // namespace

ExactSumReport verify_exact_sums(std::span<const double> values) {
  ExactSumReport report;
  auto record = [&report](bool exact, std::size_t where) {
    ++report.checked;
    if (!exact) {
      if (report.failures == 0) report.first_failure = where;
      ++report.failures;
    }
  };
  if (values.size() < 2) return report;
  const std::size_t n = values.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    record(two_sum_error(values[i], values[i + 1]) == 0.0, i);
  }
  record(two_sum_error(2.0, values[1]) == 0.0, n);
  record(two_sum_error(2.0, -values[n - 1]) == 0.0, n + 1);
  return report;
}

NodeSet::NodeSet(std::vector<double> values, NodeKind kind)
    : values_(std::move(values)), kind_(kind), exact_sums_(verify_exact_sums(values_)) {}

NodeSet NodeSet::from_values(std::vector<double> values) {
  if (values.size() < 2) throw DomainError("a node set needs at least two nodes");
  if (values.size() - 1 > kMaxDegree) throw DomainError("node set degree exceeds 10^9");
  if (values.front() != -1.0 || values.back() != 1.0) {
    throw DomainError("nodes must start at -1 and end at 1");
  }
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (!(values[i] < values[i + 1])) {
      throw DomainError("nodes must be strictly increasing (violated at index " +
                        std::to_string(i) + ")");
    }
  }
  return NodeSet(std::move(values), NodeKind::kUserSupplied);
}

double round_to_even(const HiPrec& y) {
  auto [ix, exponent] = truncate_significand(y);
  if (ix & 0x1) ++ix;
  return std::ldexp(static_cast<double>(ix), exponent);
}

double round_to_multiple_of_four(const HiPrec& y) {
  auto [ix, exponent] = truncate_significand(y);
  switch (ix & 0x3) {
    case 1: --ix; break;
    case 2: ix += 2; break;
    case 3: ++ix; break;
    default: break;
  }
  return std::ldexp(static_cast<double>(ix), exponent);
}

NodeSet generate_rounded_chebyshev(std::size_t n, int reference_bits) {
  if (n == 0 || n > kMaxDegree) {
    throw DomainError("degree must satisfy 1 <= n <= 10^9, got " + std::to_string(n));
  }
  if (reference_bits < HiPrec::kMinReferenceBits) {
    throw ConfigurationError("rounded Chebyshev nodes need a reference sine with at least " +
                             std::to_string(HiPrec::kMinReferenceBits) + " bits");
  }
  std::vector<double> x(n + 1);
  x[0] = -1.0;
  x[n] = 1.0;

  const HiPrec pi_over_2n = HiPrec::pi(reference_bits) / (2.0 * static_cast<double>(n));
  HiPrec argument(reference_bits);
  double power = 1.0;
  std::size_t lo = 1;
  std::size_t hi = n - 1;
  for (; lo < hi; ++lo, --hi) {
    argument = pi_over_2n;
    argument *= static_cast<double>(2 * hi - n);
    HiPrec y = sin(argument);
    double rounded;
    if (y < power) {
      power *= 0.5;
      rounded = round_to_multiple_of_four(y);
    } else {
      rounded = round_to_even(y);
    }
    x[hi] = rounded;
    x[lo] = -rounded;
  }
  if (lo == hi) x[lo] = 0.0;
  return NodeSet(std::move(x), NodeKind::kRoundedChebyshev);
}

BracketIndex bracket(double t, const NodeSet& nodes) {
  if (!(t >= -1.0 && t <= 1.0)) throw DomainError("evaluation point outside [-1, 1]");
  const auto x = nodes.values();
  std::size_t min = 0;
  std::size_t max = nodes.degree();
  if (t == x[max]) return {max, true};
  while (min + 1 < max) {  // x[min] <= t < x[max]
    std::size_t middle = min + (max - min) / 2;
    if (t < x[middle]) {
      max = middle;
    } else {
      min = middle;
    }
  }
  return {min, t == x[min]};
}

}  // namespace barystable
