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

#include "barystable/fp_scaled.hpp"

#include <cmath>
#include <numbers>

#include "barystable/error.hpp"

namespace barystable {
namespace {

void check_point(double t) {
  if (!(t >= -1.0 && t <= 1.0)) throw DomainError("evaluation point outside [-1, 1]");
}

// Running product prod * 2^exponent with prod kept in [0.5, 1).
struct ScaledAccumulator {
  double prod = 1.0;
  std::int64_t exponent = 0;

  void renormalize() {
    int aux = 0;
    prod = std::frexp(prod, &aux);
    exponent += aux;
  }
  void multiply_individually(double factor) {
    int aux = 0;
    double fraction = std::frexp(factor, &aux);
    exponent += aux;
    prod *= fraction;
    renormalize();
  }
};

// Number of factors, nearest to t, that are renormalized one at a time.
std::size_t individual_count(std::size_t count) {
  std::size_t r = count % kProductGroupSize;
  if (r < kProductSlack) r = (count > kProductSlack) ? r + kProductGroupSize : count;
  return r;
}

// Multiplies `count` factors produced by `next` into acc: the nearest ones
// individually, the rest in groups.
template <class Next>
void multiply_side(ScaledAccumulator& acc, std::size_t count, Next&& next) {
  const std::size_t r = individual_count(count);
  for (std::size_t j = 0; j < r; ++j) acc.multiply_individually(next());
  const std::size_t groups = (count - r) / kProductGroupSize;
  for (std::size_t g = 0; g < groups; ++g) {
    for (std::size_t j = 0; j < kProductGroupSize; ++j) acc.prod *= next();
    acc.renormalize();
  }
}

// 2^(n-1) times the factors t - x_j for j = left_count-1 down to 0, then for
// j = right up to n.
ScaledValue scaled_product_between(double t, std::span<const double> x, std::size_t left_count,
                                   std::size_t right) {
  const std::size_t n = x.size() - 1;
  ScaledAccumulator acc;
  acc.exponent = static_cast<std::int64_t>(n) - 1;
  std::size_t left = left_count;  // one past the next index to the left
  multiply_side(acc, left_count, [&] { return t - x[--left]; });
  std::size_t next_right = right;
  multiply_side(acc, n + 1 - right, [&] { return t - x[next_right++]; });
  return ScaledValue::normalized(acc.prod, acc.exponent);
}

ScaledValue exponentiate_log_sum(double log_sum, int sign, std::int64_t extra_exponent) {
  const double e = std::floor(log_sum / std::numbers::ln2);
  const double remainder = std::fma(-e, std::numbers::ln2, log_sum);
  return ScaledValue::normalized(sign * std::exp(remainder),
                                 static_cast<std::int64_t>(e) + extra_exponent);
}

}  // namespace

ScaledValue ScaledValue::normalized(double x, std::int64_t extra_exponent) {
  if (!std::isfinite(x)) throw DomainError("cannot normalize a non-finite value");
  if (x == 0.0) return ScaledValue{};
  int e = 0;
  double m = std::frexp(x, &e);
  return ScaledValue{m, e + extra_exponent};
}

double ScaledValue::to_double() const { return scale_exact(significand, exponent); }

ScaledValue split(double x) {
  if (!std::isfinite(x)) throw DomainError("split needs a finite value");
  return ScaledValue::normalized(x, 0);
}

double scale_exact(double x, std::int64_t k) {
  if (!std::isfinite(x)) throw DomainError("scale_exact needs a finite value");
  if (x == 0.0 || k == 0) return x;
  // |x| lies in [2^-1074, 2^1024), so anything beyond this window leaves the range.
  if (k > 2200) throw RangeError("power-of-two scaling overflows binary64");
  if (k < -2200) throw RangeError("power-of-two scaling underflows binary64");
  const int ik = static_cast<int>(k);
  const double r = std::ldexp(x, ik);
  if (!std::isfinite(r)) throw RangeError("power-of-two scaling overflows binary64");
  if (std::ldexp(r, -ik) != x) throw RangeError("power-of-two scaling underflows binary64");
  return r;
}

ScaledValue scaled_product(double t, const NodeSet& nodes) {
  const BracketIndex b = bracket(t, nodes);
  if (b.node_hit) return ScaledValue{};
  return scaled_product_between(t, nodes.values(), b.index + 1, b.index + 1);
}

ScaledValue scaled_product_at_node(std::size_t i, const NodeSet& nodes) {
  if (i >= nodes.size()) throw DomainError("node index out of range");
  return scaled_product_between(nodes[i], nodes.values(), i, i + 1);
}

double naive_product(double t, const NodeSet& nodes, FactorOrder order) {
  check_point(t);
  const auto x = nodes.values();
  const std::size_t n = nodes.degree();
  if (bracket(t, nodes).node_hit) return 0.0;
  // The prefactor comes first, as in a textbook loop; it is already infinite
  // for n > 1024.
  double prod = std::ldexp(1.0, static_cast<int>(n) - 1);
  if (order == FactorOrder::kAscending) {
    for (double xi : x) prod *= t - xi;
  } else {
    const BracketIndex b = bracket(t, nodes);
    for (std::size_t j = b.index + 1; j-- > 0;) prod *= t - x[j];
    for (std::size_t j = b.index + 1; j <= n; ++j) prod *= t - x[j];
  }
  return prod;
}

ScaledValue logsum_product(double t, const NodeSet& nodes) {
  const BracketIndex b = bracket(t, nodes);
  if (b.node_hit) return ScaledValue{};
  double log_sum = 0.0;
  int sign = 1;
  for (double xi : nodes.values()) {
    const double factor = t - xi;
    if (factor < 0.0) sign = -sign;
    log_sum += std::log(std::fabs(factor));
  }
  return exponentiate_log_sum(log_sum, sign, static_cast<std::int64_t>(nodes.degree()) - 1);
}

ScaledValue grouped_logs_product(double t, const NodeSet& nodes) {
  const BracketIndex b = bracket(t, nodes);
  if (b.node_hit) return ScaledValue{};
  const auto x = nodes.values();
  const std::size_t n = nodes.degree();
  double log_sum = 0.0;
  int sign = 1;
  auto take_log = [&](double v) {
    if (v < 0.0) sign = -sign;
    log_sum += std::log(std::fabs(v));
  };
  auto side = [&](std::size_t count, auto&& next) {
    const std::size_t r = individual_count(count);
    for (std::size_t j = 0; j < r; ++j) take_log(next());
    const std::size_t groups = (count - r) / kProductGroupSize;
    for (std::size_t g = 0; g < groups; ++g) {
      double prod = 1.0;
      for (std::size_t j = 0; j < kProductGroupSize; ++j) prod *= next();
      take_log(prod);
    }
  };
  std::size_t left = b.index + 1;
  side(b.index + 1, [&] { return t - x[--left]; });
  std::size_t right = b.index + 1;
  side(n - b.index, [&] { return t - x[right++]; });
  return exponentiate_log_sum(log_sum, sign, static_cast<std::int64_t>(n) - 1);
}

}  // namespace barystable
