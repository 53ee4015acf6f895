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

#include "barystable/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

#include "barystable/error.hpp"

namespace barystable {
namespace {

// Enough bits to add up to 2^64 binary64 values, or their squares, exactly.
constexpr int kStatsBits = 4400;
// Enough bits to add up to 2^64 binary64 values exactly.
constexpr int kExactSumBits = 2200;

template <class Weight>
OracleSums weighted_sums(double t, const NodeSet& nodes, const SampleVector& f, Weight&& weight) {
  if (f.size() != nodes.size()) throw DomainError("sample count does not match the nodes");
  const BracketIndex b = bracket(t, nodes);
  if (b.node_hit) throw DomainError("oracle sums are undefined at a node");
  const int bits = HiPrec::default_bits();
  const auto x = nodes.values();
  OracleSums sums{HiPrec(bits), HiPrec(bits)};
  const HiPrec tt(t, bits);
  HiPrec difference(bits);
  HiPrec term(bits);
  for (std::size_t i = 0; i < x.size(); ++i) {
    difference.assign_difference(tt, x[i]);
    term.assign_quotient(weight(i), difference);
    sums.q += term;
    term *= f[i];
    sums.p += term;
  }
  return sums;
}

}  // namespace

HiPrec chebyshev_point(std::size_t i, std::size_t n, int bits) {
  if (n == 0 || i > n) throw DomainError("Chebyshev point index out of range");
  HiPrec argument = HiPrec::pi(bits) / (2.0 * static_cast<double>(n));
  argument *= static_cast<double>(2 * static_cast<std::int64_t>(i) - static_cast<std::int64_t>(n));
  return sin(argument);
}

OracleSums oracle_sums(double t, const NodeSet& nodes, const SampleVector& f) {
  const std::size_t n = nodes.degree();
  return weighted_sums(t, nodes, f, [n](std::size_t i) { return simplified_weight(i, n); });
}

HiPrec oracle_interpolant(double t, const NodeSet& nodes, const SampleVector& f) {
  const BracketIndex b = bracket(t, nodes);
  if (b.node_hit) return HiPrec(f[b.index]);
  OracleSums sums = oracle_sums(t, nodes, f);
  return sums.p /= sums.q;
}

HiPrec oracle_interpolant(double t, const NodeSet& nodes, const SampleVector& f,
                          const WeightScheme& w) {
  if (w.size() != nodes.size()) throw DomainError("weight count does not match the nodes");
  const BracketIndex b = bracket(t, nodes);
  if (b.node_hit) return HiPrec(f[b.index]);
  OracleSums sums = weighted_sums(t, nodes, f, [&w](std::size_t i) { return w[i]; });
  return sums.p /= sums.q;
}

ProductOracle::ProductOracle(const NodeSet& nodes, int bits) : bits_(bits) {
  nodes_.reserve(nodes.size());
  for (double x : nodes.values()) nodes_.emplace_back(x, bits);
}

HiPrec ProductOracle::operator()(double t) const {
  if (!(t >= -1.0 && t <= 1.0)) throw DomainError("evaluation point outside [-1, 1]");
  HiPrec product(1.0, bits_);
  const HiPrec tt(t, bits_);
  HiPrec factor(bits_);
  for (const HiPrec& x : nodes_) {
    factor.assign_difference(tt, x);
    product *= factor;
  }
  const auto n = static_cast<std::int64_t>(nodes_.size()) - 1;
  return product.scale_by_power_of_two(n - 1);
}

HiPrec oracle_product(double t, const NodeSet& nodes) { return ProductOracle(nodes)(t); }

HiPrec exact_sum(std::span<const double> values) {
  HiPrec total(kExactSumBits);
  for (double v : values) total += v;
  return total;
}

double absolute_error(double computed, const HiPrec& reference) {
  if (!std::isfinite(computed)) return std::numeric_limits<double>::infinity();
  HiPrec difference(std::max(reference.bits(), 53));
  difference.assign_difference(reference, computed);
  return abs(difference).to_double();
}

double relative_error(double computed, const HiPrec& reference) {
  if (!std::isfinite(computed)) return std::numeric_limits<double>::infinity();
  if (reference.is_zero()) {
    return computed == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  HiPrec difference(reference.bits());
  difference.assign_difference(reference, computed);
  return (abs(difference) / abs(reference)).to_double();
}

double relative_error(const ScaledValue& computed, const HiPrec& reference) {
  if (reference.is_zero()) {
    return computed.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
  }
  HiPrec value(computed.significand, reference.bits());
  value.scale_by_power_of_two(computed.exponent);
  value -= reference;
  return (abs(value) / abs(reference)).to_double();
}

ErrorAccumulator::ErrorAccumulator() : sum_(kStatsBits), sum_squares_(kStatsBits) {}

void ErrorAccumulator::add(double error) {
  ++count_;
  if (!std::isfinite(error)) {
    ++infinity_count_;
    return;
  }
  max_ = std::max(max_, error);
  sum_ += error;
  HiPrec square(error, kStatsBits);
  square *= error;
  sum_squares_ += square;
}

void ErrorAccumulator::add(double computed, const HiPrec& reference, ErrorMeasure measure) {
  add(measure == ErrorMeasure::kRelative ? relative_error(computed, reference)
                                         : absolute_error(computed, reference));
}

void ErrorAccumulator::merge(const ErrorAccumulator& other) {
  count_ += other.count_;
  infinity_count_ += other.infinity_count_;
  max_ = std::max(max_, other.max_);
  sum_ += other.sum_;
  sum_squares_ += other.sum_squares_;
}

ErrorStats ErrorAccumulator::stats() const {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  ErrorStats s;
  s.count = count_;
  s.infinity_count = infinity_count_;
  const std::size_t finite = count_ - infinity_count_;
  if (finite == 0) {
    s.max = infinity_count_ > 0 ? std::numeric_limits<double>::infinity() : kNaN;
    s.mean = kNaN;
    s.std = kNaN;
    return s;
  }
  s.max = infinity_count_ > 0 ? std::numeric_limits<double>::infinity() : max_;
  const auto n = static_cast<double>(finite);
  const HiPrec mean = sum_ / n;
  HiPrec variance = sum_squares_ / n;
  variance -= mean * mean;
  s.mean = mean.to_double();
  s.std = variance.sign() > 0 ? sqrt(variance).to_double() : 0.0;
  return s;
}

ErrorStats collect_stats(std::span<const double> computed, std::span<const HiPrec> reference,
                         ErrorMeasure measure) {
  if (computed.size() != reference.size()) {
    throw DomainError("computed and reference values differ in count");
  }
  ErrorAccumulator acc;
  for (std::size_t i = 0; i < computed.size(); ++i) acc.add(computed[i], reference[i], measure);
  return acc.stats();
}

TestFunction TestFunction::parse(std::string_view spec) {
  if (spec == "sin") return sin();
  if (spec == "runge") return runge();
  constexpr std::string_view kScaled = "sin-scaled:";
  if (spec.starts_with(kScaled)) {
    const std::string_view number = spec.substr(kScaled.size());
    double omega = 0.0;
    auto [end, ec] = std::from_chars(number.data(), number.data() + number.size(), omega);
    if (ec == std::errc() && end == number.data() + number.size() && std::isfinite(omega)) {
      return sin_scaled(omega);
    }
  }
  throw ConfigurationError("unknown function '" + std::string(spec) +
                           "' (expected sin, sin-scaled:<omega> or runge)");
}

std::string TestFunction::name() const {
  switch (kind_) {
    case Kind::kSin: return "sin";
    case Kind::kRunge: return "runge";
    case Kind::kSinScaled: {
      char buf[64];
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, omega_);
      return "sin-scaled:" + std::string(buf, end);
    }
  }
  return "unknown";
}

HiPrec TestFunction::operator()(const HiPrec& t) const {
  switch (kind_) {
    case Kind::kSin: return barystable::sin(t);
    case Kind::kSinScaled: return barystable::sin(t * omega_);
    case Kind::kRunge: {
      HiPrec denominator = t * t;
      denominator *= 25.0;
      denominator += 1.0;
      HiPrec r(1.0, t.bits());
      return r /= denominator;
    }
  }
  throw ConfigurationError("unknown test function");
}

SampleVector TestFunction::samples(const NodeSet& nodes) const {
  std::vector<double> f;
  f.reserve(nodes.size());
  for (double x : nodes.values()) f.push_back(rounded(x));
  return SampleVector::from_values(std::move(f));
}

}  // namespace barystable
