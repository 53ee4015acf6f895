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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "barystable/eval_second.hpp"
#include "barystable/fp_scaled.hpp"
#include "barystable/hiprec.hpp"
#include "barystable/nodes.hpp"
#include "barystable/weights.hpp"

// Reference computations. Every binary64 input (nodes, samples, t) is taken
// as an exact number; only the arithmetic is carried out at HiPrec precision.

namespace barystable {

/// Exact Chebyshev point -cos(i pi / n), evaluated as sin((2i - n) pi / 2n).
HiPrec chebyshev_point(std::size_t i, std::size_t n, int bits = HiPrec::default_bits());

/// Numerator p(t) = sum w_i f_i / (t - x_i) and denominator q(t) =
/// sum w_i / (t - x_i) of the second formula.
struct OracleSums {
  HiPrec p;
  HiPrec q;
};

/// Simplified weights. DomainError when t is a node.
OracleSums oracle_sums(double t, const NodeSet& nodes, const SampleVector& f);

/// p / q with simplified weights; a node hit returns f_i. This is the value
/// the stable and naive evaluators approximate.
HiPrec oracle_interpolant(double t, const NodeSet& nodes, const SampleVector& f);
/// p / q with arbitrary weights.
HiPrec oracle_interpolant(double t, const NodeSet& nodes, const SampleVector& f,
                          const WeightScheme& w);

/// 2^(n-1) prod (t - x_i) at high precision. The nodes are converted once, so
/// repeated products over the same node set avoid per-factor conversions.
/// Thread-safe for concurrent calls.
class ProductOracle {
 public:
  explicit ProductOracle(const NodeSet& nodes, int bits = HiPrec::default_bits());
  HiPrec operator()(double t) const;

 private:
  std::vector<HiPrec> nodes_;
  int bits_;
};

HiPrec oracle_product(double t, const NodeSet& nodes);

/// Sum of binary64 values with no rounding at all.
HiPrec exact_sum(std::span<const double> values);

/// |computed - reference| rounded to binary64; infinity when computed is not
/// finite.
double absolute_error(double computed, const HiPrec& reference);
/// |computed - reference| / |reference|. Infinity when the reference is zero
/// and computed is not, or when computed is not finite.
double relative_error(double computed, const HiPrec& reference);
double relative_error(const ScaledValue& computed, const HiPrec& reference);

enum class ErrorMeasure { kAbsolute, kRelative };

/// Summary of a set of errors. Infinite errors are counted in
/// infinity_count and excluded from mean and std (population std). max is
/// infinity when infinity_count > 0; statistics over no finite error are NaN.
struct ErrorStats {
  std::size_t count = 0;
  double max = 0.0;
  double mean = 0.0;
  double std = 0.0;
  std::size_t infinity_count = 0;

  std::size_t finite_count() const { return count - infinity_count; }
};

/// Order-independent aggregation: the maximum is exact and the sums of
/// errors and squared errors are kept without rounding, so merging partial
/// accumulators in any order gives identical statistics.
class ErrorAccumulator {
 public:
  ErrorAccumulator();

  void add(double error);
  void add(double computed, const HiPrec& reference, ErrorMeasure measure);
  void merge(const ErrorAccumulator& other);
  ErrorStats stats() const;

 private:
  std::size_t count_ = 0;
  std::size_t infinity_count_ = 0;
  double max_ = 0.0;
  HiPrec sum_;
  HiPrec sum_squares_;
};

ErrorStats collect_stats(std::span<const double> computed, std::span<const HiPrec> reference,
                         ErrorMeasure measure);

/// The functions sampled by the experiments.
class TestFunction {
 public:
  enum class Kind { kSin, kSinScaled, kRunge };

  static TestFunction sin() { return TestFunction(Kind::kSin, 1.0); }
  /// sin(omega t)
  static TestFunction sin_scaled(double omega) { return TestFunction(Kind::kSinScaled, omega); }
  /// 1 / (1 + 25 t^2)
  static TestFunction runge() { return TestFunction(Kind::kRunge, 1.0); }
  /// "sin", "sin-scaled:<omega>" or "runge"; ConfigurationError otherwise.
  static TestFunction parse(std::string_view spec);

  Kind kind() const { return kind_; }
  double omega() const { return omega_; }
  std::string name() const;

  HiPrec operator()(const HiPrec& t) const;
  HiPrec operator()(double t) const { return (*this)(HiPrec(t)); }
  /// The value at t computed at high precision and rounded once.
  double rounded(double t) const { return (*this)(t).to_double(); }
  /// f_i = rounded(x_i) for every node.
  SampleVector samples(const NodeSet& nodes) const;

 private:
  TestFunction(Kind kind, double omega) : kind_(kind), omega_(omega) {}
  Kind kind_;
  double omega_;
};

}  // namespace barystable
