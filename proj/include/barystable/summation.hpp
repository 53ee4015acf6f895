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

namespace barystable {

enum class SummationKind { kNaive, kKahan };

/// A summation algorithm together with its error-model constant: the
/// computed sum of n+1 terms equals sum (1 + d_i sigma(n) eps) a_i with
/// |d_i| <= 1 and eps = 2^-53.
class SummationMethod {
 public:
  constexpr SummationMethod() = default;
  constexpr explicit SummationMethod(SummationKind kind) : kind_(kind) {}

  static constexpr SummationMethod naive() { return SummationMethod(SummationKind::kNaive); }
  static constexpr SummationMethod kahan() { return SummationMethod(SummationKind::kKahan); }

  constexpr SummationKind kind() const { return kind_; }

  /// sigma_n for a sum of n + 1 terms: max(n, 1) for naive summation, 2.01
  /// for Kahan's (covers 2 + O(n eps) for every practical n).
  constexpr double sigma(std::size_t n) const {
    if (kind_ == SummationKind::kKahan) return 2.01;
    return n < 1 ? 1.0 : static_cast<double>(n);
  }

  std::string_view name() const { return kind_ == SummationKind::kKahan ? "kahan" : "naive"; }

  friend constexpr bool operator==(SummationMethod, SummationMethod) = default;

 private:
  SummationKind kind_ = SummationKind::kNaive;
};

/// Unit roundoff of binary64.
inline constexpr double kUnitRoundoff = 0x1p-53;

class NaiveSum {
 public:
  void add(double a) { sum_ += a; }
  double result() const { return sum_; }

 private:
  double sum_ = 0.0;
};

/// Kahan's compensated summation.
class KahanSum {
 public:
  void add(double a) {
    const double y = a - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double result() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Sums left to right. NaN inputs propagate to the result.
double sum(std::span<const double> values, SummationMethod method);

/// Calls f with a default-constructed accumulator of the type that
/// implements `method`; returns whatever f returns.
template <class F>
decltype(auto) with_accumulator(SummationMethod method, F&& f) {
  if (method.kind() == SummationKind::kKahan) return f(KahanSum{});
  return f(NaiveSum{});
}

}  // namespace barystable
