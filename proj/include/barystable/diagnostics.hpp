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
#include <vector>

#include "barystable/eval_second.hpp"
#include "barystable/hiprec.hpp"
#include "barystable/nodes.hpp"
#include "barystable/summation.hpp"

// Error-analysis observables. Everything is evaluated at oracle precision
// and rounded to binary64 once.

namespace barystable {

/// Delta f_i = (f_i - f_{i-1}) / (x_i - x_{i-1}) for i = 1..n.
struct DividedDifferences {
  std::vector<double> values;  ///< values[i - 1] holds Delta f_i
  double norm = 0.0;           ///< max |Delta f_i|
};

DividedDifferences divided_differences(const NodeSet& nodes, const SampleVector& f);

/// m = floor((n + 1) / 2), the length of the sums in the stable evaluator.
constexpr std::size_t half_count(std::size_t n) { return (n + 1) / 2; }

/// (45.6 |f| + 37.4 |Df| + 6.2 |f| sigma_m + 4.1 |Df| sigma_m) eps with sup
/// norms and eps = 2^-53.
double forward_bound(double f_norm, double df_norm, double sigma_m);
/// Same, with the norms computed from the data and sigma_m from `method`.
double forward_bound(const NodeSet& nodes, const SampleVector& f, SummationMethod method);

/// (16.6 + 2.1 sigma_m) max{|f_{i-1}| + |f_i|, |f_i| + |f_{i+1}|} eps per
/// index, with f_{-1} = f_{n+1} = 0.
std::vector<double> backward_bound_per_index(const SampleVector& f, double sigma_m);

/// Relative perturbation (8.1 + 1.1 sigma_n + 1.1 sigma_m) eps allowed on each
/// f_i by the bound for the naive numerator over the decomposed denominator.
double relative_backward_bound(double sigma_n, double sigma_m);

/// alpha = sum_{i != k} |(xh_i - x_i) / (x_i - x_k)| and
/// delta = sum_{i != k} |(t - x_k) / (x_i - x_k)| with x the exact points.
struct AlphaDelta {
  double alpha = 0.0;
  double delta = 0.0;
};

/// s_{n,k}, the leading-order relative error of the first formula with
/// simplified weights near x_k caused by node rounding, and s / (n^2 eps).
struct SnkValue {
  double s = 0.0;
  double s_over_n2eps = 0.0;
};

/// Exact Chebyshev points -cos(i pi / n), i = 0..n, at oracle precision.
std::vector<HiPrec> exact_chebyshev_points(std::size_t n);

// The overloads taking `exact` use those values as the unrounded points
// instead of the Chebyshev points; tests use this to plant known residuals.
// All of them need 1 <= k < n (DomainError otherwise).

AlphaDelta alpha_delta(const NodeSet& nodes, std::size_t k, double t);
AlphaDelta alpha_delta(std::span<const double> rounded, std::span<const HiPrec> exact,
                       std::size_t k, double t);

/// DomainError when f_k == 0.
SnkValue s_nk(const NodeSet& nodes, const SampleVector& f, std::size_t k);
SnkValue s_nk(std::span<const double> rounded, std::span<const HiPrec> exact,
              const SampleVector& f, std::size_t k);

/// eps sqrt(sum (x_i / (x_k - x_i))^2 + (sum gamma_i f_i x_k / (gamma_k f_k (x_k - x_i)))^2),
/// the standard deviation of s_{n,k} when the node residuals are modeled as
/// independent with deviation |x_i| eps. DomainError when f_k == 0.
double sigma_s_estimate(const NodeSet& nodes, const SampleVector& f, std::size_t k);
double sigma_s_estimate(std::span<const HiPrec> exact, const SampleVector& f, std::size_t k);

struct DiagnosticReport {
  std::size_t k = 0;
  double t = 0.0;
  double alpha = 0.0;
  double delta = 0.0;
  double s = 0.0;
  double s_over_n2eps = 0.0;
  double sigma_estimate = 0.0;
};

/// All of the above for one (k, t); the exact points are computed once.
DiagnosticReport diagnose(const NodeSet& nodes, const SampleVector& f, std::size_t k, double t);

}  // namespace barystable
