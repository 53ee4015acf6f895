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

#include "barystable/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "barystable/error.hpp"
#include "barystable/oracle.hpp"
#include "barystable/weights.hpp"

namespace barystable {
namespace {

void check_interior_index(std::size_t k, std::size_t n) {
  if (k < 1 || k >= n) {
    throw DomainError("diagnostics need 1 <= k < n, got k = " + std::to_string(k) +
                      " with n = " + std::to_string(n));
  }
}

void check_lengths(std::size_t a, std::size_t b) {
  if (a != b) throw DomainError("node, exact-point and sample counts must agree");
}

double n2eps(std::size_t n) {
  const auto nd = static_cast<double>(n);
  return nd * nd * kUnitRoundoff;
}

}  // namespace

DividedDifferences divided_differences(const NodeSet& nodes, const SampleVector& f) {
  check_lengths(nodes.size(), f.size());
  DividedDifferences d;
  d.values.reserve(nodes.degree());
  HiPrec numerator;
  HiPrec denominator;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    numerator = f[i];
    numerator -= f[i - 1];
    denominator = nodes[i];
    denominator -= nodes[i - 1];
    const double v = (numerator / denominator).to_double();
    d.values.push_back(v);
    d.norm = std::max(d.norm, std::fabs(v));
  }
  return d;
}

double forward_bound(double f_norm, double df_norm, double sigma_m) {
  return (45.6 * f_norm + 37.4 * df_norm + 6.2 * f_norm * sigma_m + 4.1 * df_norm * sigma_m) *
         kUnitRoundoff;
}

double forward_bound(const NodeSet& nodes, const SampleVector& f, SummationMethod method) {
  const double sigma_m = method.sigma(half_count(nodes.degree()));
  return forward_bound(f.sup_norm(), divided_differences(nodes, f).norm, sigma_m);
}

std::vector<double> backward_bound_per_index(const SampleVector& f, double sigma_m) {
  const std::size_t size = f.size();
  std::vector<double> bound(size);
  const double factor = (16.6 + 2.1 * sigma_m) * kUnitRoundoff;
  for (std::size_t i = 0; i < size; ++i) {
    const double previous = i > 0 ? std::fabs(f[i - 1]) : 0.0;
    const double next = i + 1 < size ? std::fabs(f[i + 1]) : 0.0;
    const double here = std::fabs(f[i]);
    bound[i] = factor * std::max(previous + here, here + next);
  }
  return bound;
}

double relative_backward_bound(double sigma_n, double sigma_m) {
  return (8.1 + 1.1 * sigma_n + 1.1 * sigma_m) * kUnitRoundoff;
}

std::vector<HiPrec> exact_chebyshev_points(std::size_t n) {
  std::vector<HiPrec> x;
  x.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) x.push_back(chebyshev_point(i, n));
  return x;
}

AlphaDelta alpha_delta(const NodeSet& nodes, std::size_t k, double t) {
  check_interior_index(k, nodes.degree());
  return alpha_delta(nodes.values(), exact_chebyshev_points(nodes.degree()), k, t);
}

AlphaDelta alpha_delta(std::span<const double> rounded, std::span<const HiPrec> exact,
                       std::size_t k, double t) {
  check_lengths(rounded.size(), exact.size());
  check_interior_index(k, rounded.size() - 1);
  HiPrec alpha;
  HiPrec delta;
  HiPrec offset;
  offset = t;
  offset -= exact[k];
  offset = abs(offset);
  HiPrec gap;
  HiPrec residual;
  for (std::size_t i = 0; i < rounded.size(); ++i) {
    if (i == k) continue;
    gap.assign_difference(exact[i], exact[k]);
    gap = abs(gap);
    residual = rounded[i];
    residual -= exact[i];
    alpha += abs(residual) / gap;
    delta += offset / gap;
  }
  return {alpha.to_double(), delta.to_double()};
}

SnkValue s_nk(const NodeSet& nodes, const SampleVector& f, std::size_t k) {
  check_interior_index(k, nodes.degree());
  return s_nk(nodes.values(), exact_chebyshev_points(nodes.degree()), f, k);
}

SnkValue s_nk(std::span<const double> rounded, std::span<const HiPrec> exact,
              const SampleVector& f, std::size_t k) {
  check_lengths(rounded.size(), exact.size());
  check_lengths(rounded.size(), f.size());
  const std::size_t n = rounded.size() - 1;
  check_interior_index(k, n);
  if (f[k] == 0.0) throw DomainError("s_{n,k} needs f_k != 0");
  const double gamma_f_k = simplified_weight(k, n) * f[k];  // exact: weights are +-1, +-1/2
  HiPrec residual_k;
  residual_k = rounded[k];
  residual_k -= exact[k];

  HiPrec total;
  HiPrec term;
  HiPrec residual;
  HiPrec gap;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == k) continue;
    residual = rounded[i];
    residual -= exact[i];
    term = residual * gamma_f_k;
    term += residual_k * (simplified_weight(i, n) * f[i]);
    gap.assign_difference(exact[k], exact[i]);
    total += term / gap;
  }
  total /= gamma_f_k;
  const double s = total.to_double();
  return {s, (total / n2eps(n)).to_double()};
}

double sigma_s_estimate(const NodeSet& nodes, const SampleVector& f, std::size_t k) {
  check_interior_index(k, nodes.degree());
  return sigma_s_estimate(exact_chebyshev_points(nodes.degree()), f, k);
}

double sigma_s_estimate(std::span<const HiPrec> exact, const SampleVector& f, std::size_t k) {
  check_lengths(exact.size(), f.size());
  const std::size_t n = exact.size() - 1;
  check_interior_index(k, n);
  if (f[k] == 0.0) throw DomainError("the s_{n,k} estimate needs f_k != 0");
  const double gamma_f_k = simplified_weight(k, n) * f[k];
  HiPrec squares;
  HiPrec weighted;
  HiPrec gap;
  HiPrec ratio;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == k) continue;
    gap.assign_difference(exact[k], exact[i]);
    ratio = exact[i] / gap;
    squares += ratio * ratio;
    weighted += (exact[k] * (simplified_weight(i, n) * f[i])) / gap;
  }
  weighted /= gamma_f_k;
  squares += weighted * weighted;
  return (sqrt(squares) * kUnitRoundoff).to_double();
}

DiagnosticReport diagnose(const NodeSet& nodes, const SampleVector& f, std::size_t k, double t) {
  check_lengths(nodes.size(), f.size());
  check_interior_index(k, nodes.degree());
  const std::vector<HiPrec> exact = exact_chebyshev_points(nodes.degree());
  DiagnosticReport r;
  r.k = k;
  r.t = t;
  const AlphaDelta ad = alpha_delta(nodes.values(), exact, k, t);
  r.alpha = ad.alpha;
  r.delta = ad.delta;
  const SnkValue s = s_nk(nodes.values(), exact, f, k);
  r.s = s.s;
  r.s_over_n2eps = s.s_over_n2eps;
  r.sigma_estimate = sigma_s_estimate(exact, f, k);
  return r;
}

}  // namespace barystable
