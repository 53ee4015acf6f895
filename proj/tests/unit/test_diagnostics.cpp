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

#include <gtest/gtest.h>

#include <cmath>

#include "barystable/error.hpp"
#include "barystable/oracle.hpp"
#include "unit/test_support.hpp"

namespace barystable {
namespace {

constexpr int kBits = 300;

// Brute-force s_{n,k} straight from its definition, exact points via cosine.
double brute_s_nk(const std::vector<double>& rounded, const std::vector<HiPrec>& exact,
                  const SampleVector& f, std::size_t k) {
  const std::size_t n = rounded.size() - 1;
  const HiPrec gk = HiPrec(simplified_weight(k, n) * f[k], kBits);
  const HiPrec dk = HiPrec(rounded[k], kBits) - exact[k];
  HiPrec total(0.0, kBits);
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == k) continue;
    const HiPrec di = HiPrec(rounded[i], kBits) - exact[i];
    const HiPrec gi = HiPrec(simplified_weight(i, n) * f[i], kBits);
    total += (gk * di + gi * dk) / (exact[k] - exact[i]);
  }
  return (total / gk).to_double();
}

std::vector<HiPrec> cosine_points(std::size_t n) {
  std::vector<HiPrec> x;
  for (std::size_t i = 0; i <= n; ++i) x.push_back(testing::chebyshev_by_cosine(i, n, kBits));
  return x;
}

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

TEST(DividedDifferencesTest, Example) {
  const NodeSet nodes = NodeSet::from_values({-1.0, 0.0, 1.0});
  const SampleVector f = SampleVector::from_values({1.0, 2.0, 5.0});
  const DividedDifferences d = divided_differences(nodes, f);
  EXPECT_EQ(d.values, (std::vector<double>{1.0, 3.0}));
  EXPECT_EQ(d.norm, 3.0);
}

TEST(Bounds, Formulas) {
  EXPECT_EQ(half_count(10), 5u);
  EXPECT_EQ(half_count(11), 6u);
  EXPECT_DOUBLE_EQ(forward_bound(1.0, 0.0, 0.0), 45.6 * 0x1p-53);
  EXPECT_DOUBLE_EQ(forward_bound(1.0, 2.0, 3.0), (45.6 + 74.8 + 18.6 + 24.6) * 0x1p-53);
  EXPECT_DOUBLE_EQ(relative_backward_bound(2.0, 1.0), (8.1 + 2.2 + 1.1) * 0x1p-53);
  const SampleVector f = SampleVector::from_values({1.0, -2.0, 0.5});
  const std::vector<double> b = backward_bound_per_index(f, 1.0);
  const double c = 18.7 * 0x1p-53;
  EXPECT_DOUBLE_EQ(b[0], 3.0 * c);
  EXPECT_DOUBLE_EQ(b[1], 3.0 * c);
  EXPECT_DOUBLE_EQ(b[2], 2.5 * c);
}

TEST(AlphaDeltaTest, PlantedResiduals) {
  // Exact points 0, 1/2, 1 (shifted for convenience); the rounded set moves
  // node 2 by 2^-40.
  const std::vector<double> rounded{-1.0, 0.0, 0.5 + 0x1p-40, 1.0};
  const std::vector<HiPrec> exact{HiPrec(-1.0), HiPrec(0.0), HiPrec(0.5), HiPrec(1.0)};
  const AlphaDelta ad = alpha_delta(rounded, exact, 1, 0.25);
  EXPECT_DOUBLE_EQ(ad.alpha, 0x1p-40 / 0.5);
  // 0.25 * (1/1 + 1/0.5 + 1/1)
  EXPECT_DOUBLE_EQ(ad.delta, 1.0);
  EXPECT_THROW(alpha_delta(rounded, exact, 0, 0.0), DomainError);
  EXPECT_THROW(alpha_delta(rounded, exact, 3, 0.0), DomainError);
}

TEST(SnkTest, PlantedResiduals) {
  const std::vector<double> rounded{-1.0, -0.5 - 0x1p-45, 0.25, 0.5 + 0x1p-44, 1.0};
  const std::vector<HiPrec> exact{HiPrec(-1.0, kBits), HiPrec(-0.5, kBits), HiPrec(0.25, kBits),
                                  HiPrec(0.5, kBits), HiPrec(1.0, kBits)};
  const SampleVector f = SampleVector::from_values({0.3, -1.0, 2.0, 0.75, 1.5});
  for (std::size_t k = 1; k < 4; ++k) {
    const SnkValue s = s_nk(rounded, exact, f, k);
    const double expected = brute_s_nk(rounded, exact, f, k);
    EXPECT_LE(rel(s.s, expected), 1e-14) << k;
    EXPECT_LE(rel(s.s_over_n2eps, expected / (16.0 * 0x1p-53)), 1e-14);
  }
}

TEST(SnkTest, RoundedChebyshevAgainstBruteForce) {
  for (std::size_t n : {4u, 33u, 200u}) {
    const NodeSet nodes = generate_rounded_chebyshev(n);
    const SampleVector f = TestFunction::sin().samples(nodes);
    const std::vector<double> rounded(nodes.values().begin(), nodes.values().end());
    const std::vector<HiPrec> exact = cosine_points(n);
    for (std::size_t k : {std::size_t{1}, n - 1}) {
      const SnkValue s = s_nk(nodes, f, k);
      EXPECT_LE(std::fabs(s.s - brute_s_nk(rounded, exact, f, k)), 1e-6 * std::fabs(s.s) + 1e-28)
          << n << " " << k;
    }
  }
}

TEST(SnkTest, Errors) {
  const NodeSet nodes = generate_rounded_chebyshev(4);
  const SampleVector f = TestFunction::sin().samples(nodes);
  EXPECT_THROW(s_nk(nodes, f, 2), DomainError);  // f_2 = sin(0) = 0
  EXPECT_THROW(s_nk(nodes, f, 4), DomainError);
  EXPECT_THROW(sigma_s_estimate(nodes, f, 2), DomainError);
}

TEST(SigmaEstimate, MatchesDefinition) {
  const std::size_t n = 50;
  const NodeSet nodes = generate_rounded_chebyshev(n);
  const SampleVector f = TestFunction::sin().samples(nodes);
  const std::vector<HiPrec> x = cosine_points(n);
  const std::size_t k = n - 1;
  HiPrec squares(0.0, kBits);
  HiPrec weighted(0.0, kBits);
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == k) continue;
    const HiPrec r = x[i] / (x[k] - x[i]);
    squares += r * r;
    weighted += x[k] * (simplified_weight(i, n) * f[i]) / (x[k] - x[i]);
  }
  weighted /= simplified_weight(k, n) * f[k];
  const double expected = (sqrt(squares + weighted * weighted) * 0x1p-53).to_double();
  EXPECT_LE(rel(sigma_s_estimate(nodes, f, k), expected), 1e-12);
}

TEST(Diagnose, CombinesTheParts) {
  const NodeSet nodes = generate_rounded_chebyshev(101);
  const SampleVector f = TestFunction::sin().samples(nodes);
  const double t = std::nextafter(nodes[100], 2.0);
  const DiagnosticReport r = diagnose(nodes, f, 100, t);
  const AlphaDelta ad = alpha_delta(nodes, 100, t);
  const SnkValue s = s_nk(nodes, f, 100);
  EXPECT_EQ(r.k, 100u);
  EXPECT_EQ(r.t, t);
  EXPECT_EQ(r.alpha, ad.alpha);
  EXPECT_EQ(r.delta, ad.delta);
  EXPECT_EQ(r.s, s.s);
  EXPECT_EQ(r.s_over_n2eps, s.s_over_n2eps);
  EXPECT_EQ(r.sigma_estimate, sigma_s_estimate(nodes, f, 100));
  EXPECT_GT(r.sigma_estimate, 0.0);
  // Node rounding is tiny relative to the node spacing.
  EXPECT_LT(r.alpha, 1e-10);
}

}  // namespace
}  // namespace barystable
