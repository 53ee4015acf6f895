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

#include "barystable/weights.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "barystable/error.hpp"
#include "unit/test_support.hpp"

namespace barystable {
namespace {

// 1 / prod_{j != i} (x_i - x_j) at high precision for the given points.
std::vector<HiPrec> brute_force_lambda(const std::vector<HiPrec>& x) {
  std::vector<HiPrec> lambda;
  for (std::size_t i = 0; i < x.size(); ++i) {
    HiPrec p(1.0, 300);
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j != i) p *= x[i] - x[j];
    }
    lambda.push_back(HiPrec(1.0, 300) / p);
  }
  return lambda;
}

std::vector<HiPrec> exact_points(std::size_t n) {
  std::vector<HiPrec> x;
  for (std::size_t i = 0; i <= n; ++i) x.push_back(testing::chebyshev_by_cosine(i, n, 300));
  return x;
}

TEST(SimplifiedWeights, Examples) {
  EXPECT_EQ(simplified(1).to_vector(), (std::vector<double>{0.5, -0.5}));
  EXPECT_EQ(simplified(2).to_vector(), (std::vector<double>{0.5, -1.0, 0.5}));
  EXPECT_EQ(simplified(3).to_vector(), (std::vector<double>{0.5, -1.0, 1.0, -0.5}));
  EXPECT_EQ(simplified(4).variant(), WeightVariant::kSimplified);
  EXPECT_THROW(simplified(0), DomainError);
}

TEST(SimplifiedWeights, OnDemandMatchesMaterialized) {
  const WeightScheme w = simplified(1'000'000);
  EXPECT_EQ(w.size(), 1'000'001u);
  EXPECT_EQ(w[0], 0.5);
  EXPECT_EQ(w[999'999], -1.0);
  EXPECT_EQ(w[1'000'000], 0.5);
}

TEST(LambdaExactChebyshev, MatchesBruteForce) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const WeightScheme w = lambda_exact_chebyshev(n);
    const std::vector<HiPrec> expected = brute_force_lambda(exact_points(n));
    for (std::size_t i = 0; i <= n; ++i) {
      const double rel = (abs(expected[i] - w[i]) / abs(expected[i])).to_double();
      EXPECT_LE(rel, 1e-15) << "n = " << n << ", i = " << i;
    }
  }
}

TEST(LambdaExactChebyshev, DegreeTwo) {
  EXPECT_EQ(lambda_exact_chebyshev(2).to_vector(), (std::vector<double>{0.5, -1.0, 0.5}));
}

TEST(LambdaExactChebyshev, RangeErrorForHugeDegree) {
  EXPECT_THROW(lambda_exact_chebyshev(5000), RangeError);
}

TEST(LambdaExactChebyshev, NormalizedIsSimplified) {
  for (std::size_t n = 1; n <= 50; ++n) {
    const WeightScheme lambda = lambda_exact_chebyshev(n);
    for (std::size_t i = 0; i <= n; ++i) {
      ASSERT_EQ(lambda[i] / (2.0 * lambda[0]), simplified_weight(i, n)) << n << " " << i;
    }
  }
}

TEST(Nu, ExactOnThreePoints) {
  const WeightScheme nu = compute_nu(NodeSet::from_values({-1.0, 0.0, 1.0}));
  EXPECT_EQ(nu.variant(), WeightVariant::kNu);
  EXPECT_EQ(nu.to_vector(), simplified(2).to_vector());
}

TEST(Nu, CloseToSimplifiedOnRoundedNodes) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const WeightScheme nu = compute_nu(generate_rounded_chebyshev(n));
    for (std::size_t i = 0; i <= n; ++i) {
      EXPECT_NEAR(nu[i], simplified_weight(i, n), 1e-12) << n << " " << i;
    }
  }
}

TEST(Nu, MatchesBruteForceOnRoundedNodes) {
  const std::size_t n = 20;
  const NodeSet nodes = generate_rounded_chebyshev(n);
  std::vector<HiPrec> x;
  for (double v : nodes.values()) x.push_back(HiPrec(v, 300));
  const std::vector<HiPrec> lambda = brute_force_lambda(x);
  const WeightScheme nu = compute_nu(nodes);
  for (std::size_t i = 0; i <= n; ++i) {
    HiPrec expected = lambda[i] * static_cast<double>(n);
    expected.scale_by_power_of_two(-static_cast<std::int64_t>(n - 1));
    const double rel = (abs(expected - nu[i]) / abs(expected)).to_double();
    EXPECT_LE(rel, 1e-13) << i;
  }
}

TEST(Nu, SignsAlternateAtLargeDegree) {
  const std::size_t n = 3001;
  const WeightScheme nu = compute_nu(generate_rounded_chebyshev(n));
  for (std::size_t i = 0; i <= n; ++i) {
    ASSERT_EQ(std::signbit(nu[i]), std::signbit(simplified_weight(i, n))) << i;
    ASSERT_NEAR(std::fabs(nu[i]), std::fabs(simplified_weight(i, n)), 1e-8) << i;
  }
}

TEST(WeightSchemeTest, RejectsBadConstruction) {
  EXPECT_THROW(WeightScheme(WeightVariant::kSimplified, {1.0, 1.0}), DomainError);
  EXPECT_THROW(WeightScheme(WeightVariant::kNu, {1.0}), DomainError);
}

}  // namespace
}  // namespace barystable
