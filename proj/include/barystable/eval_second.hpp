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

#include "barystable/nodes.hpp"
#include "barystable/summation.hpp"
#include "barystable/weights.hpp"

namespace barystable {

/// Function values f_0..f_n aligned with a NodeSet. All finite.
class SampleVector {
 public:
  /// DomainError if any value is NaN or infinite, or fewer than two values.
  static SampleVector from_values(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  std::size_t degree() const { return values_.size() - 1; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  /// max_i |f_i|
  double sup_norm() const;

 private:
  explicit SampleVector(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_;
};

/// The standard second formula sum(w_i f_i / (t - x_i)) / sum(w_i / (t - x_i)),
/// both sums taken with `method`. A node hit returns f_i exactly.
/// DomainError for t outside [-1, 1] or mismatched sizes; EvaluationError
/// when the denominator evaluates to zero.
double eval_naive(double t, const NodeSet& nodes, const SampleVector& f, const WeightScheme& w,
                  SummationMethod method);

// Positive-term decomposition of the simplified-weight denominator
// q(t) = sum gamma_i / (t - x_i) and numerator p(t) = sum gamma_i f_i / (t - x_i)
// for t in (x_k, x_{k+1}):
//
//   q = s (q_- + sum q_j + q_+),   p = s (q_- p_- + sum q_j p_j + q_+ p_+)
//
// with every q coefficient positive, so p / q is a convex combination of the
// p terms. Which terms appear depends on the parities of k and n:
//
//                 k even                       k odd
//   n = 2l        alpha, xi_2i (i<l), psi      -(beta, xi_2i+1 (i<l), omega)
//   n = 2l + 1    alpha, xi_2i (i<=l), omega   -(beta, xi_2i+1 (i<l), psi)

enum class TermKind {
  kAlpha,  ///< 1 / (2(1 + t)), pairs with f_0
  kBeta,   ///< eta(t, x_1), pairs with theta(f_1, f_0, t, x_1)
  kXi,     ///< (x_i - x_{i-1}) / ((t - x_i)(t - x_{i-1})), pairs with phi
  kPsi,    ///< eta(-t, -x_{n-1}), pairs with theta(f_{n-1}, f_n, -t, -x_{n-1})
  kOmega,  ///< 1 / (2(1 - t)), pairs with f_n
};

enum class ParityCase { kEvenKEvenN, kEvenKOddN, kOddKEvenN, kOddKOddN };

struct Term {
  TermKind kind;
  /// 0 for alpha, 1 for beta, n-1 for psi, n for omega, i for xi_i.
  std::size_t index;
  double q;
};

struct TermDecomposition {
  double t = 0.0;
  std::size_t bracket = 0;  ///< k with x_k < t < x_{k+1}
  ParityCase parity = ParityCase::kEvenKEvenN;
  int sign = 1;
  std::vector<Term> terms;  ///< q_-, interior xi terms in increasing index, q_+

  /// Number of interior xi terms (l_n).
  std::size_t interior_count() const { return terms.size() - 2; }
};

/// eta(y, z) = ((2 + z) + y) / (2 (y - z)(1 + y)), evaluated as parenthesized.
double eta(double y, double z);

/// theta(u, v, x, y) = (2(1 + x)u - (x - y)v) / ((2 + y) + x), evaluated as
/// parenthesized. Accurate when 2 + y is a binary64 number.
double theta(double u, double v, double x, double y);

/// phi(u, v, x, y, z, w) = (u + v)/2 + (x - y)(u - v)/(z - w), with y the
/// exact midpoint of z and w. DomainError when z == w.
double phi(double u, double v, double x, double y, double z, double w);

/// Coefficients of the decomposition at t. PreconditionError when t is a
/// node or the node set fails the exact-sum verification; DomainError when
/// t is outside [-1, 1]. InvariantViolation if a coefficient comes out zero,
/// negative or NaN.
TermDecomposition q_terms(double t, const NodeSet& nodes);

/// The p value paired with each term of `decomposition`, same order.
std::vector<double> p_terms(const TermDecomposition& decomposition, const NodeSet& nodes,
                            const SampleVector& f);

/// Second formula with simplified weights evaluated through the positive-term
/// decomposition: numerator and denominator share one coefficient pass and
/// the result is sum(q_j p_j) / sum(q_j). A node hit returns f_i exactly.
///
/// Requires a node set that passes verify_exact_sums (PreconditionError
/// otherwise). When t is so close to the node 0 that a xi coefficient
/// overflows, the limit value (the p term of that coefficient) is returned.
double eval_stable(double t, const NodeSet& nodes, const SampleVector& f, SummationMethod method);

/// Naive numerator over the decomposed denominator. Needs only 2 + x_1 and
/// 2 - x_{n-1} to be binary64 numbers.
double eval_stable_denominator(double t, const NodeSet& nodes, const SampleVector& f,
                               SummationMethod method);

}  // namespace barystable
