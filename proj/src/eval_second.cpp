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

#include "barystable/eval_second.hpp"

#include <cmath>
#include <string>

#include "barystable/error.hpp"

namespace barystable {
namespace {

void check_sizes(const NodeSet& nodes, const SampleVector& f) {
  if (f.size() != nodes.size()) {
    throw DomainError("sample vector has " + std::to_string(f.size()) + " values for " +
                      std::to_string(nodes.size()) + " nodes");
  }
}

void require_verified(const NodeSet& nodes) {
  if (!nodes.has_exact_sums()) {
    throw PreconditionError(
        "stable evaluation needs nodes whose adjacent sums and 2 + x_1, 2 - x_{n-1} are exact");
  }
}

void require_end_sums(const NodeSet& nodes) {
  const auto x = nodes.values();
  const std::size_t n = nodes.degree();
  const double lo = 2.0 + x[1];
  const double hi = 2.0 - x[n - 1];
  if (lo - 2.0 != x[1] || lo - x[1] != 2.0 || 2.0 - hi != x[n - 1] || hi + x[n - 1] != 2.0) {
    throw PreconditionError("2 + x_1 and 2 - x_{n-1} must be binary64 numbers");
  }
}

ParityCase parity_case(std::size_t k, std::size_t n) {
  if (k % 2 == 0) return n % 2 == 0 ? ParityCase::kEvenKEvenN : ParityCase::kEvenKOddN;
  return n % 2 == 0 ? ParityCase::kOddKEvenN : ParityCase::kOddKOddN;
}

// Calls emit(kind, index) for each term in order; returns the sign s.
template <class Emit>
int for_each_term(std::size_t k, std::size_t n, Emit&& emit) {
  const std::size_t l = n / 2;
  if (k % 2 == 0) {
    emit(TermKind::kAlpha, 0);
    if (n % 2 == 0) {
      for (std::size_t i = 1; i < l; ++i) emit(TermKind::kXi, 2 * i);
      emit(TermKind::kPsi, n - 1);
    } else {
      for (std::size_t i = 1; i <= l; ++i) emit(TermKind::kXi, 2 * i);
      emit(TermKind::kOmega, n);
    }
    return 1;
  }
  emit(TermKind::kBeta, 1);
  for (std::size_t i = 1; i < l; ++i) emit(TermKind::kXi, 2 * i + 1);
  if (n % 2 == 0) {
    emit(TermKind::kOmega, n);
  } else {
    emit(TermKind::kPsi, n - 1);
  }
  return -1;
}

double q_value(TermKind kind, std::size_t i, double t, std::span<const double> x) {
  const std::size_t n = x.size() - 1;
  switch (kind) {
    case TermKind::kAlpha: return 1.0 / (2.0 * (1.0 + t));
    case TermKind::kOmega: return 1.0 / (2.0 * (1.0 - t));
    case TermKind::kBeta: return eta(t, x[1]);
    case TermKind::kPsi: return eta(-t, -x[n - 1]);
    case TermKind::kXi:
      // Two divisions instead of dividing by the product, which can
      // underflow when t and x_i are both near 0.
      return ((x[i] - x[i - 1]) / (t - x[i])) / (t - x[i - 1]);
  }
  return std::nan("");
}

double p_value(TermKind kind, std::size_t i, double t, std::span<const double> x,
               std::span<const double> f) {
  const std::size_t n = x.size() - 1;
  switch (kind) {
    case TermKind::kAlpha: return f[0];
    case TermKind::kOmega: return f[n];
    case TermKind::kBeta: return theta(f[1], f[0], t, x[1]);
    case TermKind::kPsi: return theta(f[n - 1], f[n], -t, -x[n - 1]);
    case TermKind::kXi: {
      const double midpoint = (x[i] + x[i - 1]) / 2.0;  // exact for verified nodes
      return phi(f[i], f[i - 1], t, midpoint, x[i], x[i - 1]);
    }
  }
  return std::nan("");
}

void check_coefficient(double q, TermKind kind, std::size_t index, double t) {
  if (!(q > 0.0)) {
    throw InvariantViolation("non-positive decomposition coefficient (kind " +
                             std::to_string(static_cast<int>(kind)) + ", index " +
                             std::to_string(index) + ") at t = " + std::to_string(t));
  }
}

// Returns the bracket index for an interior t; validates everything the
// decomposition relies on.
std::size_t interior_bracket(double t, const NodeSet& nodes) {
  const BracketIndex b = bracket(t, nodes);
  if (b.node_hit) throw PreconditionError("the decomposition needs t strictly between nodes");
  return b.index;
}

}  // namespace

SampleVector SampleVector::from_values(std::vector<double> values) {
  if (values.size() < 2) throw DomainError("a sample vector needs at least two values");
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError("sample values must be finite");
  }
  return SampleVector(std::move(values));
}

double SampleVector::sup_norm() const {
  double m = 0.0;
  for (double v : values_) m = std::fmax(m, std::fabs(v));
  return m;
}

double eval_naive(double t, const NodeSet& nodes, const SampleVector& f, const WeightScheme& w,
                  SummationMethod method) {
  check_sizes(nodes, f);
  if (w.size() != nodes.size()) throw DomainError("weight count does not match the nodes");
  const BracketIndex b = bracket(t, nodes);
  if (b.node_hit) return f[b.index];
  const auto x = nodes.values();
  return with_accumulator(method, [&](auto num) {
    auto den = num;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double diff = t - x[i];
      num.add((w[i] * f[i]) / diff);
      den.add(w[i] / diff);
    }
    if (den.result() == 0.0) throw EvaluationError("second formula denominator evaluated to zero");
    return num.result() / den.result();
  });
}

double eta(double y, double z) { return ((2.0 + z) + y) / ((2.0 * (y - z)) * (1.0 + y)); }

double theta(double u, double v, double x, double y) {
  return ((2.0 * (1.0 + x)) * u - (x - y) * v) / ((2.0 + y) + x);
}

double phi(double u, double v, double x, double y, double z, double w) {
  if (z == w) throw DomainError("phi needs a non-degenerate interval");
  return (u + v) / 2.0 + (x - y) * ((u - v) / (z - w));
}

TermDecomposition q_terms(double t, const NodeSet& nodes) {
  require_verified(nodes);
  const std::size_t k = interior_bracket(t, nodes);
  const std::size_t n = nodes.degree();
  const auto x = nodes.values();
  TermDecomposition d;
  d.t = t;
  d.bracket = k;
  d.parity = parity_case(k, n);
  d.terms.reserve(n / 2 + 2);
  d.sign = for_each_term(k, n, [&](TermKind kind, std::size_t i) {
    const double q = q_value(kind, i, t, x);
    check_coefficient(q, kind, i, t);
    d.terms.push_back({kind, i, q});
  });
  return d;
}

std::vector<double> p_terms(const TermDecomposition& decomposition, const NodeSet& nodes,
                            const SampleVector& f) {
  check_sizes(nodes, f);
  require_verified(nodes);
  std::vector<double> p;
  p.reserve(decomposition.terms.size());
  for (const Term& term : decomposition.terms) {
    p.push_back(p_value(term.kind, term.index, decomposition.t, nodes.values(), f.values()));
  }
  return p;
}

double eval_stable(double t, const NodeSet& nodes, const SampleVector& f, SummationMethod method) {
  check_sizes(nodes, f);
  require_verified(nodes);
  const BracketIndex b = bracket(t, nodes);
  if (b.node_hit) return f[b.index];
  const auto x = nodes.values();
  const auto fv = f.values();
  return with_accumulator(method, [&](auto num) {
    auto den = num;
    std::size_t overflowed = 0;
    double overflowed_p = 0.0;
    for_each_term(b.index, nodes.degree(), [&](TermKind kind, std::size_t i) {
      const double q = q_value(kind, i, t, x);
      check_coefficient(q, kind, i, t);
      const double p = p_value(kind, i, t, x, fv);
      if (std::isinf(q)) {
        ++overflowed;
        overflowed_p += p;
        return;
      }
      num.add(q * p);
      den.add(q);
    });
    if (overflowed > 0) return overflowed_p / static_cast<double>(overflowed);
    return num.result() / den.result();
  });
}

double eval_stable_denominator(double t, const NodeSet& nodes, const SampleVector& f,
                               SummationMethod method) {
  check_sizes(nodes, f);
  require_end_sums(nodes);
  const BracketIndex b = bracket(t, nodes);
  if (b.node_hit) return f[b.index];
  const auto x = nodes.values();
  const std::size_t n = nodes.degree();
  return with_accumulator(method, [&](auto num) {
    auto den = num;
    for (std::size_t i = 0; i <= n; ++i) num.add((simplified_weight(i, n) * f[i]) / (t - x[i]));
    const int sign = for_each_term(b.index, n, [&](TermKind kind, std::size_t i) {
      const double q = q_value(kind, i, t, x);
      check_coefficient(q, kind, i, t);
      den.add(q);
    });
    return num.result() / (sign * den.result());
  });
}

}  // namespace barystable
