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

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>

namespace barystable {

struct ScaledValue;

/// Software floating-point value with a configurable number of significand
/// bits (at least 106 by default), backed by MPFR. Every arithmetic
/// operation and sin/cos are correctly rounded to nearest at the working
/// precision. The exponent range is widened to the maximum MPFR allows, so
/// products of millions of factors neither overflow nor underflow.
///
/// The precision of a result is the larger of its operands' precisions;
/// binary64 operands count as exact.
class HiPrec {
 public:
  static constexpr int kMinReferenceBits = 106;

  HiPrec() : HiPrec(default_bits()) {}
  explicit HiPrec(int bits);
  /// Exact conversion (bits >= 53 is enforced).
  explicit HiPrec(double value, int bits = default_bits());
  static HiPrec from_integer(std::int64_t value, int bits = default_bits());
  static HiPrec pi(int bits = default_bits());

  HiPrec(const HiPrec& other);
  HiPrec(HiPrec&& other) noexcept;
  HiPrec& operator=(const HiPrec& other);
  HiPrec& operator=(HiPrec&& other) noexcept;
  HiPrec& operator=(double value);
  ~HiPrec();

  int bits() const { return static_cast<int>(mpfr_get_prec(value_)); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Rounds toward zero to 53 bits; exact truncation for normal-range values.
  double to_double_truncated() const { return mpfr_get_d(value_, MPFR_RNDZ); }
  /// Significand rounded to binary64 and the exact power-of-two exponent.
  ScaledValue to_scaled() const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Exponent e with value = m * 2^e, 0.5 <= |m| < 1. Undefined for zero.
  std::int64_t exponent() const { return mpfr_get_exp(value_); }

  HiPrec& operator+=(const HiPrec& rhs);
  HiPrec& operator-=(const HiPrec& rhs);
  HiPrec& operator*=(const HiPrec& rhs);
  HiPrec& operator/=(const HiPrec& rhs);
  HiPrec& operator+=(double rhs);
  HiPrec& operator-=(double rhs);
  HiPrec& operator*=(double rhs);
  HiPrec& operator/=(double rhs);
  /// Exact multiplication by 2^k.
  HiPrec& scale_by_power_of_two(std::int64_t k);

  /// this = a - b, rounded once at this value's precision.
  void assign_difference(const HiPrec& a, const HiPrec& b);
  void assign_difference(const HiPrec& a, double b);
  /// this = numerator / denominator, rounded once.
  void assign_quotient(double numerator, const HiPrec& denominator);

  HiPrec operator-() const;

  friend HiPrec operator+(HiPrec a, const HiPrec& b) { return a += b; }
  friend HiPrec operator-(HiPrec a, const HiPrec& b) { return a -= b; }
  friend HiPrec operator*(HiPrec a, const HiPrec& b) { return a *= b; }
  friend HiPrec operator/(HiPrec a, const HiPrec& b) { return a /= b; }
  friend HiPrec operator+(HiPrec a, double b) { return a += b; }
  friend HiPrec operator-(HiPrec a, double b) { return a -= b; }
  friend HiPrec operator*(HiPrec a, double b) { return a *= b; }
  friend HiPrec operator/(HiPrec a, double b) { return a /= b; }

  friend bool operator==(const HiPrec& a, const HiPrec& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const HiPrec& a, const HiPrec& b);
  friend bool operator==(const HiPrec& a, double b) { return mpfr_cmp_d(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const HiPrec& a, double b);

  friend HiPrec abs(HiPrec x);
  friend HiPrec sin(const HiPrec& x);
  friend HiPrec cos(const HiPrec& x);
  friend HiPrec sqrt(const HiPrec& x);

  /// Decimal scientific representation with the given number of digits.
  std::string to_string(int digits = 40) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  static int default_bits();
  /// Sets the process-wide default precision used by value-less constructors.
  static void set_default_bits(int bits);

 private:
  void widen_to(int bits);

  mpfr_t value_;
};

HiPrec abs(HiPrec x);
HiPrec sin(const HiPrec& x);
HiPrec cos(const HiPrec& x);
HiPrec sqrt(const HiPrec& x);

/// Changes the default oracle precision for the lifetime of the object.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(int bits) : saved_(HiPrec::default_bits()) {
    HiPrec::set_default_bits(bits);
  }
  ~ScopedPrecision() { HiPrec::set_default_bits(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  int saved_;
};

}  // namespace barystable
