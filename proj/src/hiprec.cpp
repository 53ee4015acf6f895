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

#include "barystable/hiprec.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <vector>

#include "barystable/error.hpp"
#include "barystable/fp_scaled.hpp"

namespace barystable {
namespace {

std::atomic<int> g_default_bits{HiPrec::kMinReferenceBits};

// MPFR's exponent range is per thread; widen it once per thread so products
// of up to 10^9 factors stay representable.
void widen_exponent_range() {
  thread_local bool done = false;
  if (!done) {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    done = true;
  }
}

int checked_bits(int bits) {
  if (bits < 53 || bits > 1 << 20) {
    throw ConfigurationError("oracle precision must be between 53 and 2^20 bits, got " +
                             std::to_string(bits));
  }
  return bits;
}

}  // namespace

int HiPrec::default_bits() { return g_default_bits.load(std::memory_order_relaxed); }

void HiPrec::set_default_bits(int bits) {
  g_default_bits.store(checked_bits(bits), std::memory_order_relaxed);
}

HiPrec::HiPrec(int bits) {
  widen_exponent_range();
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_zero(value_, 1);
}

HiPrec::HiPrec(double value, int bits) : HiPrec(bits) { mpfr_set_d(value_, value, MPFR_RNDN); }

HiPrec HiPrec::from_integer(std::int64_t value, int bits) {
  HiPrec r(bits);
  mpfr_set_si(r.value_, static_cast<long>(value), MPFR_RNDN);
  return r;
}

HiPrec HiPrec::pi(int bits) {
  HiPrec r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

HiPrec::HiPrec(const HiPrec& other) {
  widen_exponent_range();
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

HiPrec::HiPrec(HiPrec&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

HiPrec& HiPrec::operator=(const HiPrec& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

HiPrec& HiPrec::operator=(HiPrec&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

HiPrec& HiPrec::operator=(double value) {
  mpfr_set_d(value_, value, MPFR_RNDN);
  return *this;
}

HiPrec::~HiPrec() { mpfr_clear(value_); }

void HiPrec::widen_to(int bits) {
  if (bits > this->bits()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

ScaledValue HiPrec::to_scaled() const {
  if (is_zero()) return ScaledValue{};
  if (!is_finite()) throw RangeError("non-finite high-precision value");
  long exp = 0;
  double significand = mpfr_get_d_2exp(&exp, value_, MPFR_RNDN);
  // Rounding the significand can carry it to 1.0.
  return ScaledValue::normalized(significand, exp);
}

HiPrec& HiPrec::operator+=(const HiPrec& rhs) {
  widen_to(rhs.bits());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HiPrec& HiPrec::operator-=(const HiPrec& rhs) {
  widen_to(rhs.bits());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HiPrec& HiPrec::operator*=(const HiPrec& rhs) {
  widen_to(rhs.bits());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HiPrec& HiPrec::operator/=(const HiPrec& rhs) {
  widen_to(rhs.bits());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HiPrec& HiPrec::operator+=(double rhs) {
  mpfr_add_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

HiPrec& HiPrec::operator-=(double rhs) {
  mpfr_sub_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

HiPrec& HiPrec::operator*=(double rhs) {
  mpfr_mul_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

HiPrec& HiPrec::operator/=(double rhs) {
  mpfr_div_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

HiPrec& HiPrec::scale_by_power_of_two(std::int64_t k) {
  mpfr_mul_2si(value_, value_, static_cast<long>(k), MPFR_RNDN);
  return *this;
}

void HiPrec::assign_difference(const HiPrec& a, const HiPrec& b) {
  mpfr_sub(value_, a.value_, b.value_, MPFR_RNDN);
}

void HiPrec::assign_difference(const HiPrec& a, double b) {
  mpfr_sub_d(value_, a.value_, b, MPFR_RNDN);
}

void HiPrec::assign_quotient(double numerator, const HiPrec& denominator) {
  mpfr_d_div(value_, numerator, denominator.value_, MPFR_RNDN);
}

HiPrec HiPrec::operator-() const {
  HiPrec r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const HiPrec& a, const HiPrec& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const HiPrec& a, double b) {
  if (mpfr_nan_p(a.value_) || std::isnan(b)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_d(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

HiPrec abs(HiPrec x) {
  mpfr_abs(x.value_, x.value_, MPFR_RNDN);
  return x;
}

HiPrec sin(const HiPrec& x) {
  HiPrec r(x.bits());
  mpfr_sin(r.value_, x.value_, MPFR_RNDN);
  return r;
}

HiPrec cos(const HiPrec& x) {
  HiPrec r(x.bits());
  mpfr_cos(r.value_, x.value_, MPFR_RNDN);
  return r;
}

HiPrec sqrt(const HiPrec& x) {
  HiPrec r(x.bits());
  mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
  return r;
}

std::string HiPrec::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", std::max(digits - 1, 0), value_);
  return std::string(buf.data());
}

}  // namespace barystable
