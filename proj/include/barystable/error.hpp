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

#include <stdexcept>
#include <string>

namespace barystable {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (t outside [-1, 1],
/// NaN input, degree out of range, duplicate nodes, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A result cannot be represented as a finite binary64 number without
/// rounding (overflow, underflow to zero, subnormal loss of bits).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The inputs are well-formed but violate a documented precondition, e.g. a
/// user-supplied node set that fails the exact-sum verification.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A numeric invariant that the algorithms guarantee has been observed to
/// fail. Seeing one of these means a bug or broken floating-point semantics.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The evaluation itself failed, e.g. a denominator that evaluated to zero.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Misconfiguration such as asking for a reference precision below the
/// minimum the algorithms need.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// File input/output failure; the message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace barystable
