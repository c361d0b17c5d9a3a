// Copyright 2026 The opseq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPSEQ_ERRORS_HPP
#define OPSEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opseq {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in spaces of inconsistent dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A combinatorial enumeration would exceed the configured term cap.
// Signals blow-up of the symbolic path, not a mathematical failure.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Pivot collapsed during elimination; the matrix is singular to working
// precision.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// Operator square root is unavailable (non-diagonalizable or singular
// input, or ill-conditioned eigenbasis). Callers should fall back to the
// general recurrence path.
class SqrtUnavailableError : public Error {
 public:
  using Error::Error;
};

// The coefficient pair does not commute, so the Chebyshev reduction does
// not apply. Carries the measured commutator norm.
class NotCommutingError : public Error {
 public:
  NotCommutingError(const std::string& what, double commutator_norm)
      : Error(what), commutator_norm_(commutator_norm) {}
  double commutator_norm() const { return commutator_norm_; }

 private:
  double commutator_norm_ = 0.0;
};

// An input that must square to zero does not.
class NotNilpotentError : public Error {
 public:
  using Error::Error;
};

// A polynomial operation would exceed the configured degree cap.
class DegreeCapError : public Error {
 public:
  using Error::Error;
};

// Problem file is unreadable, malformed, or fails schema validation.
class ProblemFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace opseq

#endif  // OPSEQ_ERRORS_HPP
