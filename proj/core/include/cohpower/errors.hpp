// Copyright 2026 The cohpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COHPOWER_ERRORS_HPP
#define COHPOWER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cohpower {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor input failed one of the documented type invariants
/// (Hermiticity, unit trace, positive semidefiniteness, unitarity, norm).
/// Carries the invariant name and the measured residual so callers can
/// report exactly what was violated and by how much.
class InvariantViolation : public Error {
 public:
  InvariantViolation(const std::string& invariant, double residual,
                     double tolerance);

  const std::string& invariant() const { return invariant_; }
  double residual() const { return residual_; }
  double tolerance() const { return tolerance_; }

 private:
  std::string invariant_;
  double residual_;
  double tolerance_;
};

/// Two objects with incompatible dimensions were combined.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A text input (matrix file, CLI argument) could not be parsed.
/// Line and column are 1-based; column 0 means "whole line".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cohpower

#endif  // COHPOWER_ERRORS_HPP
