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

#include "cohpower/errors.hpp"

#include <sstream>

namespace cohpower {

namespace {

std::string format_invariant(const std::string& invariant, double residual,
                             double tolerance) {
  std::ostringstream os;
  os << "invariant violation: " << invariant << " (residual " << residual
     << " exceeds tolerance " << tolerance << ")";
  return os.str();
}

std::string format_parse(const std::string& message, std::size_t line,
                         std::size_t column) {
  std::ostringstream os;
  os << "parse error at line " << line;
  if (column > 0) os << ", column " << column;
  os << ": " << message;
  return os.str();
}

}  // namespace

InvariantViolation::InvariantViolation(const std::string& invariant,
                                       double residual, double tolerance)
    : Error(format_invariant(invariant, residual, tolerance)),
      invariant_(invariant),
      residual_(residual),
      tolerance_(tolerance) {}

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : Error(format_parse(message, line, column)), line_(line), column_(column) {}

}  // namespace cohpower
