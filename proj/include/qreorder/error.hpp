// Copyright 2026 The qreorder Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qreorder {

/// Bad input: malformed files, out-of-range indices, calibration gaps.
/// The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in an OpenQASM program, with 1-based position.
class ParseError : public InputError {
 public:
  ParseError(const std::string &msg, std::size_t line, std::size_t column)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnsupportedGateError : public ParseError {
 public:
  UnsupportedGateError(const std::string &gate, std::size_t line, std::size_t column)
      : ParseError("unsupported gate '" + gate + "'", line, column), gate_(gate) {}

  const std::string &gate() const { return gate_; }

 private:
  std::string gate_;
};

class RegisterRangeError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Calibration document problems (missing field, bad rate, duplicates).
class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

/// A circuit references a qubit or qubit pair that the calibration lacks.
class CoverageError : public InputError {
 public:
  using InputError::InputError;
};

/// Exhaustive enumeration found more schedules than allowed.
class LimitExceededError : public InputError {
 public:
  LimitExceededError(std::size_t limit, std::size_t found)
      : InputError("schedule limit " + std::to_string(limit) + " exceeded (found " + std::to_string(found) +
                   " so far)"),
        found_(found) {}

  std::size_t found() const { return found_; }

 private:
  std::size_t found_;
};

/// A post-condition the library guarantees did not hold. CLI exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qreorder
