// Copyright 2026 The qecengine Authors
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

#ifndef QECENGINE_ERRORS_HPP
#define QECENGINE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qec {

/// Base class of every error raised by the library.
class QecError : public std::runtime_error {
 public:
  explicit QecError(const std::string& what) : std::runtime_error(what) {}
};

class NonHermitianInput : public QecError {
 public:
  explicit NonHermitianInput(double asymmetry)
      : QecError("matrix is not Hermitian: max |M - M^dagger| = " + std::to_string(asymmetry)),
        max_asymmetry(asymmetry) {}
  double max_asymmetry;
};

class DomainError : public QecError {
 public:
  using QecError::QecError;
};

class UnknownLabel : public QecError {
 public:
  explicit UnknownLabel(const std::string& label)
      : QecError("unknown subsystem label '" + label + "'"), label(label) {}
  std::string label;
};

class InvalidPermutation : public QecError {
 public:
  using QecError::QecError;
};

class InvalidSpace : public QecError {
 public:
  using QecError::QecError;
};

class DimensionMismatch : public QecError {
 public:
  using QecError::QecError;
};

class NotNormalized : public QecError {
 public:
  using QecError::QecError;
};

class NotPSD : public QecError {
 public:
  using QecError::QecError;
};

class InvalidState : public QecError {
 public:
  using QecError::QecError;
};

class OutOfRange : public QecError {
 public:
  using QecError::QecError;
};

class InvalidChannel : public QecError {
 public:
  using QecError::QecError;
};

class InvalidProbability : public QecError {
 public:
  using QecError::QecError;
};

class NotProjective : public QecError {
 public:
  using QecError::QecError;
};

class ApparatusNotThermal : public QecError {
 public:
  using QecError::QecError;
};

/// A theorem was evaluated outside its hypotheses.
class HypothesisViolated : public QecError {
 public:
  HypothesisViolated(const std::string& what, int index = 0) : QecError(what), index(index) {}
  int index;
};

class DegenerateInput : public QecError {
 public:
  using QecError::QecError;
};

class ParseError : public QecError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : QecError(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

class ValidationError : public QecError {
 public:
  ValidationError(const std::string& field, const std::string& constraint)
      : QecError("invalid field '" + field + "': " + constraint), field(field), constraint(constraint) {}
  std::string field;
  std::string constraint;
};

}  // namespace qec

#endif  // QECENGINE_ERRORS_HPP
