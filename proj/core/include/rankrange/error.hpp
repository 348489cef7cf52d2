// Copyright 2026 The rankrange Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RANKRANGE_ERROR_HPP_
#define RANKRANGE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankrange {

/// Base class of every error thrown by the library. `kind()` is a stable
/// machine-readable tag used by the CLI error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Shapes or dimensions do not fit together.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error("dimension", what) {}
};

/// An input violates a numerical precondition (e.g. a matrix that should be an
/// isometry is not). `measure()` is the offending quantity.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, double measure)
      : Error("precondition", what), measure_(measure) {}
  double measure() const noexcept { return measure_; }

 private:
  double measure_;
};

/// An iterative method failed to reach its tolerance.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, double residual)
      : Error("numerical_failure", what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A subspace construction came out smaller than the theory promises, after
/// the numerical rank decision.
class DegeneracyError : public Error {
 public:
  DegeneracyError(const std::string& what, std::size_t achieved, std::size_t required)
      : Error("degeneracy", what), achieved_(achieved), required_(required) {}
  std::size_t achieved() const noexcept { return achieved_; }
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t achieved_;
  std::size_t required_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

/// Dimension bound of the constructive existence theorem not met.
class BoundError : public Error {
 public:
  explicit BoundError(const std::string& what) : Error("bound", what) {}
};

/// Refused because the combinatorial search would be too large.
class ComplexityError : public Error {
 public:
  explicit ComplexityError(const std::string& what) : Error("complexity", what) {}
};

}  // namespace rankrange

#endif  // RANKRANGE_ERROR_HPP_
