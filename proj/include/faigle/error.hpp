// Copyright 2026 The Authors.
//
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace faigle {

/// Base class of every error thrown by the library.
///
/// `kind()` is a stable machine-readable name (used by the CLI's JSON error
/// reports); `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

  /// Domain errors are bad inputs. Invariant violations are reports that a
  /// theorem-backed assertion failed, i.e. an implementation bug.
  virtual bool is_invariant_violation() const noexcept { return false; }

 private:
  std::string kind_;
};

#define FAIGLE_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

FAIGLE_DEFINE_ERROR(IndexOutOfRange)
FAIGLE_DEFINE_ERROR(CapacityExceeded)
FAIGLE_DEFINE_ERROR(NotAPoset)
FAIGLE_DEFINE_ERROR(NotALattice)
FAIGLE_DEFINE_ERROR(NotSemimodular)
FAIGLE_DEFINE_ERROR(NotSlim)
FAIGLE_DEFINE_ERROR(IsAChain)
FAIGLE_DEFINE_ERROR(TooSmall)
FAIGLE_DEFINE_ERROR(NotASublattice)
FAIGLE_DEFINE_ERROR(GroundNotInFamily)
FAIGLE_DEFINE_ERROR(NotVerifiedGeometry)
FAIGLE_DEFINE_ERROR(PreconditionFailed)
FAIGLE_DEFINE_ERROR(BoundExceeded)

#undef FAIGLE_DEFINE_ERROR

/// Raised when a fact guaranteed by a theorem does not hold on an instance.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& message)
      : Error("InvariantViolation", message) {}
  bool is_invariant_violation() const noexcept override { return true; }
};

/// Input text could not be parsed. `line()` is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("ParseError",
              line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation(what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) throw PreconditionFailed(what);
}

}  // namespace detail

}  // namespace faigle
