// Copyright 2026 The matpart Authors
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

#include <stdexcept>
#include <string>

namespace matpart {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(what) {}
};

class InfeasibleInstanceError : public Error {
 public:
  explicit InfeasibleInstanceError(const std::string& what) : Error(what) {}
};

class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

/// Raised when an exchange step that must exist for a matroid cannot be
/// found; it signals that an oracle violates the matroid axioms.
class AxiomViolationError : public Error {
 public:
  explicit AxiomViolationError(const std::string& what) : Error(what) {}
};

/// JSON schema violation; `pointer` locates the offending node.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string pointer)
      : Error(what + " (at " + pointer + ")"), pointer_(std::move(pointer)) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace matpart
