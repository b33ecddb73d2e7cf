// Copyright 2026 The parsigames Authors
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

#ifndef PARSIGAMES_ERRORS_HPP
#define PARSIGAMES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace parsigames {

/// Bad input: an argument outside the domain of an operation.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A representation violates the constraints of its type.
class MalformedRepresentation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A brute-force routine was asked to go past its configured size cap.
class CapacityError : public DomainError {
 public:
  CapacityError(const std::string& what, int cap)
      : DomainError(what + " (cap = " + std::to_string(cap) + ")"), cap_(cap) {}

  int cap() const noexcept { return cap_; }

 private:
  int cap_;
};

/// An operation that needs an odd-length free type vector got an even one.
class ParityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An internal consistency check failed. Always a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A breeding rule was applied to a node it does not apply to.
class StructuralError : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace parsigames

#endif  // PARSIGAMES_ERRORS_HPP
