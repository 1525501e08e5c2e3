// Copyright 2026 The antiniven Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace antiniven {

// Root of every error the library throws. The C API maps each subclass onto
// one status code, so new subclasses need a matching entry there.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition or hypothesis does not hold for the arguments.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (integers, bases, identifiers).
class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidDigitError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A value would exceed the configured bit-length cap.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, double estimated_bits, std::uint64_t cap_bits)
      : Error(what), estimated_bits_(estimated_bits), cap_bits_(cap_bits) {}

  double estimated_bits() const noexcept { return estimated_bits_; }
  std::uint64_t cap_bits() const noexcept { return cap_bits_; }

 private:
  double estimated_bits_;
  std::uint64_t cap_bits_;
};

// A search ran out of its step or iteration budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class CancelledError : public Error {
 public:
  CancelledError() : Error("operation cancelled") {}
};

// A constructed object failed its own post-verification, or a safety guard
// tripped. Always a bug or a violated mathematical guarantee.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace antiniven
