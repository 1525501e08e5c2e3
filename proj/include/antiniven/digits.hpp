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

#include "antiniven/nat.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

namespace antiniven {

// Base-b digits, least significant first. Zero is the empty vector.
struct DigitVec {
  std::vector<std::uint32_t> digits;
  Base base{10};

  friend bool operator==(const DigitVec&, const DigitVec&) = default;
};

DigitVec to_digits(const Nat& n, Base b);
// Throws InvalidDigitError for a digit >= b. Trailing (most significant)
// zeros are tolerated on input.
Nat from_digits(const DigitVec& dv);

// s_b(n). Streams over the digits without building a DigitVec.
Nat digit_sum(const Nat& n, Base b);
std::uint64_t digit_sum(std::uint64_t n, Base b);

// gcd(s_b(n), n) == 1. n must be positive.
bool is_anti_niven(const Nat& n, Base b);
bool is_anti_niven(std::uint64_t n, Base b);
// s_b(n) divides n. n must be positive.
bool is_niven(const Nat& n, Base b);
bool is_niven(std::uint64_t n, Base b);

// Fast predicates for callers that already hold the digit sum.
inline bool anti_niven_given_sum(std::uint64_t n, std::uint64_t s) {
  return std::gcd(n % s, s) == 1;
}
inline bool niven_given_sum(std::uint64_t n, std::uint64_t s) { return n % s == 0; }

// Base-b counter that keeps s_b(value) current while stepping by a fixed
// increment. Adding `step` costs O(digits of step + carries), so walking
// consecutive integers is amortized O(1) per term.
class DigitOdometer {
 public:
  DigitOdometer(std::uint64_t start, std::uint64_t step, Base b);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t digit_sum() const noexcept { return sum_; }
  void advance();

 private:
  std::uint64_t value_;
  std::uint64_t sum_ = 0;
  std::uint64_t step_;
  std::uint32_t base_;
  std::vector<std::uint32_t> digits_;
  std::vector<std::uint32_t> step_digits_;
};

}  // namespace antiniven
