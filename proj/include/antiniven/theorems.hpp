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

#include <optional>
#include <string_view>

namespace antiniven {

// Results that produce a bound or a witness. Tokens are the stable
// identifiers used on the command line and in every report.
enum class Theorem {
  kMemberOfProgression,     // "thm2.2": an infinite d-AP meets an anti-Niven number
  kArbitraryLength,         // "thm2.4": runs of every length exist
  kPrimeBound,              // "thm2.5": length <= p - 1
  kConsecutiveRun,          // "thm3.2": d = 1, exact p - 1
  kStepTwo,                 // "thm3.3": d = 2, exact p - 1
  kParityBound,             // "thm3.4": even b, small odd d
  kBaseMinusOneEven,        // "thm3.5": even b, d = b - 1, exact 2b + 1
  kStepTwoFermatBase,       // "thm4.1": b = 2^r + 1, d = 2, at least b
  kBaseMinusOneOddPrime,    // "thm4.2": odd prime b, d = b - 1, at least 2b + 1
};

std::string_view token(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view token);

}  // namespace antiniven
