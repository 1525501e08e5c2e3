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

#include "antiniven/ap_analysis.hpp"
#include "antiniven/nat.hpp"
#include "antiniven/primes.hpp"
#include "antiniven/theorems.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stop_token>
#include <vector>

namespace antiniven {

inline constexpr std::uint64_t kDefaultBitCap = std::uint64_t{1} << 26;

// How find_exponent picks among the infinitely many valid exponents.
//   kTotient:      m = k * phi(Q) + 1
//   kMinimalOrder: m = k * lcm(ord_q(b)) + 1
// where Q is the product of the listed primes not dividing b. When Q = 1
// every m >= 1 works and both rules return m = k.
enum class ExponentRule { kTotient, kMinimalOrder };

// m with b^m = b (mod q) for every listed prime q.
struct ExponentWitness {
  Nat m;
  std::vector<std::uint64_t> moduli;
  std::uint64_t k = 1;
  ExponentRule rule = ExponentRule::kTotient;
  Nat period{1};
};

ExponentWitness find_exponent(Base b, std::span<const std::uint64_t> primes, std::uint64_t k,
                              ExponentRule rule = ExponentRule::kTotient);

enum class CaseTag { kParityOdd, kParityEven, kBaseEven, kBaseOdd };

std::string_view token(CaseTag c);
std::optional<CaseTag> parse_case_tag(std::string_view token);

// Intermediate quantities of a construction. Only the fields the
// generating result uses are populated.
struct ConstructionTrace {
  Theorem theorem = Theorem::kArbitraryLength;
  std::optional<Nat> m;
  // Which member of an infinite family was requested.
  std::optional<std::uint64_t> selector;
  std::vector<std::uint64_t> exponent_moduli;
  std::optional<Nat> prime_p;
  std::optional<Nat> dbar;
  // Number of d-bar blocks stacked above n (member construction).
  std::optional<std::uint64_t> blocks;
  std::optional<Nat> j;
  std::optional<Nat> j_prime;
  std::optional<Nat> big_p;
  std::vector<Nat> q_list;
  std::vector<std::uint64_t> r_list;
  std::optional<Nat> c;
  std::optional<CaseTag> case_tag;

  friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

// Term indices (0-based) sharing one expected digit sum.
struct DigitSumGroup {
  std::vector<std::uint64_t> indices;
  Nat digit_sum;

  friend bool operator==(const DigitSumGroup&, const DigitSumGroup&) = default;
};

struct ConstructedAP {
  APSpec spec;
  Base base{10};
  std::vector<DigitSumGroup> expected_digit_sums;
  ConstructionTrace trace;

  friend bool operator==(const ConstructedAP&, const ConstructedAP&) = default;
};

struct TermAudit {
  Nat term;
  Nat digit_sum;
  Nat gcd;
  Nat expected_digit_sum;
  bool ok = false;
};

// Per-term rows for an audit listing.
std::vector<TermAudit> audit(const ConstructedAP& ap);
// Throws InternalError unless every term is anti-Niven and matches its
// expected digit sum, and the groups cover every index exactly once.
void verify(const ConstructedAP& ap);

struct ConstructOptions {
  std::uint64_t bit_cap = kDefaultBitCap;
  // Search caps for the member construction.
  std::uint64_t multiple_cap = 1'000'000;
  std::uint64_t k_cap = 1'000'000;
  FactorBudget factor_budget;
  std::stop_token stop;
};

// d = b(b^m - 1)(m(b-1) + 1) with the smallest m such that
// b^m >= t(m(b-1) + 1); the run starts at d + 1.
ConstructedAP construct_arbitrary_length(Base b, std::uint64_t t, const ConstructOptions& options = {});

// b^m, b^m + 1, ..., b^m + p - 2 for the smallest prime p | b - 1.
ConstructedAP construct_consecutive_run(Base b, std::uint64_t k = 1, const ConstructOptions& options = {});

// Step-2 run of length p - 1, p the smallest odd prime dividing b - 1.
ConstructedAP construct_2ap(Base b, std::uint64_t k = 1, const ConstructOptions& options = {});

// Step b - 1 run of length 2b + 1 for even b, built from
// c = sum_i b^{r_i} (b^m + 1). The size of c is estimated before anything
// large is allocated.
ConstructedAP construct_b_minus_1_ap_even(Base b, std::uint64_t k = 1, const ConstructOptions& options = {});

// Step-2 run of length b for b = 2^r + 1.
ConstructedAP construct_2ap_fermat(Base b);

// 1, b, 2b - 1, ..., b^2 + (b-1)^2: step b - 1, length 2b + 1, b an odd prime.
ConstructedAP construct_b_minus_1_ap_odd_prime(Base b);

struct ApMember {
  Nat n;
  Nat d;
  Base base{10};
  Nat value;
  // value = n + index * d
  Nat index;
  ConstructionTrace trace;
};

// An explicit anti-Niven member of n, n + d, n + 2d, ... Requires
// gcd(n, d, b - 1) = 1.
ApMember construct_member_of_ap(const Nat& n, const Nat& d, Base b, const ConstructOptions& options = {});

}  // namespace antiniven
