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
#include "antiniven/theorems.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace antiniven {

// start, start + step, ..., start + (length - 1) * step.
struct APSpec {
  Nat start;
  Nat step;
  std::uint64_t length = 0;

  Nat term(std::uint64_t j) const { return start + step * Nat(j); }
  Nat last() const { return term(length == 0 ? 0 : length - 1); }
  friend bool operator==(const APSpec&, const APSpec&) = default;
};

enum class TermPredicate { kAntiNiven, kNiven };

struct ScanOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  std::size_t witness_cap = 32;
  TermPredicate predicate = TermPredicate::kAntiNiven;
  // When set, witnesses are all maximal runs at least this long instead of
  // the runs achieving the maximum.
  std::optional<std::uint64_t> min_witness_length;
};

struct ScanReport {
  Base base{10};
  Nat step;
  Nat lo;
  Nat hi;
  TermPredicate predicate = TermPredicate::kAntiNiven;
  std::optional<std::uint64_t> min_witness_length;
  std::uint64_t max_length = 0;
  // Sorted by (length desc, start asc), truncated to the witness cap.
  std::vector<APSpec> witnesses;
  // Number of qualifying runs before truncation.
  std::uint64_t witness_count = 0;
  std::uint64_t terms_scanned = 0;
  // Terms satisfying the predicate (anti-Niven unless predicate is kNiven).
  std::uint64_t anti_niven_count = 0;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

// Exact longest run of predicate-satisfying terms of any d-AP inside
// [lo, hi]. Each residue class mod d is an independent chain; chains are
// distributed over worker threads and merged deterministically.
ScanReport max_run_in_range(Base b, const Nat& d, const Nat& lo, const Nat& hi,
                            const ScanOptions& options = {});

// Smallest j with n + j d anti-Niven, or nullopt when gcd(n, d, b - 1) > 1
// (then no term qualifies). Throws BudgetError if `step_cap` steps pass
// without a hit while the gcd criterion guarantees one.
std::optional<Nat> contains_anti_niven(const Nat& n, const Nat& d, Base b,
                                       std::optional<std::uint64_t> step_cap = std::nullopt);

// Smallest j with n + j d not anti-Niven. No infinite anti-Niven d-AP
// exists, so this terminates; the 10^9 step guard throws InternalError.
Nat first_failure(const Nat& n, const Nat& d, Base b);

enum class BoundKind { kExact, kUpper, kLower, kInapplicable };

struct BoundResult {
  BoundKind kind = BoundKind::kInapplicable;
  std::optional<Nat> value;
  std::optional<Theorem> source;
  std::string conditions;

  friend bool operator==(const BoundResult&, const BoundResult&) = default;
};

// Every applicable bound, in a fixed theorem order.
std::vector<BoundResult> upper_bound_candidates(Base b, const Nat& d);
std::vector<BoundResult> lower_bound_candidates(Base b, const Nat& d);

// Minimum over every applicable upper bound; an exact result wins ties.
BoundResult theoretical_upper_bound(Base b, const Nat& d);
// Maximum over the constructive lower bounds.
BoundResult known_lower_bound(Base b, const Nat& d);

// Open problems the explorer can search. Neither is ever decided.
enum class Conjecture {
  kOddBaseEvenStep,   // "4.3": odd b != 2^r+1, even d, target p - 1
  kParityBoundSharp,  // "4.4": even b >= 6, odd 3 <= d <= b/2, target ceil(2b/d) + 2
};

std::string_view token(Conjecture c);
std::optional<Conjecture> parse_conjecture(std::string_view token);

struct ConjectureReport {
  Conjecture id = Conjecture::kOddBaseEvenStep;
  std::uint64_t target_length = 0;
  bool witness_found = false;
  ScanReport scan;
  std::string note;

  friend bool operator==(const ConjectureReport&, const ConjectureReport&) = default;
};

struct ExploreOptions {
  unsigned threads = 0;
  std::size_t witness_cap = 32;
  // For the parity conjecture: search b-Niven progressions, as the
  // statement literally reads, instead of anti-Niven ones.
  bool literal_niven = false;
};

// Searches [1, hi] for d-APs of the conjectured length. Throws DomainError
// naming the failed hypothesis.
ConjectureReport explore_conjecture(Conjecture id, Base b, const Nat& d, const Nat& hi,
                                    const ExploreOptions& options = {});

}  // namespace antiniven
