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

#include "antiniven/errors.hpp"
#include "antiniven/nat.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace antiniven {

// All primes <= limit, increasing.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Deterministic Miller-Rabin below 2^64.
bool is_prime_u64(std::uint64_t n);
// Deterministic below 2^64; a strong probable-prime test (GMP's BPSW plus
// Miller-Rabin rounds) above.
bool is_probable_prime(const Nat& n);

struct FactorMultiset {
  // Strictly increasing primes.
  std::vector<std::pair<Nat, std::uint32_t>> factors;

  Nat product() const;
  std::vector<Nat> primes() const;
  friend bool operator==(const FactorMultiset&, const FactorMultiset&) = default;
};

// Rho ran out of iterations. `partial` holds the primes found so far and
// `unfactored` the composite cofactor that resisted.
class FactorizationIncomplete : public BudgetError {
 public:
  FactorizationIncomplete(FactorMultiset partial, Nat unfactored)
      : BudgetError("factorization incomplete: cofactor " + unfactored.to_string() +
                    " not split within budget"),
        partial_(std::move(partial)),
        unfactored_(std::move(unfactored)) {}

  const FactorMultiset& partial() const noexcept { return partial_; }
  const Nat& unfactored() const noexcept { return unfactored_; }

 private:
  FactorMultiset partial_;
  Nat unfactored_;
};

struct FactorBudget {
  std::uint64_t rho_iterations = 100'000'000;
  std::uint64_t trial_limit = 1'000'000;
};

// Trial division up to budget.trial_limit, then Brent's variant of
// Pollard rho on the cofactor. Throws FactorizationIncomplete (carrying the
// partial factorization) when the rho iterations run out.
FactorMultiset factorize(const Nat& n, const FactorBudget& budget = {});

Nat euler_phi(const Nat& n, const FactorBudget& budget = {});

// Smallest prime p with p | (b - 1) and p not dividing d. Empty when every
// prime factor of b - 1 divides d, which includes b = 2.
std::optional<std::uint64_t> smallest_qualifying_prime(Base b, const Nat& d);

// Multiplicative order of a modulo the prime q; a must not be divisible by q.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q);

// True when b = 2^r + 1 for some r >= 0.
bool is_power_of_two_plus_one(Base b);

}  // namespace antiniven
