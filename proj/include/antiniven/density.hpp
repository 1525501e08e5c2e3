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
#include <optional>
#include <vector>

namespace antiniven {

// prod_{p | b-1} p / (p + 1) as an exact fraction; the closed-form density
// is 6/pi^2 times this.
struct DensityFactor {
  Nat numerator{1};
  Nat denominator{1};
  std::vector<std::uint64_t> primes;
};

DensityFactor closed_form_factor(Base b);
double closed_form_density(Base b);

enum class DensityMethod { kExhaustive, kMonteCarlo };

struct DensityOptions {
  unsigned threads = 0;
  // Limits above this are sampled instead of counted.
  std::uint64_t exhaustive_limit = 1'000'000'000;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0x5eed;
};

struct DensityReport {
  Base base{10};
  Nat sample_limit;
  DensityMethod method = DensityMethod::kExhaustive;
  // Exhaustive: anti-Niven n in [1, limit]. Monte Carlo: hits among samples.
  std::uint64_t count = 0;
  std::uint64_t samples = 0;
  double empirical = 0;
  std::optional<double> std_error;
  double closed_form = 0;
  double abs_diff = 0;
  DensityFactor factor;
};

DensityReport empirical_density(Base b, const Nat& limit, const DensityOptions& options = {});

struct ConvergenceRow {
  std::uint64_t limit;
  std::uint64_t count;
  double empirical;
  double closed_form;
  double abs_diff;
};

// Rows at 10, 100, ... below limit, then limit itself, from one pass.
std::vector<ConvergenceRow> density_convergence(Base b, std::uint64_t limit, unsigned threads = 0);

}  // namespace antiniven
