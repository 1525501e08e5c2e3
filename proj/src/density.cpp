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

#include "antiniven/density.hpp"

#include "antiniven/digits.hpp"
#include "antiniven/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace antiniven {

namespace {

constexpr double kPiSquared = 9.869604401089358618834490999876151135;

// Counts anti-Niven n in [first, last] for each of the sorted checkpoints
// inside the interval; returns cumulative counts at those checkpoints.
std::vector<std::uint64_t> count_interval(Base b, std::uint64_t first, std::uint64_t last,
                                          const std::vector<std::uint64_t>& checkpoints) {
  std::vector<std::uint64_t> out;
  auto cp = std::lower_bound(checkpoints.begin(), checkpoints.end(), first);
  DigitOdometer odo(first, 1, b);
  std::uint64_t count = 0;
  for (std::uint64_t n = first;; ++n) {
    if (anti_niven_given_sum(n, odo.digit_sum())) ++count;
    while (cp != checkpoints.end() && *cp == n) {
      out.push_back(count);
      ++cp;
    }
    if (n == last) break;
    odo.advance();
  }
  return out;
}

// Splits [1, limit] into disjoint intervals, counts each in parallel and
// returns the cumulative count at each checkpoint (checkpoints sorted,
// last one equal to limit).
std::vector<std::uint64_t> parallel_counts(Base b, std::uint64_t limit, std::vector<std::uint64_t> checkpoints,
                                           unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t parts = std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, limit / 65536));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> bounds;
  for (std::uint64_t i = 0; i < parts; ++i) {
    bounds.emplace_back(1 + limit / parts * i, i + 1 == parts ? limit : limit / parts * (i + 1));
  }
  std::vector<std::vector<std::uint64_t>> partial(parts);
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t i = 0; i < parts; ++i) {
      // Each interval also reports its own end so totals can be chained.
      std::vector<std::uint64_t> local;
      for (std::uint64_t c : checkpoints) {
        if (c >= bounds[i].first && c <= bounds[i].second) local.push_back(c);
      }
      local.push_back(bounds[i].second);
      pool.emplace_back([&, i, local = std::move(local)] {
        partial[i] = count_interval(b, bounds[i].first, bounds[i].second, local);
      });
    }
  }
  std::vector<std::uint64_t> out;
  std::uint64_t carried = 0;
  for (std::uint64_t i = 0; i < parts; ++i) {
    const auto& local = partial[i];
    for (std::size_t k = 0; k + 1 < local.size(); ++k) out.push_back(carried + local[k]);
    carried += local.back();
  }
  return out;
}

}  // namespace

DensityFactor closed_form_factor(Base b) {
  DensityFactor f;
  std::uint64_t rest = b.value() - 1;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    f.primes.push_back(p);
  }
  if (rest > 1) f.primes.push_back(rest);
  for (std::uint64_t p : f.primes) {
    f.numerator *= Nat(p);
    f.denominator *= Nat(p + 1);
  }
  return f;
}

double closed_form_density(Base b) {
  double product = 1.0;
  for (std::uint64_t p : closed_form_factor(b).primes) product *= static_cast<double>(p) / static_cast<double>(p + 1);
  return 6.0 / kPiSquared * product;
}

DensityReport empirical_density(Base b, const Nat& limit, const DensityOptions& options) {
  if (limit.is_zero()) throw DomainError("density limit must be at least 1");
  DensityReport r;
  r.base = b;
  r.sample_limit = limit;
  r.factor = closed_form_factor(b);
  r.closed_form = closed_form_density(b);

  if (limit <= Nat(options.exhaustive_limit)) {
    const std::uint64_t lim = limit.to_u64();
    r.method = DensityMethod::kExhaustive;
    r.count = parallel_counts(b, lim, {lim}, options.threads).back();
    r.samples = lim;
    r.empirical = static_cast<double>(r.count) / static_cast<double>(lim);
  } else {
    if (options.samples == 0) throw DomainError("Monte Carlo density needs at least one sample");
    r.method = DensityMethod::kMonteCarlo;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(static_cast<unsigned long>(options.seed));
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      const Nat n(mpz_class(rng.get_z_range(limit.mpz())) + 1);
      if (is_anti_niven(n, b)) ++r.count;
    }
    r.samples = options.samples;
    r.empirical = static_cast<double>(r.count) / static_cast<double>(r.samples);
    r.std_error = std::sqrt(r.empirical * (1.0 - r.empirical) / static_cast<double>(r.samples));
  }
  r.abs_diff = std::fabs(r.empirical - r.closed_form);
  return r;
}

std::vector<ConvergenceRow> density_convergence(Base b, std::uint64_t limit, unsigned threads) {
  if (limit == 0) throw DomainError("density limit must be at least 1");
  std::vector<std::uint64_t> checkpoints;
  for (std::uint64_t c = 10; c < limit; c *= 10) {
    checkpoints.push_back(c);
    if (c > UINT64_MAX / 10) break;
  }
  checkpoints.push_back(limit);
  const auto counts = parallel_counts(b, limit, checkpoints, threads);
  const double closed = closed_form_density(b);
  std::vector<ConvergenceRow> rows;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    const double emp = static_cast<double>(counts[i]) / static_cast<double>(checkpoints[i]);
    rows.push_back({checkpoints[i], counts[i], emp, closed, std::fabs(emp - closed)});
  }
  return rows;
}

}  // namespace antiniven
