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
#include "antiniven/errors.hpp"

#include <doctest.h>

using namespace antiniven;

TEST_CASE("closed form against independently computed constants") {
  // 6/pi^2 * prod p/(p+1) over primes p | b-1, evaluated separately in
  // double precision by tests/oracles/brute_force.py.
  CHECK(closed_form_density(Base(2)) == doctest::Approx(0.6079271018540267).epsilon(1e-12));
  CHECK(closed_form_density(Base(10)) == doctest::Approx(0.45594532639052).epsilon(1e-12));
  CHECK(closed_form_density(Base(7)) == doctest::Approx(0.3039635509270133).epsilon(1e-12));

  const auto f10 = closed_form_factor(Base(10));
  CHECK(f10.numerator == Nat(3));
  CHECK(f10.denominator == Nat(4));
  CHECK(f10.primes == std::vector<std::uint64_t>{3});
  const auto f31 = closed_form_factor(Base(31));
  CHECK(f31.numerator == Nat(2 * 3 * 5));
  CHECK(f31.denominator == Nat(3 * 4 * 6));
  CHECK(closed_form_factor(Base(2)).primes.empty());
}

TEST_CASE("exhaustive counts match the frozen oracle") {
  CHECK(empirical_density(Base(10), Nat(10)).empirical == doctest::Approx(0.2));
  CHECK(empirical_density(Base(2), Nat(1)).empirical == doctest::Approx(1.0));
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> b2{{10, 8}, {10'000, 6207}, {100'000, 61410}, {1'000'000, 610256}};
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> b10{{10, 2}, {10'000, 4575}, {100'000, 45727}, {1'000'000, 455162}};
  for (auto [limit, count] : b2) CHECK(empirical_density(Base(2), Nat(limit)).count == count);
  for (auto [limit, count] : b10) CHECK(empirical_density(Base(10), Nat(limit)).count == count);

  const auto r = empirical_density(Base(10), Nat(1'000'000));
  CHECK(r.method == DensityMethod::kExhaustive);
  CHECK(r.std_error == std::nullopt);
  CHECK(r.abs_diff == doctest::Approx(std::abs(r.empirical - r.closed_form)));
  CHECK_THROWS_AS(empirical_density(Base(10), Nat(0)), DomainError);
}

TEST_CASE("thread count does not change exhaustive counts") {
  for (unsigned t : {1u, 2u, 3u, 7u}) {
    DensityOptions o;
    o.threads = t;
    CHECK(empirical_density(Base(2), Nat(1'000'000), o).count == 610256);
  }
}

TEST_CASE("sampling above the exhaustive limit") {
  DensityOptions o;
  o.samples = 200'000;
  const auto r = empirical_density(Base(10), Nat::pow(10, 15), o);
  CHECK(r.method == DensityMethod::kMonteCarlo);
  CHECK(r.samples == 200'000);
  REQUIRE(r.std_error.has_value());
  CHECK(*r.std_error > 0);
  CHECK(*r.std_error < 0.002);
  CHECK(r.abs_diff < 0.01);
  // Same seed, same estimate.
  CHECK(empirical_density(Base(10), Nat::pow(10, 15), o).count == r.count);
  o.seed = 1;
  CHECK(empirical_density(Base(10), Nat::pow(10, 15), o).count != r.count);
}

TEST_CASE("convergence rows") {
  const auto rows = density_convergence(Base(2), 1'000'000);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].limit == 10);
  CHECK(rows[0].count == 8);
  CHECK(rows[3].count == 6207);
  CHECK(rows[5].limit == 1'000'000);
  CHECK(rows[5].count == 610256);
  CHECK(rows[5].abs_diff < rows[0].abs_diff);

  const auto odd = density_convergence(Base(10), 12'345);
  CHECK(odd.back().limit == 12'345);
}
