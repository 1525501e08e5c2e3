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

#include "antiniven/ap_analysis.hpp"
#include "antiniven/digits.hpp"
#include "antiniven/errors.hpp"

#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

using namespace antiniven;

namespace {

std::uint64_t naive_sum(std::uint64_t n, std::uint64_t b) {
  std::uint64_t s = 0;
  for (; n; n /= b) s += n % b;
  return s;
}

bool naive_anti(std::uint64_t n, std::uint64_t b) { return std::gcd(n, naive_sum(n, b)) == 1; }

struct Runs {
  std::uint64_t max = 0;
  std::map<std::uint64_t, std::vector<std::uint64_t>> starts_by_length;
};

// Maximal runs of anti-Niven terms, clipped to [lo, hi], enumerated one
// residue chain at a time.
Runs naive_runs(std::uint64_t b, std::uint64_t d, std::uint64_t lo, std::uint64_t hi) {
  Runs out;
  for (std::uint64_t r = lo; r < lo + d && r <= hi; ++r) {
    std::uint64_t len = 0, start = 0;
    for (std::uint64_t n = r;; n += d) {
      const bool in = n <= hi;
      if (in && naive_anti(n, b)) {
        if (len++ == 0) start = n;
        continue;
      }
      if (len) {
        out.max = std::max(out.max, len);
        out.starts_by_length[len].push_back(start);
      }
      len = 0;
      if (!in) break;
    }
  }
  for (auto& [len, v] : out.starts_by_length) std::sort(v.begin(), v.end());
  return out;
}

ScanReport scan(std::uint64_t b, std::uint64_t d, std::uint64_t lo, std::uint64_t hi, unsigned threads = 0) {
  ScanOptions o;
  o.threads = threads;
  return max_run_in_range(Base(b), Nat(d), Nat(lo), Nat(hi), o);
}

std::vector<std::uint64_t> starts(const ScanReport& r, std::size_t n) {
  std::vector<std::uint64_t> v;
  for (std::size_t i = 0; i < std::min(n, r.witnesses.size()); ++i) v.push_back(r.witnesses[i].start.to_u64());
  return v;
}

}  // namespace

TEST_CASE("contains_anti_niven examples") {
  CHECK(contains_anti_niven(Nat(3), Nat(6), Base(10)) == std::nullopt);
  CHECK(contains_anti_niven(Nat(1), Nat(1), Base(10)) == Nat(0));
  CHECK(contains_anti_niven(Nat(2), Nat(2), Base(10)) == Nat(4));
  CHECK_THROWS_AS(contains_anti_niven(Nat(0), Nat(1), Base(10)), DomainError);
  CHECK_THROWS_AS(contains_anti_niven(Nat(2), Nat(2), Base(10), 2), BudgetError);
}

TEST_CASE("first_failure examples") {
  CHECK(first_failure(Nat(2), Nat(1), Base(10)) == Nat(0));
  CHECK(first_failure(Nat(1), Nat(1), Base(10)) == Nat(1));
  CHECK(first_failure(Nat(1), Nat(2), Base(2)) == Nat(10));
  CHECK(first_failure(Nat::pow(10, 40) + Nat(1), Nat(1), Base(10)) == Nat(1));
}

TEST_CASE("contains_anti_niven is absent exactly when gcd(n, d, b-1) > 1") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10'000; ++i) {
    const std::uint64_t n = 1 + rng() % 10'000, d = 1 + rng() % 100, b = 2 + rng() % 15;
    const auto got = contains_anti_niven(Nat(n), Nat(d), Base(b));
    const bool blocked = std::gcd(std::gcd(n, d), b - 1) > 1;
    REQUIRE(got.has_value() == !blocked);
    if (got) {
      const std::uint64_t j = got->to_u64();
      for (std::uint64_t k = 0; k < j; ++k) REQUIRE_FALSE(naive_anti(n + k * d, b));
      REQUIRE(naive_anti(n + j * d, b));
    } else {
      // A shared factor of n, d and b-1 divides every term and its digit sum.
      for (std::uint64_t k = 0; k < 200; ++k) REQUIRE_FALSE(naive_anti(n + k * d, b));
    }
  }
}

TEST_CASE("first_failure terminates and is exact on random triples") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t n = 1 + rng() % 10'000, d = 1 + rng() % 100, b = 2 + rng() % 15;
    const std::uint64_t j = first_failure(Nat(n), Nat(d), Base(b)).to_u64();
    for (std::uint64_t k = 0; k < j; ++k) REQUIRE(naive_anti(n + k * d, b));
    REQUIRE_FALSE(naive_anti(n + j * d, b));
  }
}

TEST_CASE("scan matches the frozen brute-force oracle") {
  // Values frozen from tests/oracles/brute_force.py.
  {
    const auto r = scan(2, 1, 1, 1'000'000);
    CHECK(r.max_length == 5);
    CHECK(r.witness_count == 26061);
    CHECK(r.anti_niven_count == 610256);
    CHECK(r.terms_scanned == 1'000'000);
    CHECK(r.witnesses.size() == 32);
    CHECK(starts(r, 12) == std::vector<std::uint64_t>{1, 13, 25, 49, 73, 97, 145, 173, 193, 253, 265, 289});
  }
  {
    const auto r = scan(10, 2, 1, 1'000'000);
    CHECK(r.max_length == 2);
    CHECK(r.witness_count == 198159);
    CHECK(starts(r, 5) == std::vector<std::uint64_t>{11, 14, 17, 23, 29});
  }
  {
    const auto r = scan(10, 3, 1, 1'000'000);
    CHECK(r.max_length == 9);
    CHECK(r.witness_count == 1013);
    CHECK(starts(r, 5) == std::vector<std::uint64_t>{1187, 1787, 2687, 3787, 4487});
  }
  {
    const auto r = scan(10, 9, 1, 1'000'000);
    CHECK(r.max_length == 21);
    CHECK(r.witness_count == 546);
    CHECK(starts(r, 5) == std::vector<std::uint64_t>{1109, 7709, 11009, 14309, 25709});
  }
  {
    const auto r = scan(12, 5, 1, 1'000'000);
    CHECK(r.max_length == 7);
    CHECK(r.witness_count == 679);
    CHECK(starts(r, 1) == std::vector<std::uint64_t>{6609});
  }
  {
    const auto r = scan(16, 3, 1, 1'000'000);
    CHECK(r.max_length == 4);
    CHECK(r.witness_count == 34537);
    CHECK(starts(r, 1) == std::vector<std::uint64_t>{53});
  }
}

TEST_CASE("scan agrees with brute force on random windows and thread counts") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    const std::uint64_t b = 2 + rng() % 20, d = 1 + rng() % 40;
    const std::uint64_t lo = 1 + rng() % 100'000, hi = lo + rng() % 5000;
    const Runs want = naive_runs(b, d, lo, hi);
    const auto r = scan(b, d, lo, hi, 1 + static_cast<unsigned>(rng() % 5));
    REQUIRE(r.max_length == want.max);
    if (want.max == 0) {
      REQUIRE(r.witnesses.empty());
      continue;
    }
    const auto& ws = want.starts_by_length.at(want.max);
    REQUIRE(r.witness_count == ws.size());
    for (std::size_t k = 0; k < r.witnesses.size(); ++k) {
      REQUIRE(r.witnesses[k].start == Nat(ws[k]));
      REQUIRE(r.witnesses[k].length == want.max);
      REQUIRE(r.witnesses[k].step == Nat(d));
    }
  }
}

TEST_CASE("scan threshold mode lists every long enough run") {
  ScanOptions o;
  o.min_witness_length = 8;
  o.witness_cap = 1000;
  const auto r = max_run_in_range(Base(10), Nat(3), Nat(1), Nat(100'000), o);
  const Runs want = naive_runs(10, 3, 1, 100'000);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> expected;  // (-len, start)
  for (const auto& [len, v] : want.starts_by_length) {
    if (len >= 8) for (auto s : v) expected.emplace_back(len, s);
  }
  std::sort(expected.begin(), expected.end(), [](auto a, auto c) {
    return a.first != c.first ? a.first > c.first : a.second < c.second;
  });
  REQUIRE(r.witness_count == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CHECK(r.witnesses[k].length == expected[k].first);
    CHECK(r.witnesses[k].start == Nat(expected[k].second));
  }
}

TEST_CASE("scan validation") {
  CHECK_THROWS_AS(scan(10, 1, 5, 4), DomainError);
  CHECK_THROWS_AS(scan(10, 1, 0, 4), DomainError);
  CHECK_THROWS_AS(scan(10, 0, 1, 4), DomainError);
  const auto single = scan(10, 1, 11, 11);
  CHECK(single.max_length == 1);
  CHECK(single.witnesses.front().start == Nat(11));
}

TEST_CASE("bound examples") {
  const auto u = theoretical_upper_bound(Base(10), Nat(1));
  CHECK(u.kind == BoundKind::kExact);
  CHECK(u.value == Nat(2));

  const auto u2 = theoretical_upper_bound(Base(10), Nat(2));
  CHECK(u2.kind == BoundKind::kExact);
  CHECK(u2.value == Nat(2));
  CHECK(u2.source == Theorem::kStepTwo);

  const auto u3 = theoretical_upper_bound(Base(10), Nat(3));
  CHECK(u3.kind == BoundKind::kUpper);
  CHECK(u3.value == Nat(9));
  CHECK(u3.source == Theorem::kParityBound);

  const auto u9 = theoretical_upper_bound(Base(10), Nat(9));
  CHECK(u9.kind == BoundKind::kExact);
  CHECK(u9.value == Nat(21));
  CHECK(u9.source == Theorem::kBaseMinusOneEven);

  const auto inap = theoretical_upper_bound(Base(17), Nat(2));
  CHECK(inap.kind == BoundKind::kInapplicable);
  CHECK(inap.value == std::nullopt);
  const auto lo17 = known_lower_bound(Base(17), Nat(2));
  CHECK(lo17.kind == BoundKind::kLower);
  CHECK(lo17.value == Nat(17));
  CHECK(lo17.source == Theorem::kStepTwoFermatBase);

  const auto b2 = theoretical_upper_bound(Base(2), Nat(1));
  CHECK(b2.kind == BoundKind::kExact);
  CHECK(b2.value == Nat(5));

  CHECK(theoretical_upper_bound(Base(12), Nat(5)).value == Nat(7));
  // Both 2.5 and 3.4 apply to (16, 3); the prime bound is tighter.
  const auto u16 = theoretical_upper_bound(Base(16), Nat(3));
  CHECK(u16.value == Nat(4));
  CHECK(u16.source == Theorem::kPrimeBound);
  const auto all16 = upper_bound_candidates(Base(16), Nat(3));
  REQUIRE(all16.size() == 2);
  CHECK(all16[1].source == Theorem::kParityBound);
  CHECK(all16[1].value == Nat(13));
  CHECK_THROWS_AS(theoretical_upper_bound(Base(10), Nat(0)), DomainError);
}

TEST_CASE("bounds are consistent with each other and with small scans") {
  for (std::uint64_t b = 2; b <= 20; ++b) {
    for (std::uint64_t d = 1; d <= 20; ++d) {
      const auto up = theoretical_upper_bound(Base(b), Nat(d));
      const auto lo = known_lower_bound(Base(b), Nat(d));
      CAPTURE(b);
      CAPTURE(d);
      REQUIRE(up.value.has_value() == (up.kind != BoundKind::kInapplicable));
      REQUIRE(lo.value.has_value() == (lo.kind != BoundKind::kInapplicable));
      if (up.value && lo.value) REQUIRE(*lo.value <= *up.value);
      if (up.kind == BoundKind::kExact) REQUIRE(lo.value == up.value);
      if (up.value) {
        const auto r = scan(b, d, 1, 20'000);
        REQUIRE(Nat(r.max_length) <= *up.value);
      }
    }
  }
}

TEST_CASE("conjecture explorer matches the frozen oracle") {
  ExploreOptions o;
  o.witness_cap = 32;
  const auto c43 = explore_conjecture(Conjecture::kOddBaseEvenStep, Base(21), Nat(4), Nat(1'000'000), o);
  CHECK(c43.target_length == 4);
  CHECK(c43.witness_found);
  CHECK(c43.scan.witness_count == 49825);
  CHECK(starts(c43.scan, 5) == std::vector<std::uint64_t>{29, 39, 49, 79, 89});

  const auto c7 = explore_conjecture(Conjecture::kOddBaseEvenStep, Base(7), Nat(4), Nat(1'000'000), o);
  CHECK(c7.target_length == 2);
  CHECK(c7.scan.witness_count == 140520);
  CHECK(starts(c7.scan, 5) == std::vector<std::uint64_t>{7, 13, 19, 25, 37});

  const auto c44 = explore_conjecture(Conjecture::kParityBoundSharp, Base(10), Nat(3), Nat(1'000'000), o);
  CHECK(c44.target_length == 9);
  CHECK(c44.scan.witness_count == 1013);
  CHECK(starts(c44.scan, 1) == std::vector<std::uint64_t>{1187});

  o.literal_niven = true;
  const auto niven = explore_conjecture(Conjecture::kParityBoundSharp, Base(10), Nat(3), Nat(1'000'000), o);
  CHECK_FALSE(niven.witness_found);
  CHECK(niven.scan.witness_count == 0);
}

TEST_CASE("conjecture hypotheses are enforced") {
  const Nat hi(1000);
  CHECK_THROWS_AS(explore_conjecture(Conjecture::kOddBaseEvenStep, Base(10), Nat(4), hi), DomainError);
  CHECK_THROWS_AS(explore_conjecture(Conjecture::kOddBaseEvenStep, Base(17), Nat(4), hi), DomainError);
  CHECK_THROWS_AS(explore_conjecture(Conjecture::kOddBaseEvenStep, Base(21), Nat(3), hi), DomainError);
  // b = 7, d = 6: every prime dividing 6 divides d.
  CHECK_THROWS_AS(explore_conjecture(Conjecture::kOddBaseEvenStep, Base(7), Nat(6), hi), DomainError);
  CHECK_THROWS_AS(explore_conjecture(Conjecture::kParityBoundSharp, Base(4), Nat(3), hi), DomainError);
  CHECK_THROWS_AS(explore_conjecture(Conjecture::kParityBoundSharp, Base(10), Nat(4), hi), DomainError);
  CHECK_THROWS_AS(explore_conjecture(Conjecture::kParityBoundSharp, Base(10), Nat(7), hi), DomainError);
  CHECK(parse_conjecture("4.3") == Conjecture::kOddBaseEvenStep);
  CHECK(parse_conjecture("4.5") == std::nullopt);
  CHECK(parse_theorem("thm2.4") == Theorem::kArbitraryLength);
  CHECK(token(Theorem::kBaseMinusOneEven) == "thm3.5");
}

TEST_CASE("every witness re-verifies and is maximal") {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 60; ++i) {
    const std::uint64_t b = 2 + rng() % 30, d = 1 + rng() % 30;
    const std::uint64_t lo = 1 + rng() % 1'000'000, hi = lo + rng() % 20'000;
    ScanOptions o;
    o.witness_cap = 200;
    if (i % 3 == 0) o.min_witness_length = 1 + rng() % 4;
    const auto r = max_run_in_range(Base(b), Nat(d), Nat(lo), Nat(hi), o);
    for (const auto& w : r.witnesses) {
      const std::uint64_t s = w.start.to_u64(), last = w.last().to_u64();
      REQUIRE(s >= lo);
      REQUIRE(last <= hi);
      for (std::uint64_t t = s; t <= last; t += d) REQUIRE(naive_anti(t, b));
      REQUIRE((s < lo + d || !naive_anti(s - d, b)));
      REQUIRE((last + d > hi || !naive_anti(last + d, b)));
    }
  }
}
