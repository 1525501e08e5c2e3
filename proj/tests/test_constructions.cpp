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

#include "antiniven/constructions.hpp"
#include "antiniven/digits.hpp"
#include "antiniven/errors.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace antiniven;

namespace {

// Independent check of every term: digit sum by repeated division and
// gcd through GMP directly.
void independent_check(const ConstructedAP& ap) {
  const unsigned long b = ap.base.value();
  std::vector<std::optional<mpz_class>> expected(ap.spec.length);
  for (const auto& g : ap.expected_digit_sums) {
    for (auto i : g.indices) expected.at(i) = g.digit_sum.mpz();
  }
  for (std::uint64_t j = 0; j < ap.spec.length; ++j) {
    const mpz_class term = ap.spec.start.mpz() + ap.spec.step.mpz() * static_cast<unsigned long>(j);
    mpz_class s = 0, t = term;
    if (mpz_sizeinbase(t.get_mpz_t(), 2) < 4096) {
      while (t != 0) {
        s += mpz_fdiv_ui(t.get_mpz_t(), b);
        t /= b;
      }
    } else {
      s = digit_sum(Nat(term), ap.base).mpz();
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), term.get_mpz_t(), s.get_mpz_t());
    CAPTURE(j);
    REQUIRE(term > 0);
    REQUIRE(g == 1);
    REQUIRE(expected[j].has_value());
    REQUIRE(*expected[j] == s);
  }
}

std::vector<std::uint64_t> terms(const ConstructedAP& ap) {
  std::vector<std::uint64_t> v;
  for (std::uint64_t j = 0; j < ap.spec.length; ++j) v.push_back(ap.spec.term(j).to_u64());
  return v;
}

}  // namespace

TEST_CASE("find_exponent examples") {
  const std::vector<std::uint64_t> two{2}, three{3}, small{2, 3, 5, 7};
  CHECK(find_exponent(Base(10), two, 1).m == Nat(1));
  CHECK(find_exponent(Base(10), three, 1).m == Nat(3));
  const auto w = find_exponent(Base(4), small, 1, ExponentRule::kMinimalOrder);
  CHECK(w.m == Nat(7));
  CHECK(w.period == Nat(6));
  // Totient rule over the same primes: phi(3*5*7) = 48.
  CHECK(find_exponent(Base(4), small, 1).m == Nat(49));
  CHECK(find_exponent(Base(4), small, 3).m == Nat(145));
  const std::vector<std::uint64_t> dup{3, 3}, comp{4};
  CHECK_THROWS_AS(find_exponent(Base(10), dup, 1), DomainError);
  CHECK_THROWS_AS(find_exponent(Base(10), comp, 1), DomainError);
  CHECK_THROWS_AS(find_exponent(Base(10), three, 0), DomainError);
}

TEST_CASE("find_exponent witnesses satisfy their congruences") {
  const auto primes = primes_up_to(60);
  for (std::uint64_t b = 2; b <= 40; ++b) {
    for (std::uint64_t k = 1; k <= 3; ++k) {
      for (auto rule : {ExponentRule::kTotient, ExponentRule::kMinimalOrder}) {
        const auto w = find_exponent(Base(b), primes, k, rule);
        for (auto q : primes) REQUIRE(powmod(Nat(b), w.m, Nat(q)) == Nat(b % q));
      }
    }
  }
}

TEST_CASE("arbitrary-length progressions") {
  const auto ap = construct_arbitrary_length(Base(2), 2);
  CHECK(ap.trace.m == Nat(3));
  CHECK(ap.spec.start == Nat(57));
  CHECK(ap.spec.step == Nat(56));
  CHECK(terms(ap) == std::vector<std::uint64_t>{57, 113});
  for (std::uint64_t b : {2, 3, 10}) {
    for (std::uint64_t t = 1; t <= 8; ++t) {
      const auto a = construct_arbitrary_length(Base(b), t);
      CHECK(a.spec.length == t);
      const std::uint64_t m = a.trace.m->to_u64();
      REQUIRE(a.expected_digit_sums.size() == 1);
      CHECK(a.expected_digit_sums[0].digit_sum == Nat(m * (b - 1) + 1));
      // Smallest m with b^m >= t (m(b-1)+1).
      CHECK(Nat::pow(b, m) >= Nat(t * (m * (b - 1) + 1)));
      if (m > 1) CHECK(Nat::pow(b, m - 1) < Nat(t * ((m - 1) * (b - 1) + 1)));
      independent_check(a);
    }
  }
  CHECK_THROWS_AS(construct_arbitrary_length(Base(10), 0), DomainError);
  ConstructOptions tight;
  tight.bit_cap = 64;
  CHECK_THROWS_AS(construct_arbitrary_length(Base(10), 1'000'000'000'000ull, tight), ResourceError);
}

TEST_CASE("consecutive runs") {
  CHECK(terms(construct_consecutive_run(Base(10))) == std::vector<std::uint64_t>{10, 11});
  CHECK(terms(construct_consecutive_run(Base(4))) == std::vector<std::uint64_t>{4, 5});
  CHECK(construct_consecutive_run(Base(9)).spec.length == 1);
  CHECK(terms(construct_consecutive_run(Base(10), 3)) == std::vector<std::uint64_t>{1000, 1001});
  CHECK_THROWS_AS(construct_consecutive_run(Base(2)), DomainError);
  for (std::uint64_t b = 3; b <= 40; ++b) {
    const auto ap = construct_consecutive_run(Base(b));
    CHECK(ap.spec.length == *ap.trace.prime_p - Nat(1));
    independent_check(ap);
  }
}

TEST_CASE("step-two progressions") {
  const auto ten = construct_2ap(Base(10));
  CHECK(ten.trace.m == Nat(7));
  CHECK(ten.spec.start == Nat(10'000'001));
  CHECK(terms(ten) == std::vector<std::uint64_t>{10'000'001, 10'000'003});
  CHECK(ten.trace.case_tag == CaseTag::kBaseEven);

  const auto seven = construct_2ap(Base(7));
  CHECK(seven.spec.length == 2);
  CHECK(seven.trace.case_tag == CaseTag::kBaseOdd);
  independent_check(seven);

  CHECK_THROWS_AS(construct_2ap(Base(5)), DomainError);
  CHECK_THROWS_AS(construct_2ap(Base(9)), DomainError);
  for (std::uint64_t b : {6, 7, 10, 11, 12, 13, 14, 15, 16, 19, 21, 22, 31}) {
    const auto ap = construct_2ap(Base(b));
    CHECK(ap.spec.length == *ap.trace.prime_p - Nat(1));
    independent_check(ap);
  }
}

TEST_CASE("step b-1 progressions for even bases") {
  const auto four = construct_b_minus_1_ap_even(Base(4));
  CHECK(four.spec.length == 9);
  CHECK(four.spec.step == Nat(3));
  CHECK(four.trace.m == Nat(6));
  CHECK(four.trace.big_p == Nat(4097));
  CHECK(four.trace.q_list == std::vector<Nat>{Nat(5), Nat(41)});
  CHECK(four.trace.r_list.size() == 2047);
  for (std::size_t i = 1; i < four.trace.r_list.size(); ++i) {
    REQUIRE(four.trace.r_list[i] >= four.trace.r_list[i - 1] + 7);
  }
  CHECK(digit_sum(*four.trace.c, Base(4)) == Nat(4094));
  independent_check(four);

  const auto two = construct_b_minus_1_ap_even(Base(2));
  CHECK(two.spec.length == 5);
  CHECK(two.spec.step == Nat(1));
  independent_check(two);

  CHECK_THROWS_AS(construct_b_minus_1_ap_even(Base(7)), DomainError);
  CHECK_THROWS_AS(construct_b_minus_1_ap_even(Base(6)), ResourceError);
}

TEST_CASE("fermat-base and odd-prime-base witnesses") {
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> fermat{{2, 2}, {3, 3}, {5, 5}, {17, 17}, {257, 257}};
  for (auto [b, len] : fermat) {
    const auto ap = construct_2ap_fermat(Base(b));
    CHECK(ap.spec.length == len);
    CHECK(ap.spec.step == Nat(2));
    independent_check(ap);
  }
  CHECK(terms(construct_2ap_fermat(Base(2))) == std::vector<std::uint64_t>{2, 4});
  CHECK_THROWS_AS(construct_2ap_fermat(Base(7)), DomainError);

  for (std::uint64_t b : {3, 5, 7, 11, 13, 101}) {
    const auto ap = construct_b_minus_1_ap_odd_prime(Base(b));
    CHECK(ap.spec.length == 2 * b + 1);
    CHECK(ap.spec.step == Nat(b - 1));
    independent_check(ap);
  }
  CHECK_THROWS_AS(construct_b_minus_1_ap_odd_prime(Base(9)), DomainError);
  CHECK_THROWS_AS(construct_b_minus_1_ap_odd_prime(Base(2)), DomainError);
}

TEST_CASE("constructed witnesses appear in scanner output") {
  // Each witness must be a run the scanner sees when the window covers it.
  auto covered = [](const ConstructedAP& ap) {
    const Nat lo = ap.spec.start > ap.spec.step ? ap.spec.start - ap.spec.step : Nat(1);
    ScanOptions o;
    o.min_witness_length = ap.spec.length;
    o.witness_cap = 1'000'000;
    const auto r = max_run_in_range(ap.base, ap.spec.step, lo, ap.spec.last(), o);
    for (const auto& w : r.witnesses) {
      const Nat w_last = w.last();
      if (w.start <= ap.spec.start && w_last >= ap.spec.last()) return true;
    }
    return false;
  };
  CHECK(covered(construct_2ap(Base(10))));
  CHECK(covered(construct_2ap(Base(7))));
  CHECK(covered(construct_consecutive_run(Base(10), 2)));
  CHECK(covered(construct_b_minus_1_ap_even(Base(2))));
  CHECK(covered(construct_2ap_fermat(Base(17))));
  CHECK(covered(construct_b_minus_1_ap_odd_prime(Base(11))));
  CHECK(covered(construct_arbitrary_length(Base(3), 5)));
}

TEST_CASE("multiplier selects a strictly growing family") {
  for (std::uint64_t b : {7, 10, 16}) {
    Nat prev_run(0), prev_2ap(0);
    for (std::uint64_t k = 1; k <= 3; ++k) {
      const auto run = construct_consecutive_run(Base(b), k);
      const auto two = construct_2ap(Base(b), k);
      CHECK(*run.trace.m > prev_run);
      CHECK(*two.trace.m > prev_2ap);
      prev_run = *run.trace.m;
      prev_2ap = *two.trace.m;
      independent_check(run);
      independent_check(two);
    }
  }
}

TEST_CASE("member of a progression") {
  const auto m = construct_member_of_ap(Nat(3), Nat(4), Base(10));
  CHECK(m.value == Nat(443));
  CHECK(m.index == Nat(110));
  CHECK(m.trace.dbar == Nat(4));
  CHECK(m.trace.prime_p == Nat(11));
  CHECK(m.trace.blocks == 2u);
  CHECK_THROWS_AS(construct_member_of_ap(Nat(3), Nat(6), Base(10)), DomainError);

  std::mt19937_64 rng(404);
  int done = 0;
  while (done < 100) {
    const std::uint64_t n = 1 + rng() % 10'000, d = 1 + rng() % 100, b = 2 + rng() % 15;
    if (std::gcd(std::gcd(n, d), b - 1) != 1) continue;
    ++done;
    const auto r = construct_member_of_ap(Nat(n), Nat(d), Base(b));
    CAPTURE(n);
    CAPTURE(d);
    CAPTURE(b);
    REQUIRE(r.value == Nat(n) + r.index * Nat(d));
    REQUIRE(is_anti_niven(r.value, Base(b)));
  }
}

TEST_CASE("verify rejects a tampered progression") {
  auto ap = construct_2ap(Base(10));
  ap.spec.start = ap.spec.start + Nat(1);
  CHECK_THROWS_AS(verify(ap), InternalError);
  const auto rows = audit(ap);
  CHECK_FALSE(rows.front().ok);
}

TEST_CASE("cancellation between phases") {
  std::stop_source src;
  src.request_stop();
  ConstructOptions o;
  o.stop = src.get_token();
  CHECK_THROWS_AS(construct_b_minus_1_ap_even(Base(4), 1, o), CancelledError);
  CHECK_THROWS_AS(construct_2ap(Base(10), 1, o), CancelledError);
  CHECK_THROWS_AS(construct_member_of_ap(Nat(3), Nat(4), Base(10), o), CancelledError);
}

TEST_CASE("constructed lengths agree with the upper bounds") {
  auto upper = [](const ConstructedAP& ap) { return theoretical_upper_bound(ap.base, ap.spec.step); };
  for (std::uint64_t b = 3; b <= 30; ++b) {
    const auto run = construct_consecutive_run(Base(b));
    CHECK(upper(run).value == Nat(run.spec.length));
    if (!is_power_of_two_plus_one(Base(b))) {
      const auto two = construct_2ap(Base(b));
      CHECK(upper(two).value == Nat(two.spec.length));
    }
  }
  for (std::uint64_t b : {2, 4}) {
    const auto ap = construct_b_minus_1_ap_even(Base(b));
    CHECK(upper(ap).kind == BoundKind::kExact);
    CHECK(upper(ap).value == Nat(ap.spec.length));
  }
  for (std::uint64_t b : {3, 5, 7, 11, 13}) {
    const auto ap = construct_b_minus_1_ap_odd_prime(Base(b));
    const auto u = upper(ap);
    if (u.value) CHECK(Nat(ap.spec.length) <= *u.value);
  }
}

TEST_CASE("family members are disjoint") {
  for (std::uint64_t b : {3, 7, 10, 16}) {
    std::vector<std::pair<Nat, Nat>> spans;
    for (std::uint64_t k = 1; k <= 3; ++k) {
      const auto ap = construct_consecutive_run(Base(b), k);
      for (const auto& [s, e] : spans) CHECK((ap.spec.last() < s || ap.spec.start > e));
      spans.emplace_back(ap.spec.start, ap.spec.last());
    }
  }
}
