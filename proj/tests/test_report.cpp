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

#include "antiniven/report.hpp"
#include "antiniven/errors.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace antiniven;

namespace {

template <class T, class FromJson>
void round_trip(const T& value, FromJson from) {
  const Json j = to_json(value);
  const T back = from(Json::parse(dump(j)));
  CHECK(dump(to_json(back)) == dump(j));
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("check reports") {
  const auto r = check_number(Nat(1234), Base(10));
  CHECK(r.digit_sum == Nat(10));
  CHECK(r.gcd == Nat(2));
  CHECK_FALSE(r.anti_niven);
  CHECK_FALSE(r.niven);
  const Json j = to_json(r);
  CHECK(j.at("report") == "check");
  CHECK(j.at("n") == "1234");
  CHECK(j.at("digit_sum") == "10");
  CHECK(check_from_json(j) == r);
  CHECK(first_line(to_csv(r)) == "n,base,digit_sum,gcd,anti_niven,niven");
  CHECK_THROWS_AS(check_number(Nat(0), Base(10)), DomainError);
}

TEST_CASE("random round trips for every report kind") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    const std::uint64_t b = 2 + rng() % 30, d = 1 + rng() % 30;
    const std::uint64_t lo = 1 + rng() % 10'000, hi = lo + rng() % 3000;
    const auto c = check_number(Nat(lo), Base(b));
    CHECK(check_from_json(to_json(c)) == c);

    ScanOptions o;
    o.witness_cap = 1 + rng() % 5;
    if (i % 2) o.min_witness_length = 1 + rng() % 3;
    const auto s = max_run_in_range(Base(b), Nat(d), Nat(lo), Nat(hi), o);
    CHECK(scan_from_json(to_json(s)) == s);
    round_trip(s, scan_from_json);

    const auto br = bound_report(Base(b), Nat(d));
    CHECK(bound_report_from_json(to_json(br)) == br);

    if (std::gcd(std::gcd(lo, d), b - 1) == 1) round_trip(construct_member_of_ap(Nat(lo), Nat(d), Base(b)), member_from_json);

    const auto dr = empirical_density(Base(b), Nat(hi));
    round_trip(dr, density_from_json);
  }
}

TEST_CASE("construction round trips, including structural giants") {
  std::vector<ConstructedAP> aps{construct_arbitrary_length(Base(10), 5), construct_consecutive_run(Base(16), 2),
                                 construct_2ap(Base(7)), construct_b_minus_1_ap_even(Base(4)),
                                 construct_2ap_fermat(Base(17)), construct_b_minus_1_ap_odd_prime(Base(5))};
  for (const auto& ap : aps) {
    const Json j = to_json(ap);
    CHECK(j.at("report") == "construction");
    CHECK(construction_from_json(Json::parse(dump(j))) == ap);
  }

  // The thm3.5 base-4 witness has a c of about 4*10^4 bits; lower the
  // threshold so the structural form is exercised.
  JsonOptions js;
  js.structural_giants = true;
  js.giant_bits = 1000;
  const auto& big = aps[3];
  const Json j = to_json(big, js);
  const Json& c = j.at("trace").at("c");
  REQUIRE(c.is_object());
  CHECK(c.at("base") == 4);
  CHECK(c.at("terms").size() == 2 * 2047);
  CHECK(construction_from_json(j) == big);
  CHECK(nat_from_json(nat_to_json(*big.trace.c, Base(4), js)) == *big.trace.c);

  // Small values stay decimal strings.
  CHECK(nat_to_json(Nat(12345), Base(10), js) == "12345");
  CHECK(nat_from_json(Json("12345")) == Nat(12345));
  CHECK_THROWS_AS(nat_from_json(Json(-1)), ParseError);
  CHECK_THROWS_AS(nat_from_json(Json("12x")), ParseError);
}

TEST_CASE("audit rows in JSON and CSV") {
  const auto ap = construct_2ap(Base(10));
  JsonOptions js;
  js.include_audit = true;
  const Json j = to_json(ap, js);
  REQUIRE(j.at("audit").size() == 2);
  CHECK(j.at("audit")[0].at("term") == "10000001");
  const std::string csv = to_csv(ap);
  CHECK(first_line(csv) == "index,term,digit_sum,gcd,expected_digit_sum");
  CHECK(csv.find("0,10000001,2,1,2") != std::string::npos);
}

TEST_CASE("CSV headers are fixed") {
  CHECK(first_line(to_csv(max_run_in_range(Base(10), Nat(1), Nat(1), Nat(100)))) ==
        "base,step,from,to,max_length,witness_count,start,length");
  CHECK(first_line(to_csv(bound_report(Base(10), Nat(3)))) == "bound,kind,value,source,conditions");
  CHECK(first_line(to_csv(construct_member_of_ap(Nat(3), Nat(4), Base(10)))) == "n,d,base,value,index,dbar,prime_p");
  CHECK(first_line(to_csv(density_convergence(Base(10), 100))) == "limit,empirical,closed_form,diff");
  CHECK(first_line(to_csv(explore_conjecture(Conjecture::kOddBaseEvenStep, Base(7), Nat(4), Nat(100)))) ==
        "id,base,step,to,target_length,verdict,start,length");
}

TEST_CASE("conjecture reports") {
  const auto r = explore_conjecture(Conjecture::kOddBaseEvenStep, Base(21), Nat(4), Nat(10'000));
  const Json j = to_json(r);
  CHECK(j.at("report") == "conjecture");
  CHECK(j.at("verdict") == "witness-found");
  CHECK(j.at("id") == "4.3");
  CHECK(conjecture_from_json(j) == r);
}

TEST_CASE("malformed reports are rejected") {
  CHECK_THROWS(scan_from_json(Json::parse(R"({"report":"scan"})")));
  CHECK_THROWS(construction_from_json(Json::parse(R"({"report":"construction","base":10})")));
}
