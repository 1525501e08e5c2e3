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

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace antiniven {

namespace {

void check_stop(const ConstructOptions& options) {
  if (options.stop.stop_requested()) throw CancelledError();
}

std::string format_bits(double bits) {
  if (!std::isfinite(bits)) return "more than 1e308";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", bits);
  return buf;
}

// Throws ResourceError when `digits` base-b digits would exceed the cap.
void require_fits(double digits, Base b, std::uint64_t cap, const std::string& what) {
  const double bits = digits * std::log2(static_cast<double>(b.value()));
  if (!(bits <= static_cast<double>(cap))) {
    throw ResourceError(what + " needs about " + format_bits(bits) + " bits, above the cap of " +
                            std::to_string(cap) + " bits",
                        bits, cap);
  }
}

std::uint64_t smallest_prime_factor(std::uint64_t v) {
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) return p;
  }
  return v;
}

// Sum of b^e over sorted exponents, by splitting so that every
// multiplication is between operands of similar size.
mpz_class sum_of_powers(std::uint64_t b, std::span<const std::uint64_t> exps) {
  if (exps.empty()) return 0;
  if (exps.size() == 1) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), b, exps[0]);
    return out;
  }
  const std::size_t mid = exps.size() / 2;
  mpz_class low = sum_of_powers(b, exps.first(mid));
  // High half relative to its own first exponent, then shifted.
  std::vector<std::uint64_t> rel(exps.begin() + mid, exps.end());
  const std::uint64_t shift = rel.front();
  for (auto& e : rel) e -= shift;
  mpz_class high = sum_of_powers(b, rel);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), b, shift);
  return low + high * scale;
}

DigitSumGroup group(std::vector<std::uint64_t> indices, Nat sum) { return {std::move(indices), std::move(sum)}; }

std::vector<std::uint64_t> iota_indices(std::uint64_t from, std::uint64_t to_inclusive) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = from; i <= to_inclusive; ++i) out.push_back(i);
  return out;
}

ConstructedAP finish(ConstructedAP ap) {
  verify(ap);
  return ap;
}

std::uint64_t nat_digits(const Nat& v, Base b) { return to_digits(v, b).digits.size(); }

}  // namespace

std::string_view token(CaseTag c) {
  switch (c) {
    case CaseTag::kParityOdd: return "parity-odd";
    case CaseTag::kParityEven: return "parity-even";
    case CaseTag::kBaseEven: return "b-even";
    case CaseTag::kBaseOdd: return "b-odd";
  }
  return "unknown";
}

std::optional<CaseTag> parse_case_tag(std::string_view tok) {
  for (CaseTag c : {CaseTag::kParityOdd, CaseTag::kParityEven, CaseTag::kBaseEven, CaseTag::kBaseOdd}) {
    if (token(c) == tok) return c;
  }
  return std::nullopt;
}

ExponentWitness find_exponent(Base b, std::span<const std::uint64_t> primes, std::uint64_t k, ExponentRule rule) {
  if (k == 0) throw DomainError("exponent multiplier k must be at least 1");
  std::set<std::uint64_t> seen;
  for (std::uint64_t q : primes) {
    if (!is_prime_u64(q)) throw DomainError("exponent modulus " + std::to_string(q) + " is not prime");
    if (!seen.insert(q).second) throw DomainError("exponent moduli must be distinct");
  }

  ExponentWitness w;
  w.moduli.assign(primes.begin(), primes.end());
  w.k = k;
  w.rule = rule;

  Nat coprime_product(1);
  Nat order_lcm(1);
  for (std::uint64_t q : primes) {
    if (b.value() % q == 0) continue;
    coprime_product *= Nat(q);
    if (rule == ExponentRule::kMinimalOrder) order_lcm = lcm(order_lcm, Nat(multiplicative_order(b.value() % q, q)));
  }
  if (coprime_product == Nat(1)) {
    w.m = Nat(k);
  } else {
    w.period = rule == ExponentRule::kTotient ? euler_phi(coprime_product) : order_lcm;
    w.m = Nat(k) * w.period + Nat(1);
  }

  for (std::uint64_t q : primes) {
    if (powmod(Nat(b.value()), w.m, Nat(q)) != Nat(b.value() % q)) {
      throw InternalError("exponent " + w.m.to_string() + " fails b^m = b mod " + std::to_string(q));
    }
  }
  return w;
}

std::vector<TermAudit> audit(const ConstructedAP& ap) {
  std::vector<std::optional<Nat>> expected(ap.spec.length);
  for (const auto& g : ap.expected_digit_sums) {
    for (std::uint64_t i : g.indices) {
      if (i < expected.size()) expected[i] = g.digit_sum;
    }
  }
  std::vector<TermAudit> rows;
  rows.reserve(ap.spec.length);
  for (std::uint64_t j = 0; j < ap.spec.length; ++j) {
    TermAudit row;
    row.term = ap.spec.term(j);
    row.digit_sum = digit_sum(row.term, ap.base);
    row.gcd = gcd(row.term, row.digit_sum);
    row.expected_digit_sum = expected[j].value_or(Nat(0));
    row.ok = !row.term.is_zero() && row.gcd == Nat(1) && expected[j] && *expected[j] == row.digit_sum;
    rows.push_back(std::move(row));
  }
  return rows;
}

void verify(const ConstructedAP& ap) {
  const auto where = std::string(token(ap.trace.theorem)) + " construction in base " +
                     std::to_string(ap.base.value());
  if (ap.spec.length == 0 || ap.spec.start.is_zero() || ap.spec.step.is_zero()) {
    throw InternalError(where + ": degenerate progression");
  }
  std::vector<int> covered(ap.spec.length, 0);
  for (const auto& g : ap.expected_digit_sums) {
    for (std::uint64_t i : g.indices) {
      if (i >= covered.size()) throw InternalError(where + ": digit-sum pattern index out of range");
      ++covered[i];
    }
  }
  if (std::any_of(covered.begin(), covered.end(), [](int c) { return c != 1; })) {
    throw InternalError(where + ": digit-sum pattern must cover every term exactly once");
  }
  for (const TermAudit& row : audit(ap)) {
    if (!row.ok) {
      throw InternalError(where + ": term " + row.term.to_string() + " has digit sum " +
                          row.digit_sum.to_string() + " (expected " + row.expected_digit_sum.to_string() +
                          ") and gcd " + row.gcd.to_string());
    }
  }
}

ConstructedAP construct_arbitrary_length(Base b, std::uint64_t t, const ConstructOptions& options) {
  if (t == 0) throw DomainError("length must be at least 1");
  const std::uint64_t bv = b.value();
  std::uint64_t m = 1;
  for (;; ++m) {
    require_fits(static_cast<double>(m), b, options.bit_cap, "b^m");
    if (Nat::pow(bv, m) >= Nat(t) * Nat(m * (bv - 1) + 1)) break;
  }
  check_stop(options);
  require_fits(2.0 * static_cast<double>(m) + 2, b, options.bit_cap, "the progression");
  const Nat sum(m * (bv - 1) + 1);
  const Nat d = Nat(bv) * (Nat::pow(bv, m) - Nat(1)) * sum;

  ConstructedAP ap{{d + Nat(1), d, t}, b, {group(iota_indices(0, t - 1), sum)}, {}};
  ap.trace.theorem = Theorem::kArbitraryLength;
  ap.trace.m = Nat(m);
  return finish(std::move(ap));
}

ConstructedAP construct_consecutive_run(Base b, std::uint64_t k, const ConstructOptions& options) {
  const std::uint64_t bv = b.value();
  if (bv <= 2) throw DomainError("hypothesis failed: b > 2");
  const std::uint64_t p = smallest_prime_factor(bv - 1);
  const auto moduli = primes_up_to(p - 1);
  const ExponentWitness w = find_exponent(b, moduli, k, ExponentRule::kMinimalOrder);
  check_stop(options);
  require_fits(w.m.to_double() + 1, b, options.bit_cap, "b^m");

  ConstructedAP ap{{Nat::pow(bv, w.m.to_u64()), Nat(1), p - 1}, b, {}, {}};
  for (std::uint64_t j = 0; j + 1 < p; ++j) ap.expected_digit_sums.push_back(group({j}, Nat(j + 1)));
  ap.trace.theorem = Theorem::kConsecutiveRun;
  ap.trace.m = w.m;
  ap.trace.selector = k;
  ap.trace.exponent_moduli = moduli;
  ap.trace.prime_p = Nat(p);
  return finish(std::move(ap));
}

ConstructedAP construct_2ap(Base b, std::uint64_t k, const ConstructOptions& options) {
  const std::uint64_t bv = b.value();
  if (bv <= 2) throw DomainError("hypothesis failed: b > 2");
  if (is_power_of_two_plus_one(b)) throw DomainError("hypothesis failed: b must not be of the form 2^r + 1");
  const std::uint64_t p = *smallest_qualifying_prime(b, Nat(2));
  const auto moduli = primes_up_to(bv);
  const ExponentWitness w = find_exponent(b, moduli, k, ExponentRule::kMinimalOrder);
  check_stop(options);
  require_fits(w.m.to_double() + 1, b, options.bit_cap, "b^m");
  const Nat bm = Nat::pow(bv, w.m.to_u64());

  ConstructedAP ap;
  ap.base = b;
  ap.spec.step = Nat(2);
  ap.spec.length = p - 1;
  if (b.is_even()) {
    ap.spec.start = bm + Nat(1);
    // 2j + 1 can reach b when p = b - 1; the low part then carries into
    // the b^1 digit, so take its digit sum rather than 2j + 1 itself.
    for (std::uint64_t j = 0; j + 1 < p; ++j) {
      ap.expected_digit_sums.push_back(group({j}, Nat(1 + digit_sum(2 * j + 1, b))));
    }
    ap.trace.case_tag = CaseTag::kBaseEven;
  } else {
    // b^m + b - p + 2j for j <= (p-1)/2, then b^m + b + 1 + 2j.
    ap.spec.start = bm + Nat(bv - p);
    const std::uint64_t first_part = (p - 1) / 2;
    for (std::uint64_t j = 0; j <= first_part; ++j) {
      ap.expected_digit_sums.push_back(group({j}, Nat(1 + bv - p + 2 * j)));
    }
    for (std::uint64_t j = 0; first_part + 1 + j < p - 1; ++j) {
      ap.expected_digit_sums.push_back(group({first_part + 1 + j}, Nat(3 + 2 * j)));
    }
    ap.trace.case_tag = CaseTag::kBaseOdd;
  }
  ap.trace.theorem = Theorem::kStepTwo;
  ap.trace.m = w.m;
  ap.trace.selector = k;
  ap.trace.exponent_moduli = moduli;
  ap.trace.prime_p = Nat(p);
  return finish(std::move(ap));
}

ConstructedAP construct_b_minus_1_ap_even(Base b, std::uint64_t k, const ConstructOptions& options) {
  const std::uint64_t bv = b.value();
  if (!b.is_even()) throw DomainError("hypothesis failed: b must be even");

  // b^{m+1} = b modulo every prime up to 2b.
  const auto moduli = primes_up_to(2 * bv);
  const ExponentWitness w = find_exponent(b, moduli, k, ExponentRule::kMinimalOrder);
  check_stop(options);
  const Nat m_nat = w.m - Nat(1);
  if (m_nat < Nat(2)) throw InternalError("exponent search returned m < 2");

  // c has (P - b + 1)/2 blocks of m + 1 or more digits each.
  const double log_b = std::log2(static_cast<double>(bv));
  const double m_d = m_nat.to_double();
  const double blocks_estimate = std::exp2(m_d * log_b - 1.0);
  require_fits(blocks_estimate * (m_d + 1.0), b, options.bit_cap, "c");
  const std::uint64_t m = m_nat.to_u64();

  const Nat big_p = Nat::pow(bv, m) + Nat(1);
  const FactorMultiset qf = factorize(Nat::pow(bv, m - 1) + Nat(1), options.factor_budget);
  check_stop(options);
  const Nat q_product = [&] {
    Nat acc(1);
    for (const auto& f : qf.factors) acc *= f.first;
    return acc;
  }();
  const Nat minus_one = q_product - Nat(1);
  if (powmod(Nat(bv), Nat(m - 1), q_product) != minus_one) {
    throw InternalError("b^(m-1) is not -1 modulo the prime factors of b^(m-1) + 1");
  }

  const std::uint64_t blocks = ((big_p - Nat(bv) + Nat(1)) / Nat(2)).to_u64();
  // Residue of b^{r_i + 2}: 0 -> -1, 1 -> 1, 2 -> b.
  std::vector<std::uint8_t> pattern(blocks, 1);
  CaseTag parity;
  if (blocks % 2 == 1) {
    parity = CaseTag::kParityOdd;
    std::fill_n(pattern.begin(), (blocks - 1) / 2, 0);
  } else {
    parity = CaseTag::kParityEven;
    std::fill_n(pattern.begin(), (blocks - 2) / 2, 0);
    pattern[blocks - 2] = 2;
    pattern[blocks - 1] = 2;
  }

  // b^e mod Q depends on e mod 2(m-1) because b^(m-1) = -1.
  const std::uint64_t period = 2 * (m - 1);
  const std::uint64_t target_class[3] = {(m - 1) % period, 0, 1 % period};
  std::vector<std::uint64_t> r_list;
  r_list.reserve(blocks);
  for (std::uint64_t i = 0; i < blocks; ++i) {
    const std::uint64_t lowest = i == 0 ? 1 : r_list.back() + m + 1;
    const std::uint64_t cls = target_class[pattern[i]];
    const std::uint64_t have = (lowest + 2) % period;
    r_list.push_back(lowest + (cls + period - have) % period);
  }
  check_stop(options);
  const Nat expected_residue[3] = {minus_one, Nat(1) % q_product, Nat(bv) % q_product};
  for (std::uint64_t i = 0; i < blocks; ++i) {
    if (powmod(Nat(bv), Nat(r_list[i] + 2), q_product) != expected_residue[pattern[i]]) {
      throw InternalError("exponent r_" + std::to_string(i + 1) + " misses its residue");
    }
  }

  require_fits(static_cast<double>(r_list.back() + m + 3), b, options.bit_cap, "c");
  const Nat c = Nat(sum_of_powers(bv, r_list)) * big_p;
  check_stop(options);
  const Nat c_sum = digit_sum(c, b);
  if (c_sum != big_p - Nat(bv) + Nat(1)) throw InternalError("digit sum of c differs from P - b + 1");

  ConstructedAP ap;
  ap.base = b;
  ap.spec = {c * Nat(bv * bv) + Nat(bv - 1), Nat(bv - 1), 2 * bv + 1};
  // Term index i is c b^2 + (i + 1)(b - 1).
  std::vector<std::uint64_t> plain;
  for (std::uint64_t i = 0; i <= 2 * bv; ++i) {
    if (i != bv && i != 2 * bv) plain.push_back(i);
  }
  ap.expected_digit_sums.push_back(group(std::move(plain), c_sum + Nat(bv - 1)));
  ap.expected_digit_sums.push_back(group({bv, 2 * bv}, c_sum + Nat(2 * (bv - 1))));

  ap.trace.theorem = Theorem::kBaseMinusOneEven;
  ap.trace.m = m_nat;
  ap.trace.selector = k;
  ap.trace.exponent_moduli = moduli;
  ap.trace.big_p = big_p;
  ap.trace.q_list = qf.primes();
  ap.trace.r_list = std::move(r_list);
  ap.trace.c = c;
  ap.trace.case_tag = parity;
  check_stop(options);
  return finish(std::move(ap));
}

ConstructedAP construct_2ap_fermat(Base b) {
  const std::uint64_t bv = b.value();
  if (!is_power_of_two_plus_one(b)) throw DomainError("hypothesis failed: b must be of the form 2^r + 1");
  ConstructedAP ap;
  ap.base = b;
  ap.trace.theorem = Theorem::kStepTwoFermatBase;
  if (bv == 2) {
    ap.spec = {Nat(2), Nat(2), 2};
    ap.expected_digit_sums.push_back(group({0, 1}, Nat(1)));
    return finish(std::move(ap));
  }
  ap.spec = {Nat(bv), Nat(2), bv};
  const std::uint64_t first_part = (bv - 1) / 2;
  for (std::uint64_t j = 0; j <= first_part; ++j) ap.expected_digit_sums.push_back(group({j}, Nat(1 + 2 * j)));
  for (std::uint64_t j = 0; first_part + 1 + j < bv; ++j) {
    ap.expected_digit_sums.push_back(group({first_part + 1 + j}, Nat(3 + 2 * j)));
  }
  return finish(std::move(ap));
}

ConstructedAP construct_b_minus_1_ap_odd_prime(Base b) {
  const std::uint64_t bv = b.value();
  if (bv % 2 == 0 || !is_prime_u64(bv)) throw DomainError("hypothesis failed: b must be an odd prime");
  ConstructedAP ap;
  ap.base = b;
  ap.spec = {Nat(1), Nat(bv - 1), 2 * bv + 1};
  std::vector<std::uint64_t> rest;
  for (std::uint64_t i = 0; i <= 2 * bv; ++i) {
    if (i != 0 && i != 1 && i != bv + 1) rest.push_back(i);
  }
  // 1, b and b^2 have digit sum 1; the others sum to b.
  ap.expected_digit_sums.push_back(group({0, 1, bv + 1}, Nat(1)));
  ap.expected_digit_sums.push_back(group(std::move(rest), Nat(bv)));
  ap.trace.theorem = Theorem::kBaseMinusOneOddPrime;
  return finish(std::move(ap));
}

ApMember construct_member_of_ap(const Nat& n, const Nat& d, Base b, const ConstructOptions& options) {
  if (n.is_zero() || d.is_zero()) throw DomainError("hypothesis failed: n >= 1 and d >= 1");
  const std::uint64_t bv = b.value();
  if (gcd(gcd(n, d), Nat(bv - 1)) != Nat(1)) throw DomainError("hypothesis failed: gcd(n, d, b-1) = 1");

  const Nat sn = digit_sum(n, b);
  std::optional<Nat> dbar;
  for (std::uint64_t t = 1; t <= options.multiple_cap; ++t) {
    Nat candidate = d * Nat(t);
    if (gcd(sn, digit_sum(candidate, b)) == Nat(1)) {
      dbar = std::move(candidate);
      break;
    }
  }
  if (!dbar) throw BudgetError("no multiple of d with digit sum coprime to s_b(n) within the multiple cap");
  check_stop(options);

  const Nat sd = digit_sum(*dbar, b);
  const Nat floor_p = std::max(Nat(bv), *dbar);
  std::optional<std::uint64_t> blocks;
  Nat p;
  for (std::uint64_t k = 1; k <= options.k_cap; ++k) {
    p = sn + Nat(k) * sd;
    if (p > floor_p && is_probable_prime(p)) {
      blocks = k;
      break;
    }
  }
  if (!blocks) throw BudgetError("no prime of the form s_b(n) + k s_b(dbar) within the k cap");
  check_stop(options);

  const std::uint64_t n_digits = nat_digits(n, b);
  const std::uint64_t d_digits = nat_digits(*dbar, b);
  require_fits(static_cast<double>(n_digits) + static_cast<double>(*blocks) * d_digits + 2, b, options.bit_cap,
               "the constructed member");

  // k copies of dbar placed at m_0 = digits(n), m_i = m_{i-1} + digits(dbar).
  std::vector<std::uint64_t> positions;
  for (std::uint64_t i = 0; i < *blocks; ++i) positions.push_back(n_digits + i * d_digits);
  const Nat j(sum_of_powers(bv, positions));
  const std::uint64_t top = positions.back();
  const Nat j_prime = j - Nat::pow(bv, top) + Nat::pow(bv, top + 1);

  ApMember out{n, d, b, {}, {}, {}};
  out.trace.theorem = Theorem::kMemberOfProgression;
  out.trace.m = Nat(n_digits);
  out.trace.dbar = dbar;
  out.trace.prime_p = p;
  out.trace.blocks = blocks;
  out.trace.j = j;
  out.trace.j_prime = j_prime;

  for (const Nat* idx : {&j, &j_prime}) {
    const Nat value = n + *idx * *dbar;
    if (digit_sum(value, b) != p) throw InternalError("member candidate does not have digit sum p");
    if (is_anti_niven(value, b)) {
      out.value = value;
      out.index = (value - n) / d;
      return out;
    }
  }
  throw InternalError("neither candidate member is anti-Niven");
}

}  // namespace antiniven
