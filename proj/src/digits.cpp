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

#include "antiniven/digits.hpp"

#include "antiniven/errors.hpp"

#include <gmp.h>

#include <memory>

namespace antiniven {
namespace {

constexpr std::uint64_t kMaxStringBase = 62;

std::uint32_t char_digit(char ch) {
  if (ch >= '0' && ch <= '9') return static_cast<std::uint32_t>(ch - '0');
  if (ch >= 'A' && ch <= 'Z') return static_cast<std::uint32_t>(ch - 'A' + 10);
  return static_cast<std::uint32_t>(ch - 'a' + 36);
}

// Calls fn(digit) for each base-b digit of n, least significant first.
template <typename Fn>
void for_each_digit(const Nat& n, Base b, Fn&& fn) {
  if (n.is_zero()) return;
  const std::uint64_t base = b.value();
  if (n.fits_u64()) {
    for (std::uint64_t v = n.to_u64(); v != 0; v /= base) fn(static_cast<std::uint32_t>(v % base));
    return;
  }
  if (base <= kMaxStringBase) {
    // mpz_get_str uses 0-9A-Za-z only for bases above 36; below that it is
    // lower case, so ask for the negative base to force upper case.
    const int gmp_base = base <= 36 ? -static_cast<int>(base) : static_cast<int>(base);
    std::unique_ptr<char, void (*)(void*)> text(mpz_get_str(nullptr, gmp_base, n.mpz().get_mpz_t()),
                                                [](void* p) {
                                                  void (*free_fn)(void*, size_t);
                                                  mp_get_memory_functions(nullptr, nullptr, &free_fn);
                                                  free_fn(p, 0);
                                                });
    const std::string_view sv(text.get());
    for (auto it = sv.rbegin(); it != sv.rend(); ++it) fn(char_digit(*it));
    return;
  }
  // Peel off the largest power of b that fits in a limb, then split each
  // chunk into b-digits.
  std::uint64_t chunk = base;
  unsigned per_chunk = 1;
  while (chunk <= UINT64_MAX / base) {
    chunk *= base;
    ++per_chunk;
  }
  mpz_class rest = n.mpz();
  while (sgn(rest) != 0) {
    std::uint64_t low = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), chunk);
    const bool last = sgn(rest) == 0;
    for (unsigned i = 0; i < per_chunk && (!last || low != 0); ++i) {
      fn(static_cast<std::uint32_t>(low % base));
      low /= base;
    }
  }
}

}  // namespace

DigitVec to_digits(const Nat& n, Base b) {
  DigitVec out{{}, b};
  for_each_digit(n, b, [&](std::uint32_t d) { out.digits.push_back(d); });
  while (!out.digits.empty() && out.digits.back() == 0) out.digits.pop_back();
  return out;
}

Nat from_digits(const DigitVec& dv) {
  const std::uint64_t base = dv.base.value();
  mpz_class acc = 0;
  for (auto it = dv.digits.rbegin(); it != dv.digits.rend(); ++it) {
    if (*it >= base) {
      throw InvalidDigitError("digit " + std::to_string(*it) + " out of range for base " +
                              std::to_string(base));
    }
    acc *= static_cast<unsigned long>(base);
    acc += static_cast<unsigned long>(*it);
  }
  return Nat(acc);
}

Nat digit_sum(const Nat& n, Base b) {
  std::uint64_t sum = 0;
  for_each_digit(n, b, [&](std::uint32_t d) { sum += d; });
  return Nat(sum);
}

std::uint64_t digit_sum(std::uint64_t n, Base b) {
  const std::uint64_t base = b.value();
  std::uint64_t sum = 0;
  for (; n != 0; n /= base) sum += n % base;
  return sum;
}

bool is_anti_niven(const Nat& n, Base b) {
  if (n.is_zero()) throw DomainError("anti-Niven is defined for positive integers only");
  if (n.fits_u64()) return is_anti_niven(n.to_u64(), b);
  return gcd(n, digit_sum(n, b)) == Nat(1);
}

bool is_anti_niven(std::uint64_t n, Base b) {
  if (n == 0) throw DomainError("anti-Niven is defined for positive integers only");
  return anti_niven_given_sum(n, digit_sum(n, b));
}

bool is_niven(const Nat& n, Base b) {
  if (n.is_zero()) throw DomainError("Niven is defined for positive integers only");
  if (n.fits_u64()) return is_niven(n.to_u64(), b);
  return (n % digit_sum(n, b)).is_zero();
}

bool is_niven(std::uint64_t n, Base b) {
  if (n == 0) throw DomainError("Niven is defined for positive integers only");
  return niven_given_sum(n, digit_sum(n, b));
}

DigitOdometer::DigitOdometer(std::uint64_t start, std::uint64_t step, Base b)
    : value_(start), step_(step), base_(static_cast<std::uint32_t>(b.value())) {
  for (std::uint64_t v = start; v != 0; v /= base_) {
    digits_.push_back(static_cast<std::uint32_t>(v % base_));
    sum_ += v % base_;
  }
  for (std::uint64_t v = step; v != 0; v /= base_) step_digits_.push_back(static_cast<std::uint32_t>(v % base_));
}

void DigitOdometer::advance() {
  value_ += step_;
  std::uint32_t carry = 0;
  std::size_t i = 0;
  for (; i < step_digits_.size() || carry != 0; ++i) {
    if (i == digits_.size()) digits_.push_back(0);
    const std::uint64_t add = (i < step_digits_.size() ? step_digits_[i] : 0) + carry;
    std::uint64_t d = digits_[i] + add;
    sum_ -= digits_[i];
    if (d >= base_) {
      d -= base_;
      carry = 1;
    } else {
      carry = 0;
    }
    digits_[i] = static_cast<std::uint32_t>(d);
    sum_ += d;
  }
}

}  // namespace antiniven
