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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace antiniven {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "Nat assumes an LP64 platform for mpz <-> uint64 conversions");

// Arbitrary-precision nonnegative integer. Subtraction that would go
// negative throws DomainError instead of wrapping.
class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT: implicit by intent
  explicit Nat(const mpz_class& v);

  // Decimal digits only, no sign, no whitespace. Leading zeros are accepted.
  static Nat parse(std::string_view decimal);
  static Nat pow(std::uint64_t base, std::uint64_t exponent);

  std::string to_string() const { return v_.get_str(10); }
  std::size_t bit_length() const;
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  bool fits_u64() const { return mpz_fits_ulong_p(v_.get_mpz_t()) != 0; }
  // Throws DomainError when the value does not fit.
  std::uint64_t to_u64() const;
  std::uint64_t mod_u64(std::uint64_t m) const;
  double to_double() const { return v_.get_d(); }

  const mpz_class& mpz() const { return v_; }

  Nat& operator+=(const Nat& o) { v_ += o.v_; return *this; }
  Nat& operator-=(const Nat& o);
  Nat& operator*=(const Nat& o) { v_ *= o.v_; return *this; }
  Nat& operator/=(const Nat& o);
  Nat& operator%=(const Nat& o);

  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator-(Nat a, const Nat& b) { return a -= b; }
  friend Nat operator*(Nat a, const Nat& b) { return a *= b; }
  friend Nat operator/(Nat a, const Nat& b) { return a /= b; }
  friend Nat operator%(Nat a, const Nat& b) { return a %= b; }

  friend bool operator==(const Nat& a, const Nat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class v_{0};
};

Nat gcd(const Nat& a, const Nat& c);
Nat lcm(const Nat& a, const Nat& c);
// base^exponent mod modulus; modulus must be nonzero.
Nat powmod(const Nat& base, const Nat& exponent, const Nat& modulus);

// Radix of every digit operation. Limited to 32-bit digits.
class Base {
 public:
  static constexpr std::uint64_t kMax = 0xFFFFFFFFull;

  explicit Base(std::uint64_t b);
  static Base parse(std::string_view decimal);

  std::uint64_t value() const noexcept { return b_; }
  bool is_even() const noexcept { return b_ % 2 == 0; }

  friend bool operator==(Base, Base) = default;

 private:
  std::uint64_t b_;
};

}  // namespace antiniven
