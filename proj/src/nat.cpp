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

#include "antiniven/nat.hpp"

#include "antiniven/errors.hpp"

#include <algorithm>

namespace antiniven {

Nat::Nat(const mpz_class& v) : v_(v) {
  if (sgn(v_) < 0) throw DomainError("Nat cannot hold a negative value");
}

Nat Nat::parse(std::string_view decimal) {
  if (decimal.empty()) throw ParseError("expected a nonnegative decimal integer, got ''");
  if (!std::all_of(decimal.begin(), decimal.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw ParseError("expected a nonnegative decimal integer, got '" + std::string(decimal) + "'");
  }
  Nat out;
  out.v_.set_str(std::string(decimal), 10);
  return out;
}

Nat Nat::pow(std::uint64_t base, std::uint64_t exponent) {
  Nat out;
  mpz_ui_pow_ui(out.v_.get_mpz_t(), base, exponent);
  return out;
}

std::size_t Nat::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
}

std::uint64_t Nat::to_u64() const {
  if (!fits_u64()) throw DomainError("value " + to_string() + " does not fit in 64 bits");
  return v_.get_ui();
}

std::uint64_t Nat::mod_u64(std::uint64_t m) const {
  if (m == 0) throw DomainError("modulus must be nonzero");
  return mpz_fdiv_ui(v_.get_mpz_t(), m);
}

Nat& Nat::operator-=(const Nat& o) {
  if (cmp(v_, o.v_) < 0) throw DomainError("Nat subtraction would be negative");
  v_ -= o.v_;
  return *this;
}

Nat& Nat::operator/=(const Nat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  mpz_fdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

Nat& Nat::operator%=(const Nat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  mpz_fdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

Nat gcd(const Nat& a, const Nat& c) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), c.mpz().get_mpz_t());
  return Nat(g);
}

Nat lcm(const Nat& a, const Nat& c) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.mpz().get_mpz_t(), c.mpz().get_mpz_t());
  return Nat(l);
}

Nat powmod(const Nat& base, const Nat& exponent, const Nat& modulus) {
  if (modulus.is_zero()) throw DomainError("powmod modulus must be nonzero");
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent.mpz().get_mpz_t(),
           modulus.mpz().get_mpz_t());
  return Nat(r);
}

Base::Base(std::uint64_t b) : b_(b) {
  if (b < 2) throw DomainError("base must be at least 2, got " + std::to_string(b));
  if (b > kMax) throw DomainError("base must be below 2^32, got " + std::to_string(b));
}

Base Base::parse(std::string_view decimal) {
  const Nat n = Nat::parse(decimal);
  if (!n.fits_u64() || n.to_u64() > kMax) {
    throw DomainError("base must be below 2^32, got " + n.to_string());
  }
  return Base(n.to_u64());
}

}  // namespace antiniven
