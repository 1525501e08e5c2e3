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

#include "antiniven/primes.hpp"

#include <gmp.h>

#include <algorithm>
#include <map>

namespace antiniven {
namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  for (; e != 0; e >>= 1) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
  }
  return r;
}

// One Brent/Pollard rho attempt with polynomial x^2 + c. Returns a proper
// factor or 0 on a cycle without one. Decrements `iterations`.
mpz_class rho_brent(const mpz_class& n, unsigned long c, std::uint64_t& iterations) {
  constexpr std::uint64_t kBatch = 128;
  mpz_class y = 2, x, ys, q = 1, g = 1, diff;
  std::uint64_t r = 1;
  auto f = [&](mpz_class& v) {
    v *= v;
    v += c;
    v %= n;
  };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t steps = std::min(kBatch, r - k);
      if (iterations < steps) {
        iterations = 0;
        return 0;
      }
      iterations -= steps;
      for (std::uint64_t i = 0; i < steps; ++i) {
        f(y);
        diff = x - y;
        q *= abs(diff);
        q %= n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += steps;
    }
    r *= 2;
  }
  if (g == n) {
    // The batch overshot; walk back one step at a time from the saved point.
    do {
      if (iterations == 0) return 0;
      --iterations;
      f(ys);
      diff = x - ys;
      diff = abs(diff);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? mpz_class(0) : g;
}

void split(const mpz_class& n, std::map<mpz_class, std::uint32_t>& out, std::uint64_t& iterations,
           std::vector<mpz_class>& stuck) {
  if (n == 1) return;
  if (is_probable_prime(Nat(n))) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split(root, out, iterations, stuck);
    split(root, out, iterations, stuck);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    const mpz_class factor = rho_brent(n, c, iterations);
    if (factor != 0) {
      split(factor, out, iterations, stuck);
      split(n / factor, out, iterations, stuck);
      return;
    }
    if (iterations == 0) {
      stuck.push_back(n);
      return;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for every n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_probable_prime(const Nat& n) {
  if (n.fits_u64()) return is_prime_u64(n.to_u64());
  return mpz_probab_prime_p(n.mpz().get_mpz_t(), 30) > 0;
}

Nat FactorMultiset::product() const {
  Nat acc(1);
  for (const auto& [p, e] : factors) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.mpz().get_mpz_t(), e);
    acc *= Nat(pe);
  }
  return acc;
}

std::vector<Nat> FactorMultiset::primes() const {
  std::vector<Nat> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.first);
  return out;
}

FactorMultiset factorize(const Nat& n, const FactorBudget& budget) {
  if (n.is_zero()) throw DomainError("factorize requires n >= 1");
  std::map<mpz_class, std::uint32_t> found;
  mpz_class rest = n.mpz();
  for (unsigned long p = 2; p <= budget.trial_limit; p += (p == 2 ? 1 : 2)) {
    if (static_cast<mpz_class>(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++found[mpz_class(p)];
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  std::uint64_t iterations = budget.rho_iterations;
  std::vector<mpz_class> stuck;
  split(rest, found, iterations, stuck);

  FactorMultiset out;
  for (const auto& [p, e] : found) out.factors.emplace_back(Nat(p), e);
  if (!stuck.empty()) {
    mpz_class left = 1;
    for (const auto& s : stuck) left *= s;
    throw FactorizationIncomplete(std::move(out), Nat(left));
  }
  return out;
}

Nat euler_phi(const Nat& n, const FactorBudget& budget) {
  Nat phi(1);
  for (const auto& [p, e] : factorize(n, budget).factors) {
    phi *= p - Nat(1);
    for (std::uint32_t i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

std::optional<std::uint64_t> smallest_qualifying_prime(Base b, const Nat& d) {
  std::uint64_t rest = b.value() - 1;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    if (d.mod_u64(p) != 0) return p;
  }
  if (rest > 1 && d.mod_u64(rest) != 0) return rest;
  return std::nullopt;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q) {
  if (q < 2 || a % q == 0) throw DomainError("multiplicative order needs a unit modulo a prime");
  std::uint64_t order = q - 1;
  for (const auto& [p, e] : factorize(Nat(q - 1)).factors) {
    const std::uint64_t pu = p.to_u64();
    for (std::uint32_t i = 0; i < e && order % pu == 0; ++i) {
      if (powmod_u64(a, order / pu, q) != 1) break;
      order /= pu;
    }
  }
  return order;
}

bool is_power_of_two_plus_one(Base b) {
  const std::uint64_t r = b.value() - 1;
  return (r & (r - 1)) == 0;
}

}  // namespace antiniven
