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
#include "antiniven/primes.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>
#include <utility>

namespace antiniven {

namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 9> kTheoremTokens{{
    {Theorem::kMemberOfProgression, "thm2.2"},
    {Theorem::kArbitraryLength, "thm2.4"},
    {Theorem::kPrimeBound, "thm2.5"},
    {Theorem::kConsecutiveRun, "thm3.2"},
    {Theorem::kStepTwo, "thm3.3"},
    {Theorem::kParityBound, "thm3.4"},
    {Theorem::kBaseMinusOneEven, "thm3.5"},
    {Theorem::kStepTwoFermatBase, "thm4.1"},
    {Theorem::kBaseMinusOneOddPrime, "thm4.2"},
}};

constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 62;
constexpr std::uint64_t kFirstFailureGuard = 1'000'000'000;

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

struct Run {
  std::uint64_t length;
  std::uint64_t start;
};

bool run_before(const Run& a, const Run& b) {
  return a.length != b.length ? a.length > b.length : a.start < b.start;
}

// Per-worker summary of the runs seen in its chains. Merging is
// associative and commutative, so the result is independent of how classes
// were assigned to workers.
class RunAccumulator {
 public:
  RunAccumulator(std::optional<std::uint64_t> threshold, std::size_t cap)
      : threshold_(threshold), cap_(cap) {}

  void record(std::uint64_t start, std::uint64_t length) {
    if (threshold_) {
      best_ = std::max(best_, length);
      if (length < *threshold_) return;
    } else {
      if (length < best_) return;
      if (length > best_) {
        best_ = length;
        runs_.clear();
        count_ = 0;
      }
    }
    ++count_;
    runs_.push_back({length, start});
    if (runs_.size() > 2 * cap_ + 64) prune();
  }

  void merge(RunAccumulator& other) {
    terms += other.terms;
    hits += other.hits;
    if (!threshold_) {
      if (other.best_ > best_) {
        runs_.clear();
        count_ = 0;
      } else if (other.best_ < best_) {
        other.runs_.clear();
        other.count_ = 0;
      }
    }
    best_ = std::max(best_, other.best_);
    count_ += other.count_;
    runs_.insert(runs_.end(), other.runs_.begin(), other.runs_.end());
    prune();
  }

  void prune() {
    std::sort(runs_.begin(), runs_.end(), run_before);
    if (runs_.size() > cap_) runs_.resize(cap_);
  }

  std::uint64_t best() const { return best_; }
  std::uint64_t count() const { return count_; }
  const std::vector<Run>& runs() const { return runs_; }

  std::uint64_t terms = 0;
  std::uint64_t hits = 0;

 private:
  std::optional<std::uint64_t> threshold_;
  std::size_t cap_;
  std::uint64_t best_ = 0;
  std::uint64_t count_ = 0;
  std::vector<Run> runs_;
};

template <TermPredicate P>
void scan_chain(std::uint64_t first, std::uint64_t step, std::uint64_t hi, Base b, RunAccumulator& acc) {
  DigitOdometer odo(first, step, b);
  std::uint64_t run = 0;
  std::uint64_t run_start = 0;
  for (;;) {
    const std::uint64_t n = odo.value();
    bool ok;
    if constexpr (P == TermPredicate::kAntiNiven) {
      ok = anti_niven_given_sum(n, odo.digit_sum());
    } else {
      ok = niven_given_sum(n, odo.digit_sum());
    }
    ++acc.terms;
    if (ok) {
      ++acc.hits;
      if (run++ == 0) run_start = n;
    } else if (run != 0) {
      acc.record(run_start, run);
      run = 0;
    }
    if (hi - n < step) break;
    odo.advance();
  }
  if (run != 0) acc.record(run_start, run);
}

bool term_passes(const Nat& n, Base b, TermPredicate p) {
  return p == TermPredicate::kAntiNiven ? is_anti_niven(n, b) : is_niven(n, b);
}

std::string describe_prime(std::uint64_t p) { return "p = " + std::to_string(p); }

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

bool is_odd_prime(std::uint64_t b) { return b % 2 == 1 && is_prime_u64(b); }

}  // namespace

std::string_view token(Theorem t) {
  for (const auto& [id, tok] : kTheoremTokens) {
    if (id == t) return tok;
  }
  return "unknown";
}

std::optional<Theorem> parse_theorem(std::string_view tok) {
  for (const auto& [id, name] : kTheoremTokens) {
    if (name == tok) return id;
  }
  return std::nullopt;
}

ScanReport max_run_in_range(Base b, const Nat& d, const Nat& lo, const Nat& hi, const ScanOptions& options) {
  if (lo.is_zero()) throw DomainError("scan range must start at 1 or above");
  if (hi < lo) throw DomainError("empty scan range: from " + lo.to_string() + " exceeds to " + hi.to_string());
  if (d.is_zero()) throw DomainError("step must be at least 1");
  if (hi > Nat(kScanLimit) || d > Nat(kScanLimit)) throw DomainError("scan bounds and step must be below 2^62");
  if (options.witness_cap == 0) throw DomainError("witness cap must be at least 1");

  const std::uint64_t step = d.to_u64();
  const std::uint64_t first = lo.to_u64();
  const std::uint64_t last = hi.to_u64();
  const std::uint64_t classes = std::min(step, last - first + 1);
  const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(options.threads), classes));
  const std::uint64_t chunk = std::max<std::uint64_t>(1, classes / (std::uint64_t{threads} * 16));

  std::vector<RunAccumulator> partial(threads, RunAccumulator(options.min_witness_length, options.witness_cap));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&](RunAccumulator& acc) {
    for (;;) {
      const std::uint64_t begin = next.fetch_add(chunk);
      if (begin >= classes) return;
      const std::uint64_t end = std::min(classes, begin + chunk);
      for (std::uint64_t r = begin; r < end; ++r) {
        if (options.predicate == TermPredicate::kAntiNiven) {
          scan_chain<TermPredicate::kAntiNiven>(first + r, step, last, b, acc);
        } else {
          scan_chain<TermPredicate::kNiven>(first + r, step, last, b, acc);
        }
      }
    }
  };
  if (threads == 1) {
    worker(partial[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (auto& acc : partial) pool.emplace_back(worker, std::ref(acc));
  }

  RunAccumulator total = std::move(partial[0]);
  for (std::size_t i = 1; i < partial.size(); ++i) total.merge(partial[i]);
  total.prune();

  ScanReport report;
  report.base = b;
  report.step = d;
  report.lo = lo;
  report.hi = hi;
  report.predicate = options.predicate;
  report.min_witness_length = options.min_witness_length;
  report.max_length = total.best();
  report.witness_count = total.count();
  report.terms_scanned = total.terms;
  report.anti_niven_count = total.hits;
  for (const Run& r : total.runs()) report.witnesses.push_back(APSpec{Nat(r.start), d, r.length});
  return report;
}

std::optional<Nat> contains_anti_niven(const Nat& n, const Nat& d, Base b, std::optional<std::uint64_t> step_cap) {
  if (n.is_zero() || d.is_zero()) throw DomainError("contains_anti_niven requires n >= 1 and d >= 1");
  if (gcd(gcd(n, d), Nat(b.value() - 1)) != Nat(1)) return std::nullopt;
  Nat term = n;
  for (std::uint64_t j = 0;; ++j) {
    if (step_cap && j >= *step_cap) {
      throw BudgetError("no anti-Niven term among the first " + std::to_string(*step_cap) +
                        " terms, although gcd(n, d, b-1) = 1 guarantees one exists");
    }
    if (is_anti_niven(term, b)) return Nat(j);
    term += d;
  }
}

Nat first_failure(const Nat& n, const Nat& d, Base b) {
  if (n.is_zero() || d.is_zero()) throw DomainError("first_failure requires n >= 1 and d >= 1");
  const Nat guard_end = n + d * Nat(kFirstFailureGuard);
  if (guard_end.fits_u64()) {
    DigitOdometer odo(n.to_u64(), d.to_u64(), b);
    for (std::uint64_t j = 0; j < kFirstFailureGuard; ++j, odo.advance()) {
      if (!anti_niven_given_sum(odo.value(), odo.digit_sum())) return Nat(j);
    }
  } else {
    Nat term = n;
    for (std::uint64_t j = 0; j < kFirstFailureGuard; ++j, term += d) {
      if (!is_anti_niven(term, b)) return Nat(j);
    }
  }
  throw InternalError("first_failure safety cap of 10^9 steps reached for n = " + n.to_string() +
                      ", d = " + d.to_string());
}

std::vector<BoundResult> upper_bound_candidates(Base b, const Nat& d) {
  if (d.is_zero()) throw DomainError("step must be at least 1");
  const std::uint64_t bv = b.value();
  std::vector<BoundResult> found;

  if (bv > 2) {
    if (auto p = smallest_qualifying_prime(b, d)) {
      found.push_back({BoundKind::kUpper, Nat(*p - 1), Theorem::kPrimeBound,
                       "b > 2; " + describe_prime(*p) + " is the smallest prime dividing b-1 but not d"});
    }
  }
  if (bv % 2 == 0 && bv >= 6 && d.is_odd() && d >= Nat(3) && d <= Nat(bv / 2)) {
    const std::uint64_t dv = d.to_u64();
    found.push_back({BoundKind::kUpper, Nat(ceil_div(2 * bv, dv) + 2), Theorem::kParityBound,
                     "b even, b >= 6, d odd, 3 <= d <= b/2; bound ceil(2b/d) + 2"});
  }
  if (bv % 2 == 0 && d == Nat(bv - 1)) {
    found.push_back({BoundKind::kExact, Nat(2 * bv + 1), Theorem::kBaseMinusOneEven,
                     "b even, d = b-1; maximum 2b + 1"});
  }
  if (bv > 2 && d == Nat(1)) {
    const std::uint64_t p = *smallest_qualifying_prime(b, d);
    found.push_back({BoundKind::kExact, Nat(p - 1), Theorem::kConsecutiveRun,
                     "d = 1, b > 2; " + describe_prime(p) + " is the smallest prime dividing b-1"});
  }
  if (bv > 2 && d == Nat(2) && !is_power_of_two_plus_one(b)) {
    const std::uint64_t p = *smallest_qualifying_prime(b, d);
    found.push_back({BoundKind::kExact, Nat(p - 1), Theorem::kStepTwo,
                     "d = 2, b > 2, b != 2^r + 1; " + describe_prime(p) +
                         " is the smallest odd prime dividing b-1"});
  }

  return found;
}

BoundResult theoretical_upper_bound(Base b, const Nat& d) {
  const auto found = upper_bound_candidates(b, d);
  if (found.empty()) return {BoundKind::kInapplicable, std::nullopt, std::nullopt, "no upper bound applies"};
  return *std::min_element(found.begin(), found.end(), [](const BoundResult& x, const BoundResult& y) {
    if (*x.value != *y.value) return *x.value < *y.value;
    return x.kind == BoundKind::kExact && y.kind != BoundKind::kExact;
  });
}

std::vector<BoundResult> lower_bound_candidates(Base b, const Nat& d) {
  if (d.is_zero()) throw DomainError("step must be at least 1");
  const std::uint64_t bv = b.value();
  std::vector<BoundResult> found;

  if (bv > 2 && d == Nat(1)) {
    const std::uint64_t p = *smallest_qualifying_prime(b, d);
    found.push_back({BoundKind::kExact, Nat(p - 1), Theorem::kConsecutiveRun,
                     "d = 1, b > 2; " + describe_prime(p) + " is the smallest prime dividing b-1"});
  }
  if (d == Nat(2)) {
    if (is_power_of_two_plus_one(b)) {
      found.push_back({BoundKind::kLower, Nat(bv), Theorem::kStepTwoFermatBase, "d = 2, b = 2^r + 1; at least b"});
    } else {
      const std::uint64_t p = *smallest_qualifying_prime(b, d);
      found.push_back({BoundKind::kExact, Nat(p - 1), Theorem::kStepTwo,
                       "d = 2, b > 2, b != 2^r + 1; " + describe_prime(p) +
                           " is the smallest odd prime dividing b-1"});
    }
  }
  if (bv % 2 == 0 && d == Nat(bv - 1)) {
    found.push_back({BoundKind::kExact, Nat(2 * bv + 1), Theorem::kBaseMinusOneEven,
                     "b even, d = b-1; maximum 2b + 1"});
  }
  if (is_odd_prime(bv) && d == Nat(bv - 1)) {
    found.push_back({BoundKind::kLower, Nat(2 * bv + 1), Theorem::kBaseMinusOneOddPrime,
                     "b odd prime, d = b-1; at least 2b + 1"});
  }

  return found;
}

BoundResult known_lower_bound(Base b, const Nat& d) {
  const auto found = lower_bound_candidates(b, d);
  if (found.empty()) return {BoundKind::kInapplicable, std::nullopt, std::nullopt, "no lower bound applies"};
  return *std::max_element(found.begin(), found.end(), [](const BoundResult& x, const BoundResult& y) {
    if (*x.value != *y.value) return *x.value < *y.value;
    return x.kind == BoundKind::kExact && y.kind != BoundKind::kExact;
  });
}

std::string_view token(Conjecture c) {
  return c == Conjecture::kOddBaseEvenStep ? "4.3" : "4.4";
}

std::optional<Conjecture> parse_conjecture(std::string_view tok) {
  if (tok == "4.3") return Conjecture::kOddBaseEvenStep;
  if (tok == "4.4") return Conjecture::kParityBoundSharp;
  return std::nullopt;
}

ConjectureReport explore_conjecture(Conjecture id, Base b, const Nat& d, const Nat& hi,
                                    const ExploreOptions& options) {
  const std::uint64_t bv = b.value();
  ConjectureReport out;
  out.id = id;
  TermPredicate predicate = TermPredicate::kAntiNiven;

  if (id == Conjecture::kOddBaseEvenStep) {
    if (bv % 2 == 0) throw DomainError("hypothesis failed: b must be odd");
    if (is_power_of_two_plus_one(b)) throw DomainError("hypothesis failed: b must not be of the form 2^r + 1");
    if (d.is_zero() || d.is_odd()) throw DomainError("hypothesis failed: d must be even and positive");
    if (options.literal_niven) throw DomainError("the Niven reading only applies to conjecture 4.4");
    const auto p = smallest_qualifying_prime(b, d);
    if (!p) throw DomainError("hypothesis failed: no prime divides b-1 without dividing d");
    out.target_length = *p - 1;
    out.note = "target p - 1 with " + describe_prime(*p) + "; searching anti-Niven progressions";
  } else {
    if (bv % 2 != 0 || bv < 6) throw DomainError("hypothesis failed: b must be even and at least 6");
    if (!d.is_odd()) throw DomainError("hypothesis failed: d must be odd");
    if (d < Nat(3) || d > Nat(bv / 2)) throw DomainError("hypothesis failed: 3 <= d <= b/2");
    out.target_length = ceil_div(2 * bv, d.to_u64()) + 2;
    if (options.literal_niven) {
      predicate = TermPredicate::kNiven;
      out.note = "literal reading: searching b-Niven progressions of length ceil(2b/d) + 2; "
                 "the surrounding discussion concerns anti-Niven progressions";
    } else {
      out.note = "anti-Niven reading of a statement that literally says b-Niven; "
                 "pass the Niven flag to search the literal reading";
    }
  }

  if (hi.is_zero()) throw DomainError("search bound must be at least 1");
  ScanOptions scan_options;
  scan_options.threads = options.threads;
  scan_options.witness_cap = options.witness_cap;
  scan_options.predicate = predicate;
  scan_options.min_witness_length = out.target_length;
  out.scan = max_run_in_range(b, d, Nat(1), hi, scan_options);
  out.witness_found = out.scan.witness_count > 0;

  for (const APSpec& w : out.scan.witnesses) {
    for (std::uint64_t j = 0; j < w.length; ++j) {
      if (!term_passes(w.term(j), b, predicate)) {
        throw InternalError("explorer witness at " + w.start.to_string() + " failed re-verification");
      }
    }
  }
  return out;
}

}  // namespace antiniven
