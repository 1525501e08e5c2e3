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

// JSON, CSV and plain-text renderings of every report, plus JSON readers
// that reproduce the in-memory structures. JSON keys are sorted; Nat values
// are decimal strings.

#include "antiniven/ap_analysis.hpp"
#include "antiniven/constructions.hpp"
#include "antiniven/density.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace antiniven {

using Json = nlohmann::json;

struct CheckReport {
  Nat n;
  Base base{10};
  Nat digit_sum;
  Nat gcd;
  bool anti_niven = false;
  bool niven = false;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

CheckReport check_number(const Nat& n, Base b);

struct BoundReport {
  Base base{10};
  Nat step;
  BoundResult upper;
  BoundResult lower;
  std::vector<BoundResult> upper_candidates;
  std::vector<BoundResult> lower_candidates;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport bound_report(Base b, const Nat& d);

struct JsonOptions {
  // Nat fields above this many bits become {"base", "terms": [[exponent,
  // digit], ...]} when `structural_giants` is set.
  bool structural_giants = false;
  std::size_t giant_bits = 100'000;
  // Adds per-term (term, digit sum, gcd) rows to constructions.
  bool include_audit = false;
};

Json nat_to_json(const Nat& v, Base b, const JsonOptions& options = {});
Nat nat_from_json(const Json& j);

Json to_json(const CheckReport& r);
Json to_json(const ScanReport& r);
Json to_json(const BoundResult& r);
Json to_json(const BoundReport& r);
Json to_json(const ConstructedAP& ap, const JsonOptions& options = {});
Json to_json(const ApMember& m, const JsonOptions& options = {});
Json to_json(const DensityReport& r);
Json to_json(const ConjectureReport& r);

CheckReport check_from_json(const Json& j);
ScanReport scan_from_json(const Json& j);
BoundResult bound_result_from_json(const Json& j);
BoundReport bound_report_from_json(const Json& j);
ConstructedAP construction_from_json(const Json& j);
ApMember member_from_json(const Json& j);
DensityReport density_from_json(const Json& j);
ConjectureReport conjecture_from_json(const Json& j);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

std::string to_csv(const CheckReport& r);
std::string to_csv(const ScanReport& r);
std::string to_csv(const BoundReport& r);
std::string to_csv(const ConstructedAP& ap);
std::string to_csv(const ApMember& m);
std::string to_csv(const std::vector<ConvergenceRow>& rows);
std::string to_csv(const ConjectureReport& r);

std::string to_plain(const CheckReport& r);
std::string to_plain(const ScanReport& r);
std::string to_plain(const BoundReport& r);
std::string to_plain(const ConstructedAP& ap, bool include_audit = false);
std::string to_plain(const ApMember& m);
std::string to_plain(const DensityReport& r);
std::string to_plain(const ConjectureReport& r);

std::string_view token(BoundKind k);
std::string_view token(TermPredicate p);
std::string_view token(DensityMethod m);

}  // namespace antiniven
