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

#include "antiniven/antiniven.h"

#include "antiniven/errors.hpp"
#include "antiniven/report.hpp"

#include <bit>
#include <stop_token>
#include <string>
#include <variant>

using namespace antiniven;

struct an_config {
  unsigned threads = 0;
  std::uint64_t bit_cap = kDefaultBitCap;
  std::size_t witness_cap = 32;
  bool audit = false;
  bool structural = false;
  bool niven_reading = false;
  std::stop_source stop;
};

struct an_result {
  std::variant<CheckReport, ScanReport, BoundReport, ConstructedAP, ApMember, DensityReport, ConjectureReport> report;
  JsonOptions json_options;
  unsigned threads = 0;
  std::string rendered;
};

namespace {

thread_local std::string g_last_error;

const an_config& config_or_default(const an_config* c) {
  static const an_config kDefault;
  return c ? *c : kDefault;
}

// Runs fn, converting exceptions into status codes and the thread-local
// error message.
template <typename Fn>
an_status guarded(an_result** out, Fn&& fn) {
  if (out == nullptr) {
    g_last_error = "output pointer is NULL";
    return AN_ERR_USAGE;
  }
  *out = nullptr;
  try {
    *out = new an_result(fn());
    g_last_error.clear();
    return AN_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return AN_ERR_USAGE;
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return AN_ERR_DOMAIN;
  } catch (const ResourceError& e) {
    g_last_error = e.what();
    return AN_ERR_RESOURCE;
  } catch (const BudgetError& e) {
    g_last_error = e.what();
    return AN_ERR_BUDGET;
  } catch (const CancelledError& e) {
    g_last_error = e.what();
    return AN_ERR_CANCELLED;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("malformed JSON report: ") + e.what();
    return AN_ERR_USAGE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return AN_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AN_ERR_INTERNAL;
  }
}

std::string arg(const char* s, const char* name) {
  if (s == nullptr) throw ParseError(std::string("missing argument '") + name + "'");
  return s;
}

// Decimal, or B^E with both parts decimal (so ranges read like "10^7").
Nat parse_integer(const std::string& text, const char* name) {
  const auto caret = text.find('^');
  if (caret == std::string::npos) return Nat::parse(text);
  const Nat base = Nat::parse(text.substr(0, caret));
  const Nat exponent = Nat::parse(text.substr(caret + 1));
  if (!base.fits_u64() || !exponent.fits_u64()) throw DomainError(std::string(name) + " is too large");
  const std::uint64_t b = base.to_u64(), e = exponent.to_u64();
  if (b > 1 && e > (std::uint64_t{1} << 24) / static_cast<std::uint64_t>(std::bit_width(b))) {
    throw DomainError(std::string(name) + " is too large");
  }
  return Nat::pow(b, e);
}

Nat nat_arg(const char* s, const char* name) { return parse_integer(arg(s, name), name); }

std::uint64_t u64_arg(const char* s, const char* name, std::uint64_t fallback) {
  if (s == nullptr) return fallback;
  const Nat v = parse_integer(s, name);
  if (!v.fits_u64()) throw DomainError(std::string(name) + " is too large");
  return v.to_u64();
}

an_result make(decltype(an_result::report) report, const an_config& c) {
  an_result r{std::move(report), {}, c.threads, {}};
  r.json_options.include_audit = c.audit;
  r.json_options.structural_giants = c.structural;
  return r;
}

ConstructOptions construct_options(const an_config& c) {
  ConstructOptions o;
  o.bit_cap = c.bit_cap;
  o.stop = c.stop.get_token();
  return o;
}

}  // namespace

extern "C" {

const char* an_version(void) { return "1.0.0"; }

const char* an_status_name(an_status status) {
  switch (status) {
    case AN_OK: return "ok";
    case AN_ERR_USAGE: return "usage";
    case AN_ERR_DOMAIN: return "domain";
    case AN_ERR_RESOURCE: return "resource";
    case AN_ERR_BUDGET: return "budget";
    case AN_ERR_CANCELLED: return "cancelled";
    case AN_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* an_last_error(void) { return g_last_error.c_str(); }

an_config* an_config_new(void) { return new (std::nothrow) an_config(); }
void an_config_free(an_config* config) { delete config; }
void an_config_set_threads(an_config* config, unsigned threads) {
  if (config) config->threads = threads;
}

an_status an_config_set_bit_cap(an_config* config, unsigned long long bits) {
  if (!config || bits == 0) {
    g_last_error = "bit cap must be positive";
    return AN_ERR_USAGE;
  }
  config->bit_cap = bits;
  return AN_OK;
}

an_status an_config_set_witness_cap(an_config* config, unsigned cap) {
  if (!config || cap == 0) {
    g_last_error = "witness cap must be positive";
    return AN_ERR_USAGE;
  }
  config->witness_cap = cap;
  return AN_OK;
}

void an_config_set_audit(an_config* config, int enabled) {
  if (config) config->audit = enabled != 0;
}
void an_config_set_structural(an_config* config, int enabled) {
  if (config) config->structural = enabled != 0;
}
void an_config_set_niven_reading(an_config* config, int enabled) {
  if (config) config->niven_reading = enabled != 0;
}
void an_config_request_stop(an_config* config) {
  if (config) config->stop.request_stop();
}

an_status an_check(const char* n, const char* base, an_result** out) {
  return guarded(out, [&] {
    return make(check_number(nat_arg(n, "n"), Base::parse(arg(base, "base"))), config_or_default(nullptr));
  });
}

an_status an_scan(const an_config* config, const char* base, const char* step, const char* from, const char* to,
                  an_result** out) {
  return guarded(out, [&] {
    const an_config& c = config_or_default(config);
    ScanOptions o;
    o.threads = c.threads;
    o.witness_cap = c.witness_cap;
    return make(max_run_in_range(Base::parse(arg(base, "base")), nat_arg(step, "step"), nat_arg(from, "from"),
                                 nat_arg(to, "to"), o),
                c);
  });
}

an_status an_bound(const char* base, const char* step, an_result** out) {
  return guarded(out, [&] {
    return make(bound_report(Base::parse(arg(base, "base")), nat_arg(step, "step")), config_or_default(nullptr));
  });
}

an_status an_construct(const an_config* config, const char* theorem, const char* base, const char* length,
                       const char* index, const char* start, const char* step, an_result** out) {
  return guarded(out, [&]() -> an_result {
    const an_config& c = config_or_default(config);
    const std::string id = arg(theorem, "theorem");
    const auto th = parse_theorem(id);
    if (!th) throw ParseError("unknown construction '" + id + "'");
    const Base b = Base::parse(arg(base, "base"));
    const ConstructOptions o = construct_options(c);
    const std::uint64_t k = u64_arg(index, "index", 1);
    switch (*th) {
      case Theorem::kMemberOfProgression:
        return make(construct_member_of_ap(nat_arg(start, "start"), nat_arg(step, "step"), b, o), c);
      case Theorem::kArbitraryLength:
        return make(construct_arbitrary_length(b, u64_arg(arg(length, "length").c_str(), "length", 0), o), c);
      case Theorem::kConsecutiveRun: return make(construct_consecutive_run(b, k, o), c);
      case Theorem::kStepTwo: return make(construct_2ap(b, k, o), c);
      case Theorem::kBaseMinusOneEven: return make(construct_b_minus_1_ap_even(b, k, o), c);
      case Theorem::kStepTwoFermatBase: return make(construct_2ap_fermat(b), c);
      case Theorem::kBaseMinusOneOddPrime: return make(construct_b_minus_1_ap_odd_prime(b), c);
      case Theorem::kPrimeBound:
      case Theorem::kParityBound:
        break;
    }
    throw ParseError("'" + id + "' is a bound, not a construction");
  });
}

an_status an_density(const an_config* config, const char* base, const char* limit, an_result** out) {
  return guarded(out, [&] {
    const an_config& c = config_or_default(config);
    DensityOptions o;
    o.threads = c.threads;
    return make(empirical_density(Base::parse(arg(base, "base")), nat_arg(limit, "limit"), o), c);
  });
}

an_status an_conjecture(const an_config* config, const char* id, const char* base, const char* step, const char* to,
                        an_result** out) {
  return guarded(out, [&] {
    const an_config& c = config_or_default(config);
    const std::string tok = arg(id, "id");
    const auto which = parse_conjecture(tok);
    if (!which) throw ParseError("unknown conjecture '" + tok + "' (expected 4.3 or 4.4)");
    ExploreOptions o;
    o.threads = c.threads;
    o.witness_cap = c.witness_cap;
    o.literal_niven = c.niven_reading;
    return make(explore_conjecture(*which, Base::parse(arg(base, "base")), nat_arg(step, "step"), nat_arg(to, "to"), o),
                c);
  });
}

an_status an_parse_report(const char* json, an_result** out) {
  return guarded(out, [&]() -> an_result {
    const Json j = Json::parse(arg(json, "json"));
    const std::string kind = j.at("report").get<std::string>();
    const an_config& c = config_or_default(nullptr);
    if (kind == "check") return make(check_from_json(j), c);
    if (kind == "scan") return make(scan_from_json(j), c);
    if (kind == "bound") return make(bound_report_from_json(j), c);
    if (kind == "construction") {
      an_result r = make(construction_from_json(j), c);
      verify(std::get<ConstructedAP>(r.report));
      r.json_options.include_audit = j.contains("audit");
      return r;
    }
    if (kind == "member") return make(member_from_json(j), c);
    if (kind == "density") return make(density_from_json(j), c);
    if (kind == "conjecture") return make(conjecture_from_json(j), c);
    throw ParseError("unknown report kind '" + kind + "'");
  });
}

const char* an_result_kind(const an_result* result) {
  if (!result) return "";
  static constexpr const char* kKinds[] = {"check", "scan", "bound", "construction", "member", "density", "conjecture"};
  return kKinds[result->report.index()];
}

const char* an_result_render(an_result* result, an_format format) {
  if (!result) {
    g_last_error = "result is NULL";
    return nullptr;
  }
  try {
    const JsonOptions& jo = result->json_options;
    result->rendered = std::visit(
        [&](const auto& r) -> std::string {
          using T = std::decay_t<decltype(r)>;
          switch (format) {
            case AN_FORMAT_JSON:
              if constexpr (std::is_same_v<T, ConstructedAP> || std::is_same_v<T, ApMember>) {
                return dump(to_json(r, jo));
              } else {
                return dump(to_json(r));
              }
            case AN_FORMAT_CSV:
              if constexpr (std::is_same_v<T, DensityReport>) {
                if (!r.sample_limit.fits_u64() || r.method != DensityMethod::kExhaustive) {
                  throw DomainError("CSV convergence rows need an exhaustive density run");
                }
                return to_csv(density_convergence(r.base, r.sample_limit.to_u64(), result->threads));
              } else {
                return to_csv(r);
              }
            case AN_FORMAT_PLAIN:
              if constexpr (std::is_same_v<T, ConstructedAP>) {
                return to_plain(r, jo.include_audit);
              } else {
                return to_plain(r);
              }
          }
          throw ParseError("unknown output format");
        },
        result->report);
    return result->rendered.c_str();
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

int an_result_flag(const an_result* result) {
  if (!result) return 0;
  if (const auto* c = std::get_if<CheckReport>(&result->report)) return c->anti_niven ? 1 : 0;
  if (const auto* c = std::get_if<ConjectureReport>(&result->report)) return c->witness_found ? 1 : 0;
  return 1;
}

void an_result_free(an_result* result) { delete result; }

}  // extern "C"
