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

// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success or positive verdict, 1 negative predicate (check),
// 2 usage or hypothesis violation, 3 resource or budget limit, 4 search
// exhausted without a witness (conjecture), 5 internal verification failure.

#include "antiniven/antiniven.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitExhausted = 4;
constexpr int kExitInternal = 5;

int exit_code_for(an_status s) {
  switch (s) {
    case AN_OK: return kExitOk;
    case AN_ERR_USAGE:
    case AN_ERR_DOMAIN: return kExitUsage;
    case AN_ERR_RESOURCE:
    case AN_ERR_BUDGET:
    case AN_ERR_CANCELLED: return kExitResource;
    case AN_ERR_INTERNAL: return kExitInternal;
  }
  return kExitInternal;
}

struct ResultDeleter {
  void operator()(an_result* r) const { an_result_free(r); }
};
struct ConfigDeleter {
  void operator()(an_config* c) const { an_config_free(c); }
};
using ResultPtr = std::unique_ptr<an_result, ResultDeleter>;

const char* opt(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic progressions of integers coprime to their digit sums"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(an_version()));

  std::string format = "plain";
  std::optional<unsigned> threads;
  std::optional<unsigned long long> bit_cap;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--threads", threads, "Worker threads (default: $ANTINIVEN_THREADS, else all cores)");
  app.add_option("--bit-cap", bit_cap, "Bit-length cap for constructed integers (default: $ANTINIVEN_BIT_CAP, else 2^26)");

  std::string base;
  std::string step;
  std::optional<std::string> from;
  std::optional<std::string> to;
  std::optional<std::string> length;
  std::optional<std::string> index;
  std::optional<std::string> start;
  std::string limit;
  std::string number;
  std::string theorem;
  std::string conjecture_id;
  bool verify = false;
  bool structural = false;
  bool niven = false;
  unsigned witness_cap = 32;

  auto* check = app.add_subcommand("check", "Digit sum, gcd and anti-Niven/Niven verdicts for n");
  check->add_option("n", number, "Positive integer")->required();
  check->add_option("--base", base, "Radix b >= 2")->required();

  auto* scan = app.add_subcommand("scan", "Longest anti-Niven d-AP inside [from, to]");
  scan->add_option("--base", base)->required();
  scan->add_option("--step", step)->required();
  scan->add_option("--from", from)->required();
  scan->add_option("--to", to)->required();
  scan->add_option("--witness-cap", witness_cap, "Witnesses listed per report");

  auto* bound = app.add_subcommand("bound", "Known upper and lower bounds for (b, d)");
  bound->add_option("--base", base)->required();
  bound->add_option("--step", step)->required();

  auto* construct = app.add_subcommand("construct", "Build and verify an explicit witness progression");
  construct->add_option("theorem", theorem, "thm2.2 | thm2.4 | thm3.2 | thm3.3 | thm3.5 | thm4.1 | thm4.2")
      ->required();
  construct->add_option("--base", base)->required();
  construct->add_option("--length", length, "Run length t (thm2.4)");
  construct->add_option("--index", index, "Which member of an infinite family, k >= 1 (thm3.2, thm3.3, thm3.5)");
  construct->add_option("--start", start, "First term n of the progression (thm2.2)");
  construct->add_option("--step", step, "Common difference d (thm2.2)");
  construct->add_flag("--verify", verify, "Print per-term (term, digit sum, gcd) audit rows");
  construct->add_flag("--structural", structural, "Write integers above 10^5 bits as sparse digit lists");

  auto* density = app.add_subcommand("density", "Empirical anti-Niven density against the closed form");
  density->add_option("--base", base)->required();
  density->add_option("--limit", limit)->required();

  auto* conjecture = app.add_subcommand("conjecture", "Search for progressions predicted by an open conjecture");
  conjecture->add_option("id", conjecture_id, "4.3 | 4.4")->required();
  conjecture->add_option("--base", base)->required();
  conjecture->add_option("--step", step)->required();
  conjecture->add_option("--to", to)->required();
  conjecture->add_option("--witness-cap", witness_cap);
  conjecture->add_flag("--niven", niven, "4.4 only: search b-Niven progressions (literal wording)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::unique_ptr<an_config, ConfigDeleter> config(an_config_new());
  try {
    if (!threads) {
      if (auto v = env("ANTINIVEN_THREADS")) threads = static_cast<unsigned>(std::stoul(*v));
    }
    if (!bit_cap) {
      if (auto v = env("ANTINIVEN_BIT_CAP")) bit_cap = std::stoull(*v);
    }
  } catch (const std::exception&) {
    std::cerr << "error: ANTINIVEN_THREADS and ANTINIVEN_BIT_CAP must be nonnegative integers\n";
    return kExitUsage;
  }
  if (threads) an_config_set_threads(config.get(), *threads);
  if (bit_cap && an_config_set_bit_cap(config.get(), *bit_cap) != AN_OK) {
    std::cerr << "error: " << an_last_error() << "\n";
    return kExitUsage;
  }
  if (an_config_set_witness_cap(config.get(), witness_cap) != AN_OK) {
    std::cerr << "error: " << an_last_error() << "\n";
    return kExitUsage;
  }
  an_config_set_audit(config.get(), verify ? 1 : 0);
  an_config_set_structural(config.get(), structural ? 1 : 0);
  an_config_set_niven_reading(config.get(), niven ? 1 : 0);

  an_result* raw = nullptr;
  an_status status = AN_OK;
  if (*check) {
    status = an_check(number.c_str(), base.c_str(), &raw);
  } else if (*scan) {
    status = an_scan(config.get(), base.c_str(), step.c_str(), opt(from), opt(to), &raw);
  } else if (*bound) {
    status = an_bound(base.c_str(), step.c_str(), &raw);
  } else if (*construct) {
    status = an_construct(config.get(), theorem.c_str(), base.c_str(), opt(length), opt(index), opt(start),
                          step.empty() ? nullptr : step.c_str(), &raw);
  } else if (*density) {
    status = an_density(config.get(), base.c_str(), limit.c_str(), &raw);
  } else if (*conjecture) {
    status = an_conjecture(config.get(), conjecture_id.c_str(), base.c_str(), step.c_str(), opt(to), &raw);
  }
  ResultPtr result(raw);
  if (status != AN_OK) {
    std::cerr << "error (" << an_status_name(status) << "): " << an_last_error() << "\n";
    return exit_code_for(status);
  }

  const an_format fmt = format == "json" ? AN_FORMAT_JSON : (format == "csv" ? AN_FORMAT_CSV : AN_FORMAT_PLAIN);
  const char* text = an_result_render(result.get(), fmt);
  if (text == nullptr) {
    std::cerr << "error: " << an_last_error() << "\n";
    return kExitUsage;
  }
  std::fwrite(text, 1, std::char_traits<char>::length(text), stdout);

  if (*check) return an_result_flag(result.get()) ? kExitOk : kExitNegative;
  if (*conjecture) return an_result_flag(result.get()) ? kExitOk : kExitExhausted;
  return kExitOk;
}
