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

#include "antiniven/digits.hpp"
#include "antiniven/errors.hpp"

#include <cstdio>
#include <sstream>

namespace antiniven {

namespace {

template <typename T>
T require_token(std::optional<T> v, const std::string& what, const std::string& tok) {
  if (!v) throw ParseError("unknown " + what + " '" + tok + "'");
  return *v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("report is missing field '") + key + "'");
  return j.at(key);
}

void expect_report(const Json& j, std::string_view kind) {
  if (field(j, "report").get<std::string>() != kind) {
    throw ParseError("expected a '" + std::string(kind) + "' report");
  }
}

Json opt_nat(const std::optional<Nat>& v) { return v ? Json(v->to_string()) : Json(nullptr); }

std::optional<Nat> opt_nat_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return nat_from_json(j.at(key));
}

Json spec_json(const APSpec& s, Base b, const JsonOptions& o) {
  return Json{{"start", nat_to_json(s.start, b, o)}, {"step", nat_to_json(s.step, b, o)},
              {"length", std::to_string(s.length)}};
}

APSpec spec_from(const Json& j) {
  return {nat_from_json(field(j, "start")), nat_from_json(field(j, "step")),
          nat_from_json(field(j, "length")).to_u64()};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string bool_text(bool v) { return v ? "true" : "false"; }

}  // namespace

std::string_view token(BoundKind k) {
  switch (k) {
    case BoundKind::kExact: return "exact";
    case BoundKind::kUpper: return "upper";
    case BoundKind::kLower: return "lower";
    case BoundKind::kInapplicable: return "inapplicable";
  }
  return "unknown";
}

std::string_view token(TermPredicate p) { return p == TermPredicate::kAntiNiven ? "anti-niven" : "niven"; }

std::string_view token(DensityMethod m) { return m == DensityMethod::kExhaustive ? "exhaustive" : "monte-carlo"; }

CheckReport check_number(const Nat& n, Base b) {
  if (n.is_zero()) throw DomainError("n must be at least 1");
  CheckReport r{n, b, digit_sum(n, b), {}, false, false};
  r.gcd = gcd(r.digit_sum, n);
  r.anti_niven = r.gcd == Nat(1);
  r.niven = (n % r.digit_sum).is_zero();
  return r;
}

BoundReport bound_report(Base b, const Nat& d) {
  return {b, d, theoretical_upper_bound(b, d), known_lower_bound(b, d), upper_bound_candidates(b, d),
          lower_bound_candidates(b, d)};
}

Json nat_to_json(const Nat& v, Base b, const JsonOptions& options) {
  if (!options.structural_giants || v.bit_length() <= options.giant_bits) return v.to_string();
  Json terms = Json::array();
  const DigitVec dv = to_digits(v, b);
  for (std::size_t i = 0; i < dv.digits.size(); ++i) {
    if (dv.digits[i] != 0) terms.push_back(Json::array({i, dv.digits[i]}));
  }
  return Json{{"base", b.value()}, {"terms", std::move(terms)}};
}

Nat nat_from_json(const Json& j) {
  if (j.is_string()) return Nat::parse(j.get<std::string>());
  if (j.is_object()) {
    const Base b(field(j, "base").get<std::uint64_t>());
    DigitVec dv{{}, b};
    for (const auto& t : field(j, "terms")) {
      const auto pos = t.at(0).get<std::size_t>();
      if (dv.digits.size() <= pos) dv.digits.resize(pos + 1, 0);
      dv.digits[pos] = t.at(1).get<std::uint32_t>();
    }
    return from_digits(dv);
  }
  throw ParseError("expected a decimal string or a structural integer");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- check ----

Json to_json(const CheckReport& r) {
  return Json{{"report", "check"},          {"n", r.n.to_string()},           {"base", r.base.value()},
              {"digit_sum", r.digit_sum.to_string()}, {"gcd", r.gcd.to_string()}, {"anti_niven", r.anti_niven},
              {"niven", r.niven}};
}

CheckReport check_from_json(const Json& j) {
  expect_report(j, "check");
  return {nat_from_json(field(j, "n")),         Base(field(j, "base").get<std::uint64_t>()),
          nat_from_json(field(j, "digit_sum")), nat_from_json(field(j, "gcd")),
          field(j, "anti_niven").get<bool>(),  field(j, "niven").get<bool>()};
}

std::string to_csv(const CheckReport& r) {
  return "n,base,digit_sum,gcd,anti_niven,niven\n" + r.n.to_string() + "," + std::to_string(r.base.value()) + "," +
         r.digit_sum.to_string() + "," + r.gcd.to_string() + "," + bool_text(r.anti_niven) + "," +
         bool_text(r.niven) + "\n";
}

std::string to_plain(const CheckReport& r) {
  std::ostringstream os;
  os << "n: " << r.n.to_string() << "\nbase: " << r.base.value() << "\ndigit sum: " << r.digit_sum.to_string()
     << "\ngcd(digit sum, n): " << r.gcd.to_string() << "\nanti-Niven: " << bool_text(r.anti_niven)
     << "\nNiven: " << bool_text(r.niven) << "\n";
  return os.str();
}

// ---- scan ----

Json to_json(const ScanReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(spec_json(w, r.base, {}));
  return Json{{"report", "scan"},
              {"base", r.base.value()},
              {"step", r.step.to_string()},
              {"from", r.lo.to_string()},
              {"to", r.hi.to_string()},
              {"predicate", token(r.predicate)},
              {"min_witness_length", r.min_witness_length ? Json(std::to_string(*r.min_witness_length)) : Json()},
              {"max_length", std::to_string(r.max_length)},
              {"witnesses", std::move(witnesses)},
              {"witness_count", r.witness_count},
              {"terms_scanned", r.terms_scanned},
              {"anti_niven_count", r.anti_niven_count}};
}

ScanReport scan_from_json(const Json& j) {
  expect_report(j, "scan");
  ScanReport r;
  r.base = Base(field(j, "base").get<std::uint64_t>());
  r.step = nat_from_json(field(j, "step"));
  r.lo = nat_from_json(field(j, "from"));
  r.hi = nat_from_json(field(j, "to"));
  const auto pred = field(j, "predicate").get<std::string>();
  if (pred == "anti-niven") {
    r.predicate = TermPredicate::kAntiNiven;
  } else if (pred == "niven") {
    r.predicate = TermPredicate::kNiven;
  } else {
    throw ParseError("unknown predicate '" + pred + "'");
  }
  if (auto m = opt_nat_from(j, "min_witness_length")) r.min_witness_length = m->to_u64();
  r.max_length = nat_from_json(field(j, "max_length")).to_u64();
  for (const auto& w : field(j, "witnesses")) r.witnesses.push_back(spec_from(w));
  r.witness_count = field(j, "witness_count").get<std::uint64_t>();
  r.terms_scanned = field(j, "terms_scanned").get<std::uint64_t>();
  r.anti_niven_count = field(j, "anti_niven_count").get<std::uint64_t>();
  return r;
}

std::string to_csv(const ScanReport& r) {
  std::string out = "base,step,from,to,max_length,witness_count,start,length\n";
  const std::string prefix = std::to_string(r.base.value()) + "," + r.step.to_string() + "," + r.lo.to_string() +
                             "," + r.hi.to_string() + "," + std::to_string(r.max_length) + "," +
                             std::to_string(r.witness_count) + ",";
  if (r.witnesses.empty()) return out + prefix + ",\n";
  for (const auto& w : r.witnesses) out += prefix + w.start.to_string() + "," + std::to_string(w.length) + "\n";
  return out;
}

std::string to_plain(const ScanReport& r) {
  std::ostringstream os;
  os << "base: " << r.base.value() << "\nstep: " << r.step.to_string() << "\nrange: [" << r.lo.to_string() << ", "
     << r.hi.to_string() << "]\npredicate: " << token(r.predicate) << "\n";
  if (r.min_witness_length) os << "witness threshold: " << *r.min_witness_length << "\n";
  os << "max_length: " << r.max_length << "\nwitness count: " << r.witness_count
     << "\nterms scanned: " << r.terms_scanned << "\nmatching terms: " << r.anti_niven_count << "\n";
  for (const auto& w : r.witnesses) {
    os << "  witness start " << w.start.to_string() << " length " << w.length << " (last " << w.last().to_string()
       << ")\n";
  }
  return os.str();
}

// ---- bounds ----

Json to_json(const BoundResult& r) {
  return Json{{"kind", token(r.kind)},
              {"value", opt_nat(r.value)},
              {"source", r.source ? Json(std::string(token(*r.source))) : Json()},
              {"conditions", r.conditions}};
}

BoundResult bound_result_from_json(const Json& j) {
  BoundResult r;
  const auto kind = field(j, "kind").get<std::string>();
  bool known = false;
  for (BoundKind k : {BoundKind::kExact, BoundKind::kUpper, BoundKind::kLower, BoundKind::kInapplicable}) {
    if (token(k) == kind) {
      r.kind = k;
      known = true;
    }
  }
  if (!known) throw ParseError("unknown bound kind '" + kind + "'");
  r.value = opt_nat_from(j, "value");
  if (!field(j, "source").is_null()) {
    const auto src = field(j, "source").get<std::string>();
    r.source = require_token(parse_theorem(src), "theorem", src);
  }
  r.conditions = field(j, "conditions").get<std::string>();
  return r;
}

namespace {

Json candidates_to_json(const std::vector<BoundResult>& list) {
  Json out = Json::array();
  for (const auto& b : list) out.push_back(to_json(b));
  return out;
}

std::vector<BoundResult> candidates_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("bound candidates must be an array");
  std::vector<BoundResult> out;
  for (const auto& e : j) out.push_back(bound_result_from_json(e));
  return out;
}

}  // namespace

Json to_json(const BoundReport& r) {
  return Json{{"report", "bound"},
              {"base", r.base.value()},
              {"step", r.step.to_string()},
              {"upper", to_json(r.upper)},
              {"lower", to_json(r.lower)},
              {"upper_candidates", candidates_to_json(r.upper_candidates)},
              {"lower_candidates", candidates_to_json(r.lower_candidates)}};
}

BoundReport bound_report_from_json(const Json& j) {
  expect_report(j, "bound");
  return {Base(field(j, "base").get<std::uint64_t>()), nat_from_json(field(j, "step")),
          bound_result_from_json(field(j, "upper")), bound_result_from_json(field(j, "lower")),
          candidates_from_json(field(j, "upper_candidates")), candidates_from_json(field(j, "lower_candidates"))};
}

std::string to_csv(const BoundReport& r) {
  std::string out = "bound,kind,value,source,conditions\n";
  auto row = [&out](std::string_view name, const BoundResult& b) {
    out += std::string(name) + "," + std::string(token(b.kind)) + "," + (b.value ? b.value->to_string() : "") + "," +
           (b.source ? std::string(token(*b.source)) : "") + "," + csv_field(b.conditions) + "\n";
  };
  row("upper", r.upper);
  row("lower", r.lower);
  for (const auto& b : r.upper_candidates) row("upper-candidate", b);
  for (const auto& b : r.lower_candidates) row("lower-candidate", b);
  return out;
}

std::string to_plain(const BoundReport& r) {
  std::ostringstream os;
  os << "base: " << r.base.value() << "\nstep: " << r.step.to_string() << "\n";
  for (const auto& [name, b] : {std::pair<const char*, const BoundResult*>{"upper", &r.upper}, {"lower", &r.lower}}) {
    os << name << ": " << token(b->kind);
    if (b->value) os << " " << b->value->to_string();
    if (b->source) os << " via " << token(*b->source);
    os << " (" << b->conditions << ")\n";
  }
  if (r.upper_candidates.size() > 1 || r.lower_candidates.size() > 1) {
    os << "all applicable bounds:\n";
    auto line = [&os](const BoundResult& b) {
      os << "  " << token(*b.source) << ": " << token(b.kind) << " " << b.value->to_string() << "\n";
    };
    for (const auto& b : r.upper_candidates) line(b);
    for (const auto& b : r.lower_candidates) line(b);
  }
  return os.str();
}

// ---- constructions ----

namespace {

Json trace_json(const ConstructionTrace& t, Base b, const JsonOptions& o) {
  Json j{{"theorem", token(t.theorem)}};
  if (t.m) j["m"] = t.m->to_string();
  if (t.selector) j["selector"] = *t.selector;
  if (!t.exponent_moduli.empty()) j["exponent_moduli"] = t.exponent_moduli;
  if (t.prime_p) j["prime_p"] = t.prime_p->to_string();
  if (t.dbar) j["dbar"] = nat_to_json(*t.dbar, b, o);
  if (t.blocks) j["blocks"] = *t.blocks;
  if (t.j) j["j"] = nat_to_json(*t.j, b, o);
  if (t.j_prime) j["j_prime"] = nat_to_json(*t.j_prime, b, o);
  if (t.big_p) j["P"] = nat_to_json(*t.big_p, b, o);
  if (!t.q_list.empty()) {
    Json qs = Json::array();
    for (const auto& q : t.q_list) qs.push_back(q.to_string());
    j["q_list"] = std::move(qs);
  }
  if (!t.r_list.empty()) j["r_list"] = t.r_list;
  if (t.c) j["c"] = nat_to_json(*t.c, b, o);
  if (t.case_tag) j["case"] = token(*t.case_tag);
  return j;
}

ConstructionTrace trace_from(const Json& j) {
  ConstructionTrace t;
  const auto th = field(j, "theorem").get<std::string>();
  t.theorem = require_token(parse_theorem(th), "theorem", th);
  t.m = opt_nat_from(j, "m");
  if (j.contains("selector")) t.selector = j.at("selector").get<std::uint64_t>();
  if (j.contains("exponent_moduli")) t.exponent_moduli = j.at("exponent_moduli").get<std::vector<std::uint64_t>>();
  t.prime_p = opt_nat_from(j, "prime_p");
  t.dbar = opt_nat_from(j, "dbar");
  if (j.contains("blocks")) t.blocks = j.at("blocks").get<std::uint64_t>();
  t.j = opt_nat_from(j, "j");
  t.j_prime = opt_nat_from(j, "j_prime");
  t.big_p = opt_nat_from(j, "P");
  if (j.contains("q_list")) {
    for (const auto& q : j.at("q_list")) t.q_list.push_back(nat_from_json(q));
  }
  if (j.contains("r_list")) t.r_list = j.at("r_list").get<std::vector<std::uint64_t>>();
  t.c = opt_nat_from(j, "c");
  if (j.contains("case")) {
    const auto c = j.at("case").get<std::string>();
    t.case_tag = require_token(parse_case_tag(c), "case", c);
  }
  return t;
}

}  // namespace

Json to_json(const ConstructedAP& ap, const JsonOptions& options) {
  Json sums = Json::array();
  for (const auto& g : ap.expected_digit_sums) {
    sums.push_back(Json{{"indices", g.indices}, {"digit_sum", g.digit_sum.to_string()}});
  }
  Json j{{"report", "construction"},
         {"theorem", token(ap.trace.theorem)},
         {"base", ap.base.value()},
         {"spec", spec_json(ap.spec, ap.base, options)},
         {"expected_digit_sums", std::move(sums)},
         {"trace", trace_json(ap.trace, ap.base, options)},
         {"verified", true}};
  if (options.include_audit) {
    Json rows = Json::array();
    for (const auto& row : audit(ap)) {
      rows.push_back(Json{{"term", nat_to_json(row.term, ap.base, options)},
                          {"digit_sum", row.digit_sum.to_string()},
                          {"gcd", row.gcd.to_string()}});
    }
    j["audit"] = std::move(rows);
  }
  return j;
}

ConstructedAP construction_from_json(const Json& j) {
  expect_report(j, "construction");
  ConstructedAP ap;
  ap.base = Base(field(j, "base").get<std::uint64_t>());
  ap.spec = spec_from(field(j, "spec"));
  for (const auto& g : field(j, "expected_digit_sums")) {
    ap.expected_digit_sums.push_back(
        {field(g, "indices").get<std::vector<std::uint64_t>>(), nat_from_json(field(g, "digit_sum"))});
  }
  ap.trace = trace_from(field(j, "trace"));
  return ap;
}

std::string to_csv(const ConstructedAP& ap) {
  std::string out = "index,term,digit_sum,gcd,expected_digit_sum\n";
  const auto rows = audit(ap);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += std::to_string(i) + "," + rows[i].term.to_string() + "," + rows[i].digit_sum.to_string() + "," +
           rows[i].gcd.to_string() + "," + rows[i].expected_digit_sum.to_string() + "\n";
  }
  return out;
}

namespace {

std::string short_nat(const Nat& v) {
  if (v.bit_length() <= 256) return v.to_string();
  const std::string s = v.to_string();
  return s.substr(0, 12) + "..." + s.substr(s.size() - 12) + " (" + std::to_string(s.size()) + " digits)";
}

}  // namespace

std::string to_plain(const ConstructedAP& ap, bool include_audit) {
  std::ostringstream os;
  const auto& t = ap.trace;
  os << "construction: " << token(t.theorem) << "\nbase: " << ap.base.value() << "\nstart: " << short_nat(ap.spec.start)
     << "\nstep: " << short_nat(ap.spec.step) << "\nlength: " << ap.spec.length << "\nverified: true\n";
  if (t.m) os << "m: " << t.m->to_string() << "\n";
  if (t.selector) os << "selector k: " << *t.selector << "\n";
  if (t.prime_p) os << "p: " << t.prime_p->to_string() << "\n";
  if (t.big_p) os << "P: " << short_nat(*t.big_p) << "\n";
  if (!t.q_list.empty()) {
    os << "q:";
    for (const auto& q : t.q_list) os << " " << q.to_string();
    os << "\n";
  }
  if (!t.r_list.empty()) os << "r_i: " << t.r_list.size() << " exponents, first " << t.r_list.front() << ", last "
                            << t.r_list.back() << "\n";
  if (t.c) os << "c: " << short_nat(*t.c) << " (" << t.c->bit_length() << " bits)\n";
  if (t.case_tag) os << "case: " << token(*t.case_tag) << "\n";
  for (const auto& g : ap.expected_digit_sums) {
    os << "digit sum " << g.digit_sum.to_string() << " at indices";
    for (auto i : g.indices) os << " " << i;
    os << "\n";
  }
  if (include_audit) {
    os << "index\tterm\tdigit_sum\tgcd\n";
    const auto rows = audit(ap);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << i << "\t" << short_nat(rows[i].term) << "\t" << rows[i].digit_sum.to_string() << "\t"
         << rows[i].gcd.to_string() << "\n";
    }
  }
  return os.str();
}

Json to_json(const ApMember& m, const JsonOptions& options) {
  return Json{{"report", "member"},
              {"theorem", token(m.trace.theorem)},
              {"base", m.base.value()},
              {"n", m.n.to_string()},
              {"d", m.d.to_string()},
              {"value", nat_to_json(m.value, m.base, options)},
              {"index", nat_to_json(m.index, m.base, options)},
              {"trace", trace_json(m.trace, m.base, options)},
              {"verified", true}};
}

ApMember member_from_json(const Json& j) {
  expect_report(j, "member");
  ApMember m{nat_from_json(field(j, "n")),
             nat_from_json(field(j, "d")),
             Base(field(j, "base").get<std::uint64_t>()),
             nat_from_json(field(j, "value")),
             nat_from_json(field(j, "index")),
             trace_from(field(j, "trace"))};
  return m;
}

std::string to_csv(const ApMember& m) {
  return "n,d,base,value,index,dbar,prime_p\n" + m.n.to_string() + "," + m.d.to_string() + "," +
         std::to_string(m.base.value()) + "," + m.value.to_string() + "," + m.index.to_string() + "," +
         (m.trace.dbar ? m.trace.dbar->to_string() : "") + "," + (m.trace.prime_p ? m.trace.prime_p->to_string() : "") +
         "\n";
}

std::string to_plain(const ApMember& m) {
  std::ostringstream os;
  os << "progression: " << m.n.to_string() << " + j*" << m.d.to_string() << " in base " << m.base.value()
     << "\nmember: " << short_nat(m.value) << "\nindex j: " << short_nat(m.index) << "\n";
  if (m.trace.dbar) os << "dbar: " << m.trace.dbar->to_string() << "\n";
  if (m.trace.prime_p) os << "digit sum p: " << m.trace.prime_p->to_string() << "\n";
  if (m.trace.blocks) os << "blocks k: " << *m.trace.blocks << "\n";
  os << "verified: true\n";
  return os.str();
}

// ---- density ----

Json to_json(const DensityReport& r) {
  return Json{{"report", "density"},
              {"base", r.base.value()},
              {"limit", r.sample_limit.to_string()},
              {"method", token(r.method)},
              {"count", r.count},
              {"samples", r.samples},
              {"empirical", r.empirical},
              {"std_error", r.std_error ? Json(*r.std_error) : Json()},
              {"closed_form", r.closed_form},
              {"abs_diff", r.abs_diff},
              {"closed_form_rational",
               Json{{"numerator", r.factor.numerator.to_string()},
                    {"denominator", r.factor.denominator.to_string()},
                    {"primes", r.factor.primes},
                    {"scale", "6/pi^2"}}}};
}

DensityReport density_from_json(const Json& j) {
  expect_report(j, "density");
  DensityReport r;
  r.base = Base(field(j, "base").get<std::uint64_t>());
  r.sample_limit = nat_from_json(field(j, "limit"));
  const auto method = field(j, "method").get<std::string>();
  r.method = method == "exhaustive" ? DensityMethod::kExhaustive : DensityMethod::kMonteCarlo;
  if (method != "exhaustive" && method != "monte-carlo") throw ParseError("unknown density method '" + method + "'");
  r.count = field(j, "count").get<std::uint64_t>();
  r.samples = field(j, "samples").get<std::uint64_t>();
  r.empirical = field(j, "empirical").get<double>();
  if (!field(j, "std_error").is_null()) r.std_error = j.at("std_error").get<double>();
  r.closed_form = field(j, "closed_form").get<double>();
  r.abs_diff = field(j, "abs_diff").get<double>();
  const Json& f = field(j, "closed_form_rational");
  r.factor.numerator = nat_from_json(field(f, "numerator"));
  r.factor.denominator = nat_from_json(field(f, "denominator"));
  r.factor.primes = field(f, "primes").get<std::vector<std::uint64_t>>();
  return r;
}

std::string to_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "limit,empirical,closed_form,diff\n";
  for (const auto& r : rows) {
    out += std::to_string(r.limit) + "," + fmt_double(r.empirical) + "," + fmt_double(r.closed_form) + "," +
           fmt_double(r.abs_diff) + "\n";
  }
  return out;
}

std::string to_plain(const DensityReport& r) {
  std::ostringstream os;
  os << "base: " << r.base.value() << "\nlimit: " << r.sample_limit.to_string() << "\nmethod: " << token(r.method)
     << "\ncount: " << r.count << " of " << r.samples << "\nempirical: " << fmt_double(r.empirical);
  if (r.std_error) os << " (std error " << fmt_double(*r.std_error) << ")";
  os << "\nclosed form: " << fmt_double(r.closed_form) << " = 6/pi^2 * " << r.factor.numerator.to_string() << "/"
     << r.factor.denominator.to_string() << "\nabs diff: " << fmt_double(r.abs_diff) << "\n";
  return os.str();
}

// ---- conjecture ----

Json to_json(const ConjectureReport& r) {
  return Json{{"report", "conjecture"},
              {"id", token(r.id)},
              {"target_length", std::to_string(r.target_length)},
              {"verdict", r.witness_found ? "witness-found" : "none-below"},
              {"note", r.note},
              {"scan", to_json(r.scan)}};
}

ConjectureReport conjecture_from_json(const Json& j) {
  expect_report(j, "conjecture");
  ConjectureReport r;
  const auto id = field(j, "id").get<std::string>();
  r.id = require_token(parse_conjecture(id), "conjecture", id);
  r.target_length = nat_from_json(field(j, "target_length")).to_u64();
  const auto verdict = field(j, "verdict").get<std::string>();
  if (verdict != "witness-found" && verdict != "none-below") throw ParseError("unknown verdict '" + verdict + "'");
  r.witness_found = verdict == "witness-found";
  r.note = field(j, "note").get<std::string>();
  r.scan = scan_from_json(field(j, "scan"));
  return r;
}

std::string to_csv(const ConjectureReport& r) {
  std::string out = "id,base,step,to,target_length,verdict,start,length\n";
  const std::string prefix = std::string(token(r.id)) + "," + std::to_string(r.scan.base.value()) + "," +
                             r.scan.step.to_string() + "," + r.scan.hi.to_string() + "," +
                             std::to_string(r.target_length) + "," +
                             (r.witness_found ? "witness-found" : "none-below") + ",";
  if (r.scan.witnesses.empty()) return out + prefix + ",\n";
  for (const auto& w : r.scan.witnesses) out += prefix + w.start.to_string() + "," + std::to_string(w.length) + "\n";
  return out;
}

std::string to_plain(const ConjectureReport& r) {
  std::ostringstream os;
  os << "conjecture: " << token(r.id) << "\ntarget length: " << r.target_length
     << "\nverdict: " << (r.witness_found ? "witness-found" : "none-below " + r.scan.hi.to_string())
     << "\nnote: " << r.note << "\n"
     << to_plain(r.scan);
  return os.str();
}

}  // namespace antiniven
