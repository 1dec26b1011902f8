// Copyright 2026 The ramsey-approx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include "ramsey/errors.hpp"
#include "ramsey/verify.hpp"

namespace ramsey::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json opt_json(const std::optional<std::uint32_t>& v) { return v ? Json(*v) : Json(nullptr); }

void require_json(const Globals& g, const char* command) {
  if (g.format != "json") throw OutOfRange(std::string(command) + " only supports --format json");
}

}  // namespace

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to stdout");
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw IoError("cannot open " + g.out);
  f << text;
  if (!f.flush()) throw IoError("cannot write " + g.out);
}

Json report(const std::string& command, Json data, Json meta) {
  return {{"schema", kSchema}, {"command", command}, {"data", std::move(data)}, {"meta", std::move(meta)}};
}

void progress(const std::string& line) { std::cerr << line << std::endl; }

int cmd_tree(const Globals& g, const TreeArgs& a) {
  const Ordinal alpha = parse_ordinal(a.alpha);
  if (a.kind == "T") {
    const auto block = build_T(alpha, a.n);
    emit(g, g.format == "dot" ? to_dot(*block) : to_json(*block).dump() + "\n");
  } else {
    const auto block = build_S(alpha, a.n);
    emit(g, g.format == "dot" ? to_dot(*block) : to_json(*block).dump() + "\n");
  }
  return kOk;
}

int cmd_count(const Globals& g, const CountArgs& a) {
  const BigInt c = a.what == "R" ? count_canonical(a.k, a.n) : count_canonical_AR(a.k, a.n);
  emit(g, c.str() + "\n");
  return kOk;
}

int cmd_enumerate(const Globals& g, const EnumerateArgs& a) {
  require_json(g, "enumerate");
  const Ordinal alpha = parse_ordinal(a.alpha);
  const auto t0 = Clock::now();
  Json items = Json::array();
  if (a.what == "R") {
    for (const auto& u : enumerate_R(alpha, a.n, a.m)) items.push_back(to_json(u));
  } else if (a.what == "AR") {
    for (const auto& x : enumerate_AR(alpha, a.n, a.m)) items.push_back(to_json(x));
  } else {
    for (const auto& s : enumerate_DC(alpha, a.n, a.m)) items.push_back(to_json(s));
  }
  Json data = {{"what", a.what},
               {"params", {{"alpha", to_json(alpha)}, {"n", a.n}, {"m", a.m}}},
               {"count", std::to_string(items.size())},
               {"items", std::move(items)}};
  emit(g, report("enumerate", std::move(data), {{"elapsed_ms", ms_since(t0)}}).dump() + "\n");
  return kOk;
}

int cmd_canonize(const Globals& g, const CanonizeArgs& a) {
  require_json(g, "canonize");
  std::ifstream f(a.input);
  if (!f) throw IoError("cannot read " + a.input);
  Json in;
  try {
    in = Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("input is not JSON: ") + e.what());
  }
  if (!in.is_object() || in.value("schema", "") != kSchema) throw ParseError("input schema must be ramsey-approx/1");
  const std::string kind = in.value("kind", "R");
  const Ordinal alpha = ordinal_from_json(in.at("alpha"));
  const auto n = in.at("n").get<std::uint32_t>();
  const auto m = in.at("m").get<std::uint32_t>();
  const auto labels = in.at("labels").get<std::vector<int>>();
  // A level-n witness sees a single member, so block relations default to the whole host.
  const std::uint32_t k = a.k.value_or(kind == "R" ? m : n);
  const auto t0 = Clock::now();
  Json params = {{"kind", kind}, {"alpha", to_json(alpha)}, {"n", n}, {"k", k}, {"m", m}};
  Json data = {{"theorem", kind == "R" ? "block canonization" : "AR canonization"}, {"params", params}};

  if (kind == "R") {
    auto domain = enumerate_R(alpha, n, m);
    if (labels.size() != domain.size()) throw DomainMismatch("labels do not match enumerate_R");
    const auto rel = EqRelation::from_labels(std::move(domain), labels);
    const auto w = canonize_block(alpha, n, k, m, rel);
    if (!w) {
      data["result"] = "no-witness";
      emit(g, report("canonize", std::move(data), {{"elapsed_ms", ms_since(t0)}}).dump() + "\n");
      return kNoWitness;
    }
    const bool sound = verify_block_witness(rel, *w);
    data["result"] = {{"y", to_json(w->y)}, {"S", to_json(w->S)}, {"verified", sound}};
    emit(g, report("canonize", std::move(data), {{"elapsed_ms", ms_since(t0)}}).dump() + "\n");
    return sound ? kOk : kViolation;
  }
  if (kind != "AR") throw ParseError("kind must be R or AR");
  ApproxRelation rel{enumerate_AR(alpha, n, m), labels};
  if (rel.labels.size() != rel.domain.size()) throw DomainMismatch("labels do not match enumerate_AR");
  const auto w = canonize_AR(alpha, n, m, rel, k);
  if (!w) {
    data["result"] = "no-witness";
    emit(g, report("canonize", std::move(data), {{"elapsed_ms", ms_since(t0)}}).dump() + "\n");
    return kNoWitness;
  }
  Json s = Json::array();
  for (const auto& x : w->S) s.push_back(to_json(x));
  data["result"] = {{"a", to_json(w->a)}, {"S", std::move(s)}};
  emit(g, report("canonize", std::move(data), {{"elapsed_ms", ms_since(t0)}}).dump() + "\n");
  return kOk;
}

namespace {

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = static_cast<std::uint32_t>(std::stoul(text));
      return {v, v};
    }
    std::size_t used = 0;
    const auto lo = static_cast<std::uint32_t>(std::stoul(text.substr(0, dots), &used));
    const auto hi = static_cast<std::uint32_t>(std::stoul(text.substr(dots + 2)));
    if (used != dots || hi < lo) throw OutOfRange("bad range");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError("range must look like lo..hi");
  }
}

Json dagger_rows(const DaggerReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"l", row.l}, {"m_dagger", opt_json(row.m_dagger)}, {"m_ddagger", opt_json(row.m_ddagger)},
                    {"method", row.method}});
  }
  return rows;
}

}  // namespace

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  require_json(g, "verify");
  const auto t0 = Clock::now();
  Json data = {{"theorem", a.suite}};
  bool pass = true;
  auto finish = [&](int code) {
    emit(g, report("verify", std::move(data), {{"elapsed_ms", ms_since(t0)}, {"jobs", g.jobs}}).dump() + "\n");
    return code;
  };
  try {
    if (a.suite == "dagger") {
      const Ordinal gamma = parse_ordinal(a.gamma);
      const Ordinal beta = parse_ordinal(a.beta);
      const auto [lo, hi] = parse_range(a.l);
      const std::uint32_t m_max = a.max_m.value_or(hi + 4);
      data["params"] = {{"gamma", to_json(gamma)}, {"beta", to_json(beta)}, {"l", {lo, hi}}, {"max_m", m_max}};
      progress("verify dagger: gamma=" + to_string(gamma) + " beta=" + to_string(beta));
      const auto r = check_dagger(gamma, beta, lo, hi, m_max);
      pass = !r.violation;
      data["result"] = pass ? "pass" : "violation";
      data["rows"] = dagger_rows(r);
      data["witnesses_checked"] = r.rows.size();
    } else if (a.suite == "pigeonhole" || a.suite == "fct") {
      const Ordinal alpha = parse_ordinal(a.alpha);
      const std::uint32_t m_max = a.max_m.value_or(4);
      data["params"] = {{"alpha", to_json(alpha)}, {"n", a.n}, {"k", a.k}, {"max_m", m_max}};
      progress("verify " + a.suite + ": searching m <= " + std::to_string(m_max));
      const auto r = a.suite == "fct" ? fct_block_minimal_m(alpha, a.n, a.k, m_max)
                                      : pigeonhole_minimal_m(alpha, a.n, a.k, m_max);
      pass = r.m.has_value();
      data["result"] = opt_json(r.m);
      data["witnesses_checked"] = r.checked;
    } else {
      const Ordinal alpha = parse_ordinal(a.alpha);
      const std::uint32_t m_max = a.max_m.value_or(a.n + 4);
      data["params"] = {{"alpha", to_json(alpha)}, {"n", a.n}, {"max_m", m_max}};
      const auto r = check_distinctness(alpha, a.n, m_max);
      pass = r.unseparated == 0;
      data["result"] = pass ? "pass" : "violation";
      data["sets"] = r.sets;
      data["pairs"] = r.pairs;
      data["unseparated"] = r.unseparated;
      data["deepest_m"] = r.deepest_m;
      data["witnesses_checked"] = r.pairs;
    }
  } catch (const Infeasible& e) {
    progress(std::string("infeasible: ") + e.what());
    data["result"] = "infeasible";
    return finish(kInfeasible);
  }
  return finish(pass ? kOk : kViolation);
}

int cmd_order(const Globals& g, const OrderArgs& a) {
  const Ordinal alpha = parse_ordinal(a.alpha);
  if (a.m < a.n) throw OutOfRange("order requires n <= m");
  const auto h = rk_hasse(alpha, a.n, a.m);
  if (g.format == "dot") {
    emit(g, to_dot(h));
  } else {
    Json data = to_json(h);
    data["params"] = {{"alpha", to_json(alpha)}, {"n", a.n}, {"m", a.m}};
    emit(g, report("order", std::move(data), Json::object()).dump() + "\n");
  }
  return kOk;
}

}  // namespace ramsey::cli
