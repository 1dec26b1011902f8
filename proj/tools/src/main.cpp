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

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "ramsey/budget.hpp"
#include "ramsey/errors.hpp"

namespace {

constexpr const char* kOrdinalHelp =
    "Ordinals below w^2: \"k\" (finite), \"w\", \"w+k\", \"w*q\" or \"w*q+k\".";

}  // namespace

int main(int argc, char** argv) {
  using namespace ramsey::cli;
  CLI::App app{"Finite approximations of the topological Ramsey spaces R_alpha.\n" + std::string(kOrdinalHelp),
               "ramsey-approx"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "ramsey-approx 0.1.0");

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--out", g.out, "Write output to PATH instead of stdout");
  app.add_option("--jobs", g.jobs, "Search parallelism")->check(CLI::Range(1u, 1024u));
  app.add_option("--budget", g.budget, "Search budget (overrides RAMSEY_BUDGET)");

  TreeArgs tree;
  auto* tree_cmd = app.add_subcommand("tree", "Emit the block T_alpha(n) or S_alpha(n)");
  tree_cmd->add_option("--alpha", tree.alpha, kOrdinalHelp)->required();
  tree_cmd->add_option("--n", tree.n)->required();
  tree_cmd->add_option("--kind", tree.kind, "T or S")->check(CLI::IsMember({"T", "S"}));

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Count canonical equivalence relations");
  count_cmd->add_option("--k", count.k)->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--n", count.n)->required();
  count_cmd->add_option("--what", count.what, "R or AR")->check(CLI::IsMember({"R", "AR"}));

  EnumerateArgs en;
  auto* en_cmd = app.add_subcommand("enumerate", "Enumerate R, AR or DC at a finite horizon");
  en_cmd->add_option("what", en.what, "R, AR or DC")->required()->check(CLI::IsMember({"R", "AR", "DC"}));
  en_cmd->add_option("--alpha", en.alpha, kOrdinalHelp)->required();
  en_cmd->add_option("--n", en.n)->required();
  en_cmd->add_option("--m", en.m)->required();

  CanonizeArgs can;
  auto* can_cmd = app.add_subcommand("canonize", "Find a canonical witness for a relation given as JSON");
  can_cmd->add_option("input", can.input, "Relation JSON file")->required();
  can_cmd->add_option("--k", can.k, "Level of the witness (default: m for R, n for AR)");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run a finite verification suite");
  ver_cmd->add_option("suite", ver.suite, "dagger, pigeonhole, fct or distinctness")
      ->required()
      ->check(CLI::IsMember({"dagger", "pigeonhole", "fct", "distinctness"}));
  ver_cmd->add_option("--alpha", ver.alpha, kOrdinalHelp);
  ver_cmd->add_option("--n", ver.n);
  ver_cmd->add_option("--k", ver.k);
  ver_cmd->add_option("--max-m", ver.max_m);
  ver_cmd->add_option("--gamma", ver.gamma, kOrdinalHelp);
  ver_cmd->add_option("--beta", ver.beta, kOrdinalHelp);
  ver_cmd->add_option("--l", ver.l, "Range lo..hi of levels");

  OrderArgs ord;
  auto* ord_cmd = app.add_subcommand("order", "Hasse diagram of the embedding order with Tukey classes");
  ord_cmd->add_option("--alpha", ord.alpha, kOrdinalHelp)->required();
  ord_cmd->add_option("--n", ord.n)->required();
  ord_cmd->add_option("--m", ord.m)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (const char* env = std::getenv("RAMSEY_BUDGET")) ramsey::search_budget() = std::stoull(env);
  } catch (const std::exception&) {
    std::cerr << "error: RAMSEY_BUDGET must be a count\n";
    return kInvalid;
  }
  if (g.budget) ramsey::search_budget() = *g.budget;
  ramsey::search_jobs() = g.jobs;

  try {
    if (*tree_cmd) return cmd_tree(g, tree);
    if (*count_cmd) return cmd_count(g, count);
    if (*en_cmd) return cmd_enumerate(g, en);
    if (*can_cmd) return cmd_canonize(g, can);
    if (*ver_cmd) return cmd_verify(g, ver);
    if (*ord_cmd) return cmd_order(g, ord);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const ramsey::Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const ramsey::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
