// Copyright 2026 The indepkit Authors
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

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "indepkit/error.h"
#include "run_config.h"

namespace cli = indepkit::cli;

int main(int argc, char** argv) {
  CLI::App app{"Possible and certain independence over relations with nulls."};
  app.set_version_flag("--version", std::string("indepkit ") + INDEPKIT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_file;
  app.add_option("--config", config_file, "JSON configuration file (also INDEPKIT_CONFIG)");
  std::map<std::string, std::string> flag_values;
  const std::map<std::string, std::string> flag_help = {
      {"oracle_bound", "Maximum groundings the oracle may enumerate"},
      {"attribute_limit", "Maximum attributes for closure computations"},
      {"max_attributes", "Counterexample search: maximum attributes"},
      {"max_rows", "Counterexample search: maximum distinct rows"},
      {"domain_size", "Counterexample search: values per attribute"},
      {"exhaustive_rows", "Counterexample search: rows searched exhaustively"},
      {"candidate_budget", "Counterexample search: maximum enumerated candidates"},
      {"format", "Output format: text or json"},
      {"notation", "Atom notation in text output: ascii, unicode or auto"},
      {"seed", "Seed for randomised generation"},
  };
  for (const auto& [key, help] : flag_help) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    app.add_option_function<std::string>(
        flag, [&flag_values, key = key](const std::string& v) { flag_values[key] = v; },
        help);
  }

  cli::CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Model-check an atom on a relation");
  check_cmd->add_option("relation", check.relation, "Relation CSV file")->required();
  check_cmd->add_option("atom", check.atom, "Atom, e.g. \"e _||_p s\"")->required();
  check_cmd->add_option("--domains", check.domains, "Domain JSON file");
  check_cmd->add_option("--method", check.method, "auto, oracle or fast")
      ->check(CLI::IsMember({"auto", "oracle", "fast"}));
  check_cmd->add_flag("--exit-status", check.exit_status,
                      "Exit 0 when the atom holds, 1 when it fails");

  cli::ImpliesArgs implies;
  auto* implies_cmd = app.add_subcommand("implies", "Decide implication of an atom");
  implies_cmd->add_option("constraints", implies.constraints, "Constraint file")->required();
  implies_cmd->add_option("atom", implies.atom, "Goal atom")->required();
  implies_cmd->add_option("--counterexample", implies.counterexample,
                          "On a negative answer, search a counterexample and write "
                          "BASE.csv and BASE.domains.json");
  implies_cmd->add_flag("--sound-only", implies.sound_only,
                        "Accept derivability answers outside the complete fragments");
  implies_cmd->add_flag("--exit-status", implies.exit_status,
                        "Exit 0 when implied, 1 when not");

  cli::ClosureArgs closure;
  auto* closure_cmd = app.add_subcommand("closure", "List every derivable atom");
  closure_cmd->add_option("constraints", closure.constraints, "Constraint file")->required();
  closure_cmd->add_option("--system", closure.system,
                          "Rule system: I, I_c, I_p, J_pc, mixed, disjoint or a "
                          "'+'-joined union");
  closure_cmd->add_flag("--nontrivial", closure.nontrivial, "Omit atoms with an empty side");

  cli::DeriveArgs derive;
  auto* derive_cmd = app.add_subcommand("derive", "Print a derivation of an atom");
  derive_cmd->add_option("constraints", derive.constraints, "Constraint file")->required();
  derive_cmd->add_option("atom", derive.atom, "Goal atom")->required();
  derive_cmd->add_option("--system", derive.system, "Rule system (default mixed)");

  cli::WitnessArgs witness;
  auto* witness_cmd = app.add_subcommand("witness", "Emit a constructed relation");
  witness_cmd->add_option("kind", witness.kind,
                          "exchange-failure, pia-family, parity or constancy")
      ->required();
  witness_cmd->add_option("--grounding", witness.grounding,
                          "exchange-failure: none, ab or ab-c");
  witness_cmd->add_option("--k", witness.k, "pia-family: |X|");
  witness_cmd->add_option("--m", witness.m, "pia-family: |Y|");
  witness_cmd->add_option("--extra", witness.extra, "pia-family: constant attributes");
  witness_cmd->add_option("--x", witness.x, "parity: |X|");
  witness_cmd->add_option("--y", witness.y, "parity: |Y|");
  witness_cmd->add_option("--z", witness.z, "parity: |Z|");
  witness_cmd->add_flag("--complete-only", witness.complete_only,
                        "parity: omit the rows with a null");
  witness_cmd->add_option("--attributes", witness.attributes,
                          "constancy: comma-separated attribute names");
  witness_cmd->add_option("--column", witness.column, "constancy: varying attribute");
  witness_cmd->add_option("-o,--output", witness.output,
                          "Write BASE.csv and BASE.domains.json");

  cli::FromCnfArgs from_cnf;
  auto* cnf_cmd = app.add_subcommand("from-cnf", "Reduce a DIMACS CNF formula to a relation");
  cnf_cmd->add_option("cnf", from_cnf.cnf, "DIMACS file")->required();
  cnf_cmd->add_option("-o,--output", from_cnf.output, "Write BASE.csv and BASE.domains.json");
  cnf_cmd->add_flag("--decide", from_cnf.decide,
                    "Also decide satisfiability by checking the target atom");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitError;
  }

  try {
    cli::RunConfig config;
    config.notation = cli::notation_from_locale();
    if (config_file.empty()) {
      if (const char* env = std::getenv("INDEPKIT_CONFIG"); env && *env) config_file = env;
    }
    if (!config_file.empty()) cli::apply_config_file(config, config_file);
    cli::apply_environment(config);
    for (const auto& [key, value] : flag_values) config.set(key, value);
    config.validate();

    if (*check_cmd) return cli::cmd_check(config, check, std::cout);
    if (*implies_cmd) return cli::cmd_implies(config, implies, std::cout);
    if (*closure_cmd) return cli::cmd_closure(config, closure, std::cout);
    if (*derive_cmd) return cli::cmd_derive(config, derive, std::cout);
    if (*witness_cmd) return cli::cmd_witness(config, witness, std::cout);
    if (*cnf_cmd) return cli::cmd_from_cnf(config, from_cnf, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "indepkit: error: " << e.what() << "\n";
    return cli::kExitError;
  }
  return cli::kExitError;
}
