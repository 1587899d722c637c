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

#include "commands.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "indepkit/constructions.h"
#include "indepkit/dimacs.h"
#include "indepkit/error.h"
#include "indepkit/implication.h"
#include "indepkit/model_check.h"
#include "indepkit/relation_io.h"
#include "indepkit/report_json.h"
#include "indepkit/rules.h"
#include "json.hpp"

namespace indepkit::cli {
namespace {

using nlohmann::ordered_json;

std::string with_file(const std::string& path, const std::exception& e) {
  return path + ": " + e.what();
}

Relation load_relation_file(const std::string& csv, const std::string& domains) {
  if (!std::filesystem::exists(csv)) throw UsageError("no such file: " + csv);
  if (!domains.empty() && !std::filesystem::exists(domains)) {
    throw UsageError("no such file: " + domains);
  }
  try {
    return load_relation(csv, domains);
  } catch (const Error& e) {
    throw UsageError(with_file(csv, e));
  }
}

ConstraintFile load_constraints(const std::string& path,
                                const std::vector<std::string>& extra) {
  std::ifstream in(path);
  if (!in) throw UsageError("no such file: " + path);
  try {
    return read_constraint_file(in, extra);
  } catch (const Error& e) {
    throw UsageError(with_file(path, e));
  }
}

Atom parse_query(const std::string& text, const Schema& schema) {
  try {
    return parse_atom(text, schema);
  } catch (const Error& e) {
    throw UsageError("atom '" + text + "': " + e.what());
  }
}

RuleSystem parse_system(const std::string& text) {
  try {
    return RuleSystem::parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--system: ") + e.what());
  }
}

ordered_json relation_json(const Relation& r) {
  return {{"csv", relation_to_csv(r)},
          {"domains", ordered_json::parse(domains_to_json(r.schema()))}};
}

// Writes <base>.csv and <base>.domains.json; returns the CSV path.
std::string write_relation_files(const Relation& r, const std::string& base) {
  const std::string csv = base + ".csv";
  const std::string domains = base + ".domains.json";
  std::ofstream c(csv), d(domains);
  if (!c || !d) throw UsageError("cannot write " + base + ".*");
  write_relation_csv(c, r);
  write_domains_json(d, r.schema());
  return csv;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

std::string render_atom(const RunConfig& config, const Atom& a, const Schema& s) {
  return render(a, s, config.notation);
}

bool all_of(const ConstraintSet& sigma, const Atom& goal,
            const std::function<bool(const Atom&)>& pred) {
  return pred(goal) && std::all_of(sigma.begin(), sigma.end(), pred);
}

bool has_modality(const Atom& a, Modality m) { return a.modality == m; }

struct Routed {
  bool verdict = false;
  Completeness completeness = Completeness::kComplete;
  std::string decider;
};

Routed route_implication(const RunConfig& config, const ConstraintSet& sigma,
                         const Atom& goal, bool sound_only) {
  const auto only = [&](Modality m) {
    return all_of(sigma, goal, [m](const Atom& a) { return has_modality(a, m); });
  };
  if (only(Modality::kPlain)) return {implies_ia(sigma, goal), Completeness::kComplete, "ia"};
  if (only(Modality::kCertain)) {
    return {implies_cia(sigma, goal), Completeness::kComplete, "cia"};
  }
  if (only(Modality::kPossible) && is_pia_star(goal)) {
    return {implies_pia_star(sigma, goal), Completeness::kComplete, "pia_star"};
  }
  const bool mixed_disjoint = all_of(sigma, goal, [](const Atom& a) {
    return is_disjoint(a) && a.modality != Modality::kPlain;
  });
  Routed routed;
  if (mixed_disjoint) {
    const ImplicationAnswer answer = implies_mixed_disjoint(sigma, goal, config.closure);
    routed = {answer.verdict, answer.completeness, "mixed_disjoint"};
  } else {
    const bool any_plain = !all_of(sigma, goal, [](const Atom& a) {
      return a.modality != Modality::kPlain;
    });
    RuleSystem system = RuleSystem::certain_possible();
    if (any_plain) system = system | RuleSystem::plain();
    routed = {derives(sigma, goal, system, config.closure).has_value(),
              Completeness::kSoundOnly, "derivation " + system.name()};
  }
  if (routed.completeness == Completeness::kSoundOnly && !sound_only) {
    throw UsageError(
        "the query lies outside the fragments with a complete decision procedure "
        "(plain, certain, possible with a PIA* goal, disjoint certain goal); "
        "rerun with --sound-only to accept a derivability answer");
  }
  return routed;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> names;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty attribute name in '" + text + "'");
    names.push_back(item);
  }
  return names;
}

Relation build_witness(const WitnessArgs& args) {
  if (args.kind == "exchange-failure") {
    if (args.grounding == "none") return exchange_failure_relation();
    if (args.grounding == "ab") return exchange_failure_grounding_ab();
    if (args.grounding == "ab-c") return exchange_failure_grounding_ab_c();
    throw UsageError("--grounding: expected none, ab or ab-c");
  }
  if (args.kind == "pia-family") {
    try {
      return pia_separating_family(args.k, args.m, args.extra).relation;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (args.kind == "parity") {
    std::vector<std::string> names;
    for (const auto& [prefix, count] :
         std::vector<std::pair<std::string, int>>{{"X", args.x}, {"Y", args.y}, {"Z", args.z}}) {
      for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
    }
    const Schema schema = Schema::uniform(names, 2);
    const AttributeSet x = AttributeSet::first(args.x);
    const AttributeSet y = AttributeSet::first(args.x + args.y) - x;
    const AttributeSet z = schema.all() - x - y;
    try {
      return parity_relation(schema, x, y, z, 0, !args.complete_only);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (args.kind == "constancy") {
    const Schema schema = Schema::uniform(split_names(args.attributes), 2);
    const auto column = schema.find(args.column);
    if (!column) throw UsageError("--column: unknown attribute '" + args.column + "'");
    return constancy_counterexample(schema, *column, schema.all());
  }
  throw UsageError("unknown witness '" + args.kind +
                   "'; expected exchange-failure, pia-family, parity or constancy");
}

}  // namespace

int cmd_check(const RunConfig& config, const CheckArgs& args, std::ostream& out) {
  const Relation r = load_relation_file(args.relation, args.domains);
  const Atom atom = parse_query(args.atom, r.schema());
  MethodChoice choice = MethodChoice::kAuto;
  if (args.method == "oracle") {
    choice = MethodChoice::kOracle;
  } else if (args.method == "fast") {
    choice = MethodChoice::kFast;
  } else if (args.method != "auto") {
    throw UsageError("--method: expected auto, oracle or fast");
  }
  const CheckReport report = check(r, atom, choice, config.oracle);

  if (config.format == OutputFormat::kJson) {
    ordered_json j;
    j["atom"] = render(atom, r.schema());
    const ordered_json body = ordered_json::parse(to_json(report));
    for (const auto& [key, value] : body.items()) j[key] = value;
    emit(out, j);
  } else {
    out << (report.verdict ? "holds" : "fails") << "\n";
    out << "atom: " << render_atom(config, atom, r.schema()) << "\n";
    out << "method: " << method_name(report.method) << "\n";
    if (report.stats.flow_value) out << "flow value: " << *report.stats.flow_value << "\n";
    if (report.stats.nodes_explored) {
      out << "nodes explored: " << report.stats.nodes_explored << "\n";
    }
    if (report.stats.groundings_examined) {
      out << "groundings examined: " << report.stats.groundings_examined << "\n";
    }
    if (report.witness) {
      out << (report.verdict ? "witness grounding:\n" : "violating grounding:\n");
      write_relation_csv(out, *report.witness);
    }
  }
  if (!args.exit_status) return kExitOk;
  return report.verdict ? kExitOk : kExitNegative;
}

int cmd_implies(const RunConfig& config, const ImpliesArgs& args, std::ostream& out) {
  const ConstraintFile f = load_constraints(args.constraints, {args.atom});
  const Atom goal = parse_query(args.atom, *f.schema);
  Routed routed = route_implication(config, f.atoms, goal, args.sound_only);

  std::optional<Counterexample> cx;
  std::string cx_file;
  if (!routed.verdict && !args.counterexample.empty()) {
    cx = search_counterexample(f.atoms, goal, *f.schema, config.search);
    if (cx) {
      cx_file = write_relation_files(cx->relation, args.counterexample);
      routed.completeness = Completeness::kComplete;
    }
  }
  const std::string completeness =
      routed.completeness == Completeness::kComplete ? "complete" : "sound-only";

  if (config.format == OutputFormat::kJson) {
    ordered_json j{{"atom", render(goal, *f.schema)},
                   {"implied", routed.verdict},
                   {"completeness", completeness},
                   {"decider", routed.decider}};
    if (cx) {
      j["counterexample"] = relation_json(cx->relation);
      j["counterexample"]["file"] = cx_file;
    } else if (!routed.verdict && !args.counterexample.empty()) {
      j["counterexample"] = nullptr;
    }
    emit(out, j);
  } else {
    out << (routed.verdict ? "implied" : "not implied") << "\n";
    out << "atom: " << render_atom(config, goal, *f.schema) << "\n";
    out << "completeness: " << completeness << "\n";
    out << "decider: " << routed.decider << "\n";
    if (cx) {
      out << "counterexample: " << cx_file << " (" << cx->relation.total_multiplicity()
          << " rows)\n";
      write_relation_csv(out, cx->relation);
    } else if (!routed.verdict && !args.counterexample.empty()) {
      out << "counterexample: none found within the search bounds\n";
    }
  }
  if (!args.exit_status) return kExitOk;
  return routed.verdict ? kExitOk : kExitNegative;
}

int cmd_closure(const RunConfig& config, const ClosureArgs& args, std::ostream& out) {
  const ConstraintFile f = load_constraints(args.constraints, {});
  const RuleSystem system = parse_system(args.system);
  const ConstraintSet all = closure(f.atoms, system, std::nullopt, config.closure);
  std::vector<Atom> shown;
  for (const Atom& a : all) {
    if (args.nontrivial && (a.lhs.empty() || a.rhs.empty())) continue;
    shown.push_back(a);
  }
  if (config.format == OutputFormat::kJson) {
    ordered_json atoms = ordered_json::array();
    for (const Atom& a : shown) atoms.push_back(render(a, *f.schema));
    emit(out, {{"system", system.name()}, {"atoms", atoms}});
  } else {
    for (const Atom& a : shown) out << render_atom(config, a, *f.schema) << "\n";
  }
  return kExitOk;
}

int cmd_derive(const RunConfig& config, const DeriveArgs& args, std::ostream& out) {
  const ConstraintFile f = load_constraints(args.constraints, {args.atom});
  const Atom goal = parse_query(args.atom, *f.schema);
  const RuleSystem system = parse_system(args.system);
  const auto d = derives(f.atoms, goal, system, config.closure);
  if (config.format == OutputFormat::kJson) {
    if (d) {
      emit(out, ordered_json::parse(to_json(*d, *f.schema)));
    } else {
      emit(out, {{"goal", render(goal, *f.schema)}, {"steps", nullptr}});
    }
  } else if (d) {
    out << render_tree(*d, *f.schema, config.notation);
  } else {
    out << "not derivable in " << system.name() << "\n";
  }
  return d ? kExitOk : kExitNegative;
}

int cmd_witness(const RunConfig& config, const WitnessArgs& args, std::ostream& out) {
  const Relation r = build_witness(args);
  if (!args.output.empty()) {
    const std::string csv = write_relation_files(r, args.output);
    if (config.format == OutputFormat::kJson) {
      emit(out, {{"csv_file", csv}, {"domains_file", args.output + ".domains.json"}});
    } else {
      out << "wrote " << csv << " and " << args.output << ".domains.json\n";
    }
  } else if (config.format == OutputFormat::kJson) {
    emit(out, relation_json(r));
  } else {
    write_relation_csv(out, r);
  }
  return kExitOk;
}

int cmd_from_cnf(const RunConfig& config, const FromCnfArgs& args, std::ostream& out) {
  std::ifstream in(args.cnf);
  if (!in) throw UsageError("no such file: " + args.cnf);
  const Reduction red = [&] {
    try {
      return cnf_to_relation(read_dimacs(in));
    } catch (const Error& e) {
      throw UsageError(with_file(args.cnf, e));
    } catch (const std::invalid_argument& e) {
      throw UsageError(with_file(args.cnf, e));
    }
  }();
  const Schema& schema = red.relation.schema();
  std::optional<bool> satisfiable;
  if (args.decide) satisfiable = check(red.relation, red.target).verdict;
  std::string csv_file;
  if (!args.output.empty()) csv_file = write_relation_files(red.relation, args.output);

  if (config.format == OutputFormat::kJson) {
    ordered_json j = relation_json(red.relation);
    j["target"] = render(red.target, schema);
    if (!csv_file.empty()) j["file"] = csv_file;
    if (satisfiable) j["satisfiable"] = *satisfiable;
    emit(out, j);
  } else {
    if (csv_file.empty()) {
      write_relation_csv(out, red.relation);
      out << "\n";
    } else {
      out << "wrote " << csv_file << " and " << args.output << ".domains.json\n";
    }
    out << render_atom(config, red.target, schema) << "\n";
    if (satisfiable) out << "satisfiable: " << (*satisfiable ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

}  // namespace indepkit::cli
