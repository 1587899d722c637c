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

#include "indepkit/rules.h"

#include <array>
#include <sstream>

#include "indepkit/error.h"

namespace indepkit {
namespace {

constexpr std::array<std::string_view, kRuleCount> kNames = {
    "T",   "S",   "C",   "D",   "E",   "T_c",  "S_c",  "C_c",
    "D_c", "E_c", "T_p", "S_p", "C_p", "D_p",  "E_pc", "E_cp",
};

const std::array<RuleSignature, kRuleCount>& signatures() {
  using M = Modality;
  using S = RuleShape;
  static const std::array<RuleSignature, kRuleCount> table = {{
      {S::kTrivial, {}, M::kPlain},
      {S::kSymmetry, {M::kPlain}, M::kPlain},
      {S::kConstancy, {M::kPlain, M::kPlain}, M::kPlain},
      {S::kDecomposition, {M::kPlain}, M::kPlain},
      {S::kExchange, {M::kPlain, M::kPlain}, M::kPlain},
      {S::kTrivial, {}, M::kCertain},
      {S::kSymmetry, {M::kCertain}, M::kCertain},
      {S::kConstancy, {M::kCertain, M::kCertain}, M::kCertain},
      {S::kDecomposition, {M::kCertain}, M::kCertain},
      {S::kExchange, {M::kCertain, M::kCertain}, M::kCertain},
      {S::kTrivial, {}, M::kPossible},
      {S::kSymmetry, {M::kPossible}, M::kPossible},
      {S::kConstancy, {M::kPossible, M::kPossible}, M::kPossible},
      {S::kDecomposition, {M::kPossible}, M::kPossible},
      {S::kExchange, {M::kPossible, M::kCertain}, M::kPossible},
      {S::kExchange, {M::kCertain, M::kPossible}, M::kPossible},
  }};
  return table;
}

}  // namespace

std::string_view rule_name(Rule r) { return kNames[static_cast<int>(r)]; }

std::optional<Rule> parse_rule_name(std::string_view name) {
  for (int i = 0; i < kRuleCount; ++i) {
    if (kNames[i] == name) return static_cast<Rule>(i);
  }
  return std::nullopt;
}

const RuleSignature& signature(Rule r) {
  return signatures()[static_cast<int>(r)];
}

RuleSystem::RuleSystem(std::initializer_list<Rule> rules) {
  for (Rule r : rules) bits_.set(static_cast<int>(r));
}

RuleSystem RuleSystem::plain() {
  return {Rule::kT, Rule::kS, Rule::kC, Rule::kD, Rule::kE};
}
RuleSystem RuleSystem::certain() {
  return {Rule::kTc, Rule::kSc, Rule::kCc, Rule::kDc, Rule::kEc};
}
RuleSystem RuleSystem::possible() {
  return {Rule::kTp, Rule::kSp, Rule::kCp, Rule::kDp};
}
RuleSystem RuleSystem::mixed_exchange() { return {Rule::kEpc, Rule::kEcp}; }
RuleSystem RuleSystem::certain_possible() {
  return certain() | possible() | mixed_exchange();
}
RuleSystem RuleSystem::disjoint_mixed() {
  return certain_possible().without(Rule::kCc).without(Rule::kCp);
}

RuleSystem RuleSystem::parse(std::string_view text) {
  RuleSystem out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find('+', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (part == "I") {
      out = out | plain();
    } else if (part == "I_c") {
      out = out | certain();
    } else if (part == "I_p") {
      out = out | possible();
    } else if (part == "J_pc") {
      out = out | mixed_exchange();
    } else if (part == "mixed") {
      out = out | certain_possible();
    } else if (part == "disjoint") {
      out = out | disjoint_mixed();
    } else if (auto r = parse_rule_name(part)) {
      out.bits_.set(static_cast<int>(*r));
    } else {
      throw ParseError("unknown rule system '" + std::string(part) + "'", 0,
                       start + 1);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

RuleSystem RuleSystem::without(Rule r) const {
  RuleSystem out = *this;
  out.bits_.reset(static_cast<int>(r));
  return out;
}

std::vector<Rule> RuleSystem::rules() const {
  std::vector<Rule> out;
  for (int i = 0; i < kRuleCount; ++i) {
    if (bits_.test(i)) out.push_back(static_cast<Rule>(i));
  }
  return out;
}

std::string RuleSystem::name() const {
  if (*this == plain()) return "I";
  if (*this == certain()) return "I_c";
  if (*this == possible()) return "I_p";
  if (*this == mixed_exchange()) return "J_pc";
  if (*this == certain_possible()) return "I_c+I_p+J_pc";
  std::string out = "{";
  for (Rule r : rules()) {
    if (out.size() > 1) out += ',';
    out += rule_name(r);
  }
  return out + "}";
}

RuleSystem operator|(RuleSystem a, RuleSystem b) {
  a.bits_ |= b.bits_;
  return a;
}

std::size_t Derivation::rule_applications() const {
  std::size_t n = 0;
  for (const DerivationStep& s : steps_) n += s.rule.has_value() ? 1 : 0;
  return n;
}

bool rule_applies(Rule rule, const std::vector<Atom>& premises,
                  const Atom& atom) {
  const RuleSignature& sig = signature(rule);
  if (premises.size() != sig.premises.size()) return false;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (premises[i].modality != sig.premises[i]) return false;
  }
  if (atom.modality != sig.conclusion) return false;
  switch (sig.shape) {
    case RuleShape::kTrivial:
      return atom.rhs.empty();
    case RuleShape::kSymmetry:
      return atom.lhs == premises[0].rhs && atom.rhs == premises[0].lhs;
    case RuleShape::kConstancy:
      return premises[0].lhs == premises[0].rhs &&
             atom.lhs == (premises[0].lhs | premises[1].lhs) &&
             atom.rhs == premises[1].rhs;
    case RuleShape::kDecomposition:
      return atom.lhs == premises[0].lhs && atom.rhs.subset_of(premises[0].rhs);
    case RuleShape::kExchange:
      return premises[1].lhs == (premises[0].lhs | premises[0].rhs) &&
             atom.lhs == premises[0].lhs &&
             atom.rhs == (premises[0].rhs | premises[1].rhs);
  }
  return false;
}

bool validate(const Derivation& d, const ConstraintSet& sigma,
              const RuleSystem& system, std::string* error) {
  auto fail = [&](std::size_t i, const std::string& why) {
    if (error) *error = "step " + std::to_string(i + 1) + ": " + why;
    return false;
  };
  if (d.size() == 0) {
    if (error) *error = "empty derivation";
    return false;
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    const DerivationStep& step = d.steps()[i];
    if (!step.rule) {
      if (!step.premises.empty()) return fail(i, "premise step cites steps");
      if (!sigma.contains(step.atom)) return fail(i, "premise not in the set");
      continue;
    }
    if (!system.contains(*step.rule)) {
      return fail(i, "rule " + std::string(rule_name(*step.rule)) +
                         " is not in the system");
    }
    std::vector<Atom> premises;
    for (std::size_t p : step.premises) {
      if (p >= i) return fail(i, "cites a later step");
      premises.push_back(d.steps()[p].atom);
    }
    if (!rule_applies(*step.rule, premises, step.atom)) {
      return fail(i, "does not match rule " +
                         std::string(rule_name(*step.rule)));
    }
  }
  return true;
}

namespace {

void render_step(const Derivation& d, std::size_t i, int depth,
                 const Schema& schema, Notation notation, std::ostream& out) {
  const DerivationStep& step = d.steps()[i];
  out << std::string(2 * depth, ' ') << render(step.atom, schema, notation)
      << "    ["
      << (step.rule ? std::string(rule_name(*step.rule)) : "premise") << "]\n";
  for (std::size_t p : step.premises) {
    render_step(d, p, depth + 1, schema, notation, out);
  }
}

}  // namespace

std::string render_tree(const Derivation& d, const Schema& schema,
                        Notation notation) {
  std::ostringstream out;
  if (d.size() > 0) render_step(d, d.size() - 1, 0, schema, notation, out);
  return out.str();
}

}  // namespace indepkit
