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

// Inference rules for independence atoms and derivations built from them.
//
//   trivial      T:                      X ⊥ {}
//   symmetry     S:  X ⊥ Y            => Y ⊥ X
//   constancy    C:  X ⊥ X,  Y ⊥ Z    => XY ⊥ Z
//   decomposition D: X ⊥ YZ          => X ⊥ Y
//   exchange     E:  X ⊥ Y,  XY ⊥ Z   => X ⊥ YZ
//
// Each rule exists in a plain, certain (_c) and possible (_p) copy, except
// that possible exchange is unsound and absent. The mixed exchange rules
// E_pc (X ⊥p Y, XY ⊥c Z => X ⊥p YZ) and E_cp (X ⊥c Y, XY ⊥p Z => X ⊥p YZ)
// derive possible atoms from one certain and one possible premise.

#ifndef INDEPKIT_RULES_H_
#define INDEPKIT_RULES_H_

#include <bitset>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indepkit/atom.h"

namespace indepkit {

enum class Rule : unsigned char {
  kT, kS, kC, kD, kE,
  kTc, kSc, kCc, kDc, kEc,
  kTp, kSp, kCp, kDp,
  kEpc, kEcp,
};
inline constexpr int kRuleCount = 16;

std::string_view rule_name(Rule r);  // "T", "S_c", "E_cp", ...
std::optional<Rule> parse_rule_name(std::string_view name);

enum class RuleShape { kTrivial, kSymmetry, kConstancy, kDecomposition, kExchange };

struct RuleSignature {
  RuleShape shape;
  // Premise modalities in order (0, 1 or 2 entries) and the conclusion's.
  std::vector<Modality> premises;
  Modality conclusion;
};

const RuleSignature& signature(Rule r);

class RuleSystem {
 public:
  RuleSystem() = default;
  RuleSystem(std::initializer_list<Rule> rules);

  static RuleSystem plain();      // I
  static RuleSystem certain();    // I_c
  static RuleSystem possible();   // I_p
  static RuleSystem mixed_exchange();  // J_pc
  // I_c ∪ I_p ∪ J_pc
  static RuleSystem certain_possible();
  // (I_c ∪ I_p ∪ J_pc) without C_c and C_p
  static RuleSystem disjoint_mixed();

  // Parses "I", "I_c", "I_p", "J_pc", "mixed" (I_c+I_p+J_pc), "disjoint"
  // or a '+'-joined union such as "I_c+I_p+J_pc". Throws ParseError.
  static RuleSystem parse(std::string_view text);

  bool contains(Rule r) const { return bits_.test(static_cast<int>(r)); }
  RuleSystem without(Rule r) const;
  std::vector<Rule> rules() const;
  bool empty() const { return bits_.none(); }
  std::string name() const;

  friend RuleSystem operator|(RuleSystem a, RuleSystem b);
  friend bool operator==(const RuleSystem&, const RuleSystem&) = default;

 private:
  std::bitset<kRuleCount> bits_;
};

// A step is either a premise (no rule) or a rule application whose premises
// are earlier steps.
struct DerivationStep {
  Atom atom;
  std::optional<Rule> rule;
  std::vector<std::size_t> premises;
};

class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(std::vector<DerivationStep> steps)
      : steps_(std::move(steps)) {}

  const std::vector<DerivationStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  const Atom& goal() const { return steps_.back().atom; }
  // Number of rule applications.
  std::size_t rule_applications() const;

 private:
  std::vector<DerivationStep> steps_;
};

// True iff `atom` follows from `premises` by one application of `rule`.
bool rule_applies(Rule rule, const std::vector<Atom>& premises,
                  const Atom& atom);

// Re-checks every step: premise steps must belong to `sigma`, rule steps must
// use rules of `system`, refer to earlier steps only, and match the rule's
// schema and modality signature. On failure `error` (if given) explains.
bool validate(const Derivation& d, const ConstraintSet& sigma,
              const RuleSystem& system, std::string* error = nullptr);

// Indented proof tree, conclusion first.
std::string render_tree(const Derivation& d, const Schema& schema,
                        Notation notation = Notation::kAscii);

}  // namespace indepkit

#endif  // INDEPKIT_RULES_H_
