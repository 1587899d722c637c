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

// Implication among independence atoms.
//
// Saturation (closure / derives) is exponential in the number of attributes
// and answers derivability in a chosen rule system. The implies_* deciders
// are polynomial in the size of the constraint set and answer semantic
// implication for the fragments where the rule systems are complete:
//   plain atoms                      -> implies_ia
//   certain atoms                    -> implies_cia
//   possible atoms, PIA* conclusion  -> implies_pia_star
//   disjoint certain + possible      -> implies_mixed_disjoint

#ifndef INDEPKIT_IMPLICATION_H_
#define INDEPKIT_IMPLICATION_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "indepkit/atom.h"
#include "indepkit/relation.h"
#include "indepkit/rules.h"

namespace indepkit {

struct ClosureOptions {
  int attribute_limit = 12;
};

// Least fixpoint of rule application over a finite attribute universe.
// Records the first justification of each atom, so derivations follow
// breadth-first order and are as shallow as the saturation order allows.
class Saturation {
 public:
  // Throws LimitError when `universe` exceeds the attribute limit, and
  // ScopeError when an atom of `sigma` leaves the universe.
  Saturation(const ConstraintSet& sigma, const RuleSystem& system,
             AttributeSet universe, const ClosureOptions& options = {});

  bool contains(const Atom& a) const;
  std::size_t size() const { return entries_.size(); }
  // All derived atoms, sorted by (modality, lhs, rhs).
  ConstraintSet atoms() const;
  std::optional<Derivation> derivation(const Atom& goal) const;

 private:
  struct Entry {
    Atom atom;
    std::optional<Rule> rule;
    std::vector<std::size_t> premises;
  };

  void add(const Atom& a, std::optional<Rule> rule,
           std::vector<std::size_t> premises);
  void process(std::size_t id);

  RuleSystem system_;
  AttributeSet universe_;
  std::vector<Entry> entries_;
  std::unordered_map<Atom, std::size_t, AtomHash> ids_;
  // Indexes over processed atoms, one per modality.
  std::unordered_map<AttributeSet, std::vector<std::size_t>> by_lhs_[3];
  std::unordered_map<AttributeSet, std::vector<std::size_t>> by_union_[3];
  std::vector<std::size_t> processed_[3];
  std::vector<std::size_t> constants_[3];
};

// Atoms derivable from `sigma` over `universe` (default: the attributes of
// sigma).
ConstraintSet closure(const ConstraintSet& sigma, const RuleSystem& system,
                      std::optional<AttributeSet> universe = {},
                      const ClosureOptions& options = {});

// A checked derivation of `goal`, or nullopt if it is not derivable in
// `system`. Non-derivability equals non-implication only where the system is
// complete.
std::optional<Derivation> derives(const ConstraintSet& sigma, const Atom& goal,
                                  const RuleSystem& system,
                                  const ClosureOptions& options = {});

// Attributes some atom of sigma places on both sides.
AttributeSet constants_of(const ConstraintSet& sigma);

// Throws ScopeError unless every atom is plain.
bool implies_ia(const ConstraintSet& sigma, const Atom& goal);
// Throws ScopeError unless every atom is certain.
bool implies_cia(const ConstraintSet& sigma, const Atom& goal);
// Throws ScopeError unless every atom is possible and goal is in PIA*.
bool implies_pia_star(const ConstraintSet& sigma, const Atom& goal);

enum class Completeness { kComplete, kSoundOnly };

struct ImplicationAnswer {
  bool verdict = false;
  // kComplete: verdict is semantic implication. kSoundOnly: verdict is
  // derivability; true is still a proof of implication, false is not a
  // refutation.
  Completeness completeness = Completeness::kComplete;
};

// Every atom disjoint, certain or possible. Throws ScopeError otherwise.
ImplicationAnswer implies_mixed_disjoint(const ConstraintSet& sigma,
                                         const Atom& goal,
                                         const ClosureOptions& options = {});

struct SearchBounds {
  int max_attributes = 5;
  int max_rows = 16;
  int domain_size = 2;
  // Rows up to which candidate relations are enumerated exhaustively.
  int exhaustive_rows = 4;
  // Cap on enumerated candidates; beyond it only proof-derived
  // constructions are tried.
  std::uint64_t candidate_budget = 2'000'000;
};

struct Counterexample {
  Relation relation;
  // Maps positions of the counterexample's schema to positions of the
  // schema the atoms were written against.
  std::vector<int> attribute_map;
};

// A relation satisfying every atom of sigma and violating goal, searched in
// order of increasing rows, then increasing null count. When the exhaustive
// phase finds nothing, the relations from the completeness proofs are tried.
// Plain atoms are only evaluated on complete relations. nullopt is not a
// proof of implication. `names` supplies attribute names for the result.
std::optional<Counterexample> search_counterexample(
    const ConstraintSet& sigma, const Atom& goal, const Schema& names,
    const SearchBounds& bounds = {});

}  // namespace indepkit

#endif  // INDEPKIT_IMPLICATION_H_
