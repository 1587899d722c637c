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

// Test-side reference implementations and random instance generators. The
// oracles here share no code with the library's deciders.

#ifndef INDEPKIT_TESTS_SUPPORT_H_
#define INDEPKIT_TESTS_SUPPORT_H_

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "indepkit/atom.h"
#include "indepkit/constructions.h"
#include "indepkit/relation.h"

namespace indepkit::testing {

using Rng = std::mt19937_64;

// Calls `fn` with the tuple copies of every grounding of `r`. Stops early
// when `fn` returns false.
void for_each_grounding(const Relation& r,
                        const std::function<bool(const std::vector<Tuple>&)>& fn);

// Number of groundings counted by enumeration.
std::uint64_t enumerate_count(const Relation& r);

// X ⊥ Y on complete tuple copies, by pair counting.
bool ref_ia(const std::vector<Tuple>& copies, AttributeSet x, AttributeSet y);
bool ref_ia(const Relation& r, AttributeSet x, AttributeSet y);
bool ref_pia(const Relation& r, AttributeSet x, AttributeSet y);
bool ref_cia(const Relation& r, AttributeSet x, AttributeSet y);
bool ref_satisfies(const Relation& r, const Atom& a);

bool brute_force_sat(const CnfFormula& phi);

struct RelationParams {
  int max_attributes = 4;
  int max_distinct = 5;
  int max_multiplicity = 2;
  int max_domain = 3;
  double null_probability = 0.3;
  std::uint64_t max_groundings = std::uint64_t{1} << 16;
};

Relation random_relation(Rng& rng, const RelationParams& p = {});
AttributeSet random_subset(Rng& rng, AttributeSet universe, double p = 0.5);
AttributeSet random_nonempty_subset(Rng& rng, AttributeSet universe);
Atom random_atom(Rng& rng, int attributes, Modality m, bool disjoint,
                 bool nonempty = true);

CnfFormula random_cnf(Rng& rng, int max_variables, int max_clauses,
                      int max_width);

std::shared_ptr<const Schema> letters_schema(int n, int domain_size = 2);

// Reads the tabular environment labelled `label` from a LaTeX source and
// returns its data rows as cells (the first row holds the header).
std::vector<std::vector<std::string>> latex_table(const std::string& path,
                                                  const std::string& label);

Relation relation_from_text(const std::string& csv);

}  // namespace indepkit::testing

#endif  // INDEPKIT_TESTS_SUPPORT_H_
