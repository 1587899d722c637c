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

// Explicit relations used as witnesses and counterexamples, and the
// reduction from CNF satisfiability to possible independence.

#ifndef INDEPKIT_CONSTRUCTIONS_H_
#define INDEPKIT_CONSTRUCTIONS_H_

#include <string>
#include <vector>

#include "indepkit/atom.h"
#include "indepkit/relation.h"

namespace indepkit {

// The 4-row relation over A, B, C (binary domains, two nulls in A) that
// satisfies A ⊥p B and AB ⊥p C but not A ⊥p BC.
Relation exchange_failure_relation();
// Its grounding satisfying A ⊥ B.
Relation exchange_failure_grounding_ab();
// Its grounding satisfying AB ⊥ C.
Relation exchange_failure_grounding_ab_c();

struct SeparatingFamily {
  Relation relation;
  AttributeSet x;  // X1..Xk
  AttributeSet y;  // Y1..Ym
  AttributeSet z;  // Z1..Zn, constant 0
};

// Relation refuting X ⊥p Y (|X| = k, |Y| = m, k >= m >= 1) while satisfying
// the possible atoms used as premises in the completeness argument for PIA*.
// The first 2^k rows enumerate {0,1}^k on X. For m >= 2 the first 2^m - 1 of
// them carry every Y-value except all-ones; for m = 1 the first two carry
// Y = 0 and Y = 1. All-null rows pad the relation to 2^k (2^m - 1) - 1 rows
// (m >= 2) or 2^(k+1) - 1 rows (m = 1). Throws std::invalid_argument.
SeparatingFamily pia_separating_family(int k, int m, int extra = 0);

// Parity relation over R = XYZ with binary domains: r1 holds the tuples over
// {0,1} on XY and 0 on Z whose A1-value is the parity of the other columns;
// r2 is r1 with A1 nulled. Violates X ⊥c Y; its full grounding satisfies
// every disjoint PIA. The result is over the attributes of XYZ, named as in
// `names`, in schema order. Throws std::invalid_argument unless X, Y, Z are
// pairwise disjoint, X and Y non-empty and a1 in X.
Relation parity_relation(const Schema& names, AttributeSet x, AttributeSet y,
                         AttributeSet z, int a1, bool include_nulled = true);

// The complete product relation with column `b` over {0, 1} and every other
// column of `attrs` constant 0. Violates b ⊥p b. Throws std::invalid_argument
// unless b is in attrs.
Relation constancy_counterexample(const Schema& names, int b,
                                  AttributeSet attrs);

// CNF over variables 1..variable_count; literals are signed indices.
struct CnfFormula {
  int variable_count = 0;
  std::vector<std::vector<int>> clauses;

  // Throws std::invalid_argument on empty clauses or out-of-range literals.
  void validate() const;
};

struct Reduction {
  Relation relation;  // over V, P, C
  Atom target;        // V,P ⊥p C
};

// Relation r over (V, P, C) such that the formula is satisfiable iff
// r satisfies VP ⊥p C. Variables p<i> name the C-groups of the variable
// gadgets, c<j> those of the clause gadgets; literals are written p<i> and
// ~p<i>. Only variables that occur in the formula take part. Repeated
// literals within a clause are merged.
Reduction cnf_to_relation(const CnfFormula& phi);

bool sat_via_pia(const CnfFormula& phi);

}  // namespace indepkit

#endif  // INDEPKIT_CONSTRUCTIONS_H_
