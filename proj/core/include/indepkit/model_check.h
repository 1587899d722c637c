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

// Model checking of independence atoms on relations with nulls.
//
// A relation satisfies X ⊥ Y when r(XY) is complete and every X-value of r
// occurs together with every Y-value. X ⊥p Y holds when some grounding
// satisfies X ⊥ Y, X ⊥c Y when every grounding does.
//
// Two families of deciders are provided. The oracles enumerate groundings and
// serve as ground truth on small inputs. The fast deciders are:
//   * check_cia_fast    - polynomial, via the constancy / completeness
//                         characterisation of certain independence;
//   * check_pia_unary   - polynomial, max-flow over r_x (unary atoms only);
//   * check_pia         - exact search for arbitrary atoms (NP-complete in
//                         general) with a flow test at the leaves.

#ifndef INDEPKIT_MODEL_CHECK_H_
#define INDEPKIT_MODEL_CHECK_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "indepkit/atom.h"
#include "indepkit/flow.h"
#include "indepkit/relation.h"

namespace indepkit {

enum class CheckMethod { kOracle, kIaDirect, kCiaFast, kPiaFlow, kPiaSearch };

std::string_view method_name(CheckMethod m);  // "oracle", "ia_direct", ...

struct CheckStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t groundings_examined = 0;
  std::optional<std::int64_t> flow_value;
};

struct CheckReport {
  bool verdict = false;
  CheckMethod method = CheckMethod::kOracle;
  // For possible atoms that hold: a grounding of the input satisfying the
  // plain atom. For certain atoms refuted by the oracle: a grounding that
  // violates it.
  std::optional<Relation> witness;
  CheckStats stats;
};

struct OracleOptions {
  std::uint64_t grounding_bound = std::uint64_t{1} << 20;
};

// X ⊥ Y. Throws SchemaError when x or y leave the schema.
bool check_ia(const Relation& r, AttributeSet x, AttributeSet y);

// Same test on an explicit list of complete-or-not tuple copies.
bool ia_holds(const std::vector<Tuple>& copies, AttributeSet x, AttributeSet y);

// Oracles. Throw OracleInfeasible when count_groundings(r) exceeds the bound.
bool check_cia_oracle(const Relation& r, AttributeSet x, AttributeSet y,
                      const OracleOptions& options = {});
CheckReport check_cia_oracle_report(const Relation& r, AttributeSet x,
                                    AttributeSet y,
                                    const OracleOptions& options = {});
CheckReport check_pia_oracle(const Relation& r, AttributeSet x, AttributeSet y,
                             const OracleOptions& options = {});

// X ⊥c X. Relations with total multiplicity at most 1 are certainly constant
// on every X; otherwise r(X) must be complete with one distinct tuple.
bool is_certainly_constant(const Relation& r, AttributeSet x);

bool check_cia_fast(const Relation& r, AttributeSet x, AttributeSet y);

// Network for the unary atom A ⊥p B: one node per distinct tuple of r(AB),
// one per element of r_x = (non-null A values) x (non-null B values), plus
// source and sink.
struct UnaryFlowNetwork {
  FlowNetwork network;
  int source = -1;
  int sink = -1;
  Relation projected;                          // r(AB)
  std::vector<int> tuple_nodes;                // per row of `projected`
  std::vector<std::pair<Value, Value>> product;  // r_x, A-major order
  std::vector<int> product_nodes;              // per element of `product`
};

// Requires a != b and a non-null value in both columns; throws ScopeError
// otherwise.
UnaryFlowNetwork build_flow_network(const Relation& r, int a, int b);

CheckReport check_pia_unary(const Relation& r, int a, int b);

// Necessary condition for X ⊥p Y on disjoint X, Y: returns false when the
// distinct complete X-values times the distinct complete Y-values exceed the
// total multiplicity. Throws ScopeError when x and y overlap.
bool pia_counting_bound(const Relation& r, AttributeSet x, AttributeSet y);

CheckReport check_pia(const Relation& r, AttributeSet x, AttributeSet y);

enum class MethodChoice { kAuto, kOracle, kFast };

// Dispatches on the atom's modality.
CheckReport check(const Relation& r, const Atom& atom,
                  MethodChoice choice = MethodChoice::kAuto,
                  const OracleOptions& options = {});

// Verdict only, through the fast deciders.
bool satisfies(const Relation& r, const Atom& atom);

}  // namespace indepkit

#endif  // INDEPKIT_MODEL_CHECK_H_
