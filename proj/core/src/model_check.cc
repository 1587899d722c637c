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

#include "indepkit/model_check.h"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "indepkit/error.h"
#include "indepkit/grounding.h"

namespace indepkit {
namespace {

void require_in_schema(const Relation& r, AttributeSet x, AttributeSet y) {
  if (!(x | y).subset_of(r.schema().all())) {
    throw SchemaError("attribute set leaves the schema");
  }
}

// r with every null outside `keep` replaced by the first domain value.
Relation ground_outside(const Relation& r, AttributeSet keep) {
  Relation out(r.schema_ptr());
  for (const Row& row : r.rows()) {
    Tuple t = row.values;
    for (int i = 0; i < r.schema().size(); ++i) {
      if (!keep.contains(i) && t[i] == kNull) t[i] = 0;
    }
    out.add(std::move(t), row.multiplicity);
  }
  return out;
}

Relation oracle_input(const Relation& r, AttributeSet xy,
                      const OracleOptions& options) {
  Relation reduced = ground_outside(r, xy);
  const std::uint64_t n = count_groundings(reduced);
  if (n > options.grounding_bound) {
    throw OracleInfeasible("oracle would examine " + std::to_string(n) +
                           " groundings; bound is " +
                           std::to_string(options.grounding_bound));
  }
  return reduced;
}

std::vector<Value> non_null_values(const Relation& r, int column) {
  std::set<Value> seen;
  for (const Row& row : r.rows()) {
    if (row.values[column] != kNull) seen.insert(row.values[column]);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::string_view method_name(CheckMethod m) {
  switch (m) {
    case CheckMethod::kOracle: return "oracle";
    case CheckMethod::kIaDirect: return "ia_direct";
    case CheckMethod::kCiaFast: return "cia_fast";
    case CheckMethod::kPiaFlow: return "pia_flow";
    case CheckMethod::kPiaSearch: return "pia_search";
  }
  return "?";
}

bool ia_holds(const std::vector<Tuple>& copies, AttributeSet x,
              AttributeSet y) {
  std::unordered_set<Tuple, TupleHash> xs, ys, pairs;
  const std::vector<int> px = x.positions();
  const std::vector<int> py = y.positions();
  for (const Tuple& t : copies) {
    Tuple a, b;
    for (int p : px) {
      if (t[p] == kNull) return false;
      a.push_back(t[p]);
    }
    for (int p : py) {
      if (t[p] == kNull) return false;
      b.push_back(t[p]);
    }
    Tuple ab = a;
    ab.push_back(kNull);  // separator; never a real value
    ab.insert(ab.end(), b.begin(), b.end());
    xs.insert(std::move(a));
    ys.insert(std::move(b));
    pairs.insert(std::move(ab));
  }
  return pairs.size() == xs.size() * ys.size();
}

bool check_ia(const Relation& r, AttributeSet x, AttributeSet y) {
  require_in_schema(r, x, y);
  std::vector<Tuple> distinct;
  distinct.reserve(r.distinct_size());
  for (const Row& row : r.rows()) distinct.push_back(row.values);
  return ia_holds(distinct, x, y);
}

CheckReport check_cia_oracle_report(const Relation& r, AttributeSet x,
                                    AttributeSet y,
                                    const OracleOptions& options) {
  require_in_schema(r, x, y);
  const Relation reduced = oracle_input(r, x | y, options);
  CheckReport report;
  report.method = CheckMethod::kOracle;
  report.verdict = true;
  GroundingEnumerator e(reduced);
  while (const auto* copies = e.next_copies()) {
    ++report.stats.groundings_examined;
    if (!ia_holds(*copies, x, y)) {
      report.verdict = false;
      report.witness = relation_from_copies(r, *copies);
      break;
    }
  }
  return report;
}

bool check_cia_oracle(const Relation& r, AttributeSet x, AttributeSet y,
                      const OracleOptions& options) {
  return check_cia_oracle_report(r, x, y, options).verdict;
}

CheckReport check_pia_oracle(const Relation& r, AttributeSet x, AttributeSet y,
                             const OracleOptions& options) {
  require_in_schema(r, x, y);
  const Relation reduced = oracle_input(r, x | y, options);
  CheckReport report;
  report.method = CheckMethod::kOracle;
  GroundingEnumerator e(reduced);
  while (const auto* copies = e.next_copies()) {
    ++report.stats.groundings_examined;
    if (ia_holds(*copies, x, y)) {
      report.verdict = true;
      report.witness = relation_from_copies(r, *copies);
      break;
    }
  }
  return report;
}

bool is_certainly_constant(const Relation& r, AttributeSet x) {
  if (r.total_multiplicity() <= 1) return true;
  if (!is_complete_on(r, x)) return false;
  const Tuple first = restrict_tuple(r.rows().front().values, x);
  return std::all_of(r.rows().begin(), r.rows().end(), [&](const Row& row) {
    return restrict_tuple(row.values, x) == first;
  });
}

namespace {

// Every value the pattern `t` (restricted to `x`) can ground to is in `seen`.
bool groundings_within(const Relation& r, const Tuple& t, AttributeSet x,
                       const std::set<Tuple>& seen) {
  const std::vector<int> cols = x.positions();
  std::uint64_t needed = 1;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (t[i] != kNull) continue;
    needed *= static_cast<std::uint64_t>(r.schema().domain_size(cols[i]));
    if (needed > seen.size()) return false;
  }
  std::uint64_t found = 0;
  for (const Tuple& v : seen) {
    bool match = true;
    for (std::size_t i = 0; i < cols.size() && match; ++i) {
      match = t[i] == kNull || t[i] == v[i];
    }
    found += match;
  }
  return found == needed;
}

// The complete tuples of r(XY) already satisfy X ⊥ Y, and every grounding of
// an incomplete tuple lands on an X-value and a Y-value seen among them.
bool product_absorbs_nulls(const Relation& r, AttributeSet x, AttributeSet y) {
  std::set<Tuple> xs, ys, xys;
  for (const Row& row : r.rows()) {
    if (!is_complete(restrict_tuple(row.values, x | y))) continue;
    xs.insert(restrict_tuple(row.values, x));
    ys.insert(restrict_tuple(row.values, y));
    xys.insert(restrict_tuple(row.values, x | y));
  }
  if (xys.empty() || xys.size() != xs.size() * ys.size()) return false;
  for (const Row& row : r.rows()) {
    if (is_complete(restrict_tuple(row.values, x | y))) continue;
    if (!groundings_within(r, restrict_tuple(row.values, x), x, xs) ||
        !groundings_within(r, restrict_tuple(row.values, y), y, ys)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool check_cia_fast(const Relation& r, AttributeSet x, AttributeSet y) {
  require_in_schema(r, x, y);
  if (r.total_multiplicity() <= 1) return true;
  if (is_certainly_constant(r, x) || is_certainly_constant(r, y)) return true;
  if (is_complete_on(r, x | y)) return check_ia(r, x, y);
  return product_absorbs_nulls(r, x, y);
}

UnaryFlowNetwork build_flow_network(const Relation& r, int a, int b) {
  if (a == b) throw ScopeError("flow network needs two distinct attributes");
  if (a < 0 || b < 0 || a >= r.schema().size() || b >= r.schema().size()) {
    throw SchemaError("attribute out of range");
  }
  const std::vector<Value> av = non_null_values(r, a);
  const std::vector<Value> bv = non_null_values(r, b);
  if (av.empty() || bv.empty()) {
    throw ScopeError("flow network needs a non-null value in both columns");
  }
  UnaryFlowNetwork u{FlowNetwork{}, -1, -1,
                     project(r, AttributeSet{a, b}), {}, {}, {}};
  // Column order of the projection follows the schema.
  const int ia = a < b ? 0 : 1;
  const int ib = 1 - ia;
  FlowNetwork& net = u.network;
  u.source = net.add_node();
  for (std::size_t i = 0; i < u.projected.rows().size(); ++i) {
    u.tuple_nodes.push_back(net.add_node());
  }
  for (Value va : av) {
    for (Value vb : bv) {
      u.product.emplace_back(va, vb);
      u.product_nodes.push_back(net.add_node());
    }
  }
  u.sink = net.add_node();
  net.set_source(u.source);
  net.set_sink(u.sink);
  for (std::size_t i = 0; i < u.projected.rows().size(); ++i) {
    net.add_edge(u.source, u.tuple_nodes[i],
                 static_cast<std::int64_t>(u.projected.rows()[i].multiplicity));
  }
  for (std::size_t i = 0; i < u.projected.rows().size(); ++i) {
    const Tuple& t = u.projected.rows()[i].values;
    for (std::size_t j = 0; j < u.product.size(); ++j) {
      const auto [va, vb] = u.product[j];
      if ((t[ia] == kNull || t[ia] == va) && (t[ib] == kNull || t[ib] == vb)) {
        net.add_edge(u.tuple_nodes[i], u.product_nodes[j], 1);
      }
    }
  }
  for (int node : u.product_nodes) net.add_edge(node, u.sink, 1);
  return u;
}

CheckReport check_pia_unary(const Relation& r, int a, int b) {
  const int n = r.schema().size();
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw SchemaError("attribute out of range");
  }
  CheckReport report;
  report.method = CheckMethod::kPiaFlow;
  const std::vector<Value> av = non_null_values(r, a);
  const std::vector<Value> bv = non_null_values(r, b);

  auto constant_witness = [&](Value fa, Value fb) {
    Relation w(r.schema_ptr());
    for (const Row& row : r.rows()) {
      Tuple t = row.values;
      for (int i = 0; i < n; ++i) {
        if (t[i] != kNull) continue;
        t[i] = i == a ? fa : i == b ? fb : 0;
      }
      w.add(std::move(t), row.multiplicity);
    }
    return w;
  };

  if (a == b) {
    report.verdict = av.size() <= 1;
    if (report.verdict) {
      const Value v = av.empty() ? 0 : av.front();
      report.witness = constant_witness(v, v);
    }
    return report;
  }
  if (av.empty() || bv.empty()) {
    report.verdict = true;
    report.witness = constant_witness(av.empty() ? 0 : av.front(),
                                      bv.empty() ? 0 : bv.front());
    return report;
  }

  const UnaryFlowNetwork u = build_flow_network(r, a, b);
  const FlowResult flow = max_flow(u.network);
  report.stats.flow_value = flow.value;
  report.verdict = flow.value == static_cast<std::int64_t>(u.product.size());
  if (!report.verdict) return report;

  // Per projected tuple: the (A, B) values its copies take, flow first.
  const int ia = a < b ? 0 : 1;
  const int ib = 1 - ia;
  std::unordered_map<int, std::size_t> product_of_node;
  for (std::size_t j = 0; j < u.product_nodes.size(); ++j) {
    product_of_node[u.product_nodes[j]] = j;
  }
  std::vector<std::vector<std::pair<Value, Value>>> assigned(
      u.projected.rows().size());
  std::unordered_map<int, std::size_t> row_of_node;
  for (std::size_t i = 0; i < u.tuple_nodes.size(); ++i) {
    row_of_node[u.tuple_nodes[i]] = i;
  }
  const auto& edges = u.network.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (flow.edge_flow[e] == 0) continue;
    auto ri = row_of_node.find(edges[e].from);
    auto pj = product_of_node.find(edges[e].to);
    if (ri == row_of_node.end() || pj == product_of_node.end()) continue;
    assigned[ri->second].push_back(u.product[pj->second]);
  }
  for (std::size_t i = 0; i < u.projected.rows().size(); ++i) {
    const Row& row = u.projected.rows()[i];
    const Value fa = row.values[ia] == kNull ? av.front() : row.values[ia];
    const Value fb = row.values[ib] == kNull ? bv.front() : row.values[ib];
    while (assigned[i].size() < row.multiplicity) assigned[i].emplace_back(fa, fb);
  }
  std::unordered_map<Tuple, std::size_t, TupleHash> projected_index;
  for (std::size_t i = 0; i < u.projected.rows().size(); ++i) {
    projected_index[u.projected.rows()[i].values] = i;
  }
  std::vector<std::size_t> next(u.projected.rows().size(), 0);
  Relation w(r.schema_ptr());
  const AttributeSet ab{a, b};
  for (const Row& row : r.rows()) {
    const std::size_t i = projected_index.at(restrict_tuple(row.values, ab));
    for (std::uint64_t c = 0; c < row.multiplicity; ++c) {
      Tuple t = row.values;
      const auto [va, vb] = assigned[i][next[i]++];
      t[a] = va;
      t[b] = vb;
      for (int k = 0; k < n; ++k) {
        if (t[k] == kNull) t[k] = 0;
      }
      w.add(std::move(t));
    }
  }
  report.witness = std::move(w);
  return report;
}

bool pia_counting_bound(const Relation& r, AttributeSet x, AttributeSet y) {
  require_in_schema(r, x, y);
  if (x.intersects(y)) {
    throw ScopeError("counting bound needs disjoint attribute sets");
  }
  std::unordered_set<Tuple, TupleHash> xs, ys;
  for (const Row& row : r.rows()) {
    Tuple a = restrict_tuple(row.values, x);
    Tuple b = restrict_tuple(row.values, y);
    if (is_complete(a)) xs.insert(std::move(a));
    if (is_complete(b)) ys.insert(std::move(b));
  }
  if (xs.empty() || ys.empty()) return true;
  return xs.size() <= r.total_multiplicity() / ys.size();
}

CheckReport check(const Relation& r, const Atom& atom, MethodChoice choice,
                  const OracleOptions& options) {
  switch (atom.modality) {
    case Modality::kPlain: {
      CheckReport report;
      report.method = CheckMethod::kIaDirect;
      report.verdict = check_ia(r, atom.lhs, atom.rhs);
      return report;
    }
    case Modality::kCertain: {
      if (choice == MethodChoice::kOracle) {
        return check_cia_oracle_report(r, atom.lhs, atom.rhs, options);
      }
      CheckReport report;
      report.method = CheckMethod::kCiaFast;
      report.verdict = check_cia_fast(r, atom.lhs, atom.rhs);
      return report;
    }
    case Modality::kPossible: {
      if (choice == MethodChoice::kOracle) {
        return check_pia_oracle(r, atom.lhs, atom.rhs, options);
      }
      require_in_schema(r, atom.lhs, atom.rhs);
      if (atom.lhs.size() == 1 && atom.rhs.size() == 1) {
        return check_pia_unary(r, atom.lhs.front(), atom.rhs.front());
      }
      return check_pia(r, atom.lhs, atom.rhs);
    }
  }
  throw ScopeError("unknown modality");
}

bool satisfies(const Relation& r, const Atom& atom) {
  return check(r, atom).verdict;
}

}  // namespace indepkit
