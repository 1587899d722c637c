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

// Exact decision of X ⊥p Y for arbitrary X, Y.
//
// Overlapping attributes must be constant in any satisfying grounding, so
// they are fixed first and the search runs on the disjoint parts X', Y'.
// A grounding satisfies X' ⊥ Y' iff its X'-values Xs and Y'-values Ys are
// such that every pair of Xs × Ys is taken by a distinct copy. Any solution
// stays a solution when Xs (or Ys) shrinks to an inclusion-minimal set that
// still offers every copy a compatible value, so the search enumerates
// minimal hitting sets on each side and runs a matching test per pair.

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "indepkit/error.h"
#include "indepkit/flow.h"
#include "indepkit/model_check.h"

namespace indepkit {
namespace {

bool compatible(const Tuple& part, const Tuple& value) {
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (part[i] != kNull && part[i] != value[i]) return false;
  }
  return true;
}

struct Side {
  std::vector<Tuple> parts;                  // distinct, first appearance
  std::vector<std::vector<Value>> existing;  // per column
  std::vector<std::vector<Value>> fresh;     // per column, capped
};

Side make_side(const Schema& schema, const std::vector<int>& columns,
               std::vector<Tuple> parts) {
  Side side;
  side.parts = std::move(parts);
  const std::size_t k = columns.size();
  side.existing.resize(k);
  side.fresh.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::set<Value> seen;
    std::size_t open = 0;
    for (const Tuple& p : side.parts) {
      if (p[j] == kNull) {
        ++open;
      } else {
        seen.insert(p[j]);
      }
    }
    side.existing[j].assign(seen.begin(), seen.end());
    for (Value v = 0; v < schema.domain_size(columns[j]) &&
                      side.fresh[j].size() < open;
         ++v) {
      if (!seen.count(v)) side.fresh[j].push_back(v);
    }
  }
  return side;
}

// Enumerates inclusion-minimal sets S of complete values such that every
// part is compatible with some member of S. Fresh values of a column are
// interchangeable, so they are introduced in index order only.
class HittingSets {
 public:
  using Visitor = std::function<bool(const std::vector<Tuple>&)>;

  HittingSets(const Side& side, std::size_t max_size, std::uint64_t* nodes)
      : side_(side), max_size_(max_size), nodes_(nodes),
        fresh_used_(side.existing.size(), 0) {}

  // Returns true when `visit` asked to stop.
  bool run(const Visitor& visit) {
    visit_ = &visit;
    std::set<Tuple> forced;
    for (const Tuple& p : side_.parts) {
      if (std::find(p.begin(), p.end(), kNull) == p.end()) forced.insert(p);
    }
    chosen_.assign(forced.begin(), forced.end());
    if (chosen_.size() > max_size_) return false;
    return dfs();
  }

 private:
  std::size_t allowed_fresh(std::size_t j) const {
    return std::min(fresh_used_[j] + 1, side_.fresh[j].size());
  }

  bool dfs() {
    ++*nodes_;
    std::vector<Tuple> key = chosen_;
    std::sort(key.begin(), key.end());
    if (!seen_.insert(std::move(key)).second) return false;

    std::vector<std::size_t> privates(chosen_.size(), 0);
    std::vector<std::size_t> unhit;
    for (std::size_t p = 0; p < side_.parts.size(); ++p) {
      std::size_t hits = 0, last = 0;
      for (std::size_t e = 0; e < chosen_.size() && hits < 2; ++e) {
        if (compatible(side_.parts[p], chosen_[e])) {
          ++hits;
          last = e;
        }
      }
      if (hits == 0) unhit.push_back(p);
      if (hits == 1) ++privates[last];
    }
    for (std::size_t c : privates) {
      if (c == 0) return false;
    }
    if (unhit.empty()) return (*visit_)(chosen_);
    if (chosen_.size() >= max_size_) return false;

    std::size_t best = unhit.front();
    std::uint64_t best_count = UINT64_MAX;
    for (std::size_t p : unhit) {
      std::uint64_t count = 1;
      const Tuple& part = side_.parts[p];
      for (std::size_t j = 0; j < part.size() && count < best_count; ++j) {
        if (part[j] == kNull) {
          count *= side_.existing[j].size() + allowed_fresh(j);
        }
      }
      if (count < best_count) {
        best_count = count;
        best = p;
      }
    }
    Tuple value = side_.parts[best];
    return branch(value, 0);
  }

  // Fills the null cells of `value` from column j on, then recurses.
  bool branch(Tuple& value, std::size_t j) {
    while (j < value.size() && value[j] != kNull) ++j;
    if (j == value.size()) {
      chosen_.push_back(value);
      const bool stop = dfs();
      chosen_.pop_back();
      return stop;
    }
    for (Value v : side_.existing[j]) {
      value[j] = v;
      if (branch(value, j + 1)) return true;
    }
    const std::size_t limit = allowed_fresh(j);
    for (std::size_t f = 0; f < limit; ++f) {
      value[j] = side_.fresh[j][f];
      const bool introduces = f == fresh_used_[j];
      if (introduces) ++fresh_used_[j];
      const bool stop = branch(value, j + 1);
      if (introduces) --fresh_used_[j];
      if (stop) {
        value[j] = kNull;
        return true;
      }
    }
    value[j] = kNull;
    return false;
  }

  const Side& side_;
  std::size_t max_size_;
  std::uint64_t* nodes_;
  std::vector<std::size_t> fresh_used_;
  std::vector<Tuple> chosen_;
  std::set<std::vector<Tuple>> seen_;
  const Visitor* visit_ = nullptr;
};

struct Type {
  std::size_t x_part;
  std::size_t y_part;
  std::uint64_t count;
};

// Assignment of (x, y) values to copies, per type; empty when Xs × Ys cannot
// be covered.
std::optional<std::vector<std::vector<std::pair<std::size_t, std::size_t>>>>
cover(const std::vector<Type>& types, const Side& xs_side, const Side& ys_side,
      const std::vector<Tuple>& xs, const std::vector<Tuple>& ys) {
  const std::size_t pairs = xs.size() * ys.size();
  FlowNetwork net;
  const int source = net.add_node();
  const int sink = net.add_node();
  net.set_source(source);
  net.set_sink(sink);
  std::vector<int> type_node(types.size());
  for (std::size_t t = 0; t < types.size(); ++t) {
    type_node[t] = net.add_node();
    net.add_edge(source, type_node[t], static_cast<std::int64_t>(types[t].count));
  }
  std::vector<int> pair_node(pairs);
  for (std::size_t p = 0; p < pairs; ++p) {
    pair_node[p] = net.add_node();
    net.add_edge(pair_node[p], sink, 1);
  }
  struct Arc {
    int edge;
    std::size_t type;
    std::size_t pair;
  };
  std::vector<Arc> arcs;
  std::vector<bool> reachable(pairs, false);
  for (std::size_t t = 0; t < types.size(); ++t) {
    const Tuple& xp = xs_side.parts[types[t].x_part];
    const Tuple& yp = ys_side.parts[types[t].y_part];
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!compatible(xp, xs[i])) continue;
      for (std::size_t k = 0; k < ys.size(); ++k) {
        if (!compatible(yp, ys[k])) continue;
        const std::size_t p = i * ys.size() + k;
        arcs.push_back({net.add_edge(type_node[t], pair_node[p], 1), t, p});
        reachable[p] = true;
      }
    }
  }
  if (std::find(reachable.begin(), reachable.end(), false) != reachable.end()) {
    return std::nullopt;
  }
  const FlowResult flow = max_flow(net);
  if (flow.value != static_cast<std::int64_t>(pairs)) return std::nullopt;

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out(types.size());
  for (const Arc& a : arcs) {
    if (flow.edge_flow[a.edge] > 0) {
      out[a.type].emplace_back(a.pair / ys.size(), a.pair % ys.size());
    }
  }
  for (std::size_t t = 0; t < types.size(); ++t) {
    const Tuple& xp = xs_side.parts[types[t].x_part];
    const Tuple& yp = ys_side.parts[types[t].y_part];
    std::size_t fx = 0, fy = 0;
    while (!compatible(xp, xs[fx])) ++fx;
    while (!compatible(yp, ys[fy])) ++fy;
    while (out[t].size() < types[t].count) out[t].emplace_back(fx, fy);
  }
  return out;
}

}  // namespace

CheckReport check_pia(const Relation& r, AttributeSet x, AttributeSet y) {
  const Schema& schema = r.schema();
  if (!(x | y).subset_of(schema.all())) {
    throw SchemaError("attribute set leaves the schema");
  }
  CheckReport report;
  report.method = CheckMethod::kPiaSearch;
  const int n = schema.size();
  const std::uint64_t total = r.total_multiplicity();

  const AttributeSet overlap = x & y;
  const AttributeSet xo = x - overlap;
  const AttributeSet yo = y - overlap;

  std::vector<Value> fill(n, 0);
  for (int a : overlap.positions()) {
    Value seen = kNull;
    for (const Row& row : r.rows()) {
      const Value v = row.values[a];
      if (v == kNull) continue;
      if (seen != kNull && seen != v) return report;
      seen = v;
    }
    if (seen != kNull) fill[a] = seen;
  }

  auto complete_with_fill = [&](Tuple t) {
    for (int i = 0; i < n; ++i) {
      if (t[i] == kNull) t[i] = fill[i];
    }
    return t;
  };

  if (total == 0 || xo.empty() || yo.empty()) {
    report.verdict = true;
    Relation w(r.schema_ptr());
    for (const Row& row : r.rows()) {
      w.add(complete_with_fill(row.values), row.multiplicity);
    }
    report.witness = std::move(w);
    return report;
  }
  if (!pia_counting_bound(r, xo, yo)) return report;

  const std::vector<int> xcols = xo.positions();
  const std::vector<int> ycols = yo.positions();
  std::vector<Tuple> x_parts, y_parts;
  std::unordered_map<Tuple, std::size_t, TupleHash> x_index, y_index;
  std::vector<Type> types;
  std::unordered_map<Tuple, std::size_t, TupleHash> type_index;
  std::vector<std::size_t> type_of_row;
  auto intern = [](std::unordered_map<Tuple, std::size_t, TupleHash>& index,
                   std::vector<Tuple>& list, Tuple t) {
    auto [it, added] = index.emplace(t, list.size());
    if (added) list.push_back(std::move(t));
    return it->second;
  };
  for (const Row& row : r.rows()) {
    const std::size_t xi = intern(x_index, x_parts, restrict_tuple(row.values, xo));
    const std::size_t yi = intern(y_index, y_parts, restrict_tuple(row.values, yo));
    Tuple key{static_cast<Value>(xi), static_cast<Value>(yi)};
    auto [it, added] = type_index.emplace(key, types.size());
    if (added) types.push_back({xi, yi, 0});
    types[it->second].count += row.multiplicity;
    type_of_row.push_back(it->second);
  }
  const Side xside = make_side(schema, xcols, x_parts);
  const Side yside = make_side(schema, ycols, y_parts);

  std::size_t forced_x = 0;
  for (const Tuple& p : x_parts) forced_x += is_complete(p) ? 1 : 0;

  std::vector<std::vector<Tuple>> y_sets;
  HittingSets ysearch(yside, total / std::max<std::size_t>(1, forced_x),
                      &report.stats.nodes_explored);
  ysearch.run([&](const std::vector<Tuple>& s) {
    y_sets.push_back(s);
    return false;
  });
  if (y_sets.empty()) return report;
  std::stable_sort(y_sets.begin(), y_sets.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::vector<Tuple> best_x, best_y;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> assignment;
  HittingSets xsearch(xside, total / y_sets.front().size(),
                      &report.stats.nodes_explored);
  const bool found = xsearch.run([&](const std::vector<Tuple>& xs) {
    for (const auto& ys : y_sets) {
      if (xs.size() * ys.size() > total) break;
      ++report.stats.nodes_explored;
      if (auto a = cover(types, xside, yside, xs, ys)) {
        best_x = xs;
        best_y = ys;
        assignment = std::move(*a);
        return true;
      }
    }
    return false;
  });
  if (!found) return report;

  report.verdict = true;
  std::vector<std::size_t> next(types.size(), 0);
  Relation w(r.schema_ptr());
  for (std::size_t i = 0; i < r.rows().size(); ++i) {
    const Row& row = r.rows()[i];
    const std::size_t t = type_of_row[i];
    for (std::uint64_t c = 0; c < row.multiplicity; ++c) {
      const auto [xi, yi] = assignment[t][next[t]++];
      Tuple v = row.values;
      for (std::size_t j = 0; j < xcols.size(); ++j) v[xcols[j]] = best_x[xi][j];
      for (std::size_t j = 0; j < ycols.size(); ++j) v[ycols[j]] = best_y[yi][j];
      w.add(complete_with_fill(std::move(v)));
    }
  }
  report.witness = std::move(w);
  return report;
}

}  // namespace indepkit
