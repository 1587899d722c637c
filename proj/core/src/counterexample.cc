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

#include "indepkit/constructions.h"
#include "indepkit/error.h"
#include "indepkit/implication.h"
#include "indepkit/model_check.h"

namespace indepkit {
namespace {

class Search {
 public:
  Search(const ConstraintSet& sigma, const Atom& goal, const Schema& names,
         const SearchBounds& bounds)
      : bounds_(bounds) {
    const AttributeSet universe = sigma.attributes() | goal.attributes();
    if (!universe.subset_of(names.all())) {
      throw SchemaError("atoms leave the attribute names");
    }
    if (universe.size() > bounds.max_attributes) {
      throw LimitError("counterexample search over " +
                       std::to_string(universe.size()) +
                       " attributes exceeds the bound of " +
                       std::to_string(bounds.max_attributes));
    }
    if (bounds.domain_size < 2 || bounds.max_rows < 0) {
      throw LimitError("search bounds need a domain of at least two values");
    }
    map_ = universe.positions();
    std::vector<std::string> attrs;
    for (int p : map_) attrs.push_back(names.name(p));
    schema_ = std::make_shared<const Schema>(
        Schema::uniform(std::move(attrs), bounds.domain_size));
    for (const Atom& a : sigma) sigma_.insert(remap(a));
    goal_ = remap(goal);
    complete_only_ = goal.modality == Modality::kPlain ||
                     std::any_of(sigma.begin(), sigma.end(), [](const Atom& a) {
                       return a.modality == Modality::kPlain;
                     });
  }

  std::optional<Counterexample> run() {
    if (auto r = exhaustive()) return wrap(std::move(*r));
    if (auto r = constructed()) return wrap(std::move(*r));
    return std::nullopt;
  }

 private:
  Atom remap(const Atom& a) const {
    auto side = [&](AttributeSet s) {
      AttributeSet out;
      for (std::size_t i = 0; i < map_.size(); ++i) {
        if (s.contains(map_[i])) out.insert(static_cast<int>(i));
      }
      return out;
    };
    return {side(a.lhs), side(a.rhs), a.modality};
  }

  Counterexample wrap(Relation r) const { return {std::move(r), map_}; }

  bool refutes(const Relation& r) const {
    if (complete_only_ && !is_complete(r)) return false;
    if (satisfies(r, goal_)) return false;
    return std::all_of(sigma_.begin(), sigma_.end(),
                       [&](const Atom& a) { return satisfies(r, a); });
  }

  // Candidate relations in order of increasing rows, then increasing null
  // count, then lexicographically over non-decreasing tuple-index sequences.
  std::optional<Relation> exhaustive() {
    const int k = schema_->size();
    const int d = bounds_.domain_size;
    std::vector<Tuple> universe;
    std::vector<int> nulls;
    Tuple t(k, kNull);
    // Odometer over {null, 0..d-1}^k; null sorts first in each cell.
    while (true) {
      const int z = static_cast<int>(std::count(t.begin(), t.end(), kNull));
      if (!complete_only_ || z == 0) {
        universe.push_back(t);
        nulls.push_back(z);
      }
      int i = k - 1;
      while (i >= 0 && t[i] == d - 1) t[i--] = kNull;
      if (i < 0) break;
      ++t[i];
    }
    const int rows = std::min(bounds_.exhaustive_rows, bounds_.max_rows);
    for (int n = 1; n <= rows; ++n) {
      for (int z = 0; z <= n * k; ++z) {
        if (complete_only_ && z > 0) break;
        std::vector<std::size_t> pick;
        std::optional<Relation> found;
        if (enumerate(universe, nulls, n, z, 0, pick, found)) return found;
        if (candidates_ >= bounds_.candidate_budget) return std::nullopt;
      }
    }
    return std::nullopt;
  }

  bool enumerate(const std::vector<Tuple>& universe,
                 const std::vector<int>& nulls, int n, int z, std::size_t from,
                 std::vector<std::size_t>& pick,
                 std::optional<Relation>& found) {
    if (static_cast<int>(pick.size()) == n) {
      if (z != 0) return false;
      if (++candidates_ > bounds_.candidate_budget) return true;
      Relation r(schema_);
      for (std::size_t i : pick) r.add(universe[i]);
      if (refutes(r)) {
        found = std::move(r);
        return true;
      }
      return false;
    }
    for (std::size_t i = from; i < universe.size(); ++i) {
      if (nulls[i] > z) continue;
      pick.push_back(i);
      const bool stop = enumerate(universe, nulls, n, z - nulls[i], i, pick, found);
      pick.pop_back();
      if (stop) return true;
    }
    return false;
  }

  // Moves a binary relation onto the search schema; columns must already be
  // in search-schema order.
  Relation rebase(const Relation& r) const {
    Relation out(schema_);
    for (const Row& row : r.rows()) out.add(row.values, row.multiplicity);
    return out;
  }

  bool fits(const Relation& r) const {
    return static_cast<int>(r.distinct_size()) <= bounds_.max_rows &&
           (!complete_only_ || is_complete(r));
  }

  std::optional<Relation> try_candidate(const Relation& r) const {
    if (fits(r) && refutes(r)) return r;
    return std::nullopt;
  }

  std::optional<Relation> constructed() const {
    const AttributeSet all = schema_->all();
    const AttributeSet c = constants_of(sigma_);
    const AttributeSet x = goal_.lhs - c;
    const AttributeSet y = goal_.rhs - c;

    for (int a : (x & y).positions()) {
      if (auto r = try_candidate(constancy_counterexample(*schema_, a, all))) {
        return rebase(*r);
      }
    }
    if (x.empty() || y.empty() || x.intersects(y)) return std::nullopt;

    if (goal_.modality != Modality::kPossible) {
      // Smallest sub-atom X' ⊥ Y' first; the parity relation on it breaks
      // the goal while every atom that cannot split X'Y' survives.
      std::vector<std::pair<AttributeSet, AttributeSet>> subs;
      for_each_subset(x, [&](AttributeSet xs) {
        if (xs.empty()) return;
        for_each_subset(y, [&](AttributeSet ys) {
          if (!ys.empty()) subs.emplace_back(xs, ys);
        });
      });
      std::stable_sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
        return a.first.size() + a.second.size() <
               b.first.size() + b.second.size();
      });
      for (const auto& [xs, ys] : subs) {
        const AttributeSet z = all - xs - ys;
        for (bool nulled : {false, true}) {
          const Relation r =
              rebase(parity_relation(*schema_, xs, ys, z, xs.front(), nulled));
          if (auto found = try_candidate(r)) return found;
        }
      }
      return std::nullopt;
    }

    AttributeSet big = x, small = y;
    if (big.size() < small.size()) std::swap(big, small);
    const int k = big.size();
    const int m = small.size();
    const int extra = schema_->size() - k - m;
    if (k > 12) return std::nullopt;
    const SeparatingFamily family = pia_separating_family(k, m, extra);
    std::vector<int> column(schema_->size());
    const std::vector<int> bx = big.positions();
    const std::vector<int> sy = small.positions();
    const std::vector<int> rest = (all - big - small).positions();
    for (int i = 0; i < k; ++i) column[bx[i]] = i;
    for (int i = 0; i < m; ++i) column[sy[i]] = k + i;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      column[rest[i]] = k + m + static_cast<int>(i);
    }
    Relation r(schema_);
    for (const Row& row : family.relation.rows()) {
      Tuple t(schema_->size());
      for (int p = 0; p < schema_->size(); ++p) t[p] = row.values[column[p]];
      r.add(std::move(t), row.multiplicity);
    }
    return try_candidate(r);
  }

  SearchBounds bounds_;
  std::vector<int> map_;
  std::shared_ptr<const Schema> schema_;
  ConstraintSet sigma_;
  Atom goal_;
  bool complete_only_ = false;
  std::uint64_t candidates_ = 0;
};

}  // namespace

std::optional<Counterexample> search_counterexample(const ConstraintSet& sigma,
                                                    const Atom& goal,
                                                    const Schema& names,
                                                    const SearchBounds& bounds) {
  return Search(sigma, goal, names, bounds).run();
}

}  // namespace indepkit
