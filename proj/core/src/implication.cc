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

#include "indepkit/implication.h"

#include "indepkit/error.h"

namespace indepkit {
namespace {

constexpr int kCoverLimit = 30;

void require_modality(const ConstraintSet& sigma, const Atom& goal,
                      Modality m, const char* what) {
  auto bad = [&](const Atom& a) { return a.modality != m; };
  if (bad(goal) || std::any_of(sigma.begin(), sigma.end(), bad)) {
    throw ScopeError(std::string(what) + " needs " +
                     std::string(modality_name(m)) + " atoms only");
  }
}

// X ⊥ Y follows from plain atoms iff the overlap is constant and every
// sub-atom X' ⊥ Y' of the non-constant part (X', Y' non-empty) lies inside
// some atom V ⊥ W that splits it, i.e. X'Y' ⊆ VW with both V and W meeting
// X'Y'. Constants are removed from the atoms first.
bool covered(const ConstraintSet& sigma, const Atom& goal) {
  const AttributeSet c = constants_of(sigma);
  if (!(goal.lhs & goal.rhs).subset_of(c)) return false;
  const AttributeSet x = goal.lhs - c;
  const AttributeSet y = goal.rhs - c;
  if (x.empty() || y.empty()) return true;
  if (x.size() + y.size() > kCoverLimit) {
    throw LimitError("goal atom too wide for the implication test");
  }
  std::vector<std::pair<AttributeSet, AttributeSet>> atoms;
  for (const Atom& a : sigma) atoms.emplace_back(a.lhs - c, a.rhs - c);
  bool ok = true;
  for_each_subset(x, [&](AttributeSet xs) {
    if (!ok || xs.empty()) return;
    for_each_subset(y, [&](AttributeSet ys) {
      if (!ok || ys.empty()) return;
      const AttributeSet both = xs | ys;
      for (const auto& [v, w] : atoms) {
        if (both.subset_of(v | w) && v.intersects(both) && w.intersects(both)) {
          return;
        }
      }
      ok = false;
    });
  });
  return ok;
}

}  // namespace

AttributeSet constants_of(const ConstraintSet& sigma) {
  AttributeSet out;
  for (const Atom& a : sigma) out |= a.lhs & a.rhs;
  return out;
}

bool implies_ia(const ConstraintSet& sigma, const Atom& goal) {
  require_modality(sigma, goal, Modality::kPlain, "implies_ia");
  return covered(sigma, goal);
}

bool implies_cia(const ConstraintSet& sigma, const Atom& goal) {
  require_modality(sigma, goal, Modality::kCertain, "implies_cia");
  return covered(ind(sigma), ind(goal));
}

bool implies_pia_star(const ConstraintSet& sigma, const Atom& goal) {
  require_modality(sigma, goal, Modality::kPossible, "implies_pia_star");
  if (!is_pia_star(goal)) {
    throw ScopeError("goal is outside PIA*; use derives() for a sound answer");
  }
  const AttributeSet c = constants_of(sigma);
  const AttributeSet x = goal.lhs - c;
  const AttributeSet y = goal.rhs - c;
  if (x.empty() || y.empty()) return true;
  for (const Atom& a : sigma) {
    if ((x.subset_of(a.lhs) && y.subset_of(a.rhs)) ||
        (x.subset_of(a.rhs) && y.subset_of(a.lhs))) {
      return true;
    }
  }
  return false;
}

ImplicationAnswer implies_mixed_disjoint(const ConstraintSet& sigma,
                                         const Atom& goal,
                                         const ClosureOptions& options) {
  auto in_scope = [](const Atom& a) {
    return is_disjoint(a) && a.modality != Modality::kPlain;
  };
  if (!in_scope(goal) || !std::all_of(sigma.begin(), sigma.end(), in_scope)) {
    throw ScopeError(
        "implies_mixed_disjoint needs disjoint certain or possible atoms");
  }
  if (goal.modality == Modality::kCertain) {
    ConstraintSet certain;
    for (const Atom& a : sigma) {
      if (a.modality == Modality::kCertain) certain.insert(ind(a));
    }
    return {covered(certain, ind(goal)), Completeness::kComplete};
  }
  const Saturation s(sigma, RuleSystem::disjoint_mixed(),
                     sigma.attributes() | goal.attributes(), options);
  return {s.contains(goal), Completeness::kSoundOnly};
}

}  // namespace indepkit
