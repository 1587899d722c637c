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
#include <stdexcept>

#include "indepkit/error.h"
#include "indepkit/implication.h"

namespace indepkit {
namespace {

int slot(Modality m) { return static_cast<int>(m); }

}  // namespace

Saturation::Saturation(const ConstraintSet& sigma, const RuleSystem& system,
                       AttributeSet universe, const ClosureOptions& options)
    : system_(system), universe_(universe) {
  if (universe.size() > options.attribute_limit) {
    throw LimitError("saturation over " + std::to_string(universe.size()) +
                     " attributes exceeds the limit of " +
                     std::to_string(options.attribute_limit));
  }
  for (const Atom& a : sigma) {
    if (!a.attributes().subset_of(universe)) {
      throw ScopeError("constraint leaves the saturation universe");
    }
    add(a, std::nullopt, {});
  }
  for (Rule r : system_.rules()) {
    const RuleSignature& sig = signature(r);
    if (sig.shape != RuleShape::kTrivial) continue;
    for_each_subset(universe_, [&](AttributeSet x) {
      add({x, AttributeSet{}, sig.conclusion}, r, {});
    });
  }
  for (std::size_t head = 0; head < entries_.size(); ++head) process(head);
}

void Saturation::add(const Atom& a, std::optional<Rule> rule,
                     std::vector<std::size_t> premises) {
  if (ids_.count(a)) return;
  ids_.emplace(a, entries_.size());
  entries_.push_back({a, rule, std::move(premises)});
}

void Saturation::process(std::size_t id) {
  const Atom a = entries_[id].atom;
  const int m = slot(a.modality);
  processed_[m].push_back(id);
  by_lhs_[m][a.lhs].push_back(id);
  by_union_[m][a.lhs | a.rhs].push_back(id);
  if (a.lhs == a.rhs) constants_[m].push_back(id);

  for (Rule r : system_.rules()) {
    const RuleSignature& sig = signature(r);
    const Modality out = sig.conclusion;
    switch (sig.shape) {
      case RuleShape::kTrivial:
        break;
      case RuleShape::kSymmetry:
        if (a.modality == sig.premises[0]) add({a.rhs, a.lhs, out}, r, {id});
        break;
      case RuleShape::kDecomposition:
        if (a.modality == sig.premises[0]) {
          for (int p : a.rhs.positions()) {
            add({a.lhs, a.rhs - AttributeSet::single(p), out}, r, {id});
          }
        }
        break;
      case RuleShape::kConstancy: {
        if (a.modality != sig.premises[0]) break;
        if (a.lhs == a.rhs) {
          // Copy: add() may grow the index being iterated.
          const std::vector<std::size_t> others = processed_[m];
          for (std::size_t o : others) {
            const Atom& b = entries_[o].atom;
            add({a.lhs | b.lhs, b.rhs, out}, r, {id, o});
          }
        }
        const std::vector<std::size_t> constants = constants_[m];
        for (std::size_t k : constants) {
          const Atom& c = entries_[k].atom;
          add({c.lhs | a.lhs, a.rhs, out}, r, {k, id});
        }
        break;
      }
      case RuleShape::kExchange: {
        const Modality first = sig.premises[0];
        const Modality second = sig.premises[1];
        if (a.modality == first) {
          auto it = by_lhs_[slot(second)].find(a.lhs | a.rhs);
          if (it != by_lhs_[slot(second)].end()) {
            const std::vector<std::size_t> seconds = it->second;
            for (std::size_t s : seconds) {
              const Atom& b = entries_[s].atom;
              add({a.lhs, a.rhs | b.rhs, out}, r, {id, s});
            }
          }
        }
        if (a.modality == second) {
          auto it = by_union_[slot(first)].find(a.lhs);
          if (it != by_union_[slot(first)].end()) {
            const std::vector<std::size_t> firsts = it->second;
            for (std::size_t f : firsts) {
              const Atom& b = entries_[f].atom;
              add({b.lhs, b.rhs | a.rhs, out}, r, {f, id});
            }
          }
        }
        break;
      }
    }
  }
}

bool Saturation::contains(const Atom& a) const { return ids_.count(a) > 0; }

ConstraintSet Saturation::atoms() const {
  std::vector<Atom> all;
  all.reserve(entries_.size());
  for (const Entry& e : entries_) all.push_back(e.atom);
  std::sort(all.begin(), all.end(), [](const Atom& x, const Atom& y) {
    if (x.modality != y.modality) return x.modality < y.modality;
    if (x.lhs != y.lhs) return x.lhs < y.lhs;
    return x.rhs < y.rhs;
  });
  ConstraintSet out;
  for (const Atom& a : all) out.insert(a);
  return out;
}

std::optional<Derivation> Saturation::derivation(const Atom& goal) const {
  auto it = ids_.find(goal);
  if (it == ids_.end()) return std::nullopt;
  std::vector<std::size_t> order;
  std::unordered_map<std::size_t, std::size_t> renumber;
  // Iterative post-order; premises always have smaller ids, so no cycles.
  std::vector<std::pair<std::size_t, std::size_t>> stack{{it->second, 0}};
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const Entry& e = entries_[id];
    if (next < e.premises.size()) {
      const std::size_t p = e.premises[next++];
      if (!renumber.count(p)) stack.emplace_back(p, 0);
      continue;
    }
    if (!renumber.count(id)) {
      renumber.emplace(id, order.size());
      order.push_back(id);
    }
    stack.pop_back();
  }
  std::vector<DerivationStep> steps;
  steps.reserve(order.size());
  for (std::size_t id : order) {
    const Entry& e = entries_[id];
    DerivationStep step{e.atom, e.rule, {}};
    for (std::size_t p : e.premises) step.premises.push_back(renumber.at(p));
    steps.push_back(std::move(step));
  }
  return Derivation(std::move(steps));
}

ConstraintSet closure(const ConstraintSet& sigma, const RuleSystem& system,
                      std::optional<AttributeSet> universe,
                      const ClosureOptions& options) {
  return Saturation(sigma, system, universe.value_or(sigma.attributes()),
                    options)
      .atoms();
}

std::optional<Derivation> derives(const ConstraintSet& sigma, const Atom& goal,
                                  const RuleSystem& system,
                                  const ClosureOptions& options) {
  const Saturation s(sigma, system, sigma.attributes() | goal.attributes(),
                     options);
  auto d = s.derivation(goal);
  if (d) {
    std::string error;
    if (!validate(*d, sigma, system, &error)) {
      throw std::logic_error("saturation produced an invalid derivation: " +
                             error);
    }
  }
  return d;
}

}  // namespace indepkit
