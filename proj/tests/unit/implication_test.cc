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

#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include "indepkit/error.h"
#include "support.h"

namespace indepkit {
namespace {

const std::string kData = INDEPKIT_TEST_DATA_DIR;

ConstraintFile load(const std::string& name, const std::vector<std::string>& extra) {
  std::ifstream in(kData + "/" + name);
  return read_constraint_file(in, extra);
}

class ImplicationTest : public ::testing::Test {
 protected:
  std::shared_ptr<const Schema> schema_ = testing::letters_schema(5);
  Atom a(const std::string& s) { return parse_atom(s, *schema_); }
  ConstraintSet set(std::initializer_list<const char*> atoms) {
    ConstraintSet out;
    for (const char* s : atoms) out.insert(a(s));
    return out;
  }
};

TEST_F(ImplicationTest, CertainExchange) {
  const auto f = load("certain_exchange.txt", {"e _||_c s,g"});
  const Atom goal = parse_atom("e _||_c s,g", *f.schema);
  EXPECT_TRUE(implies_cia(f.atoms, goal));
  const auto d = derives(f.atoms, goal, RuleSystem::certain());
  ASSERT_TRUE(d.has_value());
  EXPECT_TRUE(validate(*d, f.atoms, RuleSystem::certain()));
  EXPECT_EQ(d->goal(), goal);
}

TEST_F(ImplicationTest, PossibleExchangeIsNotDerivable) {
  const auto f = load("possible_exchange.txt", {"e _||_p s,g"});
  const Atom goal = parse_atom("e _||_p s,g", *f.schema);
  EXPECT_FALSE(derives(f.atoms, goal, RuleSystem::possible()).has_value());
  EXPECT_FALSE(derives(f.atoms, goal, RuleSystem::certain_possible()).has_value());
  const ImplicationAnswer answer = implies_mixed_disjoint(f.atoms, goal);
  EXPECT_FALSE(answer.verdict);
  EXPECT_EQ(answer.completeness, Completeness::kSoundOnly);
}

TEST_F(ImplicationTest, MixedExchangeDerivation) {
  const auto f = load("mixed_exchange.txt", {"r,s,g _||_p e"});
  const Atom goal = parse_atom("r,s,g _||_p e", *f.schema);
  const RuleSystem system = RuleSystem::parse("E_cp+S_p+C_p");
  const auto d = derives(f.atoms, goal, system);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->rule_applications(), 3u);
  std::set<Rule> used;
  for (const DerivationStep& s : d->steps()) {
    if (s.rule) used.insert(*s.rule);
  }
  EXPECT_EQ(used, (std::set<Rule>{Rule::kEcp, Rule::kSp, Rule::kCp}));
  EXPECT_TRUE(derives(f.atoms, parse_atom("e _||_p s,g", *f.schema),
                      RuleSystem::certain_possible()));
}

TEST_F(ImplicationTest, ConstancyGapInMixedSystem) {
  const auto f = load("constancy_gap.txt", {});
  const Atom goal = parse_atom("A,B _||_c C", *f.schema);
  EXPECT_FALSE(derives(f.atoms, goal, RuleSystem::certain_possible()).has_value());
  EXPECT_FALSE(implies_cia(set({"A _||_c C", "B _||_c C"}), a("A,B _||_c C")));
}

TEST_F(ImplicationTest, ClosureIsClosedAndContainsSigma) {
  const ConstraintSet sigma = set({"A _||_c B", "A,B _||_c C"});
  const ConstraintSet cl = closure(sigma, RuleSystem::certain());
  for (const Atom& s : sigma) EXPECT_TRUE(cl.contains(s));
  EXPECT_TRUE(cl.contains(a("C _||_c A,B")));
  EXPECT_TRUE(cl.contains(a("A _||_c B,C")));
  EXPECT_TRUE(cl.contains(a("A _||_c {}")));
  EXPECT_FALSE(cl.contains(a("A _||_c A")));
  // Closing again adds nothing.
  EXPECT_EQ(closure(cl, RuleSystem::certain()).size(), cl.size());
}

TEST_F(ImplicationTest, ClosureRespectsUniverseAndLimit) {
  const ConstraintSet sigma = set({"A _||_ B"});
  EXPECT_TRUE(closure(sigma, RuleSystem::plain(), AttributeSet{0, 1, 2})
                  .contains(a("C _||_ {}")));
  EXPECT_THROW(closure(sigma, RuleSystem::plain(), AttributeSet{0}), ScopeError);
  ClosureOptions tiny;
  tiny.attribute_limit = 1;
  EXPECT_THROW(closure(sigma, RuleSystem::plain(), std::nullopt, tiny), LimitError);
}

TEST_F(ImplicationTest, ConstantsOf) {
  EXPECT_EQ(constants_of(set({"A,B _||_c B,C", "D _||_ E"})), AttributeSet{1});
}

TEST_F(ImplicationTest, PlainImplicationMatchesCertain) {
  EXPECT_TRUE(implies_ia(set({"A _||_ B", "A,B _||_ C"}), a("A _||_ B,C")));
  EXPECT_FALSE(implies_ia(set({"A _||_ C", "B _||_ C"}), a("A,B _||_ C")));
  EXPECT_TRUE(implies_ia(set({"A _||_ A", "B _||_ C"}), a("A,B _||_ C")));
  EXPECT_THROW(implies_ia(set({"A _||_c B"}), a("A _||_ B")), ScopeError);
}

TEST_F(ImplicationTest, PossibleStarDecider) {
  EXPECT_TRUE(implies_pia_star(set({"A _||_p B,C"}), a("C _||_p A")));
  EXPECT_TRUE(implies_pia_star(set({"A _||_p A", "B _||_p C"}), a("A,B _||_p C")));
  EXPECT_FALSE(implies_pia_star(set({"A _||_p B", "A,B _||_p C"}), a("A _||_p B,C")));
  EXPECT_TRUE(implies_pia_star({}, a("A _||_p {}")));
  EXPECT_THROW(implies_pia_star({}, a("A,B,C,D _||_p E,B")), ScopeError);
  EXPECT_THROW(implies_pia_star(set({"A _||_c B"}), a("A _||_p B")), ScopeError);
}

TEST_F(ImplicationTest, MixedDisjointDecider) {
  const ConstraintSet sigma = set({"A _||_c B", "A,B _||_p C", "C _||_p D"});
  ImplicationAnswer certain = implies_mixed_disjoint(sigma, a("B _||_c A"));
  EXPECT_TRUE(certain.verdict);
  EXPECT_EQ(certain.completeness, Completeness::kComplete);
  EXPECT_FALSE(implies_mixed_disjoint(sigma, a("A _||_c C")).verdict);
  const ImplicationAnswer possible = implies_mixed_disjoint(sigma, a("A _||_p B,C"));
  EXPECT_TRUE(possible.verdict);
  EXPECT_EQ(possible.completeness, Completeness::kSoundOnly);
  EXPECT_THROW(implies_mixed_disjoint(set({"A _||_c A"}), a("A _||_c B")), ScopeError);
  EXPECT_THROW(implies_mixed_disjoint(sigma, a("A _||_ B")), ScopeError);
}

TEST_F(ImplicationTest, SaturationDerivationsValidate) {
  testing::Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    ConstraintSet sigma;
    for (int k = 0; k < 3; ++k) {
      sigma.insert(testing::random_atom(rng, 4, static_cast<Modality>(1 + k % 2), false));
    }
    const RuleSystem system = RuleSystem::certain_possible();
    const Saturation sat(sigma, system, AttributeSet::first(4));
    for (const Atom& goal : sat.atoms()) {
      const auto d = sat.derivation(goal);
      ASSERT_TRUE(d.has_value());
      std::string error;
      EXPECT_TRUE(validate(*d, sigma, system, &error)) << error;
      EXPECT_EQ(d->goal(), goal);
    }
  }
}

}  // namespace
}  // namespace indepkit
