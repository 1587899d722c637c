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

#include "indepkit/rules.h"

#include <gtest/gtest.h>

#include "indepkit/error.h"
#include "support.h"

namespace indepkit {
namespace {

class RulesTest : public ::testing::Test {
 protected:
  std::shared_ptr<const Schema> schema_ = testing::letters_schema(4);
  Atom a(const std::string& s) { return parse_atom(s, *schema_); }
};

TEST_F(RulesTest, NamesRoundTrip) {
  for (int i = 0; i < kRuleCount; ++i) {
    const Rule r = static_cast<Rule>(i);
    EXPECT_EQ(parse_rule_name(rule_name(r)), r);
  }
  EXPECT_EQ(rule_name(Rule::kEcp), "E_cp");
  EXPECT_FALSE(parse_rule_name("E_p").has_value());
}

TEST_F(RulesTest, SystemsContainExpectedRules) {
  EXPECT_EQ(RuleSystem::plain().rules().size(), 5u);
  EXPECT_EQ(RuleSystem::possible().rules().size(), 4u);
  EXPECT_FALSE(RuleSystem::possible().contains(Rule::kEc));
  EXPECT_EQ(RuleSystem::certain_possible().rules().size(), 11u);
  EXPECT_FALSE(RuleSystem::disjoint_mixed().contains(Rule::kCc));
  EXPECT_FALSE(RuleSystem::disjoint_mixed().contains(Rule::kCp));
  EXPECT_EQ(RuleSystem::parse("mixed"), RuleSystem::certain_possible());
  EXPECT_EQ(RuleSystem::parse("I_c+I_p+J_pc"), RuleSystem::certain_possible());
  EXPECT_EQ(RuleSystem::parse("E_cp+S_p+C_p"),
            (RuleSystem{Rule::kEcp, Rule::kSp, Rule::kCp}));
  EXPECT_EQ(RuleSystem::parse("disjoint"), RuleSystem::disjoint_mixed());
  EXPECT_THROW(RuleSystem::parse("I_x"), ParseError);
}

TEST_F(RulesTest, SingleApplications) {
  EXPECT_TRUE(rule_applies(Rule::kT, {}, a("A,B _||_ {}")));
  EXPECT_FALSE(rule_applies(Rule::kT, {}, a("A _||_ B")));
  EXPECT_TRUE(rule_applies(Rule::kSc, {a("A _||_c B")}, a("B _||_c A")));
  EXPECT_FALSE(rule_applies(Rule::kSc, {a("A _||_p B")}, a("B _||_c A")));
  EXPECT_TRUE(rule_applies(Rule::kDp, {a("A _||_p B,C")}, a("A _||_p C")));
  EXPECT_FALSE(rule_applies(Rule::kDp, {a("A _||_p C")}, a("A _||_p B,C")));
  EXPECT_TRUE(rule_applies(Rule::kCp, {a("A _||_p A"), a("B _||_p C")},
                           a("A,B _||_p C")));
  EXPECT_TRUE(rule_applies(Rule::kE, {a("A _||_ B"), a("A,B _||_ C")},
                           a("A _||_ B,C")));
  EXPECT_TRUE(rule_applies(Rule::kEpc, {a("A _||_p B"), a("A,B _||_c C")},
                           a("A _||_p B,C")));
  EXPECT_TRUE(rule_applies(Rule::kEcp, {a("A _||_c B"), a("A,B _||_p C")},
                           a("A _||_p B,C")));
  EXPECT_FALSE(rule_applies(Rule::kEcp, {a("A _||_p B"), a("A,B _||_c C")},
                            a("A _||_p B,C")));
}

TEST_F(RulesTest, ValidatesDerivations) {
  const ConstraintSet sigma{a("A _||_c B"), a("A,B _||_p C")};
  Derivation good({{a("A _||_c B"), std::nullopt, {}},
                   {a("A,B _||_p C"), std::nullopt, {}},
                   {a("A _||_p B,C"), Rule::kEcp, {0, 1}},
                   {a("B,C _||_p A"), Rule::kSp, {2}}});
  std::string error;
  EXPECT_TRUE(validate(good, sigma, RuleSystem::certain_possible(), &error)) << error;
  EXPECT_EQ(good.rule_applications(), 2u);
  EXPECT_FALSE(validate(good, sigma, RuleSystem::possible(), &error));
  EXPECT_FALSE(error.empty());

  Derivation forward({{a("A _||_p B,C"), Rule::kEcp, {1, 2}},
                      {a("A _||_c B"), std::nullopt, {}},
                      {a("A,B _||_p C"), std::nullopt, {}}});
  EXPECT_FALSE(validate(forward, sigma, RuleSystem::certain_possible()));
  Derivation foreign({{a("A _||_p B"), std::nullopt, {}}});
  EXPECT_FALSE(validate(foreign, sigma, RuleSystem::certain_possible()));
}

TEST_F(RulesTest, RendersTreeConclusionFirst) {
  Derivation d({{a("A _||_c B"), std::nullopt, {}},
                {a("B _||_c A"), Rule::kSc, {0}}});
  EXPECT_EQ(render_tree(d, *schema_),
            "B _||_c A    [S_c]\n  A _||_c B    [premise]\n");
}

}  // namespace
}  // namespace indepkit
