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

#include "indepkit/constructions.h"

#include <gtest/gtest.h>

#include <stdexcept>

#include "indepkit/grounding.h"
#include "indepkit/model_check.h"
#include "support.h"

namespace indepkit {
namespace {

TEST(ConstructionsTest, ExchangeFailureGroundings) {
  const Relation r = exchange_failure_relation();
  EXPECT_EQ(r.total_multiplicity(), 4u);
  EXPECT_TRUE(testing::ref_pia(r, {0}, {1}));
  EXPECT_TRUE(testing::ref_pia(r, {0, 1}, {2}));
  EXPECT_FALSE(testing::ref_pia(r, {0}, {1, 2}));
  EXPECT_TRUE(is_grounding_of(exchange_failure_grounding_ab(), r));
  EXPECT_TRUE(is_grounding_of(exchange_failure_grounding_ab_c(), r));
  // Neither grounding separates A _||_c C, B _||_c C from AB _||_c C.
  const Relation rp = exchange_failure_grounding_ab();
  const Relation rpp = exchange_failure_grounding_ab_c();
  EXPECT_FALSE(testing::ref_cia(rp, {0}, {2}));
  EXPECT_TRUE(testing::ref_cia(rpp, {0, 1}, {2}));
}

TEST(ConstructionsTest, SeparatingFamilyLayout) {
  const SeparatingFamily f = pia_separating_family(3, 2, 2);
  const Schema& s = f.relation.schema();
  EXPECT_EQ(s.attributes(), (std::vector<std::string>{"X1", "X2", "X3", "Y1", "Y2",
                                                      "Z1", "Z2"}));
  EXPECT_EQ(f.relation.distinct_size(), 9u);
  EXPECT_EQ(f.relation.total_multiplicity(), 23u);
  const Row& last = f.relation.rows().back();
  EXPECT_EQ(last.multiplicity, 15u);
  EXPECT_EQ(last.values, (Tuple{kNull, kNull, kNull, kNull, kNull, 0, 0}));
  EXPECT_EQ(f.relation.rows()[2].values, (Tuple{0, 1, 0, 1, 0, 0, 0}));
  EXPECT_EQ(f.relation.rows()[3].values, (Tuple{0, 1, 1, kNull, kNull, 0, 0}));
  EXPECT_THROW(pia_separating_family(1, 2), std::invalid_argument);
  EXPECT_THROW(pia_separating_family(2, 0), std::invalid_argument);
}

TEST(ConstructionsTest, SeparatingFamilyUnaryY) {
  const SeparatingFamily f = pia_separating_family(2, 1);
  EXPECT_EQ(f.relation.total_multiplicity(), 7u);
  EXPECT_FALSE(testing::ref_pia(f.relation, f.x, f.y));
  EXPECT_TRUE(testing::ref_pia(f.relation, {0}, {1, 2}));
}

TEST(ConstructionsTest, ParityRelation) {
  const auto names = testing::letters_schema(3);
  const Relation r = parity_relation(*names, {0}, {1}, {2}, 0);
  EXPECT_EQ(r.total_multiplicity(), 4u);
  EXPECT_EQ(r.multiplicity({0, 0, 0}), 1u);
  EXPECT_EQ(r.multiplicity({1, 1, 0}), 1u);
  EXPECT_EQ(r.multiplicity({kNull, 0, 0}), 1u);
  EXPECT_EQ(r.multiplicity({kNull, 1, 0}), 1u);
  EXPECT_FALSE(testing::ref_cia(r, {0}, {1}));
  EXPECT_TRUE(testing::ref_pia(r, {0}, {1}));
  const Relation r1 = parity_relation(*names, {0}, {1}, {2}, 0, false);
  EXPECT_TRUE(is_complete(r1));
  EXPECT_THROW(parity_relation(*names, {0}, {0, 1}, {2}, 0), std::invalid_argument);
  EXPECT_THROW(parity_relation(*names, {0}, {1}, {2}, 1), std::invalid_argument);
}

TEST(ConstructionsTest, ParityOverWiderSides) {
  const auto names = testing::letters_schema(4);
  const Relation r = parity_relation(*names, {0, 1}, {2}, {3}, 0);
  EXPECT_FALSE(testing::ref_cia(r, {0, 1}, {2}));
  EXPECT_TRUE(testing::ref_cia(r, {0}, {2}));
  EXPECT_TRUE(testing::ref_cia(r, {1}, {2}));
}

TEST(ConstructionsTest, ConstancyCounterexample) {
  const auto names = testing::letters_schema(3);
  const Relation r = constancy_counterexample(*names, 1, AttributeSet{0, 1, 2});
  EXPECT_TRUE(is_complete(r));
  EXPECT_FALSE(testing::ref_pia(r, {1}, {1}));
  EXPECT_TRUE(testing::ref_pia(r, {0}, {0}));
  EXPECT_THROW(constancy_counterexample(*names, 1, AttributeSet{0}),
               std::invalid_argument);
}

TEST(ConstructionsTest, ReductionOfTableInstance) {
  CnfFormula phi{3, {{2, 3}, {1, -2, 3}, {-3}}};
  const Reduction red = cnf_to_relation(phi);
  const Relation& r = red.relation;
  EXPECT_EQ(r.schema().attributes(), (std::vector<std::string>{"V", "P", "C"}));
  EXPECT_EQ(r.total_multiplicity(), 36u);
  EXPECT_EQ(r.distinct_size(), 35u);
  const auto t = [&](const char* v, const char* p, const char* c) {
    Tuple out(3);
    out[0] = std::string(v) == "*" ? kNull : r.schema().value(0, v);
    out[1] = std::string(p) == "*" ? kNull : r.schema().value(1, p);
    out[2] = r.schema().value(2, c);
    return r.multiplicity(out);
  };
  EXPECT_EQ(t("*", "+", "p1"), 1u);
  EXPECT_EQ(t("~p2", "*", "p1"), 1u);
  EXPECT_EQ(t("*", "*", "c2"), 2u);
  EXPECT_EQ(t("~p1", "*", "c1"), 1u);
  EXPECT_EQ(t("p3", "*", "c3"), 1u);
  EXPECT_EQ(t("*", "+", "c3"), 1u);
  EXPECT_EQ(t("*", "*", "c3"), 0u);
  EXPECT_TRUE(sat_via_pia(phi));
}

TEST(ConstructionsTest, UnsatisfiableFormula) {
  CnfFormula phi{1, {{1}, {-1}}};
  EXPECT_FALSE(sat_via_pia(phi));
  EXPECT_THROW(cnf_to_relation(CnfFormula{1, {{}}}), std::invalid_argument);
  EXPECT_THROW(cnf_to_relation(CnfFormula{1, {{2}}}), std::invalid_argument);
}

}  // namespace
}  // namespace indepkit
