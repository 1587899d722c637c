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

#include "indepkit/report_json.h"

#include <gtest/gtest.h>

#include <sstream>

#include "indepkit/implication.h"
#include "indepkit/relation_io.h"
#include "json.hpp"
#include "support.h"

namespace indepkit {
namespace {

TEST(ReportJsonTest, CheckReportRoundTripsWitness) {
  const Relation r = testing::relation_from_text("A,B\n0,*\n1,*\n*,0\n*,1\n");
  const CheckReport report = check(r, parse_atom("A _||_p B", r.schema()));
  ASSERT_TRUE(report.verdict);
  const auto j = nlohmann::json::parse(to_json(report));
  EXPECT_EQ(j["verdict"], true);
  EXPECT_EQ(j["method"], "pia_flow");
  EXPECT_EQ(j["stats"]["flow_value"], 4);
  std::istringstream csv(j["witness"].get<std::string>());
  std::istringstream doms(domains_to_json(r.schema()));
  const Relation w = read_relation_csv(csv, parse_domains_json(doms));
  EXPECT_EQ(w, *report.witness);
}

TEST(ReportJsonTest, DerivationSteps) {
  const auto schema = testing::letters_schema(3);
  const ConstraintSet sigma{parse_atom("A _||_c B", *schema)};
  const auto d = derives(sigma, parse_atom("B _||_c A", *schema), RuleSystem::certain());
  ASSERT_TRUE(d.has_value());
  const auto j = nlohmann::json::parse(to_json(*d, *schema));
  EXPECT_EQ(j["goal"], "B _||_c A");
  ASSERT_EQ(j["steps"].size(), 2u);
  EXPECT_EQ(j["steps"][0]["index"], 1);
  EXPECT_EQ(j["steps"][0]["rule"], "premise");
  EXPECT_EQ(j["steps"][1]["rule"], "S_c");
  EXPECT_EQ(j["steps"][1]["premises"], nlohmann::json::array({1}));
  for (const auto& step : j["steps"]) {
    EXPECT_NO_THROW(parse_atom(step["atom"].get<std::string>(), *schema));
  }
}

}  // namespace
}  // namespace indepkit
