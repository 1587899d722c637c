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

#include "indepkit/attribute_set.h"

#include <gtest/gtest.h>

#include <set>

namespace indepkit {
namespace {

TEST(AttributeSetTest, BasicOperations) {
  AttributeSet a{0, 2, 5};
  EXPECT_EQ(a.size(), 3);
  EXPECT_TRUE(a.contains(2));
  EXPECT_FALSE(a.contains(1));
  EXPECT_EQ(a.front(), 0);
  EXPECT_EQ(a.positions(), (std::vector<int>{0, 2, 5}));
  AttributeSet b{2, 3};
  EXPECT_EQ(a | b, (AttributeSet{0, 2, 3, 5}));
  EXPECT_EQ(a & b, AttributeSet{2});
  EXPECT_EQ(a - b, (AttributeSet{0, 5}));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_TRUE(AttributeSet{2}.subset_of(a));
  EXPECT_TRUE(AttributeSet{}.empty());
  EXPECT_EQ(AttributeSet::first(3), (AttributeSet{0, 1, 2}));
}

TEST(AttributeSetTest, SubsetEnumerationVisitsEverySubsetOnce) {
  const AttributeSet s{1, 3, 4};
  std::set<AttributeSet> seen;
  for_each_subset(s, [&](AttributeSet sub) {
    EXPECT_TRUE(sub.subset_of(s));
    EXPECT_TRUE(seen.insert(sub).second);
  });
  EXPECT_EQ(seen.size(), 8u);
}

}  // namespace
}  // namespace indepkit
