// Copyright 2026 The Authors.
//
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

#include "omcert/combinatorics.h"

#include <gtest/gtest.h>

namespace omcert {
namespace {

TEST(BinomialTest, SmallValues) {
  EXPECT_EQ(Binomial(5, 0), 1);
  EXPECT_EQ(Binomial(5, 2), 10);
  EXPECT_EQ(Binomial(8, 4), 70);
  EXPECT_EQ(Binomial(3, 4), 0);
  EXPECT_EQ(Binomial(3, -1), 0);
}

TEST(LexRankTest, FollowsCombinationOrder) {
  const std::vector<Tuple> all = Combinations(6, 3);
  ASSERT_EQ(all.size(), 20u);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(LexRank(all[i], 6), static_cast<std::int64_t>(i));
    EXPECT_EQ(LexUnrank(static_cast<std::int64_t>(i), 6, 3), all[i]);
  }
}

TEST(LexRankTest, FirstAndLast) {
  EXPECT_EQ(LexRank(Tuple{1, 2, 3, 4}, 8), 0);
  EXPECT_EQ(LexRank(Tuple{5, 6, 7, 8}, 8), 69);
}

TEST(CombinationsTest, OverPool) {
  const Tuple pool = {2, 5, 7};
  const std::vector<Tuple> pairs = Combinations(pool, 2);
  EXPECT_EQ(pairs, (std::vector<Tuple>{{2, 5}, {2, 7}, {5, 7}}));
  EXPECT_EQ(Combinations(pool, 0), (std::vector<Tuple>{{}}));
  EXPECT_TRUE(Combinations(pool, 4).empty());
}

TEST(SortWithParityTest, Parity) {
  Tuple t = {3, 1, 2};
  EXPECT_EQ(SortWithParity(t), Sign::kPositive);
  EXPECT_EQ(t, (Tuple{1, 2, 3}));

  Tuple u = {2, 1, 3};
  EXPECT_EQ(SortWithParity(u), Sign::kNegative);

  Tuple v = {4, 3, 2, 1};
  EXPECT_EQ(SortWithParity(v), Sign::kPositive);
}

TEST(SortWithParityTest, RepeatGivesZero) {
  Tuple t = {2, 1, 2};
  EXPECT_EQ(SortWithParity(t), Sign::kZero);
}

TEST(ConcatTest, AppendsTail) {
  const Tuple tau = {1, 2};
  EXPECT_EQ(Concat(tau, {7, 5}), (Tuple{1, 2, 7, 5}));
}

TEST(JoinElementsTest, Separator) {
  const Tuple t = {1, 4, 9};
  EXPECT_EQ(JoinElements(t), "1 4 9");
  EXPECT_EQ(JoinElements(t, ","), "1,4,9");
  EXPECT_EQ(JoinElements(Tuple{}), "");
}

}  // namespace
}  // namespace omcert
