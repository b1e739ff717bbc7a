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

#include "omcert/configuration.h"

#include <gtest/gtest.h>

#include "omcert/error.h"
#include "test_support.h"

namespace omcert {
namespace {

TEST(DeterminantTest, KnownValues) {
  EXPECT_EQ(Determinant({{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(Determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(Determinant({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}), 0);
  EXPECT_EQ(Determinant({{Rational(1, 2), 0}, {0, Rational(2, 3)}}),
            Rational(1, 3));
}

TEST(DeterminantTest, MatchesPermutationExpansion) {
  const VectorConfiguration config = RandomConfiguration(4, 4, 5, 7);
  EXPECT_EQ(Determinant(config.columns),
            testing::LeibnizDeterminant(config.columns));
}

TEST(BracketValueTest, OrderMatters) {
  const VectorConfiguration config = MomentCurve(4, 3);
  const Rational v = BracketValue(config, Tuple{1, 2, 3});
  EXPECT_GT(v, 0);
  EXPECT_EQ(BracketValue(config, Tuple{2, 1, 3}), -v);
  EXPECT_EQ(BracketValue(config, Tuple{1, 1, 3}), 0);
}

TEST(MomentCurveTest, AllBracketsPositive) {
  const Chirotope chi = ChirotopeFromConfiguration(MomentCurve(8, 4));
  EXPECT_EQ(chi.SignString(), std::string(70, '+'));
}

TEST(RandomConfigurationTest, SeedIsReproducible) {
  const VectorConfiguration a = RandomConfiguration(7, 3, 42);
  const VectorConfiguration b = RandomConfiguration(7, 3, 42);
  const VectorConfiguration c = RandomConfiguration(7, 3, 43);
  EXPECT_EQ(a.columns, b.columns);
  EXPECT_NE(a.columns, c.columns);
  EXPECT_EQ(a.n(), 7);
  EXPECT_EQ(a.rank, 3);
}

TEST(ChirotopeFromConfigurationTest, CollinearTripleIsNotUniform) {
  VectorConfiguration config;
  config.rank = 3;
  config.columns = {{1, 0, 0}, {1, 1, 1}, {1, 2, 2}, {1, 0, 3}, {1, 5, 1}};
  const Chirotope chi = ChirotopeFromConfiguration(config);
  EXPECT_FALSE(chi.IsUniform());
  EXPECT_EQ(chi.SignOfSubset(Tuple{1, 2, 3}), Sign::kZero);
}

TEST(ChirotopeFromConfigurationTest, RankDeficient) {
  VectorConfiguration config;
  config.rank = 3;
  config.columns = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {2, 3, 0}};
  try {
    ChirotopeFromConfiguration(config);
    FAIL() << "expected RankDeficient";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankDeficient);
  }
}

TEST(ChirotopeFromConfigurationTest, WrongCoordinateCount) {
  VectorConfiguration config;
  config.rank = 3;
  config.columns = {{1, 0, 0}, {0, 1}, {0, 0, 1}};
  EXPECT_THROW(ChirotopeFromConfiguration(config), Error);
}

TEST(ChirotopeFromConfigurationTest, SignsMatchOracleDeterminants) {
  for (const auto& entry : testing::RealizableCorpus()) {
    const int r = entry.chi.rank();
    for (const Tuple& s : Combinations(entry.chi.n(), r)) {
      const Rational det = testing::OracleBracket(entry.config, s);
      EXPECT_EQ(ToInt(entry.chi.SignOfSubset(s)), sgn(det)) << entry.name;
    }
  }
}

}  // namespace
}  // namespace omcert
