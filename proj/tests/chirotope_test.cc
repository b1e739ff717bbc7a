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

#include "omcert/chirotope.h"

#include <functional>

#include <gtest/gtest.h>

#include "omcert/configuration.h"
#include "omcert/error.h"
#include "test_support.h"

namespace omcert {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kInvalidArgument;
}

TEST(ChirotopeTest, ParsesSignString) {
  const Chirotope chi = Chirotope::FromSignString(4, 3, "++++");
  EXPECT_EQ(chi.n(), 4);
  EXPECT_EQ(chi.rank(), 3);
  EXPECT_EQ(chi.SignString(), "++++");
  EXPECT_TRUE(chi.IsUniform());
}

TEST(ChirotopeTest, RejectsShortString) {
  EXPECT_EQ(CodeOf([] { Chirotope::FromSignString(4, 3, "+++"); }),
            ErrorCode::kLengthMismatch);
}

TEST(ChirotopeTest, RejectsAllZero) {
  EXPECT_EQ(CodeOf([] { Chirotope::FromSignString(4, 3, "0000"); }),
            ErrorCode::kAllZero);
}

TEST(ChirotopeTest, RejectsBadCharacter) {
  EXPECT_EQ(CodeOf([] { Chirotope::FromSignString(4, 3, "++x+"); }),
            ErrorCode::kBadCharacter);
}

TEST(ChirotopeTest, RejectsBadShape) {
  EXPECT_EQ(CodeOf([] { Chirotope::FromSignString(2, 3, "+"); }),
            ErrorCode::kInvalidArgument);
}

TEST(ChirotopeTest, EvaluateAlternates) {
  const Chirotope chi = Chirotope::FromSignString(4, 3, "++++");
  EXPECT_EQ(chi.Evaluate(Tuple{1, 2, 3}), Sign::kPositive);
  EXPECT_EQ(chi.Evaluate(Tuple{2, 1, 3}), Sign::kNegative);
  EXPECT_EQ(chi.Evaluate(Tuple{3, 1, 2}), Sign::kPositive);
  EXPECT_EQ(chi.Evaluate(Tuple{1, 1, 3}), Sign::kZero);
}

TEST(ChirotopeTest, EvaluateErrors) {
  const Chirotope chi = Chirotope::FromSignString(4, 3, "++++");
  EXPECT_EQ(CodeOf([&] { chi.Evaluate(Tuple{1, 2, 5}); }),
            ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(CodeOf([&] { chi.Evaluate(Tuple{0, 2, 3}); }),
            ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(CodeOf([&] { chi.Evaluate(Tuple{1, 2}); }),
            ErrorCode::kInvalidArgument);
}

TEST(ChirotopeTest, WithSignChangesOneEntry) {
  const Chirotope chi = Chirotope::FromSignString(4, 3, "++++");
  const Chirotope m = chi.WithSign(Tuple{1, 3, 4}, Sign::kNegative);
  EXPECT_EQ(m.SignString(), "++-+");
  EXPECT_FALSE(m == chi);
  EXPECT_EQ(chi.SignString(), "++++");
}

TEST(CheckAxiomsTest, VandermondeIsValid) {
  const Chirotope chi = ChirotopeFromConfiguration(MomentCurve(6, 3));
  EXPECT_EQ(chi.SignString(), std::string(20, '+'));
  const AxiomReport report = CheckAxioms(chi);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.violations.empty());
}

TEST(CheckAxiomsTest, FourPointsHaveNoRelationToCheck) {
  // A 3-term relation needs r + 2 = 5 elements, so any sign string on four
  // elements of rank three passes.
  const Chirotope chi = Chirotope::FromSignString(4, 3, "+++-");
  const AxiomReport report = CheckAxioms(chi);
  EXPECT_TRUE(report.gp_ok);
  EXPECT_TRUE(report.ok());
}

TEST(CheckAxiomsTest, CollinearTripleIsValid) {
  VectorConfiguration config;
  config.rank = 3;
  config.columns = {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 0, 1}, {1, 1, 1}};
  const Chirotope chi = ChirotopeFromConfiguration(config);
  EXPECT_FALSE(chi.IsUniform());
  EXPECT_EQ(chi.Evaluate(Tuple{1, 2, 3}), Sign::kZero);
  EXPECT_TRUE(CheckAxioms(chi).ok());
}

TEST(CheckAxiomsTest, ExchangeOkButGrassmannPluckerFails) {
  // Rank 2 on four points with 2 and 4 parallel. The relation on
  // lambda = (1,2,3,4) has terms [12][34] = +, -[13][24] = 0 and
  // [14][23] = +, so no negative term balances the positive ones.
  const Chirotope chi = Chirotope::FromSignString(4, 2, "++++0+");
  const AxiomReport report = CheckAxioms(chi);
  EXPECT_TRUE(report.nonzero_ok);
  EXPECT_TRUE(report.exchange_ok);
  EXPECT_FALSE(report.gp_ok);
  ASSERT_FALSE(report.violations.empty());
  EXPECT_EQ(report.violations.front().axiom, Axiom::kGrassmannPlucker);
  EXPECT_FALSE(testing::OracleGpConsistent(chi));
}

TEST(CheckAxiomsTest, BasisExchangeFailure) {
  // Bases {1,2} and {3,4} only: 1 cannot be exchanged into {3,4}.
  const Chirotope chi = Chirotope::FromSignString(4, 2, "+0000+");
  const AxiomReport report = CheckAxioms(chi);
  EXPECT_FALSE(report.exchange_ok);
  EXPECT_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) {
    found = found || v.axiom == Axiom::kBasisExchange;
  }
  EXPECT_TRUE(found);
}

TEST(CheckAxiomsTest, AgreesWithOracleOnSingleFlips) {
  const Chirotope base = ChirotopeFromConfiguration(RandomConfiguration(6, 3, 11));
  int flagged = 0;
  for (const Tuple& subset : Combinations(6, 3)) {
    const Sign s = base.SignOfSubset(subset);
    if (IsZero(s)) continue;
    const Chirotope m = base.WithSign(subset, -s);
    const bool oracle = testing::OracleGpConsistent(m);
    EXPECT_EQ(CheckAxioms(m).gp_ok, oracle) << JoinElements(subset);
    flagged += !oracle;
  }
  EXPECT_GT(flagged, 0);
}

TEST(GpSignsConsistentTest, Cases) {
  constexpr Sign P = Sign::kPositive, M = Sign::kNegative, Z = Sign::kZero;
  EXPECT_TRUE(GpSignsConsistent(Z, Z, Z));
  EXPECT_TRUE(GpSignsConsistent(P, M, Z));
  EXPECT_TRUE(GpSignsConsistent(M, Z, P));
  EXPECT_FALSE(GpSignsConsistent(P, P, P));
  EXPECT_FALSE(GpSignsConsistent(P, Z, Z));
  EXPECT_FALSE(GpSignsConsistent(M, M, Z));
}

TEST(AxiomNameTest, Names) {
  EXPECT_FALSE(AxiomName(Axiom::kNonzero).empty());
  EXPECT_NE(AxiomName(Axiom::kBasisExchange),
            AxiomName(Axiom::kGrassmannPlucker));
}

}  // namespace
}  // namespace omcert
