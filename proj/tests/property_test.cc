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

// Randomized properties checked against brute-force oracles.

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "omcert/biquadratic.h"
#include "omcert/certificate.h"
#include "omcert/chirotope.h"
#include "omcert/configuration.h"
#include "omcert/io.h"
#include "omcert/omp.h"
#include "omcert/rational_lp.h"
#include "test_support.h"

namespace omcert {
namespace {

TEST(PropertyTest, AlternatingLaw) {
  std::mt19937 rng(7);
  for (const auto& entry : testing::RealizableCorpus()) {
    const testing::SignOracle oracle(entry.chi);
    for (int trial = 0; trial < 200; ++trial) {
      Tuple t;
      for (int i = 0; i < entry.chi.rank(); ++i) {
        t.push_back(std::uniform_int_distribution<int>(1, entry.chi.n())(rng));
      }
      EXPECT_EQ(ToInt(entry.chi.Evaluate(t)), oracle(t)) << entry.name;
      Tuple p = t;
      std::shuffle(p.begin(), p.end(), rng);
      Tuple sorted_t = t, sorted_p = p;
      const Sign st = SortWithParity(sorted_t);
      const Sign sp = SortWithParity(sorted_p);
      EXPECT_EQ(entry.chi.Evaluate(p), entry.chi.Evaluate(t) * st * sp);
    }
  }
}

TEST(PropertyTest, ExactGrassmannPluckerIdentity) {
  for (const auto& entry : testing::RealizableCorpus()) {
    const int n = entry.chi.n();
    const int r = entry.chi.rank();
    for (const Tuple& tau : Combinations(n, r - 2)) {
      Tuple rest;
      for (int e = 1; e <= n; ++e) {
        if (!std::binary_search(tau.begin(), tau.end(), e)) rest.push_back(e);
      }
      for (const Tuple& l : Combinations(rest, 4)) {
        auto br = [&](Element x, Element y) {
          return testing::OracleBracket(entry.config, Concat(tau, {x, y}));
        };
        const Rational gp = br(l[0], l[1]) * br(l[2], l[3]) -
                            br(l[0], l[2]) * br(l[1], l[3]) +
                            br(l[0], l[3]) * br(l[1], l[2]);
        EXPECT_EQ(gp, 0) << entry.name;
      }
    }
  }
}

TEST(PropertyTest, CorpusPassesAxiomsAndOracle) {
  for (const auto& entry : testing::RealizableCorpus()) {
    EXPECT_TRUE(CheckAxioms(entry.chi).ok()) << entry.name;
    EXPECT_TRUE(testing::OracleGpConsistent(entry.chi)) << entry.name;
    EXPECT_EQ(entry.chi.IsUniform(),
              entry.chi.SignString().find('0') == std::string::npos);
  }
}

TEST(PropertyTest, NormalizedPairsAreNonnegative) {
  for (const auto& entry : testing::RealizableCorpus()) {
    for (const auto& list : {EnumerateSystem(entry.chi).inequalities,
                             EnumerateSystem(entry.chi).equations}) {
      for (const BiquadraticConstraint& c : list) {
        EXPECT_GE(ToInt(c.origin.a), 0);
        EXPECT_GT(ToInt(c.origin.c), 0);
        EXPECT_GE(ToInt(c.origin.e), 0);
        EXPECT_EQ(c.origin.a, entry.chi.Evaluate(c.origin.A) *
                                  entry.chi.Evaluate(c.origin.B));
      }
    }
  }
}

TEST(PropertyTest, LexRankBijection) {
  for (int n = 2; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      const std::int64_t total = Binomial(n, k);
      for (std::int64_t i = 0; i < total; ++i) {
        ASSERT_EQ(LexRank(LexUnrank(i, n, k), n), i);
      }
    }
  }
}

TEST(PropertyTest, ConfigurationTextRoundTrip) {
  for (const auto& entry : testing::RealizableCorpus()) {
    const VectorConfiguration back =
        ParseConfiguration(FormatConfiguration(entry.config));
    EXPECT_EQ(back.columns, entry.config.columns);
    EXPECT_EQ(ParseChirotope(FormatChirotope(entry.chi)), entry.chi);
  }
}

// Flipping any single sign that the oracle flags must be caught.
TEST(PropertyTest, FlaggedMutationsRejected) {
  for (const auto& entry : testing::RealizableCorpus()) {
    if (entry.chi.n() > 7) continue;
    for (const Tuple& s : Combinations(entry.chi.n(), entry.chi.rank())) {
      const Sign v = entry.chi.SignOfSubset(s);
      if (IsZero(v)) continue;
      const Chirotope m = entry.chi.WithSign(s, -v);
      if (!testing::OracleGpConsistent(m)) {
        EXPECT_FALSE(CheckAxioms(m).ok()) << entry.name;
      }
    }
  }
}

// Any single-entry change to a verified certificate is rejected.
TEST(PropertyTest, CertificatePerturbationsRejected) {
  const auto files = testing::CatalogFiles();
  if (files.empty()) GTEST_SKIP() << "no catalog files";
  for (const auto& file : files) {
    const Chirotope chi = ParseChirotope(ReadFile(file.string()));
    const EuclideanResult result = IsEuclidean(chi);
    ASSERT_TRUE(result.witness.has_value());
    const OMProgram prog(chi, result.witness->f, result.witness->g);
    const BfpCertificate good = CycleToBfp(prog, result.witness->cycle).certificate;
    ASSERT_TRUE(VerifyCertificate(chi, good).valid);
    for (std::size_t i = 0; i < good.inequalities.size(); ++i) {
      BfpCertificate dropped = good;
      dropped.inequalities.erase(dropped.inequalities.begin() + i);
      EXPECT_FALSE(VerifyCertificate(chi, dropped).valid);
      BfpCertificate doubled = good;
      doubled.inequalities[i].multiplicity *= 2;
      EXPECT_FALSE(VerifyCertificate(chi, doubled).valid);
    }
    // A different chirotope never accepts the certificate.
    const Tuple first = LexUnrank(0, chi.n(), chi.rank());
    const Chirotope other = chi.WithSign(first, -chi.SignOfSubset(first));
    EXPECT_FALSE(VerifyCertificate(other, good).valid);
  }
}

}  // namespace
}  // namespace omcert
