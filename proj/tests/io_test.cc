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

#include "omcert/io.h"

#include <filesystem>

#include <gtest/gtest.h>

#include "omcert/certificate.h"
#include "omcert/configuration.h"
#include "omcert/omp.h"
#include "omcert/error.h"
#include "test_support.h"

namespace omcert {
namespace {

ParseError ParseFailure(std::string_view text) {
  try {
    ParseChirotope(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return ParseError(0, 0, "");
}

TEST(ChirotopeFileTest, RoundTrip) {
  const Chirotope chi = ChirotopeFromConfiguration(RandomConfiguration(7, 3, 4, 2));
  const std::string text = FormatChirotope(chi);
  EXPECT_EQ(text, "7 3\n" + chi.SignString() + "\n");
  EXPECT_EQ(ParseChirotope(text), chi);
}

TEST(ChirotopeFileTest, ErrorsCarryPositions) {
  ParseError e = ParseFailure("4 3\n++x+\n");
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 3);

  e = ParseFailure("4 3\n+++\n");
  EXPECT_EQ(e.line(), 2);
  EXPECT_NE(std::string(e.what()).find("LengthMismatch"), std::string::npos);

  e = ParseFailure("4  3\n++++\n");
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 3);

  e = ParseFailure("4 x\n++++\n");
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 3);

  e = ParseFailure("4 3\n");
  EXPECT_EQ(e.line(), 2);

  e = ParseFailure("");
  EXPECT_EQ(e.line(), 1);

  e = ParseFailure("3 4\n+\n");
  EXPECT_EQ(e.line(), 1);

  e = ParseFailure("4 3\n0000\n");
  EXPECT_NE(std::string(e.what()).find("AllZero"), std::string::npos);
}

TEST(ConfigurationFileTest, RoundTrip) {
  const VectorConfiguration config = RandomConfiguration(6, 3, 9);
  const std::string text = FormatConfiguration(config);
  const VectorConfiguration back = ParseConfiguration(text);
  EXPECT_EQ(back.rank, 3);
  EXPECT_EQ(back.columns, config.columns);
}

TEST(ConfigurationFileTest, Errors) {
  try {
    ParseConfiguration("2 2\n1 0\n0 1/0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  try {
    ParseConfiguration("2 2\n1 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  try {
    ParseConfiguration("2 2\n1 0\n0 z\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(AutoDetectTest, BothKinds) {
  const VectorConfiguration config = MomentCurve(5, 3);
  const Chirotope chi = ChirotopeFromConfiguration(config);
  EXPECT_EQ(ParseChirotopeOrConfiguration(FormatConfiguration(config)), chi);
  EXPECT_EQ(ParseChirotopeOrConfiguration(FormatChirotope(chi)), chi);
}

TEST(CertificateFileTest, RoundTripAndErrors) {
  const auto files = testing::CatalogFiles();
  if (files.empty()) GTEST_SKIP() << "no catalog files";
  const Chirotope chi = ParseChirotope(ReadFile(files.front().string()));
  const EuclideanResult result = IsEuclidean(chi);
  ASSERT_TRUE(result.witness.has_value());
  const OMProgram prog(chi, result.witness->f, result.witness->g);
  const BfpCertificate cert = CycleToBfp(prog, result.witness->cycle).certificate;
  const std::string text = FormatCertificate(cert);
  const BfpCertificate back = ParseCertificate(text);
  EXPECT_EQ(FormatCertificate(back), text);
  EXPECT_TRUE(VerifyCertificate(chi, back).valid);

  try {
    ParseCertificate("{\"n\": 8,\n  \"r\": }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(ParseCertificate("{\"n\": 8}"), ParseError);
  std::string bad_side = text;
  const auto pos = bad_side.find("\"side\": \"");
  ASSERT_NE(pos, std::string::npos);
  bad_side.replace(pos + 9, 5, "XX?YY");
  EXPECT_THROW(ParseCertificate(bad_side), ParseError);
}

TEST(FileTest, ReadWrite) {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "omcert_io_test.txt";
  WriteFile(path.string(), "hello\n");
  EXPECT_EQ(ReadFile(path.string()), "hello\n");
  std::filesystem::remove(path);
  EXPECT_THROW(ReadFile(path.string()), ParseError);
}

}  // namespace
}  // namespace omcert
