// Copyright 2026 The Prefaxiom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prefaxiom/profile_io.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace prefaxiom {
namespace {

using testing::FixturePath;

std::string SchemaMessage(std::string_view text) {
  try {
    ParseProfile(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchemaError) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "accepted: " << text;
  return "";
}

TEST(ParseProfile, ReadsRankingsAndComparisons) {
  const PreferenceProfile p = ParseProfile(R"({
    "candidates": ["a", "b", "c"],
    "voters": [
      {"id": "r", "ranking": ["c", "a", "b"]},
      {"id": "q", "comparisons": [["a", "b"]]}
    ]})");
  EXPECT_EQ(p.num_candidates(), 3);
  EXPECT_FALSE(p.IsComplete());
  EXPECT_EQ(p.voter(0).ranking().Order(), (std::vector<int>{2, 0, 1}));
  ASSERT_EQ(p.voter(1).Comparisons().size(), 1u);
  EXPECT_EQ(p.voter(1).Comparisons()[0], (PairPreference{0, 1}));
}

TEST(ParseProfile, RoundTrip) {
  const PreferenceProfile p = LoadProfile(FixturePath("transitive_tournament.json"));
  const PreferenceProfile q = ParseProfile(SerializeProfile(p));
  EXPECT_EQ(SerializeProfile(p), SerializeProfile(q));
  EXPECT_TRUE(ProfilesEqualAsMultisets(p, q));
  const PreferenceProfile r = LoadProfile(FixturePath("paradox.json"));
  EXPECT_EQ(SerializeProfile(ParseProfile(SerializeProfile(r))),
            SerializeProfile(r));
}

TEST(ParseProfile, PointsAtOffendingField) {
  EXPECT_NE(SchemaMessage(R"({"voters": []})").find("candidates"),
            std::string::npos);
  EXPECT_NE(SchemaMessage(R"({"candidates": ["a","b"], "voters": []})")
                .find("voters"),
            std::string::npos);
  const std::string dup = SchemaMessage(R"({"candidates": ["a","b"],
      "voters": [{"id": "x", "ranking": ["a","a"]}]})");
  EXPECT_NE(dup.find("$.voters[0].ranking"), std::string::npos) << dup;
  const std::string unknown = SchemaMessage(R"({"candidates": ["a","b"],
      "voters": [{"id": "x", "ranking": ["a","b"]},
                 {"id": "y", "comparisons": [["a","z"]]}]})");
  EXPECT_NE(unknown.find("$.voters[1]"), std::string::npos) << unknown;
  EXPECT_NE(unknown.find("z"), std::string::npos) << unknown;
}

TEST(ParseProfile, RejectsStructuralMistakes) {
  SchemaMessage(R"({"candidates": ["a","b"],
      "voters": [{"id": "x", "ranking": ["a","b"], "comparisons": []}]})");
  SchemaMessage(R"({"candidates": ["a","b"], "voters": [{"id": "x"}]})");
  SchemaMessage(R"({"candidates": ["a","b"],
      "voters": [{"id": "x", "ranking": ["a"]}]})");
  SchemaMessage(R"({"candidates": ["a","b"],
      "voters": [{"id": "x", "comparisons": [["a","a"]]}]})");
  SchemaMessage(R"({"candidates": ["a","b"],
      "voters": [{"id": "x", "comparisons": [["a","b"],["b","a"]]}]})");
  SchemaMessage(R"({"candidates": ["a","b"],
      "voters": [{"id": "x", "comparisons": [["a","b","a"]]}]})");
  SchemaMessage(R"({"candidates": ["a","b"],
      "voters": [{"id": "x", "ranking": ["a","b"]},
                 {"id": "x", "ranking": ["b","a"]}]})");
  SchemaMessage(R"({"candidates": ["a","a"],
      "voters": [{"id": "x", "ranking": ["a","a"]}]})");
}

TEST(ParseProfile, SyntaxErrorsCarryLine) {
  const std::string msg = SchemaMessage("{\n  \"candidates\": [\"a\",\n");
  EXPECT_NE(msg.find("line"), std::string::npos) << msg;
}

TEST(LoadProfile, FixturesAndMissingFiles) {
  EXPECT_ERROR_CODE(LoadProfile(FixturePath("malformed.json")),
                    ErrorCode::kSchemaError);
  EXPECT_ERROR_CODE(LoadProfile(FixturePath("truncated.json")),
                    ErrorCode::kSchemaError);
  EXPECT_ERROR_CODE(LoadProfile(FixturePath("does_not_exist.json")),
                    ErrorCode::kSchemaError);
  EXPECT_EQ(LoadProfile(FixturePath("four_voter.json")).num_voters(), 4);
}

}  // namespace
}  // namespace prefaxiom
