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

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "prefaxiom/error.h"

namespace prefaxiom {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kSchemaError, where + ": " + what);
}

int LineOf(std::string_view text, size_t byte) {
  byte = std::min(byte, text.size());
  int line = 1;
  for (size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

int CandidateIndex(const CandidateSet& candidates, const json& label,
                   const std::string& where) {
  if (!label.is_string()) Fail(where, "expected a candidate label string");
  std::optional<int> index = candidates.IndexOf(label.get<std::string>());
  if (!index) {
    Fail(where, "unknown candidate '" + label.get<std::string>() + "'");
  }
  return *index;
}

CandidateSet ParseCandidates(const json& root) {
  if (!root.contains("candidates")) Fail("$", "missing key \"candidates\"");
  const json& list = root["candidates"];
  if (!list.is_array()) Fail("$.candidates", "expected an array");
  std::vector<std::string> names;
  for (size_t i = 0; i < list.size(); ++i) {
    if (!list[i].is_string()) {
      Fail("$.candidates[" + std::to_string(i) + "]", "expected a string");
    }
    names.push_back(list[i].get<std::string>());
  }
  try {
    return CandidateSet(std::move(names));
  } catch (const Error& e) {
    Fail("$.candidates", e.what());
  }
}

Voter ParseVoter(const CandidateSet& candidates, const json& record,
                 const std::string& where) {
  if (!record.is_object()) Fail(where, "expected an object");
  if (!record.contains("id") || !record["id"].is_string()) {
    Fail(where + ".id", "missing or non-string voter id");
  }
  Voter voter;
  voter.id = record["id"].get<std::string>();
  const bool has_ranking = record.contains("ranking");
  const bool has_comparisons = record.contains("comparisons");
  if (has_ranking == has_comparisons) {
    Fail(where, "voter must carry exactly one of \"ranking\" or \"comparisons\"");
  }
  const int n = candidates.size();
  if (has_ranking) {
    const json& list = record["ranking"];
    const std::string path = where + ".ranking";
    if (!list.is_array()) Fail(path, "expected an array");
    if (static_cast<int>(list.size()) != n) {
      Fail(path, "ranking must list all " + std::to_string(n) +
                     " candidates exactly once");
    }
    std::vector<int> order;
    std::vector<bool> seen(n, false);
    for (size_t k = 0; k < list.size(); ++k) {
      const std::string item = path + "[" + std::to_string(k) + "]";
      int c = CandidateIndex(candidates, list[k], item);
      if (seen[c]) Fail(item, "candidate '" + candidates.name(c) + "' repeated");
      seen[c] = true;
      order.push_back(c);
    }
    voter.preference = Ranking::Strict(std::move(order));
    return voter;
  }
  const json& list = record["comparisons"];
  const std::string path = where + ".comparisons";
  if (!list.is_array()) Fail(path, "expected an array");
  std::vector<PairPreference> pairs;
  std::set<std::pair<int, int>> judged;
  for (size_t k = 0; k < list.size(); ++k) {
    const std::string item = path + "[" + std::to_string(k) + "]";
    if (!list[k].is_array() || list[k].size() != 2) {
      Fail(item, "expected [winner, loser]");
    }
    int winner = CandidateIndex(candidates, list[k][0], item + "[0]");
    int loser = CandidateIndex(candidates, list[k][1], item + "[1]");
    if (winner == loser) Fail(item, "a candidate cannot beat itself");
    auto key = std::minmax(winner, loser);
    if (!judged.insert({key.first, key.second}).second) {
      Fail(item, "pair (" + candidates.name(key.first) + ", " +
                     candidates.name(key.second) +
                     ") already judged by this voter");
    }
    pairs.push_back({winner, loser});
  }
  voter.preference = std::move(pairs);
  return voter;
}

}  // namespace

PreferenceProfile ParseProfile(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    Fail("line " + std::to_string(LineOf(text, e.byte)), e.what());
  }
  if (!root.is_object()) Fail("$", "expected a JSON object");
  CandidateSet candidates = ParseCandidates(root);
  if (!root.contains("voters")) Fail("$", "missing key \"voters\"");
  const json& list = root["voters"];
  if (!list.is_array()) Fail("$.voters", "expected an array");
  if (list.empty()) Fail("$.voters", "at least one voter is required");
  std::vector<Voter> voters;
  std::set<std::string> ids;
  for (size_t v = 0; v < list.size(); ++v) {
    const std::string where = "$.voters[" + std::to_string(v) + "]";
    Voter voter = ParseVoter(candidates, list[v], where);
    if (!ids.insert(voter.id).second) {
      Fail(where + ".id", "duplicate voter id '" + voter.id + "'");
    }
    voters.push_back(std::move(voter));
  }
  return PreferenceProfile(std::move(candidates), std::move(voters));
}

std::string SerializeProfile(const PreferenceProfile& profile) {
  const CandidateSet& candidates = profile.candidates();
  json root;
  root["candidates"] = candidates.names();
  json voters = json::array();
  for (const Voter& voter : profile.voters()) {
    json record;
    record["id"] = voter.id;
    if (voter.HasRanking()) {
      json ranking = json::array();
      for (int c : voter.ranking().Order()) ranking.push_back(candidates.name(c));
      record["ranking"] = std::move(ranking);
    } else {
      json comparisons = json::array();
      for (const PairPreference& p : voter.Comparisons()) {
        comparisons.push_back(
            {candidates.name(p.winner), candidates.name(p.loser)});
      }
      record["comparisons"] = std::move(comparisons);
    }
    voters.push_back(std::move(record));
  }
  root["voters"] = std::move(voters);
  return root.dump(2) + "\n";
}

PreferenceProfile LoadProfile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseProfile(buffer.str());
}

}  // namespace prefaxiom
