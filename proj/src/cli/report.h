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

#ifndef PREFAXIOM_CLI_REPORT_H_
#define PREFAXIOM_CLI_REPORT_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "prefaxiom/axioms.h"
#include "prefaxiom/profile.h"
#include "prefaxiom/rational.h"
#include "prefaxiom/reward.h"

namespace prefaxiom::cli {

enum class Format { kMarkdown, kJson, kCsv };

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// One command's output. `data` is the JSON payload; `fields`, `tables` and
// `notes` are the human-readable rendering used by markdown and CSV.
class Report {
 public:
  Report(std::string command, std::string title);

  nlohmann::ordered_json& data() { return data_; }
  void Field(const std::string& key, const std::string& value);
  Table& AddTable(std::string name, std::vector<std::string> columns);
  void Note(std::string text);

  void Render(Format format, std::ostream& out) const;

 private:
  std::string title_;
  nlohmann::ordered_json data_;
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<Table> tables_;
  std::vector<std::string> notes_;
};

// %.12g.
std::string FormatDouble(double value);
// `value` rounded to 12 significant digits, so JSON output matches the text.
nlohmann::ordered_json Num(double value);
std::string FormatRanking(const Ranking& ranking, const CandidateSet& names);

nlohmann::ordered_json RationalJson(const Rational& value);
nlohmann::ordered_json RankingJson(const Ranking& ranking,
                                   const CandidateSet& names);
nlohmann::ordered_json AxiomReportJson(const AxiomReport& report,
                                       const CandidateSet& names);
nlohmann::ordered_json StatusJson(const SolverStatus& status,
                                  const CandidateSet& names);
nlohmann::ordered_json ProfileJson(const PreferenceProfile& profile);

std::string DescribeStatus(const SolverStatus& status,
                           const CandidateSet& names);
std::string DescribeWitness(const AxiomReport& report,
                            const CandidateSet& names);
std::string Verdict(const AxiomReport& report);

}  // namespace prefaxiom::cli

#endif  // PREFAXIOM_CLI_REPORT_H_
