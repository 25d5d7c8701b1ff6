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

#include "cli/report.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "prefaxiom/cli.h"
#include "prefaxiom/profile_io.h"

namespace prefaxiom::cli {
namespace {

std::string CsvCell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void CsvRow(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) out << ',';
    out << CsvCell(cells[k]);
  }
  out << '\n';
}

void MarkdownRow(std::ostream& out, const std::vector<std::string>& cells) {
  out << '|';
  for (const std::string& cell : cells) out << ' ' << cell << " |";
  out << '\n';
}

nlohmann::ordered_json Names(const std::vector<int>& candidates,
                             const CandidateSet& names) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int c : candidates) out.push_back(names.name(c));
  return out;
}

std::string JoinNames(const std::vector<int>& candidates,
                      const CandidateSet& names) {
  std::string out;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (k) out += ", ";
    out += names.name(candidates[k]);
  }
  return out;
}

}  // namespace

Report::Report(std::string command, std::string title)
    : title_(std::move(title)) {
  data_["schema"] = 1;
  data_["tool"] = "prefaxiom";
  data_["version"] = kToolVersion;
  data_["command"] = std::move(command);
}

void Report::Field(const std::string& key, const std::string& value) {
  fields_.emplace_back(key, value);
}

Table& Report::AddTable(std::string name, std::vector<std::string> columns) {
  tables_.push_back({std::move(name), std::move(columns), {}});
  return tables_.back();
}

void Report::Note(std::string text) { notes_.push_back(std::move(text)); }

void Report::Render(Format format, std::ostream& out) const {
  switch (format) {
    case Format::kJson:
      out << data_.dump(2) << '\n';
      return;
    case Format::kCsv: {
      bool first = true;
      if (!fields_.empty()) {
        CsvRow(out, {"field", "value"});
        for (const auto& [k, v] : fields_) CsvRow(out, {k, v});
        first = false;
      }
      for (const Table& table : tables_) {
        if (!first) out << '\n';
        first = false;
        out << "# " << table.name << '\n';
        CsvRow(out, table.columns);
        for (const auto& row : table.rows) CsvRow(out, row);
      }
      return;
    }
    case Format::kMarkdown:
      break;
  }
  out << "# " << title_ << "\n\n";
  if (!fields_.empty()) {
    for (const auto& [k, v] : fields_) out << "- " << k << ": " << v << '\n';
    out << '\n';
  }
  for (const Table& table : tables_) {
    out << "## " << table.name << "\n\n";
    MarkdownRow(out, table.columns);
    out << '|';
    for (std::size_t k = 0; k < table.columns.size(); ++k) out << " --- |";
    out << '\n';
    for (const auto& row : table.rows) MarkdownRow(out, row);
    out << '\n';
  }
  for (const std::string& note : notes_) out << note << "\n\n";
}

std::string FormatDouble(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

nlohmann::ordered_json Num(double value) {
  if (!std::isfinite(value)) return nullptr;
  return std::strtod(FormatDouble(value).c_str(), nullptr);
}

std::string FormatRanking(const Ranking& ranking, const CandidateSet& names) {
  std::string out;
  for (std::size_t t = 0; t < ranking.tiers().size(); ++t) {
    if (t) out += " > ";
    const auto& tier = ranking.tiers()[t];
    for (std::size_t k = 0; k < tier.size(); ++k) {
      if (k) out += " = ";
      out += names.name(tier[k]);
    }
  }
  return out;
}

nlohmann::ordered_json RationalJson(const Rational& value) {
  return {{"exact", ToString(value)}, {"value", Num(ToDouble(value))}};
}

nlohmann::ordered_json RankingJson(const Ranking& ranking,
                                   const CandidateSet& names) {
  nlohmann::ordered_json tiers = nlohmann::ordered_json::array();
  for (const auto& tier : ranking.tiers()) tiers.push_back(Names(tier, names));
  return tiers;
}

nlohmann::ordered_json AxiomReportJson(const AxiomReport& report,
                                       const CandidateSet& names) {
  nlohmann::ordered_json out;
  out["axiom"] = std::string(AxiomName(report.axiom));
  out["applicable"] = report.applicable;
  out["satisfied"] = report.satisfied;
  if (report.witness) {
    nlohmann::ordered_json w;
    w["candidates"] = Names(report.witness->candidates, names);
    w["gap"] = report.witness->gap ? Num(*report.witness->gap)
                                   : nlohmann::ordered_json(nullptr);
    w["detail"] = report.witness->detail;
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

nlohmann::ordered_json StatusJson(const SolverStatus& status,
                                  const CandidateSet& names) {
  nlohmann::ordered_json out;
  if (const auto* c = std::get_if<Converged>(&status)) {
    out["status"] = "converged";
    out["grad_norm"] = Num(c->grad_norm);
    out["iterations"] = c->iterations;
  } else if (const auto* d = std::get_if<Diverged>(&status)) {
    out["status"] = "diverged";
    out["drifting_up"] = Names(d->drifting_up, names);
    out["drifting_down"] = Names(d->drifting_down, names);
    out["iterations"] = d->iterations;
  } else {
    out["status"] = "max-iters";
    out["grad_norm"] = Num(std::get<MaxIters>(status).grad_norm);
  }
  return out;
}

nlohmann::ordered_json ProfileJson(const PreferenceProfile& profile) {
  return nlohmann::ordered_json::parse(SerializeProfile(profile));
}

std::string DescribeStatus(const SolverStatus& status,
                           const CandidateSet& names) {
  if (const auto* c = std::get_if<Converged>(&status)) {
    return "converged in " + std::to_string(c->iterations) +
           " iterations, gradient norm " + FormatDouble(c->grad_norm);
  }
  if (const auto* d = std::get_if<Diverged>(&status)) {
    return "diverged (up: " + JoinNames(d->drifting_up, names) +
           "; down: " + JoinNames(d->drifting_down, names) + ")";
  }
  return "iteration limit, gradient norm " +
         FormatDouble(std::get<MaxIters>(status).grad_norm);
}

std::string DescribeWitness(const AxiomReport& report,
                            const CandidateSet& names) {
  if (!report.witness) return "";
  std::string out = report.witness->detail;
  if (!report.witness->candidates.empty()) {
    out += " [" + JoinNames(report.witness->candidates, names) + "]";
  }
  if (report.witness->gap) {
    out += " gap " + FormatDouble(*report.witness->gap);
  }
  return out;
}

std::string Verdict(const AxiomReport& report) {
  if (!report.applicable) return "pass (vacuous)";
  return report.satisfied ? "pass" : "FAIL";
}

}  // namespace prefaxiom::cli
