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

#ifndef PREFAXIOM_CLI_COMMANDS_H_
#define PREFAXIOM_CLI_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cli/report.h"
#include "prefaxiom/axioms.h"
#include "prefaxiom/gpmd.h"
#include "prefaxiom/profile.h"
#include "prefaxiom/search.h"

namespace prefaxiom::cli {

struct CommandResult {
  Report report;
  int exit_code = 0;
};

Report CmdTally(const PreferenceProfile& profile);

Report CmdRank(const PreferenceProfile& profile, const RuleUnderTest& rule);

// Exit code 4 when any applicable check fails.
CommandResult CmdAxioms(const PreferenceProfile& profile,
                        const RuleUnderTest& rule,
                        const std::vector<AxiomId>& checks,
                        const CheckOptions& options);

Report CmdGpmd(const PreferenceProfile& profile, const EpsilonPolicy& policy);

struct SearchArgs {
  std::vector<AxiomId> axioms;
  SearchSpace space;
  std::optional<std::uint64_t> seed;
  SearchOptions options;
  // Counterexample profile destination, if any.
  std::optional<std::string> out_path;
};
Report CmdSearch(const RuleUnderTest& rule, const SearchArgs& args);

struct CyclesArgs {
  std::vector<int> n_list;
  int m = 3;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  int jobs = 1;
};
Report CmdExperimentCycles(const CyclesArgs& args);

// condorcet-paradox, single-voter-cycle or borda-vs-copeland.
Report CmdDemo(const std::string& name, int jobs);

}  // namespace prefaxiom::cli

#endif  // PREFAXIOM_CLI_COMMANDS_H_
