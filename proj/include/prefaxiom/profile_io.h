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

// JSON profile files:
//
//   {"candidates": ["y1", "y2", "y3"],
//    "voters": [{"id": "v1", "ranking": ["y1", "y2", "y3"]},
//               {"id": "v2", "comparisons": [["y2", "y3"], ["y3", "y1"]]}]}
//
// Each voter carries exactly one of "ranking" (best first) or "comparisons"
// (list of [winner, loser]).

#ifndef PREFAXIOM_PROFILE_IO_H_
#define PREFAXIOM_PROFILE_IO_H_

#include <string>
#include <string_view>

#include "prefaxiom/profile.h"

namespace prefaxiom {

// Throws Error(kSchemaError) naming the offending line or field path.
PreferenceProfile ParseProfile(std::string_view text);

std::string SerializeProfile(const PreferenceProfile& profile);

// Reads and parses a file; I/O failures are reported as kSchemaError too.
PreferenceProfile LoadProfile(const std::string& path);

}  // namespace prefaxiom

#endif  // PREFAXIOM_PROFILE_IO_H_
