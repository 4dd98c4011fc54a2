// Copyright 2026 The ftmd Authors
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

#ifndef FTMD_CLI_HPP
#define FTMD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ftmd {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one CLI invocation. argv excludes the program name.
/// Returns 0 on success, 2 when the run completed but the checked property is
/// false (e.g. `verify` on a non-resolving set), 1 on errors.
int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err);

}  // namespace ftmd

#endif  // FTMD_CLI_HPP
