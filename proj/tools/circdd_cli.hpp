// Copyright 2026 The circdd Authors.
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

#ifndef CIRCDD_TOOLS_CIRCDD_CLI_HPP_
#define CIRCDD_TOOLS_CIRCDD_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace circdd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Data goes to `out`, diagnostics and progress to `err`. `args` excludes
// the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circdd::cli

#endif  // CIRCDD_TOOLS_CIRCDD_CLI_HPP_
