// Copyright 2026 The ptrac Authors.
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

#ifndef PTRAC_CLI_H_
#define PTRAC_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ptrac {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // bad flags or I/O failure
inline constexpr int kExitInvalid = 2;  // input data failed validation

// Runs the command line `args` (without the program name). Results go to
// `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace ptrac

#endif  // PTRAC_CLI_H_
