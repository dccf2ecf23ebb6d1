// Copyright 2026 The decompound Authors.
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

// Command-line front end. Exit status: 0 on success, 1 on a data error, 2 on
// a usage error.

#ifndef DECOMPOUND_CLI_H_
#define DECOMPOUND_CLI_H_

#include <iosfwd>

namespace decompound {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

// `out` receives help text and anything a subcommand writes to "-".
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace decompound

#endif  // DECOMPOUND_CLI_H_
