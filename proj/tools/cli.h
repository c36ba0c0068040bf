// Copyright 2026 The vContact Authors
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

// The vcontact command line. Split from main so tests can drive it.

#ifndef VCONTACT_TOOLS_CLI_H_
#define VCONTACT_TOOLS_CLI_H_

#include <iosfwd>

namespace vcontact::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfigError = 2;

// Runs one subcommand. Results go to out (CSV or report lines followed by a
// one-line JSON summary); diagnostics go to err.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace vcontact::cli

#endif  // VCONTACT_TOOLS_CLI_H_
