// Copyright 2026 The lrqc Authors
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

#ifndef LRQC_CLI_APP_H
#define LRQC_CLI_APP_H

#include <iosfwd>

namespace lrqc::cli {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;

/// Entry point of the lrqc tool. Results go to --out (or stdout), diagnostics to err.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace lrqc::cli

#endif
