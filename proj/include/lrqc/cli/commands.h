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

#ifndef LRQC_CLI_COMMANDS_H
#define LRQC_CLI_COMMANDS_H

#include <string>
#include <vector>

#include "lrqc/cli/config.h"
#include "lrqc/cli/result_table.h"

namespace lrqc::cli {

constexpr const char *kArtifactVersion = "0.1.0";

/// Columns k, P_k, P_infinity and, with run.area_law, area_law_bound.
ResultTable cmd_evolve(const ExperimentConfig &cfg);

/// Long format: quantity (eigenvalue, gap, P_infinity, P_k, short_time), index, value, valid.
ResultTable cmd_path1d(const ExperimentConfig &cfg);

/// Columns n, policy, order, gap, closed_form.
ResultTable cmd_gap(const ExperimentConfig &cfg);

/// Columns k, P_k, mc_mean, mc_stderr, z.
ResultTable cmd_oracle(const ExperimentConfig &cfg);

/// Columns bound, kind, value, inputs.
ResultTable cmd_bounds(const ExperimentConfig &cfg);

/// Columns case, regions, predicted, measured, pass.
ResultTable cmd_fixcheck(const ExperimentConfig &cfg);

const std::vector<std::string> &command_names();

/// Dispatches by name and attaches metadata.
ResultTable run_command(const std::string &name, const ExperimentConfig &cfg);

}  // namespace lrqc::cli

#endif
