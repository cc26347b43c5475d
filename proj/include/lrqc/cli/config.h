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

#ifndef LRQC_CLI_CONFIG_H
#define LRQC_CLI_CONFIG_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lrqc/ensemble.h"

namespace lrqc::cli {

struct RunConfig {
    std::vector<size_t> initial_region;
    size_t k_max = 10;
    uint64_t seed = 0;
    size_t samples = 10000;
    double epsilon = 1e-8;
    bool area_law = false;
    size_t threads = 0;
};

struct OutputConfig {
    std::string path;  ///< empty means stdout
    std::string format = "csv";
};

struct ExperimentConfig {
    /// The document as loaded, with command-line overrides folded into "run" and "output".
    nlohmann::json source;
    /// Present when the document has a "model" section.
    std::optional<EnsembleSpec> ensemble;
    RunConfig run;
    OutputConfig output;
};

struct Overrides {
    std::optional<uint64_t> seed;
    std::optional<size_t> samples;
    std::optional<std::string> out;
    std::optional<std::string> format;
};

/// Validates and builds the ensemble. Throws std::invalid_argument (or a
/// nlohmann::json exception for type errors) on bad input, CapExceededError
/// for more than 64 sites.
ExperimentConfig parse_config(nlohmann::json doc, const Overrides &overrides = {});

/// Reads and parses a config file.
ExperimentConfig load_config(const std::string &path, const Overrides &overrides = {});

LocalStructure parse_structure(const nlohmann::json &model);
EnsembleSpec parse_ensemble(const nlohmann::json &model, const nlohmann::json &policy);

/// Throws std::invalid_argument naming `where` if obj has a key outside `allowed`.
void check_keys(const nlohmann::json &obj, const std::vector<std::string> &allowed, const std::string &where);

Region region_from_sites(size_t num_sites, const std::vector<size_t> &sites);

}  // namespace lrqc::cli

#endif
