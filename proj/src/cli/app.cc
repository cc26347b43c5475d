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

#include "lrqc/cli/app.h"

#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lrqc/cli/commands.h"
#include "lrqc/errors.h"

namespace lrqc::cli {

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Purity dynamics of local random quantum circuits"};
    app.set_version_flag("--version", kArtifactVersion);
    std::string config_path;
    Overrides overrides;
    uint64_t seed = 0;
    size_t samples = 0;
    std::string out_path;
    std::string format;
    app.add_option("--config", config_path, "JSON experiment config")->required();
    auto *seed_opt = app.add_option("--seed", seed, "Override run.seed");
    auto *samples_opt = app.add_option("--samples", samples, "Override run.samples")->check(CLI::Range(2ul, ~0ul));
    auto *out_opt = app.add_option("--out", out_path, "Result file (stdout when absent)");
    auto *format_opt = app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.require_subcommand(1);
    for (const std::string &name : command_names()) {
        app.add_subcommand(name)->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }
    if (*seed_opt) {
        overrides.seed = seed;
    }
    if (*samples_opt) {
        overrides.samples = samples;
    }
    if (*out_opt) {
        overrides.out = out_path;
    }
    if (*format_opt) {
        overrides.format = format;
    }
    std::string command = app.get_subcommands().front()->get_name();

    try {
        ExperimentConfig cfg = load_config(config_path, overrides);
        ResultTable table = run_command(command, cfg);
        bool json_format = cfg.output.format == "json";
        std::string body = json_format ? table.to_json() : table.to_csv();
        if (cfg.output.path.empty()) {
            out << body;
        } else {
            if (!json_format) {
                write_file_atomic(cfg.output.path + ".meta.json", table.metadata.dump(2) + "\n");
            }
            write_file_atomic(cfg.output.path, body);
        }
        return kExitOk;
    } catch (const CapExceededError &e) {
        err << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace lrqc::cli
