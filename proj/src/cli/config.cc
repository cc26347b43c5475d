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

#include "lrqc/cli/config.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lrqc/errors.h"

namespace lrqc::cli {

using nlohmann::json;

namespace {

const json &require(const json &obj, const std::string &key, const std::string &where) {
    if (!obj.contains(key)) {
        throw std::invalid_argument(where + ": missing required key \"" + key + "\"");
    }
    return obj.at(key);
}

void require_object(const json &obj, const std::string &where) {
    if (!obj.is_object()) {
        throw std::invalid_argument(where + " must be an object");
    }
}

std::vector<size_t> resolve_order(const json &order, size_t num_regions) {
    if (order.is_string()) {
        std::string name = order.get<std::string>();
        if (name == "expanding") {
            return expanding_order(num_regions);
        }
        if (name == "identity") {
            return identity_order(num_regions);
        }
        throw std::invalid_argument("policy.order: unknown named order \"" + name + "\"");
    }
    return order.get<std::vector<size_t>>();
}

size_t count_value(const json &obj, const std::string &key, size_t fallback, const std::string &where) {
    if (!obj.contains(key)) {
        return fallback;
    }
    const json &v = obj.at(key);
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<int64_t>() < 0)) {
        throw std::invalid_argument(where + "." + key + " must be a nonnegative integer");
    }
    return v.get<size_t>();
}

}  // namespace

void check_keys(const json &obj, const std::vector<std::string> &allowed, const std::string &where) {
    require_object(obj, where);
    for (const auto &[key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw std::invalid_argument(where + ": unknown key \"" + key + "\"");
        }
    }
}

Region region_from_sites(size_t num_sites, const std::vector<size_t> &sites) {
    for (size_t s : sites) {
        if (s >= num_sites) {
            throw std::invalid_argument(
                "site " + std::to_string(s) + " out of range for " + std::to_string(num_sites) + " sites");
        }
    }
    return Region::from_sites(num_sites, sites);
}

LocalStructure parse_structure(const json &model) {
    check_keys(model, {"sites", "d", "graph", "regions", "weights"}, "model");
    auto n = require(model, "sites", "model").get<int64_t>();
    if (n < 1) {
        throw std::invalid_argument("model.sites must be >= 1");
    }
    if (n > (int64_t)kMaxSites) {
        throw CapExceededError(
            "model.sites = " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxSites) + " sites");
    }
    std::vector<double> weights;
    if (model.contains("weights")) {
        weights = model.at("weights").get<std::vector<double>>();
    }
    bool has_graph = model.contains("graph");
    bool has_regions = model.contains("regions");
    if (has_graph == has_regions) {
        throw std::invalid_argument("model needs exactly one of \"graph\" or \"regions\"");
    }
    if (has_regions) {
        auto lists = model.at("regions").get<std::vector<std::vector<size_t>>>();
        std::vector<Region> regions;
        for (const auto &sites : lists) {
            regions.push_back(region_from_sites((size_t)n, sites));
        }
        return LocalStructure((size_t)n, std::move(regions), std::move(weights));
    }
    std::string graph = model.at("graph").get<std::string>();
    LocalStructure base = [&]() {
        if (graph == "path") {
            return LocalStructure::path_graph((size_t)n);
        }
        if (graph == "complete") {
            return LocalStructure::complete_graph((size_t)n);
        }
        throw std::invalid_argument("model.graph: unknown graph \"" + graph + "\" (expected path or complete)");
    }();
    return LocalStructure((size_t)n, base.regions(), std::move(weights));
}

EnsembleSpec parse_ensemble(const json &model, const json &policy) {
    LocalStructure structure = parse_structure(model);
    int d = require(model, "d", "model").get<int>();
    if (d < 2) {
        throw std::invalid_argument("model.d must be >= 2");
    }
    if (policy.is_null()) {
        return EnsembleSpec::uncorrelated(std::move(structure), d);
    }
    check_keys(policy, {"type", "step_weights", "initial", "transition", "nearest_neighbor", "include_self", "order"},
               "policy");
    std::string type = require(policy, "type", "policy").get<std::string>();
    if (type == "uncorrelated") {
        check_keys(policy, {"type", "step_weights"}, "policy (uncorrelated)");
        Uncorrelated u;
        if (policy.contains("step_weights")) {
            u.step_weights = policy.at("step_weights").get<std::vector<std::vector<double>>>();
        }
        return EnsembleSpec(std::move(structure), std::move(u), d);
    }
    if (type == "markov") {
        check_keys(policy, {"type", "initial", "transition", "nearest_neighbor", "include_self"}, "policy (markov)");
        if (policy.value("nearest_neighbor", false)) {
            if (policy.contains("transition")) {
                throw std::invalid_argument("policy: give either nearest_neighbor or transition, not both");
            }
            Markov m = nearest_neighbor_markov(structure, policy.value("include_self", false));
            if (policy.contains("initial")) {
                m.initial = policy.at("initial").get<std::vector<double>>();
            }
            return EnsembleSpec(std::move(structure), std::move(m), d);
        }
        Markov m;
        m.transition = require(policy, "transition", "policy (markov)").get<std::vector<std::vector<double>>>();
        m.initial = policy.contains("initial") ? policy.at("initial").get<std::vector<double>>() : structure.weights();
        return EnsembleSpec(std::move(structure), std::move(m), d);
    }
    if (type == "sweep") {
        check_keys(policy, {"type", "order"}, "policy (sweep)");
        std::vector<size_t> order = policy.contains("order") ? resolve_order(policy.at("order"), structure.num_regions())
                                                             : identity_order(structure.num_regions());
        return EnsembleSpec::sweep(std::move(structure), std::move(order), d);
    }
    throw std::invalid_argument("policy.type: unknown policy \"" + type + "\" (expected uncorrelated, markov or sweep)");
}

ExperimentConfig parse_config(json doc, const Overrides &overrides) {
    if (!doc.is_object()) {
        throw std::invalid_argument("config must be a JSON object");
    }
    check_keys(doc, {"model", "policy", "run", "output", "path1d", "gap", "bounds", "fixcheck"}, "config");
    json &run = doc["run"];
    if (run.is_null()) {
        run = json::object();
    }
    json &output = doc["output"];
    if (output.is_null()) {
        output = json::object();
    }
    if (overrides.seed) {
        run["seed"] = *overrides.seed;
    }
    if (overrides.samples) {
        run["samples"] = *overrides.samples;
    }
    if (overrides.out) {
        output["path"] = *overrides.out;
    }
    if (overrides.format) {
        output["format"] = *overrides.format;
    }

    ExperimentConfig cfg;
    check_keys(run, {"initial_region", "k_max", "seed", "samples", "epsilon", "area_law", "threads"}, "run");
    if (run.contains("initial_region")) {
        cfg.run.initial_region = run.at("initial_region").get<std::vector<size_t>>();
    }
    cfg.run.k_max = count_value(run, "k_max", cfg.run.k_max, "run");
    if (run.contains("seed")) {
        const json &s = run.at("seed");
        if (!s.is_number_integer() || (!s.is_number_unsigned() && s.get<int64_t>() < 0)) {
            throw std::invalid_argument("run.seed must be an unsigned 64-bit integer");
        }
        cfg.run.seed = run.at("seed").get<uint64_t>();
    }
    cfg.run.samples = count_value(run, "samples", cfg.run.samples, "run");
    cfg.run.epsilon = run.value("epsilon", cfg.run.epsilon);
    cfg.run.area_law = run.value("area_law", cfg.run.area_law);
    cfg.run.threads = count_value(run, "threads", cfg.run.threads, "run");
    if (cfg.run.samples < 2) {
        throw std::invalid_argument("run.samples must be >= 2");
    }
    if (!(cfg.run.epsilon > 0)) {
        throw std::invalid_argument("run.epsilon must be positive");
    }

    check_keys(output, {"path", "format"}, "output");
    cfg.output.path = output.value("path", cfg.output.path);
    cfg.output.format = output.value("format", cfg.output.format);
    if (cfg.output.format != "csv" && cfg.output.format != "json") {
        throw std::invalid_argument("output.format must be csv or json, got \"" + cfg.output.format + "\"");
    }

    if (doc.contains("model")) {
        cfg.ensemble = parse_ensemble(doc.at("model"), doc.contains("policy") ? doc.at("policy") : json());
        for (size_t s : cfg.run.initial_region) {
            if (s >= cfg.ensemble->num_sites()) {
                throw std::invalid_argument("run.initial_region: site " + std::to_string(s) + " out of range");
            }
        }
    } else if (doc.contains("policy")) {
        throw std::invalid_argument("config has a policy but no model");
    }
    cfg.source = std::move(doc);
    return cfg;
}

ExperimentConfig load_config(const std::string &path, const Overrides &overrides) {
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot read config file " + path);
    }
    json doc;
    try {
        doc = json::parse(f);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument("config " + path + " is not valid JSON: " + e.what());
    }
    return parse_config(std::move(doc), overrides);
}

}  // namespace lrqc::cli
