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

#include "lrqc/cli/commands.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "lrqc/bounds.h"
#include "lrqc/errors.h"
#include "lrqc/fixed_space.h"
#include "lrqc/monte_carlo.h"
#include "lrqc/path1d.h"
#include "lrqc/swap_dynamics.h"
#include "lrqc/swap_matrix.h"

namespace lrqc::cli {

using nlohmann::json;

namespace {

const EnsembleSpec &require_ensemble(const ExperimentConfig &cfg, const char *command) {
    if (!cfg.ensemble) {
        throw std::invalid_argument(std::string(command) + " needs a \"model\" section");
    }
    return *cfg.ensemble;
}

Region initial_region(const ExperimentConfig &cfg, const EnsembleSpec &spec) {
    return region_from_sites(spec.num_sites(), cfg.run.initial_region);
}

const json &section(const ExperimentConfig &cfg, const char *name) {
    if (!cfg.source.contains(name)) {
        throw std::invalid_argument(std::string("missing \"") + name + "\" section");
    }
    return cfg.source.at(name);
}

int positive_int(const json &obj, const char *key, const std::string &where) {
    if (!obj.contains(key) || !obj.at(key).is_number_integer()) {
        throw std::invalid_argument(where + "." + key + " must be an integer");
    }
    return obj.at(key).get<int>();
}

std::string echo_inputs(const BoundReport &r) {
    std::string out;
    for (const auto &[name, value] : r.inputs) {
        out += (out.empty() ? "" : ";") + name + "=" + format_double(value);
    }
    return out;
}

void add_bound_row(ResultTable &table, const std::string &name, const BoundReport &r) {
    table.add_row({name, std::string(bound_kind_name(r.kind)), r.value, echo_inputs(r)});
}

}  // namespace

ResultTable cmd_evolve(const ExperimentConfig &cfg) {
    const EnsembleSpec &spec = require_ensemble(cfg, "evolve");
    Region a = initial_region(cfg, spec);
    std::vector<double> trajectory = purity_trajectory(a, spec, cfg.run.k_max);
    double p_inf = purity_infinity(a, spec.structure(), spec.d());

    std::vector<std::string> columns{"k", "P_k", "P_infinity"};
    std::vector<ExtremalBoundary> profile;
    if (cfg.run.area_law) {
        if (!spec.is_uncorrelated() || !std::get<Uncorrelated>(spec.policy()).step_weights.empty()) {
            throw std::invalid_argument("the area-law bound needs a time-independent uncorrelated policy");
        }
        for (const Region &r : spec.structure().regions()) {
            if (r.size() != 2) {
                throw std::invalid_argument("the area-law bound needs two-site regions");
            }
        }
        columns.push_back("area_law_bound");
        if (cfg.run.k_max > 0) {
            profile = extremal_boundary_profile(a, spec.structure(), cfg.run.k_max - 1);
        }
    }
    ResultTable table(columns);
    for (size_t k = 0; k <= cfg.run.k_max; k++) {
        std::vector<Cell> row{(int64_t)k, trajectory[k], p_inf};
        if (cfg.run.area_law) {
            if (k == 0) {
                row.push_back(1.0);
            } else {
                const ExtremalBoundary &e = profile[k - 1];
                row.push_back(area_law_bound(e.p_max, e.p_min, spec.d(), k).binomial.value);
            }
        }
        table.add_row(std::move(row));
    }
    return table;
}

ResultTable cmd_path1d(const ExperimentConfig &cfg) {
    const json &sec = section(cfg, "path1d");
    check_keys(sec, {"L", "d", "l", "k_max"}, "path1d");
    path1d::PathParams p{positive_int(sec, "L", "path1d"), positive_int(sec, "d", "path1d"),
                         positive_int(sec, "l", "path1d")};
    if (p.L < 2 || p.d < 2 || p.l < 0 || p.l > p.L) {
        throw std::invalid_argument("path1d needs L >= 2, d >= 2 and 0 <= l <= L");
    }
    size_t k_max = sec.contains("k_max") ? sec.at("k_max").get<size_t>() : cfg.run.k_max;

    ResultTable table({"quantity", "index", "value", "valid"});
    path1d::SpectralData s = path1d::spectrum(p);
    for (size_t h = 0; h < s.eigenvalues.size(); h++) {
        table.add_row({std::string("eigenvalue"), (int64_t)h, s.eigenvalues[h], true});
    }
    table.add_row({std::string("gap"), (int64_t)0, s.gap, true});
    table.add_row({std::string("P_infinity"), (int64_t)0, path1d::purity_infinity_1d(p), true});
    for (size_t k = 0; k <= k_max; k++) {
        table.add_row({std::string("P_k"), (int64_t)k, path1d::purity_exact(p, k), true});
    }
    size_t window = (size_t)std::min(p.l, p.L - p.l);
    for (size_t k = 0; k <= k_max; k++) {
        if (k <= window) {
            table.add_row({std::string("short_time"), (int64_t)k, path1d::short_time_purity(p, k), true});
        } else {
            table.add_row({std::string("short_time"), (int64_t)k, std::monostate{}, false});
        }
    }
    return table;
}

ResultTable cmd_gap(const ExperimentConfig &cfg) {
    const json &sec = section(cfg, "gap");
    check_keys(sec, {"sizes", "graph", "d", "policies", "tol"}, "gap");
    auto sizes = sec.at("sizes").get<std::vector<size_t>>();
    std::string graph = sec.value("graph", std::string("path"));
    int d = sec.value("d", 2);
    double tol = sec.value("tol", kDefaultRankTol);
    json policies = sec.value("policies", json::array({"uncorrelated", "sweep:expanding"}));

    ResultTable table({"n", "policy", "order", "gap", "closed_form"});
    for (size_t n : sizes) {
        if (n > kMaxDenseSwapSites) {
            throw CapExceededError(
                "gap: n = " + std::to_string(n) + " exceeds the dense swap-matrix cap of " +
                std::to_string(kMaxDenseSwapSites) + " sites");
        }
        for (const json &pol : policies) {
            std::string name = pol.get<std::string>();
            json model{{"sites", n}, {"d", d}, {"graph", graph}};
            json policy;
            std::string order;
            if (name == "uncorrelated") {
                policy = {{"type", "uncorrelated"}};
            } else if (name.rfind("sweep:", 0) == 0) {
                order = name.substr(6);
                policy = {{"type", "sweep"}, {"order", order}};
            } else {
                throw std::invalid_argument("gap.policies: unknown entry \"" + name + "\"");
            }
            EnsembleSpec spec = parse_ensemble(model, policy);
            double gap = spectral_gap_swap(build_swap_matrix(spec), tol);
            Cell closed = std::monostate{};
            if (name == "uncorrelated" && graph == "path" && n >= 2) {
                closed = path1d::spectral_gap_1d({(int)n, d, 1});
            }
            table.add_row({(int64_t)n, spec.policy_name(), order, gap, closed});
        }
    }
    return table;
}

ResultTable cmd_oracle(const ExperimentConfig &cfg) {
    const EnsembleSpec &spec = require_ensemble(cfg, "oracle");
    Region a = initial_region(cfg, spec);
    std::vector<double> trajectory = purity_trajectory(a, spec, cfg.run.k_max);
    ResultTable table({"k", "P_k", "mc_mean", "mc_stderr", "z"});
    for (size_t k = 0; k <= cfg.run.k_max; k++) {
        OracleConfig oc{mix64(cfg.run.seed) + k, cfg.run.samples, cfg.run.threads};
        MomentEstimate e = mc_average_purity(spec, a, k, oc);
        double diff = e.mean - trajectory[k];
        double z = e.std_error > 0 ? diff / e.std_error : (std::abs(diff) < 1e-12 ? 0.0 : INFINITY);
        table.add_row({(int64_t)k, trajectory[k], e.mean, e.std_error, z});
    }
    return table;
}

/// The request's own d, else the model's.
int request_d(const ExperimentConfig &cfg, const json &req, const std::string &where, const std::string &name) {
    return req.contains("d") ? positive_int(req, "d", where) : require_ensemble(cfg, name.c_str()).d();
}

ResultTable cmd_bounds(const ExperimentConfig &cfg) {
    const json &sec = section(cfg, "bounds");
    check_keys(sec, {"requests"}, "bounds");
    ResultTable table({"bound", "kind", "value", "inputs"});
    for (const json &req : sec.at("requests")) {
        std::string name = req.at("bound").get<std::string>();
        std::string where = "bounds.requests[" + name + "]";
        if (name == "entangling_power" || name == "swap_constant") {
            check_keys(req, {"bound", "d"}, where);
            int d = request_d(cfg, req, where, name);
            double v = name == "entangling_power" ? entangling_power(d) : swap_constant(d);
            add_bound_row(table, name, {v, BoundKind::estimate, {{"d", (double)d}}});
        } else if (name == "boundary_probability") {
            check_keys(req, {"bound", "region"}, where);
            const EnsembleSpec &spec = require_ensemble(cfg, "boundary_probability");
            Region r = region_from_sites(spec.num_sites(), req.at("region").get<std::vector<size_t>>());
            add_bound_row(
                table, name,
                {boundary_probability(r, spec.structure()), BoundKind::estimate, {{"region_size", (double)r.size()}}});
        } else if (name == "area_law") {
            check_keys(req, {"bound", "k", "d", "p_max", "p_min", "region"}, where);
            auto k = req.at("k").get<size_t>();
            double p_max, p_min;
            int d;
            if (req.contains("region")) {
                const EnsembleSpec &spec = require_ensemble(cfg, "area_law");
                Region r = region_from_sites(spec.num_sites(), req.at("region").get<std::vector<size_t>>());
                ExtremalBoundary e = extremal_boundary_probabilities(r, spec.structure(), k > 0 ? k - 1 : 0);
                p_max = e.p_max;
                p_min = e.p_min;
                d = req.value("d", spec.d());
            } else {
                p_max = req.at("p_max").get<double>();
                p_min = req.value("p_min", p_max);
                d = positive_int(req, "d", where);
            }
            AreaLawBound b = area_law_bound(p_max, p_min, d, k);
            add_bound_row(table, "area_law_binomial", b.binomial);
            add_bound_row(table, "area_law_exponential", b.exponential);
        } else if (name == "first_moment") {
            check_keys(req, {"bound", "omega_norm", "a_norm", "epsilon", "q_min", "num_regions"}, where);
            add_bound_row(
                table, name,
                first_moment_convergence_bound(
                    req.at("omega_norm").get<double>(), req.at("a_norm").get<double>(), req.at("epsilon").get<double>(),
                    req.at("q_min").get<double>(), req.at("num_regions").get<size_t>()));
        } else if (name == "correlated") {
            check_keys(req, {"bound", "gap", "n", "epsilon"}, where);
            add_bound_row(
                table, name,
                correlated_convergence_bound(
                    req.at("gap").get<double>(), req.at("n").get<size_t>(), req.at("epsilon").get<double>()));
        } else if (name == "t_design") {
            check_keys(req, {"bound", "region_size", "alpha", "t", "d", "epsilon"}, where);
            std::optional<double> eps;
            if (req.contains("epsilon")) {
                eps = req.at("epsilon").get<double>();
            }
            add_bound_row(
                table, name,
                t_design_delta(
                    req.at("region_size").get<size_t>(), req.at("alpha").get<double>(), req.at("t").get<size_t>(),
                    request_d(cfg, req, where, name), eps));
        } else if (name == "r1_candidates") {
            check_keys(req, {"bound"}, where);
            const EnsembleSpec &spec = require_ensemble(cfg, "r1_candidates");
            for (double v : r1_candidate_spectrum(spec.structure())) {
                add_bound_row(table, name, {v, BoundKind::estimate, {}});
            }
        } else {
            throw std::invalid_argument("bounds.requests: unknown bound \"" + name + "\"");
        }
    }
    return table;
}

ResultTable cmd_fixcheck(const ExperimentConfig &cfg) {
    const EnsembleSpec &spec = require_ensemble(cfg, "fixcheck");
    const LocalStructure &structure = spec.structure();
    size_t n = structure.num_sites();
    if (n > 10) {
        throw CapExceededError("fixcheck supports at most 10 sites, got " + std::to_string(n));
    }
    double tol = kDefaultRankTol;
    if (cfg.source.contains("fixcheck")) {
        check_keys(cfg.source.at("fixcheck"), {"tol"}, "fixcheck");
        tol = cfg.source.at("fixcheck").value("tol", tol);
    }
    int d = spec.d();
    ResultTable table({"case", "regions", "predicted", "measured", "pass"});
    auto measure = [&](const std::vector<Region> &regions) {
        return fixed_space_dimension(
            build_swap_matrix(EnsembleSpec::uncorrelated(LocalStructure(n, regions), d)), tol);
    };
    auto add = [&](const char *name, const std::vector<Region> &regions, uint64_t predicted, uint64_t measured) {
        std::string label;
        for (const Region &r : regions) {
            label += (label.empty() ? "" : ";") + r.str();
        }
        table.add_row({std::string(name), label, (int64_t)predicted, (int64_t)measured, predicted == measured});
    };

    const auto &regions = structure.regions();
    const Region &first = regions.front();
    add("single", {first}, uint64_t{1} << (n - first.size() + 1), measure({first}));

    auto first_pair = [&](bool overlapping) -> std::optional<std::pair<Region, Region>> {
        for (size_t i = 0; i < regions.size(); i++) {
            for (size_t j = i + 1; j < regions.size(); j++) {
                if (regions[i].intersects(regions[j]) == overlapping && regions[i] != regions[j]) {
                    return std::make_pair(regions[i], regions[j]);
                }
            }
        }
        return std::nullopt;
    };
    if (auto pair = first_pair(false)) {
        auto [a, b] = *pair;
        add("pair-disjoint", {a, b}, uint64_t{1} << (n - a.size() - b.size() + 2), measure({a, b}));
    }
    if (auto pair = first_pair(true)) {
        auto [a, b] = *pair;
        add("pair-overlap", {a, b}, uint64_t{1} << (n - (a | b).size() + 1), measure({a, b}));
    }
    add("full-ensemble", regions, predicted_fixed_dimension(structure),
        fixed_space_dimension(build_swap_matrix(EnsembleSpec::uncorrelated(structure, d)), tol));
    return table;
}

const std::vector<std::string> &command_names() {
    static const std::vector<std::string> names{"evolve", "path1d", "gap", "oracle", "bounds", "fixcheck"};
    return names;
}

ResultTable run_command(const std::string &name, const ExperimentConfig &cfg) {
    ResultTable table = [&]() {
        if (name == "evolve") {
            return cmd_evolve(cfg);
        }
        if (name == "path1d") {
            return cmd_path1d(cfg);
        }
        if (name == "gap") {
            return cmd_gap(cfg);
        }
        if (name == "oracle") {
            return cmd_oracle(cfg);
        }
        if (name == "bounds") {
            return cmd_bounds(cfg);
        }
        if (name == "fixcheck") {
            return cmd_fixcheck(cfg);
        }
        throw std::invalid_argument("unknown command " + name);
    }();
    table.metadata = {
        {"artifact", "lrqc"},
        {"version", kArtifactVersion},
        {"command", name},
        {"seed", cfg.run.seed},
        {"config", cfg.source},
    };
    return table;
}

}  // namespace lrqc::cli
