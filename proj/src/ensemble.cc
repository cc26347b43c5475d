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

#include "lrqc/ensemble.h"

#include <cmath>
#include <stdexcept>

namespace lrqc {

namespace {

constexpr double kSumTol = 1e-12;

}  // namespace

void validate_distribution(const std::vector<double> &p, size_t n, const char *what) {
    if (p.size() != n) {
        throw std::invalid_argument(
            std::string(what) + ": expected " + std::to_string(n) + " entries, got " + std::to_string(p.size()));
    }
    double total = 0;
    for (double x : p) {
        if (!std::isfinite(x) || x < 0) {
            throw std::invalid_argument(std::string(what) + ": entries must be finite and nonnegative");
        }
        total += x;
    }
    if (std::abs(total - 1) > kSumTol) {
        throw std::invalid_argument(std::string(what) + ": entries sum to " + std::to_string(total) + ", not 1");
    }
}

LocalStructure::LocalStructure(size_t num_sites, std::vector<Region> regions, std::vector<double> weights)
    : num_sites_(num_sites), regions_(std::move(regions)), weights_(std::move(weights)),
      explicit_weights_(!weights_.empty()) {
    if (num_sites == 0 || num_sites > kMaxSites) {
        throw std::invalid_argument("site count must be in 1..64");
    }
    if (regions_.empty()) {
        throw std::invalid_argument("a local structure needs at least one region");
    }
    for (const Region &r : regions_) {
        if (r.num_sites() != num_sites) {
            throw std::invalid_argument("region " + r.str() + " is over a different site count");
        }
        if (r.is_empty()) {
            throw std::invalid_argument("local regions must be nonempty");
        }
    }
    if (explicit_weights_) {
        validate_distribution(weights_, regions_.size(), "region weights");
    } else {
        weights_.assign(regions_.size(), 1.0 / (double)regions_.size());
    }
}

LocalStructure LocalStructure::from_site_lists(
    size_t num_sites, const std::vector<std::vector<size_t>> &regions, std::vector<double> weights) {
    std::vector<Region> rs;
    rs.reserve(regions.size());
    for (const auto &sites : regions) {
        rs.push_back(Region::from_sites(num_sites, sites));
    }
    return LocalStructure(num_sites, std::move(rs), std::move(weights));
}

LocalStructure LocalStructure::path_graph(size_t num_sites) {
    if (num_sites < 2) {
        throw std::invalid_argument("a path graph needs at least 2 sites");
    }
    std::vector<Region> edges;
    for (size_t i = 0; i + 1 < num_sites; i++) {
        edges.push_back(Region::from_sites(num_sites, {i, i + 1}));
    }
    return LocalStructure(num_sites, std::move(edges));
}

LocalStructure LocalStructure::complete_graph(size_t num_sites) {
    if (num_sites < 2) {
        throw std::invalid_argument("a complete graph needs at least 2 sites");
    }
    std::vector<Region> edges;
    for (size_t i = 0; i < num_sites; i++) {
        for (size_t j = i + 1; j < num_sites; j++) {
            edges.push_back(Region::from_sites(num_sites, {i, j}));
        }
    }
    return LocalStructure(num_sites, std::move(edges));
}

Region LocalStructure::coverage() const {
    Region out = Region::empty(num_sites_);
    for (const Region &r : regions_) {
        out = out | r;
    }
    return out;
}

EnsembleSpec::EnsembleSpec(LocalStructure structure, Policy policy, int d)
    : structure_(std::move(structure)), policy_(std::move(policy)), d_(d) {
    if (d < 2) {
        throw std::invalid_argument("local dimension d must be >= 2");
    }
    size_t m = structure_.num_regions();
    if (auto *u = std::get_if<Uncorrelated>(&policy_)) {
        for (const auto &w : u->step_weights) {
            validate_distribution(w, m, "step weights");
        }
    } else if (auto *mk = std::get_if<Markov>(&policy_)) {
        validate_distribution(mk->initial, m, "Markov initial distribution");
        if (mk->transition.size() != m) {
            throw std::invalid_argument("Markov transition matrix must be " + std::to_string(m) + "x" +
                                        std::to_string(m));
        }
        for (const auto &row : mk->transition) {
            validate_distribution(row, m, "Markov transition row");
        }
    } else {
        const auto &order = std::get<CorrelatedSweep>(policy_).order;
        if (order.size() != m) {
            throw std::invalid_argument("sweep order must list every region exactly once");
        }
        std::vector<bool> seen(m, false);
        for (size_t i : order) {
            if (i >= m || seen[i]) {
                throw std::invalid_argument("sweep order is not a permutation of the region indices");
            }
            seen[i] = true;
        }
    }
}

EnsembleSpec EnsembleSpec::uncorrelated(LocalStructure structure, int d) {
    return EnsembleSpec(std::move(structure), Uncorrelated{}, d);
}

EnsembleSpec EnsembleSpec::sweep(LocalStructure structure, std::vector<size_t> order, int d) {
    return EnsembleSpec(std::move(structure), CorrelatedSweep{std::move(order)}, d);
}

EnsembleSpec EnsembleSpec::markov(
    LocalStructure structure, std::vector<double> initial, std::vector<std::vector<double>> transition, int d) {
    return EnsembleSpec(std::move(structure), Markov{std::move(initial), std::move(transition)}, d);
}

std::string EnsembleSpec::policy_name() const {
    if (is_uncorrelated()) {
        return "uncorrelated";
    }
    if (is_markov()) {
        return "markov";
    }
    return "sweep";
}

const std::vector<double> &EnsembleSpec::step_weights(size_t step_index) const {
    const auto *u = std::get_if<Uncorrelated>(&policy_);
    if (u == nullptr) {
        throw std::invalid_argument("step weights are only defined for uncorrelated ensembles");
    }
    if (u->step_weights.empty()) {
        return structure_.weights();
    }
    if (step_index >= u->step_weights.size()) {
        throw std::out_of_range(
            "step " + std::to_string(step_index) + " beyond the " + std::to_string(u->step_weights.size()) +
            "-step weight sequence");
    }
    return u->step_weights[step_index];
}

std::vector<size_t> expanding_order(size_t num_regions) {
    std::vector<size_t> order;
    if (num_regions == 0) {
        return order;
    }
    size_t center = (num_regions - 1) / 2;
    order.push_back(center);
    size_t right = center + 1;
    size_t left = center;  // next left index is left - 1
    while (order.size() < num_regions) {
        if (right < num_regions) {
            order.push_back(right++);
        }
        if (left > 0) {
            order.push_back(--left);
        }
    }
    return order;
}

std::vector<size_t> identity_order(size_t num_regions) {
    std::vector<size_t> order(num_regions);
    for (size_t i = 0; i < num_regions; i++) {
        order[i] = i;
    }
    return order;
}

Markov nearest_neighbor_markov(const LocalStructure &structure, bool include_self) {
    size_t m = structure.num_regions();
    Markov out;
    out.initial = structure.weights();
    out.transition.assign(m, std::vector<double>(m, 0.0));
    for (size_t i = 0; i < m; i++) {
        std::vector<size_t> next;
        for (size_t j = 0; j < m; j++) {
            if ((i != j || include_self) && structure.region(i).intersects(structure.region(j))) {
                next.push_back(j);
            }
        }
        if (next.empty()) {
            // Isolated region: stay put.
            next.push_back(i);
        }
        for (size_t j : next) {
            out.transition[i][j] = 1.0 / (double)next.size();
        }
    }
    return out;
}

}  // namespace lrqc
