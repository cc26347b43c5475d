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

#include "lrqc/bounds.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "lrqc/errors.h"

namespace lrqc {

namespace {

void check_d(int d) {
    if (d < 2) {
        throw std::invalid_argument("local dimension d must be >= 2");
    }
}

}  // namespace

const char *bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::upper:
            return "upper-bound";
        case BoundKind::lower:
            return "lower-bound";
        default:
            return "estimate";
    }
}

double entangling_power(int d) {
    check_d(d);
    double dd = d;
    return (dd - 1) * (dd - 1) / (dd * dd + 1);
}

double swap_constant(int d) {
    check_d(d);
    double dd = d;
    return dd / (dd * dd + 1);
}

double boundary_probability(const Region &target, const LocalStructure &structure) {
    if (target.num_sites() != structure.num_sites()) {
        throw std::invalid_argument("target region over a different site count than the structure");
    }
    double p = 0;
    for (size_t i = 0; i < structure.regions().size(); i++) {
        if (in_boundary(structure.region(i), target)) {
            p += structure.weights()[i];
        }
    }
    return p;
}

std::vector<ExtremalBoundary> extremal_boundary_profile(
    const Region &start, const LocalStructure &structure, size_t depth, size_t max_visited) {
    std::unordered_set<uint64_t> seen{start.bits()};
    std::vector<Region> frontier{start};
    ExtremalBoundary cur;
    cur.arg_max = cur.arg_min = start;
    cur.p_max = cur.p_min = boundary_probability(start, structure);
    cur.regions_visited = 1;
    std::vector<ExtremalBoundary> out{cur};
    for (size_t level = 1; level <= depth; level++) {
        std::vector<Region> next;
        for (const Region &a : frontier) {
            for (const Region &r : structure.regions()) {
                if (!in_boundary(r, a)) {
                    continue;
                }
                for (const Region &b : {a - r, a | r}) {
                    if (!seen.insert(b.bits()).second) {
                        continue;
                    }
                    if (seen.size() > max_visited) {
                        throw CapExceededError(
                            "reachable-region search exceeded " + std::to_string(max_visited) + " regions");
                    }
                    double p = boundary_probability(b, structure);
                    if (p > cur.p_max) {
                        cur.p_max = p;
                        cur.arg_max = b;
                    }
                    if (p < cur.p_min) {
                        cur.p_min = p;
                        cur.arg_min = b;
                    }
                    next.push_back(b);
                }
            }
        }
        cur.regions_visited = seen.size();
        out.push_back(cur);
        frontier = std::move(next);
    }
    return out;
}

ExtremalBoundary extremal_boundary_probabilities(
    const Region &start, const LocalStructure &structure, size_t depth, size_t max_visited) {
    return extremal_boundary_profile(start, structure, depth, max_visited).back();
}

AreaLawBound area_law_bound(double p_max, double p_min, int d, size_t k) {
    if (!(p_min >= 0 && p_min <= p_max && p_max <= 1)) {
        throw std::invalid_argument("area_law_bound needs 0 <= p_min <= p_max <= 1");
    }
    double ep = entangling_power(d);
    double nd = swap_constant(d);
    double kk = (double)k;
    std::vector<std::pair<std::string, double>> inputs{{"p_max", p_max}, {"p_min", p_min}, {"d", d}, {"k", kk}};
    AreaLawBound out;
    out.binomial = {std::pow(1 - p_min + 2 * nd * p_max, kk), BoundKind::upper, inputs};
    out.exponential = {std::exp(-kk * (p_max * ep - (p_max - p_min) / (1 - ep))), BoundKind::upper, inputs};
    return out;
}

BoundReport first_moment_convergence_bound(
    double omega_norm, double a_norm, double epsilon, double q_min, size_t num_regions) {
    if (!(omega_norm > 0 && a_norm > 0 && epsilon > 0)) {
        throw std::invalid_argument("norms and epsilon must be positive");
    }
    if (!(q_min > 0 && q_min <= 1)) {
        throw std::invalid_argument("q_min must lie in (0, 1]");
    }
    if (num_regions == 0) {
        throw std::invalid_argument("num_regions must be positive");
    }
    double numerator = std::log(omega_norm * a_norm / epsilon) + (double)(num_regions - 1) * std::log(2.0);
    double value;
    if (numerator <= 0) {
        value = 0;
    } else if (q_min == 1) {
        value = 1;
    } else {
        value = numerator / -std::log1p(-q_min);
    }
    return {value, BoundKind::upper,
            {{"omega_norm", omega_norm},
             {"a_norm", a_norm},
             {"epsilon", epsilon},
             {"q_min", q_min},
             {"num_regions", (double)num_regions}}};
}

std::vector<double> r1_candidate_spectrum(const LocalStructure &structure) {
    size_t m = structure.regions().size();
    if (m > 20) {
        throw CapExceededError("candidate spectrum needs at most 20 regions, got " + std::to_string(m));
    }
    std::vector<double> values{0.0};
    for (double w : structure.weights()) {
        size_t half = values.size();
        for (size_t i = 0; i < half; i++) {
            values.push_back(values[i] + w);
        }
    }
    std::sort(values.begin(), values.end());
    return values;
}

BoundReport correlated_convergence_bound(double gap, size_t num_sites, double epsilon) {
    if (!(gap > 0 && gap <= 1)) {
        throw std::invalid_argument("gap must lie in (0, 1]");
    }
    if (!(epsilon > 0)) {
        throw std::invalid_argument("epsilon must be positive");
    }
    double numerator = 0.5 * (double)num_sites * std::log(2.0) - std::log(epsilon);
    double value = 0;
    if (numerator > 0 && gap < 1) {
        value = numerator / -std::log1p(-gap);
    }
    return {value, BoundKind::upper, {{"gap", gap}, {"n", (double)num_sites}, {"epsilon", epsilon}}};
}

BoundReport t_design_delta(size_t region_size, double alpha, size_t t, int d, std::optional<double> epsilon) {
    check_d(d);
    if (!(alpha > 0)) {
        throw std::invalid_argument("alpha must be positive");
    }
    if (t == 0) {
        throw std::invalid_argument("t must be >= 1");
    }
    double log_d = std::log((double)d);
    double m = (1 + alpha) * (double)region_size;
    double big_d = std::exp((double)region_size * log_d);
    double eps = epsilon.value_or(std::exp(-m * log_d));
    if (!(eps >= 0)) {
        throw std::invalid_argument("epsilon must be nonnegative");
    }
    double tail = big_d * std::exp(-m * log_d);
    double value = std::sqrt((double)t) * (std::sqrt(tail + big_d * eps) + std::sqrt(tail));
    return {value, BoundKind::upper,
            {{"region_size", (double)region_size}, {"alpha", alpha}, {"t", (double)t}, {"d", d}, {"epsilon", eps}}};
}

}  // namespace lrqc
