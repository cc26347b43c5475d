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

#ifndef LRQC_BOUNDS_H
#define LRQC_BOUNDS_H

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrqc/ensemble.h"
#include "lrqc/region.h"

namespace lrqc {

enum class BoundKind { upper, lower, estimate };

const char *bound_kind_name(BoundKind kind);

struct BoundReport {
    double value = 0;
    BoundKind kind = BoundKind::estimate;
    std::vector<std::pair<std::string, double>> inputs;
};

/// (d-1)^2 / (d^2+1).
double entangling_power(int d);

/// N_d = d / (d^2+1).
double swap_constant(int d);

/// Total weight of the regions straddling the target.
double boundary_probability(const Region &target, const LocalStructure &structure);

struct ExtremalBoundary {
    /// Largest and smallest boundary probability over the reachable regions.
    double p_max = 0;
    double p_min = 0;
    Region arg_max;
    Region arg_min;
    size_t regions_visited = 0;
};

/// Breadth-first search over regions reachable from `start` in at most `depth`
/// moves, each move adding or removing a region of the structure that lies in
/// the current boundary. Throws CapExceededError past `max_visited` regions.
ExtremalBoundary extremal_boundary_probabilities(
    const Region &start, const LocalStructure &structure, size_t depth, size_t max_visited = 1u << 20);

/// Entry j holds the extremes over regions reachable in at most j moves, j = 0..depth.
std::vector<ExtremalBoundary> extremal_boundary_profile(
    const Region &start, const LocalStructure &structure, size_t depth, size_t max_visited = 1u << 20);

struct AreaLawBound {
    /// (1 - p_min + 2 N_d p_max)^k.
    BoundReport binomial;
    /// exp[-k (p_max e_p - (p_max - p_min) / (1 - e_p))].
    BoundReport exponential;
};

/// Requires 0 <= p_min <= p_max <= 1.
AreaLawBound area_law_bound(double p_max, double p_min, int d, size_t k);

/// Circuit length after which the first-moment mixture is within epsilon of
/// its limit. Clamped at 0; q_min = 1 gives 0 or 1.
BoundReport first_moment_convergence_bound(
    double omega_norm, double a_norm, double epsilon, double q_min, size_t num_regions);

/// Every subset sum of the region weights, sorted ascending.
std::vector<double> r1_candidate_spectrum(const LocalStructure &structure);

/// log(2^{n/2}/epsilon) / log(1/(1-gap)), clamped at 0. Requires gap in (0, 1].
BoundReport correlated_convergence_bound(double gap, size_t num_sites, double epsilon);

/// sqrt(t) (sqrt(D d^{-m} + D eps) + sqrt(D d^{-m})) with D = d^{|region|},
/// m = (1+alpha)|region| and eps = d^{-m} unless supplied.
BoundReport t_design_delta(
    size_t region_size, double alpha, size_t t, int d, std::optional<double> epsilon = std::nullopt);

}  // namespace lrqc

#endif
