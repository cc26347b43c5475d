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

#ifndef LRQC_ENSEMBLE_H
#define LRQC_ENSEMBLE_H

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "lrqc/region.h"

namespace lrqc {

/// The family of local regions gates may act on, with an optional
/// probability weight per region.
class LocalStructure {
   public:
    /// Empty weights means uniform. Throws std::invalid_argument if a region
    /// is empty or over a different site count, or if the weights are not a
    /// distribution (length, sign, sum within 1e-12).
    LocalStructure(size_t num_sites, std::vector<Region> regions, std::vector<double> weights = {});

    static LocalStructure from_site_lists(
        size_t num_sites, const std::vector<std::vector<size_t>> &regions, std::vector<double> weights = {});
    /// Edges {i, i+1} for i = 0..n-2.
    static LocalStructure path_graph(size_t num_sites);
    /// All pairs {i, j}, i < j, in lexicographic order.
    static LocalStructure complete_graph(size_t num_sites);

    size_t num_sites() const {
        return num_sites_;
    }
    size_t num_regions() const {
        return regions_.size();
    }
    const std::vector<Region> &regions() const {
        return regions_;
    }
    const Region &region(size_t i) const {
        return regions_[i];
    }
    /// Normalized weights (uniform when none were given).
    const std::vector<double> &weights() const {
        return weights_;
    }
    bool has_explicit_weights() const {
        return explicit_weights_;
    }
    /// Union of all regions.
    Region coverage() const;

   private:
    size_t num_sites_;
    std::vector<Region> regions_;
    std::vector<double> weights_;
    bool explicit_weights_;
};

/// Independent draws each step. An empty step_weights means the structure's
/// own weights at every step; otherwise entry j is the distribution of step j.
struct Uncorrelated {
    std::vector<std::vector<double>> step_weights;
};

/// A Markov chain over region indices: first region from `initial`, then
/// transition[i][j] = probability that region j follows region i.
struct Markov {
    std::vector<double> initial;
    std::vector<std::vector<double>> transition;
};

/// One step applies every region's map once, order[0] first in the swap
/// picture (which is the last gate in time within the sweep).
struct CorrelatedSweep {
    std::vector<size_t> order;
};

using Policy = std::variant<Uncorrelated, Markov, CorrelatedSweep>;

/// A circuit ensemble: regions, ordering policy and local dimension.
class EnsembleSpec {
   public:
    /// Validates the policy against the structure; throws std::invalid_argument.
    EnsembleSpec(LocalStructure structure, Policy policy, int d);

    static EnsembleSpec uncorrelated(LocalStructure structure, int d);
    static EnsembleSpec sweep(LocalStructure structure, std::vector<size_t> order, int d);
    static EnsembleSpec markov(
        LocalStructure structure, std::vector<double> initial, std::vector<std::vector<double>> transition, int d);

    const LocalStructure &structure() const {
        return structure_;
    }
    const Policy &policy() const {
        return policy_;
    }
    int d() const {
        return d_;
    }
    size_t num_sites() const {
        return structure_.num_sites();
    }

    bool is_uncorrelated() const {
        return std::holds_alternative<Uncorrelated>(policy_);
    }
    bool is_markov() const {
        return std::holds_alternative<Markov>(policy_);
    }
    bool is_sweep() const {
        return std::holds_alternative<CorrelatedSweep>(policy_);
    }
    /// "uncorrelated", "markov" or "sweep".
    std::string policy_name() const;

    /// Region weights used by uncorrelated step `step_index` (0-based).
    /// Throws std::out_of_range past the end of a per-step sequence.
    const std::vector<double> &step_weights(size_t step_index) const;

   private:
    LocalStructure structure_;
    Policy policy_;
    int d_;
};

/// Center edge first, then alternating outward (right, then left). Defined
/// for any number of regions, using their index order as the chain order.
std::vector<size_t> expanding_order(size_t num_regions);
std::vector<size_t> identity_order(size_t num_regions);

/// Random walk over regions: from region i, move uniformly to a region that
/// shares at least one site with it (i itself included when include_self).
Markov nearest_neighbor_markov(const LocalStructure &structure, bool include_self);

/// Throws std::invalid_argument unless p is a distribution of length n.
void validate_distribution(const std::vector<double> &p, size_t n, const char *what);

}  // namespace lrqc

#endif
