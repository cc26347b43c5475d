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

#include "lrqc/swap_dynamics.h"

#include <stdexcept>

namespace lrqc {

namespace {

void require_initial(const Region &initial, const EnsembleSpec &spec) {
    if (initial.num_sites() != spec.num_sites()) {
        throw std::invalid_argument("initial region over a different site count than the ensemble");
    }
}

SwapVector mixture_step(const SwapVector &v, const LocalStructure &structure, const std::vector<double> &weights,
                        int d) {
    SwapVector out(v.num_sites(), v.prune_tol());
    for (size_t i = 0; i < structure.num_regions(); i++) {
        if (weights[i] == 0) {
            continue;
        }
        SwapVector term = apply_local(v, structure.region(i), d);
        term *= weights[i];
        out += term;
    }
    return out;
}

bool has_step_sequence(const EnsembleSpec &spec) {
    return !std::get<Uncorrelated>(spec.policy()).step_weights.empty();
}

}  // namespace

SwapVector apply_step(const SwapVector &v, const EnsembleSpec &spec, size_t step_index) {
    if (!spec.is_uncorrelated()) {
        throw std::invalid_argument("apply_step requires an uncorrelated ensemble");
    }
    if (v.num_sites() != spec.num_sites()) {
        throw std::invalid_argument("swap vector over a different site count than the ensemble");
    }
    return mixture_step(v, spec.structure(), spec.step_weights(step_index), spec.d());
}

SwapVector apply_sweep(const SwapVector &v, const EnsembleSpec &spec) {
    const auto *sweep = std::get_if<CorrelatedSweep>(&spec.policy());
    if (sweep == nullptr) {
        throw std::invalid_argument("apply_sweep requires a correlated sweep ensemble");
    }
    if (v.num_sites() != spec.num_sites()) {
        throw std::invalid_argument("swap vector over a different site count than the ensemble");
    }
    SwapVector out = v;
    for (size_t i : sweep->order) {
        out = apply_local(out, spec.structure().region(i), spec.d());
    }
    return out;
}

std::vector<double> markov_purity(const Region &initial, const EnsembleSpec &spec, size_t k) {
    const auto *chain = std::get_if<Markov>(&spec.policy());
    if (chain == nullptr) {
        throw std::invalid_argument("markov_purity requires a Markov ensemble");
    }
    require_initial(initial, spec);
    const LocalStructure &structure = spec.structure();
    size_t m = structure.num_regions();

    // depth[i] after m steps: sum over gate sequences (i, j_2, ..., j_m) of
    // their conditional probability given i, of R_i R_{j_2} ... R_{j_m}(T).
    std::vector<SwapVector> depth;
    depth.reserve(m);
    SwapVector swap = SwapVector::single(initial);
    for (size_t i = 0; i < m; i++) {
        depth.push_back(apply_local(swap, structure.region(i), spec.d()));
    }

    std::vector<double> purity{contract_factorized(swap)};
    auto emit = [&]() {
        double p = 0;
        for (size_t i = 0; i < m; i++) {
            p += chain->initial[i] * contract_factorized(depth[i]);
        }
        purity.push_back(p);
    };
    if (k >= 1) {
        emit();
    }
    for (size_t step = 2; step <= k; step++) {
        std::vector<SwapVector> next;
        next.reserve(m);
        for (size_t i = 0; i < m; i++) {
            SwapVector continuation(swap.num_sites(), swap.prune_tol());
            for (size_t j = 0; j < m; j++) {
                double p = chain->transition[i][j];
                if (p == 0) {
                    continue;
                }
                SwapVector term = depth[j];
                term *= p;
                continuation += term;
            }
            next.push_back(apply_local(continuation, structure.region(i), spec.d()));
        }
        depth = std::move(next);
        emit();
    }
    return purity;
}

SwapVector evolved_swap(const Region &initial, const EnsembleSpec &spec, size_t k) {
    require_initial(initial, spec);
    SwapVector v = SwapVector::single(initial);
    if (spec.is_sweep()) {
        for (size_t j = 0; j < k; j++) {
            v = apply_sweep(v, spec);
        }
        return v;
    }
    if (!spec.is_uncorrelated()) {
        throw std::invalid_argument("a Markov ensemble has no single evolved swap; use markov_purity");
    }
    if (has_step_sequence(spec)) {
        for (size_t j = k; j-- > 0;) {
            v = apply_step(v, spec, j);
        }
        return v;
    }
    for (size_t j = 0; j < k; j++) {
        v = apply_step(v, spec, 0);
    }
    return v;
}

std::vector<double> purity_trajectory(const Region &initial, const EnsembleSpec &spec, size_t k_max) {
    require_initial(initial, spec);
    if (spec.is_markov()) {
        return markov_purity(initial, spec, k_max);
    }
    std::vector<double> purity;
    purity.reserve(k_max + 1);
    if (spec.is_uncorrelated() && has_step_sequence(spec)) {
        // Step j's map must be applied to the swap first, so each P_j
        // restarts from the initial swap.
        for (size_t j = 0; j <= k_max; j++) {
            purity.push_back(contract_factorized(evolved_swap(initial, spec, j)));
        }
        return purity;
    }
    SwapVector v = SwapVector::single(initial);
    purity.push_back(contract_factorized(v));
    for (size_t j = 1; j <= k_max; j++) {
        v = spec.is_sweep() ? apply_sweep(v, spec) : apply_step(v, spec, 0);
        purity.push_back(contract_factorized(v));
    }
    return purity;
}

}  // namespace lrqc
