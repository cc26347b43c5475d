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

#ifndef LRQC_SWAP_DYNAMICS_H
#define LRQC_SWAP_DYNAMICS_H

#include <cstddef>
#include <vector>

#include "lrqc/ensemble.h"
#include "lrqc/region.h"
#include "lrqc/swap_vector.h"

namespace lrqc {

// Purity dynamics of a fully factorized pure initial state, evaluated in the
// swap algebra. All maps act in the Heisenberg picture: the map of the last
// gate in time is applied to the swap first.

/// One uncorrelated step: sum_i q_i * apply_local(v, region_i). step_index
/// (0-based) selects the weights of a per-step sequence.
SwapVector apply_step(const SwapVector &v, const EnsembleSpec &spec, size_t step_index = 0);

/// One correlated sweep: apply_local over every region, order[0] first.
SwapVector apply_sweep(const SwapVector &v, const EnsembleSpec &spec);

/// P_0..P_k for a Markov ensemble, by dynamic programming over the region
/// that opens the remaining gate sequence.
std::vector<double> markov_purity(const Region &initial, const EnsembleSpec &spec, size_t k);

/// P_0..P_{k_max} for any policy. For sweeps, one step is a full sweep.
std::vector<double> purity_trajectory(const Region &initial, const EnsembleSpec &spec, size_t k_max);

/// The swap vector whose contraction is P_k (uncorrelated or sweep policies).
SwapVector evolved_swap(const Region &initial, const EnsembleSpec &spec, size_t k);

}  // namespace lrqc

#endif
