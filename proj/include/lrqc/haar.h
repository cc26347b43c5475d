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

#ifndef LRQC_HAAR_H
#define LRQC_HAAR_H

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "lrqc/dense_state.h"
#include "lrqc/ensemble.h"
#include "lrqc/random.h"

namespace lrqc {

/// Haar-random m×m unitary. QR of a complex Ginibre matrix, with the phases of
/// diag(R) moved into Q.
Eigen::MatrixXcd haar_unitary(size_t m, RandomStream &rng);

/// Haar-random pure state on n sites (normalized complex Gaussian vector).
DenseState haar_state(size_t num_sites, int d, RandomStream &rng);

/// Gate regions of one circuit, in the order the gates are applied.
///
/// Uncorrelated draws step t from the step-t weights. Markov starts from the
/// initial distribution and follows rows of the transition matrix. A sweep
/// circuit of k steps is k copies of the order reversed, since order[0] is the
/// map applied first to swap operators, i.e. the last gate in time.
std::vector<Region> sample_regions(const EnsembleSpec &spec, size_t k, RandomStream &rng);

}  // namespace lrqc

#endif
