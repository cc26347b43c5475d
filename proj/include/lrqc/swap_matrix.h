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

#ifndef LRQC_SWAP_MATRIX_H
#define LRQC_SWAP_MATRIX_H

#include <cstddef>

#include <Eigen/Dense>

#include "lrqc/ensemble.h"
#include "lrqc/region.h"

namespace lrqc {

constexpr size_t kMaxDenseSwapSites = 14;
constexpr double kDefaultRankTol = 1e-9;

/// Dense matrix of an ensemble map on the swap algebra in the region basis:
/// column A holds the coefficients of R(T_A), rows and columns indexed by
/// region bitmask.
struct SwapMatrix {
    Eigen::MatrixXd matrix;
    size_t num_sites;
    int d;
};

/// Map of a single local region.
SwapMatrix local_swap_matrix(size_t num_sites, const Region &local, int d);

/// Uncorrelated (time-independent) mixture, or the full sweep product for a
/// correlated sweep. Throws CapExceededError above 14 sites and
/// std::invalid_argument for Markov or per-step ensembles.
SwapMatrix build_swap_matrix(const EnsembleSpec &spec);

/// The same map in a Hilbert-Schmidt orthonormal basis of the swap algebra.
/// The normalized Gram matrix d^{-|A Δ B|} factors over sites, so the change
/// of basis is a per-site 2x2 butterfly.
Eigen::MatrixXd hs_orthonormal_form(const SwapMatrix &m);

/// Multiplicity of eigenvalue 1 (dim ker(M - I)). Throws AmbiguousRankError
/// when a singular value of M - I falls within three decades of `tol`.
size_t fixed_space_dimension(const SwapMatrix &m, double tol = kDefaultRankTol);

/// 1 - (largest singular value of R(1 - P)), P the Hilbert-Schmidt
/// orthogonal projector onto the fixed space.
double spectral_gap_swap(const SwapMatrix &m, double tol = kDefaultRankTol);

}  // namespace lrqc

#endif
