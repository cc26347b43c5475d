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

#ifndef LRQC_MOMENTS_H
#define LRQC_MOMENTS_H

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "lrqc/ensemble.h"
#include "lrqc/swap_vector.h"

namespace lrqc {

/// Cap on the two-copy dimension d^{2n}.
constexpr uint64_t kMaxTwoCopyDim = uint64_t{1} << 10;

/// X -> d^{-|region|} 1_region ⊗ Tr_region(X), for X on d^n.
Eigen::MatrixXcd exact_first_moment_map(const Eigen::MatrixXcd &op, size_t num_sites, int d, const Region &region);

/// sum_i q_i R_{1,Omega_i}(X) over the structure's regions.
Eigen::MatrixXcd first_moment_mixture(const Eigen::MatrixXcd &op, const LocalStructure &structure, int d);

/// The first-moment mixture as a d^{2n} square matrix acting on column-major vec(X).
Eigen::MatrixXcd first_moment_superoperator(const LocalStructure &structure, int d);

/// Two-copy index of (x, y) is x + d^n y.
///
/// Permutation matrix exchanging the copies' digits on `region`.
Eigen::MatrixXd dense_swap_operator(size_t num_sites, int d, const Region &region);

/// sum_A c_A T_A as a dense two-copy matrix.
Eigen::MatrixXd dense_swap_vector(const SwapVector &v, int d);

/// Twirl of the region's two-copy factors: sum_{±} F_± ⊗ Tr_region((F_± ⊗ 1) X),
/// F_± = (1 ± T)/sqrt(2 D (D ± 1)), D = d^{|region|}.
Eigen::MatrixXcd exact_second_moment_projection(
    const Eigen::MatrixXcd &op, size_t num_sites, int d, const Region &region);

/// U ⊗ U on the two-copy space for U on d^n.
Eigen::MatrixXcd two_copy(const Eigen::MatrixXcd &u);

}  // namespace lrqc

#endif
