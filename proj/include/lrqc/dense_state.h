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

#ifndef LRQC_DENSE_STATE_H
#define LRQC_DENSE_STATE_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "lrqc/region.h"

namespace lrqc {

/// Hard cap on the dense Hilbert-space dimension d^n.
constexpr uint64_t kMaxDenseDim = uint64_t{1} << 20;

/// d^n, throwing CapExceededError when it exceeds `cap`.
uint64_t dense_dimension(size_t num_sites, int d, uint64_t cap = kMaxDenseDim);

/// Basis index of a product configuration is sum_s digit_s d^s (site 0 is the
/// least significant digit). Within a region, the local index orders the
/// region's sites the same way.
class DenseState {
   public:
    /// |0...0>.
    DenseState(size_t num_sites, int d);
    /// Throws std::invalid_argument unless amplitudes has length d^n and unit norm within 1e-10.
    DenseState(size_t num_sites, int d, Eigen::VectorXcd amplitudes);

    size_t num_sites() const {
        return num_sites_;
    }
    int d() const {
        return d_;
    }
    const Eigen::VectorXcd &amplitudes() const {
        return amplitudes_;
    }
    double norm() const {
        return amplitudes_.norm();
    }

    /// Applies gate (d^{|region|} square) to the region's tensor factors.
    void apply_gate(const Region &region, const Eigen::MatrixXcd &gate);

   private:
    size_t num_sites_;
    int d_;
    Eigen::VectorXcd amplitudes_;
};

/// Offsets of every local configuration of `region` inside the global index.
std::vector<uint64_t> region_offsets(size_t num_sites, int d, const Region &region);

/// Tr_{region^c} |psi><psi|, as a d^{|region|} square matrix.
Eigen::MatrixXcd reduced_density_matrix(const DenseState &state, const Region &region);

/// Tr(rho_region^2).
double reduced_purity(const DenseState &state, const Region &region);

/// ||rho - sigma||_1 for Hermitian inputs, via a full eigendecomposition.
double trace_norm_distance(const Eigen::MatrixXcd &rho, const Eigen::MatrixXcd &sigma);

/// gate ⊗ identity on the complement, as a d^n square matrix.
Eigen::MatrixXcd embed_gate(size_t num_sites, int d, const Region &region, const Eigen::MatrixXcd &gate);

}  // namespace lrqc

#endif
