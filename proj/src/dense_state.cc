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

#include "lrqc/dense_state.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lrqc/errors.h"

namespace lrqc {

uint64_t dense_dimension(size_t num_sites, int d, uint64_t cap) {
    if (d < 2) {
        throw std::invalid_argument("local dimension d must be >= 2");
    }
    uint64_t dim = 1;
    for (size_t i = 0; i < num_sites; i++) {
        dim *= (uint64_t)d;
        if (dim > cap) {
            throw CapExceededError(
                "dense dimension " + std::to_string(d) + "^" + std::to_string(num_sites) + " exceeds the cap of " +
                std::to_string(cap));
        }
    }
    return dim;
}

std::vector<uint64_t> region_offsets(size_t num_sites, int d, const Region &region) {
    if (region.num_sites() != num_sites) {
        throw std::invalid_argument("region over a different site count than the state");
    }
    std::vector<uint64_t> offsets{0};
    uint64_t stride = 1;
    for (size_t s = 0; s < num_sites; s++) {
        if (region.contains(s)) {
            size_t before = offsets.size();
            for (int digit = 1; digit < d; digit++) {
                for (size_t j = 0; j < before; j++) {
                    offsets.push_back(offsets[j] + (uint64_t)digit * stride);
                }
            }
        }
        stride *= (uint64_t)d;
    }
    return offsets;
}

DenseState::DenseState(size_t num_sites, int d) : num_sites_(num_sites), d_(d) {
    uint64_t dim = dense_dimension(num_sites, d);
    amplitudes_ = Eigen::VectorXcd::Zero((Eigen::Index)dim);
    amplitudes_[0] = 1;
}

DenseState::DenseState(size_t num_sites, int d, Eigen::VectorXcd amplitudes)
    : num_sites_(num_sites), d_(d), amplitudes_(std::move(amplitudes)) {
    uint64_t dim = dense_dimension(num_sites, d);
    if ((uint64_t)amplitudes_.size() != dim) {
        throw std::invalid_argument("amplitude vector has the wrong length");
    }
    if (std::abs(amplitudes_.squaredNorm() - 1) > 1e-10) {
        throw std::invalid_argument("state is not normalized");
    }
}

void DenseState::apply_gate(const Region &region, const Eigen::MatrixXcd &gate) {
    std::vector<uint64_t> local = region_offsets(num_sites_, d_, region);
    std::vector<uint64_t> rest = region_offsets(num_sites_, d_, region.complement());
    if (gate.rows() != (Eigen::Index)local.size() || gate.cols() != (Eigen::Index)local.size()) {
        throw std::invalid_argument(
            "gate dimension " + std::to_string(gate.rows()) + " does not match d^|region| = " +
            std::to_string(local.size()));
    }
    Eigen::VectorXcd block((Eigen::Index)local.size());
    for (uint64_t base : rest) {
        for (size_t j = 0; j < local.size(); j++) {
            block[(Eigen::Index)j] = amplitudes_[(Eigen::Index)(base + local[j])];
        }
        Eigen::VectorXcd out = gate * block;
        for (size_t j = 0; j < local.size(); j++) {
            amplitudes_[(Eigen::Index)(base + local[j])] = out[(Eigen::Index)j];
        }
    }
}

Eigen::MatrixXcd reduced_density_matrix(const DenseState &state, const Region &region) {
    std::vector<uint64_t> local = region_offsets(state.num_sites(), state.d(), region);
    std::vector<uint64_t> rest = region_offsets(state.num_sites(), state.d(), region.complement());
    Eigen::MatrixXcd m((Eigen::Index)local.size(), (Eigen::Index)rest.size());
    for (size_t i = 0; i < local.size(); i++) {
        for (size_t j = 0; j < rest.size(); j++) {
            m((Eigen::Index)i, (Eigen::Index)j) = state.amplitudes()[(Eigen::Index)(local[i] + rest[j])];
        }
    }
    return m * m.adjoint();
}

double reduced_purity(const DenseState &state, const Region &region) {
    return reduced_density_matrix(state, region).squaredNorm();
}

double trace_norm_distance(const Eigen::MatrixXcd &rho, const Eigen::MatrixXcd &sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw std::invalid_argument("trace distance between matrices of different shapes");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho - sigma, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().cwiseAbs().sum();
}

Eigen::MatrixXcd embed_gate(size_t num_sites, int d, const Region &region, const Eigen::MatrixXcd &gate) {
    std::vector<uint64_t> local = region_offsets(num_sites, d, region);
    std::vector<uint64_t> rest = region_offsets(num_sites, d, region.complement());
    if (gate.rows() != (Eigen::Index)local.size() || gate.cols() != (Eigen::Index)local.size()) {
        throw std::invalid_argument("gate dimension does not match the region");
    }
    Eigen::Index dim = (Eigen::Index)(local.size() * rest.size());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (uint64_t base : rest) {
        for (size_t i = 0; i < local.size(); i++) {
            for (size_t j = 0; j < local.size(); j++) {
                out((Eigen::Index)(base + local[i]), (Eigen::Index)(base + local[j])) =
                    gate((Eigen::Index)i, (Eigen::Index)j);
            }
        }
    }
    return out;
}

}  // namespace lrqc
