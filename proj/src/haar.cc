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

#include "lrqc/haar.h"

#include <cmath>
#include <stdexcept>

namespace lrqc {

namespace {

Eigen::VectorXcd gaussian_vector(size_t m, RandomStream &rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    Eigen::VectorXcd v((Eigen::Index)m);
    for (size_t i = 0; i < m; i++) {
        double re = normal(rng);
        double im = normal(rng);
        v[(Eigen::Index)i] = {re, im};
    }
    return v;
}

size_t draw_index(const std::vector<double> &weights, RandomStream &rng) {
    std::discrete_distribution<size_t> dist(weights.begin(), weights.end());
    return dist(rng);
}

}  // namespace

Eigen::MatrixXcd haar_unitary(size_t m, RandomStream &rng) {
    if (m == 0) {
        throw std::invalid_argument("haar_unitary needs m >= 1");
    }
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    Eigen::MatrixXcd z((Eigen::Index)m, (Eigen::Index)m);
    for (Eigen::Index c = 0; c < z.cols(); c++) {
        for (Eigen::Index r = 0; r < z.rows(); r++) {
            double re = normal(rng);
            double im = normal(rng);
            z(r, c) = {re, im};
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd &packed = qr.matrixQR();
    for (Eigen::Index i = 0; i < q.cols(); i++) {
        std::complex<double> r = packed(i, i);
        double mag = std::abs(r);
        if (mag > 0) {
            q.col(i) *= r / mag;
        }
    }
    return q;
}

DenseState haar_state(size_t num_sites, int d, RandomStream &rng) {
    uint64_t dim = dense_dimension(num_sites, d);
    Eigen::VectorXcd v = gaussian_vector(dim, rng);
    v /= v.norm();
    return DenseState(num_sites, d, std::move(v));
}

std::vector<Region> sample_regions(const EnsembleSpec &spec, size_t k, RandomStream &rng) {
    const LocalStructure &structure = spec.structure();
    std::vector<Region> out;
    if (const auto *u = std::get_if<Uncorrelated>(&spec.policy())) {
        (void)u;
        for (size_t t = 0; t < k; t++) {
            out.push_back(structure.region(draw_index(spec.step_weights(t), rng)));
        }
    } else if (const auto *m = std::get_if<Markov>(&spec.policy())) {
        if (k == 0) {
            return out;
        }
        size_t cur = draw_index(m->initial, rng);
        out.push_back(structure.region(cur));
        for (size_t t = 1; t < k; t++) {
            cur = draw_index(m->transition[cur], rng);
            out.push_back(structure.region(cur));
        }
    } else {
        const auto &sweep = std::get<CorrelatedSweep>(spec.policy());
        for (size_t t = 0; t < k; t++) {
            for (auto it = sweep.order.rbegin(); it != sweep.order.rend(); ++it) {
                out.push_back(structure.region(*it));
            }
        }
    }
    return out;
}

}  // namespace lrqc
