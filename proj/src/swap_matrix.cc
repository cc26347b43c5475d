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

#include "lrqc/swap_matrix.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include <lapacke.h>

#include "lrqc/errors.h"
#include "lrqc/swap_vector.h"

namespace lrqc {

namespace {

void require_dense_size(size_t num_sites) {
    if (num_sites > kMaxDenseSwapSites) {
        throw CapExceededError(
            "dense swap matrices are limited to " + std::to_string(kMaxDenseSwapSites) + " sites, got " +
            std::to_string(num_sites));
    }
}

void add_local_columns(Eigen::MatrixXd &out, size_t num_sites, const Region &local, int d, double weight) {
    uint64_t m = local.bits();
    size_t local_size = local.size();
    uint64_t dim = uint64_t{1} << num_sites;
    for (uint64_t a = 0; a < dim; a++) {
        uint64_t inside = a & m;
        if (inside == 0 || inside == m) {
            out(a, a) += weight;
            continue;
        }
        size_t b = (size_t)std::popcount(inside);
        AlphaPair alpha = alpha_coefficients(local_size - b, b, d);
        out(a & ~m, a) += weight * alpha.plus;
        out(a | m, a) += weight * alpha.minus;
    }
}

// Singular values (descending) and optionally the right singular vectors,
// via LAPACK dgesdd. Eigen 3.4.0's BDCSVD miscounts zero singular values on
// some of these matrices.
Eigen::VectorXd singular_values(Eigen::MatrixXd a, Eigen::MatrixXd *right_vectors) {
    lapack_int rows = (lapack_int)a.rows(), cols = (lapack_int)a.cols();
    Eigen::VectorXd s(std::min(rows, cols));
    Eigen::MatrixXd u, vt;
    char job = 'N';
    if (right_vectors) {
        job = 'A';
        u.resize(rows, rows);
        vt.resize(cols, cols);
    }
    lapack_int info = LAPACKE_dgesdd(
        LAPACK_COL_MAJOR, job, rows, cols, a.data(), rows, s.data(), right_vectors ? u.data() : nullptr,
        std::max<lapack_int>(rows, 1), right_vectors ? vt.data() : nullptr, std::max<lapack_int>(cols, 1));
    if (info != 0) {
        throw std::runtime_error("dgesdd failed with info " + std::to_string(info));
    }
    if (right_vectors) {
        *right_vectors = vt.transpose();
    }
    return s;
}

// Singular values of M - I in the orthonormal basis, descending.
Eigen::VectorXd shifted_singular_values(const Eigen::MatrixXd &ortho, Eigen::MatrixXd *right_vectors) {
    return singular_values(ortho - Eigen::MatrixXd::Identity(ortho.rows(), ortho.cols()), right_vectors);
}

size_t count_null(const Eigen::VectorXd &sv, double tol) {
    size_t count = 0;
    for (Eigen::Index i = 0; i < sv.size(); i++) {
        double s = sv[i];
        if (s > tol * 1e-3 && s < tol * 1e3) {
            throw AmbiguousRankError(
                "singular value " + std::to_string(s) + " of (R - 1) is too close to the rank tolerance " +
                std::to_string(tol));
        }
        if (s <= tol) {
            count++;
        }
    }
    return count;
}

}  // namespace

SwapMatrix local_swap_matrix(size_t num_sites, const Region &local, int d) {
    require_dense_size(num_sites);
    if (local.num_sites() != num_sites || local.is_empty()) {
        throw std::invalid_argument("local region must be nonempty and over the same site count");
    }
    uint64_t dim = uint64_t{1} << num_sites;
    SwapMatrix out{Eigen::MatrixXd::Zero((Eigen::Index)dim, (Eigen::Index)dim), num_sites, d};
    add_local_columns(out.matrix, num_sites, local, d, 1.0);
    return out;
}

SwapMatrix build_swap_matrix(const EnsembleSpec &spec) {
    size_t n = spec.num_sites();
    require_dense_size(n);
    const LocalStructure &structure = spec.structure();
    uint64_t dim = uint64_t{1} << n;
    if (spec.is_uncorrelated()) {
        if (!std::get<Uncorrelated>(spec.policy()).step_weights.empty()) {
            throw std::invalid_argument("a per-step weight sequence has no single swap matrix");
        }
        SwapMatrix out{Eigen::MatrixXd::Zero((Eigen::Index)dim, (Eigen::Index)dim), n, spec.d()};
        for (size_t i = 0; i < structure.num_regions(); i++) {
            add_local_columns(out.matrix, n, structure.region(i), spec.d(), structure.weights()[i]);
        }
        return out;
    }
    if (spec.is_sweep()) {
        SwapMatrix out{Eigen::MatrixXd::Identity((Eigen::Index)dim, (Eigen::Index)dim), n, spec.d()};
        for (size_t i : std::get<CorrelatedSweep>(spec.policy()).order) {
            out.matrix = local_swap_matrix(n, structure.region(i), spec.d()).matrix * out.matrix;
        }
        return out;
    }
    throw std::invalid_argument("a Markov ensemble has no single swap matrix");
}

Eigen::MatrixXd hs_orthonormal_form(const SwapMatrix &m) {
    // Per site, Gram [[1, 1/d], [1/d, 1]] = C^T C with C = [[1, 1/d], [0, s]].
    double inv_d = 1.0 / m.d;
    double s = std::sqrt(1 - inv_d * inv_d);
    Eigen::MatrixXd out = m.matrix;
    Eigen::Index dim = out.rows();
    for (size_t site = 0; site < m.num_sites; site++) {
        Eigen::Index bit = Eigen::Index{1} << site;
        for (Eigen::Index a = 0; a < dim; a++) {
            if (a & bit) {
                continue;
            }
            // Left-multiply by C.
            out.row(a) += inv_d * out.row(a | bit);
            out.row(a | bit) *= s;
        }
        for (Eigen::Index a = 0; a < dim; a++) {
            if (a & bit) {
                continue;
            }
            // Right-multiply by C^{-1} = [[1, -1/(d s)], [0, 1/s]].
            out.col(a | bit) = (out.col(a | bit) - inv_d * out.col(a)) / s;
        }
    }
    return out;
}

size_t fixed_space_dimension(const SwapMatrix &m, double tol) {
    return count_null(shifted_singular_values(hs_orthonormal_form(m), nullptr), tol);
}

double spectral_gap_swap(const SwapMatrix &m, double tol) {
    Eigen::MatrixXd ortho = hs_orthonormal_form(m);
    Eigen::MatrixXd v;
    Eigen::VectorXd sv = shifted_singular_values(ortho, &v);
    size_t null_dim = count_null(sv, tol);
    Eigen::Index dim = ortho.rows();
    // Null right singular vectors are the trailing columns of V.
    Eigen::MatrixXd basis = v.rightCols((Eigen::Index)null_dim);
    Eigen::MatrixXd complement = Eigen::MatrixXd::Identity(dim, dim) - basis * basis.transpose();
    Eigen::MatrixXd q = ortho * complement;
    Eigen::VectorXd sq = singular_values(q, nullptr);
    double top = sq.size() ? sq[0] : 0.0;
    return std::clamp(1.0 - top, 0.0, 1.0);
}

}  // namespace lrqc
