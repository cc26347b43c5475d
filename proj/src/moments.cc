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

#include "lrqc/moments.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lrqc/dense_state.h"

namespace lrqc {

namespace {

void check_square(const Eigen::MatrixXcd &op, uint64_t dim) {
    if (op.rows() != (Eigen::Index)dim || op.cols() != (Eigen::Index)dim) {
        throw std::invalid_argument(
            "operator is " + std::to_string(op.rows()) + "x" + std::to_string(op.cols()) + ", expected dimension " +
            std::to_string(dim));
    }
}

/// Two-copy offsets of the region (inner) and its complement (outer) so that
/// index(r, c) = inner[r] + outer[c], with r = x_r + D y_r.
struct TwoCopySplit {
    std::vector<uint64_t> inner;
    std::vector<uint64_t> outer;
    uint64_t local_dim = 0;
};

TwoCopySplit split_two_copy(size_t num_sites, int d, const Region &region) {
    uint64_t single = dense_dimension(num_sites, d);
    dense_dimension(2 * num_sites, d, kMaxTwoCopyDim);
    std::vector<uint64_t> in = region_offsets(num_sites, d, region);
    std::vector<uint64_t> out = region_offsets(num_sites, d, region.complement());
    TwoCopySplit s;
    s.local_dim = in.size();
    for (uint64_t y : in) {
        for (uint64_t x : in) {
            s.inner.push_back(x + single * y);
        }
    }
    for (uint64_t y : out) {
        for (uint64_t x : out) {
            s.outer.push_back(x + single * y);
        }
    }
    return s;
}

}  // namespace

Eigen::MatrixXcd exact_first_moment_map(const Eigen::MatrixXcd &op, size_t num_sites, int d, const Region &region) {
    uint64_t dim = dense_dimension(num_sites, d);
    check_square(op, dim);
    std::vector<uint64_t> in = region_offsets(num_sites, d, region);
    std::vector<uint64_t> out = region_offsets(num_sites, d, region.complement());
    double scale = 1.0 / (double)in.size();
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Zero(op.rows(), op.cols());
    for (uint64_t c : out) {
        for (uint64_t c2 : out) {
            std::complex<double> tr = 0;
            for (uint64_t r : in) {
                tr += op((Eigen::Index)(r + c), (Eigen::Index)(r + c2));
            }
            for (uint64_t r : in) {
                result((Eigen::Index)(r + c), (Eigen::Index)(r + c2)) = scale * tr;
            }
        }
    }
    return result;
}

Eigen::MatrixXcd first_moment_mixture(const Eigen::MatrixXcd &op, const LocalStructure &structure, int d) {
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Zero(op.rows(), op.cols());
    for (size_t i = 0; i < structure.regions().size(); i++) {
        result += structure.weights()[i] * exact_first_moment_map(op, structure.num_sites(), d, structure.region(i));
    }
    return result;
}

Eigen::MatrixXcd first_moment_superoperator(const LocalStructure &structure, int d) {
    uint64_t dim = dense_dimension(structure.num_sites(), d);
    dense_dimension(2 * structure.num_sites(), d, kMaxTwoCopyDim);
    auto n = (Eigen::Index)dim;
    Eigen::MatrixXcd super(n * n, n * n);
    for (Eigen::Index j = 0; j < n; j++) {
        for (Eigen::Index i = 0; i < n; i++) {
            Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
            e(i, j) = 1;
            Eigen::MatrixXcd image = first_moment_mixture(e, structure, d);
            super.col(i + n * j) = Eigen::Map<Eigen::VectorXcd>(image.data(), n * n);
        }
    }
    return super;
}

Eigen::MatrixXd dense_swap_operator(size_t num_sites, int d, const Region &region) {
    TwoCopySplit s = split_two_copy(num_sites, d, region);
    auto total = (Eigen::Index)(s.inner.size() * s.outer.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(total, total);
    uint64_t dl = s.local_dim;
    for (uint64_t c : s.outer) {
        for (uint64_t y = 0; y < dl; y++) {
            for (uint64_t x = 0; x < dl; x++) {
                t((Eigen::Index)(s.inner[y + dl * x] + c), (Eigen::Index)(s.inner[x + dl * y] + c)) = 1;
            }
        }
    }
    return t;
}

Eigen::MatrixXd dense_swap_vector(const SwapVector &v, int d) {
    uint64_t dim = dense_dimension(2 * v.num_sites(), d, kMaxTwoCopyDim);
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero((Eigen::Index)dim, (Eigen::Index)dim);
    for (const auto &[bits, c] : v.terms()) {
        out += c * dense_swap_operator(v.num_sites(), d, Region(v.num_sites(), bits));
    }
    return out;
}

Eigen::MatrixXcd exact_second_moment_projection(
    const Eigen::MatrixXcd &op, size_t num_sites, int d, const Region &region) {
    TwoCopySplit s = split_two_copy(num_sites, d, region);
    check_square(op, s.inner.size() * s.outer.size());
    uint64_t dl = s.local_dim;
    size_t r2 = s.inner.size();
    size_t c2 = s.outer.size();
    auto swapped = [&](size_t r) { return (r / dl) + dl * (r % dl); };
    double dd = (double)dl;
    double norm_plus = 1.0 / std::sqrt(2 * dd * (dd + 1));
    double norm_minus = dl > 1 ? 1.0 / std::sqrt(2 * dd * (dd - 1)) : 0.0;

    // Z_±[c, c'] = sum_{r, r'} F_±[r, r'] X[(r', c), (r, c')], F = norm (1 ± T).
    Eigen::MatrixXcd z_plus(c2, c2), z_minus(c2, c2);
    for (size_t c = 0; c < c2; c++) {
        for (size_t cp = 0; cp < c2; cp++) {
            std::complex<double> diag = 0, twisted = 0;
            for (size_t r = 0; r < r2; r++) {
                auto col = (Eigen::Index)(s.inner[r] + s.outer[cp]);
                diag += op((Eigen::Index)(s.inner[r] + s.outer[c]), col);
                twisted += op((Eigen::Index)(s.inner[swapped(r)] + s.outer[c]), col);
            }
            z_plus((Eigen::Index)c, (Eigen::Index)cp) = norm_plus * (diag + twisted);
            z_minus((Eigen::Index)c, (Eigen::Index)cp) = norm_minus * (diag - twisted);
        }
    }

    Eigen::MatrixXcd result = Eigen::MatrixXcd::Zero(op.rows(), op.cols());
    for (size_t c = 0; c < c2; c++) {
        for (size_t cp = 0; cp < c2; cp++) {
            std::complex<double> zp = z_plus((Eigen::Index)c, (Eigen::Index)cp);
            std::complex<double> zm = z_minus((Eigen::Index)c, (Eigen::Index)cp);
            for (size_t r = 0; r < r2; r++) {
                auto row = (Eigen::Index)(s.inner[r] + s.outer[c]);
                result(row, (Eigen::Index)(s.inner[r] + s.outer[cp])) += norm_plus * zp + norm_minus * zm;
                result(row, (Eigen::Index)(s.inner[swapped(r)] + s.outer[cp])) += norm_plus * zp - norm_minus * zm;
            }
        }
    }
    return result;
}

Eigen::MatrixXcd two_copy(const Eigen::MatrixXcd &u) {
    Eigen::Index n = u.rows();
    Eigen::MatrixXcd out(n * n, n * n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            out.block(i * n, j * n, n, n) = u(i, j) * u;
        }
    }
    return out;
}

}  // namespace lrqc
