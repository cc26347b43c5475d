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

#include "gtest/gtest.h"
#include "lrqc/errors.h"
#include "lrqc/path1d.h"
#include "oracles.h"

using namespace lrqc;

TEST(build_swap_matrix, matches_oracle) {
    for (size_t n = 2; n <= 5; n++) {
        LocalStructure s = LocalStructure::complete_graph(n);
        SwapMatrix m = build_swap_matrix(EnsembleSpec::uncorrelated(s, 3));
        Eigen::MatrixXd expected = oracle::mixture_matrix(n, oracle::region_bits(s), s.weights(), 3);
        ASSERT_LE((m.matrix - expected).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(build_swap_matrix, sweep_is_ordered_product) {
    LocalStructure s = LocalStructure::path_graph(4);
    SwapMatrix m = build_swap_matrix(EnsembleSpec::sweep(s, {1, 2, 0}, 2));
    Eigen::MatrixXd expected = Eigen::MatrixXd::Identity(16, 16);
    for (size_t i : {1, 2, 0}) {
        expected = oracle::mixture_matrix(4, {s.region(i).bits()}, {1.0}, 2) * expected;
    }
    ASSERT_LE((m.matrix - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(build_swap_matrix, fixed_columns) {
    size_t n = 5;
    Region local = Region::from_sites(n, {1, 3});
    SwapMatrix m = local_swap_matrix(n, local, 2);
    size_t fixed = 0;
    for (uint64_t a = 0; a < 32; a++) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(32);
        e[(Eigen::Index)a] = 1;
        if ((m.matrix.col((Eigen::Index)a) - e).cwiseAbs().maxCoeff() == 0) {
            fixed++;
        }
    }
    ASSERT_EQ(fixed, 16);
    SwapMatrix full = build_swap_matrix(EnsembleSpec::uncorrelated(LocalStructure::complete_graph(n), 2));
    ASSERT_NEAR(full.matrix(0, 0), 1, 1e-14);
    ASSERT_NEAR(full.matrix.col(0).sum(), 1, 1e-14);
    ASSERT_NEAR(full.matrix(31, 31), 1, 1e-14);
    ASSERT_NEAR(full.matrix.col(31).sum(), 1, 1e-14);
}

TEST(build_swap_matrix, reduces_to_path_model) {
    for (int L = 3; L <= 6; L++) {
        SwapMatrix m = build_swap_matrix(EnsembleSpec::uncorrelated(LocalStructure::path_graph((size_t)L), 2));
        Eigen::MatrixXd reduced = path1d::reduced_matrix({L, 2, 1});
        for (int i = 0; i <= L; i++) {
            for (int j = 0; j <= L; j++) {
                uint64_t bi = (uint64_t{1} << i) - 1;
                uint64_t bj = (uint64_t{1} << j) - 1;
                ASSERT_NEAR(m.matrix((Eigen::Index)bi, (Eigen::Index)bj), reduced(i, j), 1e-15);
            }
        }
    }
}

TEST(build_swap_matrix, rejects) {
    ASSERT_THROW(build_swap_matrix(EnsembleSpec::uncorrelated(LocalStructure::path_graph(15), 2)), CapExceededError);
    LocalStructure s = LocalStructure::path_graph(3);
    ASSERT_THROW(
        build_swap_matrix(EnsembleSpec::markov(s, {1, 0}, {{1, 0}, {0, 1}}, 2)), std::invalid_argument);
    ASSERT_THROW(build_swap_matrix(EnsembleSpec(s, Uncorrelated{{{1, 0}}}, 2)), std::invalid_argument);
}

TEST(hs_orthonormal_form, symmetric_for_uncorrelated) {
    SwapMatrix m = build_swap_matrix(EnsembleSpec::uncorrelated(LocalStructure::complete_graph(4), 3));
    Eigen::MatrixXd o = hs_orthonormal_form(m);
    ASSERT_LE((o - o.transpose()).cwiseAbs().maxCoeff(), 1e-13);
    // Same spectrum as the region-basis matrix.
    Eigen::VectorXcd ev1 = m.matrix.eigenvalues();
    Eigen::VectorXcd ev2 = o.eigenvalues();
    std::vector<double> a, b;
    for (Eigen::Index i = 0; i < ev1.size(); i++) {
        a.push_back(ev1[i].real());
        b.push_back(ev2[i].real());
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (size_t i = 0; i < a.size(); i++) {
        ASSERT_NEAR(a[i], b[i], 1e-12);
    }
}

TEST(hs_orthonormal_form, matches_gram_orthonormalization) {
    size_t n = 3;
    int d = 2;
    SwapMatrix m = build_swap_matrix(EnsembleSpec::sweep(LocalStructure::path_graph(n), {1, 0}, d));
    Eigen::MatrixXd g(8, 8);
    for (uint64_t a = 0; a < 8; a++) {
        for (uint64_t b = 0; b < 8; b++) {
            g((Eigen::Index)a, (Eigen::Index)b) = std::pow((double)d, -std::popcount(a ^ b));
        }
    }
    // Any factor C with C^T C = G gives C M C^{-1} up to an orthogonal change of basis.
    Eigen::MatrixXd c = g.llt().matrixU();
    Eigen::MatrixXd ref = c * m.matrix * c.inverse();
    Eigen::JacobiSVD<Eigen::MatrixXd> s1(ref), s2(hs_orthonormal_form(m));
    ASSERT_LE((s1.singularValues() - s2.singularValues()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(fixed_space_dimension, appendix_rules) {
    ASSERT_EQ(fixed_space_dimension(local_swap_matrix(4, Region::from_sites(4, {0, 1}), 2)), 8);
    ASSERT_EQ(fixed_space_dimension(build_swap_matrix(EnsembleSpec::uncorrelated(LocalStructure::path_graph(6), 2))), 2);
    LocalStructure three = LocalStructure::from_site_lists(6, {{0, 1}, {2, 3}, {4, 5}});
    ASSERT_EQ(fixed_space_dimension(build_swap_matrix(EnsembleSpec::uncorrelated(three, 2))), 8);
}

TEST(spectral_gap_swap, examples) {
    ASSERT_NEAR(spectral_gap_swap(local_swap_matrix(4, Region::from_sites(4, {1, 2}), 2)), 1, 1e-12);
    SwapMatrix m = build_swap_matrix(EnsembleSpec::uncorrelated(LocalStructure::path_graph(3), 2));
    ASSERT_NEAR(spectral_gap_swap(m), 0.3, 1e-12);
    for (int n = 4; n <= 8; n++) {
        SwapMatrix p = build_swap_matrix(EnsembleSpec::uncorrelated(LocalStructure::path_graph((size_t)n), 2));
        ASSERT_NEAR(spectral_gap_swap(p), path1d::spectral_gap_1d({n, 2, 1}), 1e-10);
    }
}

TEST(spectral_gap_swap, ambiguous_rank_is_reported) {
    SwapMatrix m = local_swap_matrix(3, Region::from_sites(3, {0, 1}), 2);
    // Perturb a fixed column so that a singular value of M - I lands near the tolerance.
    m.matrix(0, 0) += 1e-9;
    ASSERT_THROW(fixed_space_dimension(m), AmbiguousRankError);
}

TEST(fixed_space_dimension, every_single_region) {
    for (size_t n = 1; n <= 7; n++) {
        for (uint64_t r = 1; r < (uint64_t{1} << n); r++) {
            Region local(n, r);
            SwapMatrix m = build_swap_matrix(EnsembleSpec::uncorrelated(LocalStructure(n, {local}), 2));
            ASSERT_EQ(fixed_space_dimension(m), uint64_t{1} << (n - local.size() + 1)) << local.str();
        }
    }
}
