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

#ifndef LRQC_PATH1D_H
#define LRQC_PATH1D_H

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace lrqc::path1d {

// Exact solution of the uniform random-edge model on a path of L sites,
// restricted to the invariant span of the nested swaps T_{0..i-1}, i = 0..L.
// Basis vector i is the swap over the first i sites.

struct PathParams {
    int L;  ///< number of sites, >= 2
    int d;  ///< local dimension, >= 2
    int l;  ///< initial cut: the initial swap covers sites 0..l-1
};

struct SpectralData {
    std::vector<double> eigenvalues;  ///< index 0 and L are the unit eigenvalues
    std::vector<double> gaps;         ///< Delta_h for h = 1..L-1
    double gap;                       ///< min_h Delta_h
};

/// Reduced (L+1)x(L+1) matrix: columns 0 and L are fixed, interior column i
/// holds a = (L-2)/(L-1) on the diagonal and b = N_d/(L-1) at i +- 1.
Eigen::MatrixXd reduced_matrix(const PathParams &p);

/// Eigenvalues 1, a + 2b cos(pi h / L) for h = 1..L-1, and 1.
SpectralData spectrum(const PathParams &p);

/// Delta_h = (1 - 2 N_d cos(pi h / L)) / (L - 1).
double mode_gap(const PathParams &p, int h);

/// (1 - 2 N_d cos(pi / L)) / (L - 1).
double spectral_gap_1d(const PathParams &p);

/// (d^{L-l} + d^l) / (d^L + 1).
double purity_infinity_1d(const PathParams &p);

/// Closed-form P_k: P_inf plus a sum over odd modes. Returns exactly 1 for
/// l = 0 or l = L.
double purity_exact(const PathParams &p, size_t k);

/// (1 - e_p/(L-1))^k, valid while the walk cannot reach the fixed ends.
/// Throws std::invalid_argument for k > min(l, L-l).
double short_time_purity(const PathParams &p, size_t k);

/// Right eigenvector for eigenvalue index h in 0..L; interior ones are
/// normalized as N_h (sin(pi h j / L) terms) with boundary corrections.
Eigen::VectorXd eigenvector(const PathParams &p, int h);

struct ConvergenceSteps {
    size_t exact;     ///< smallest k with |P_k - P_inf| <= epsilon
    double analytic;  ///< (L / e_p) (log(C / epsilon) + log l)
};

/// Doubling search to bracket the first k meeting the tolerance, then
/// bisection. Requires 1 <= l <= L-1 and epsilon > 0.
ConvergenceSteps steps_to_converge(const PathParams &p, double epsilon, double constant_c = 1.0);

/// max over k in [0, k_max] of |P_k - P_inf| e^{k Delta} / l: the smallest C
/// for which |P_k - P_inf| <= l e^{-k Delta} C holds on that window.
double empirical_convergence_constant(const PathParams &p, size_t k_max);

}  // namespace lrqc::path1d

#endif
