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

#include "lrqc/path1d.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lrqc::path1d {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const PathParams &p) {
    if (p.L < 2) {
        throw std::invalid_argument("path length L must be >= 2");
    }
    if (p.d < 2) {
        throw std::invalid_argument("local dimension d must be >= 2");
    }
    if (p.l < 0 || p.l > p.L) {
        throw std::invalid_argument("cut position l must be in 0..L");
    }
}

double swap_weight(int d) {
    return (double)d / ((double)d * d + 1);
}

double diag_weight(const PathParams &p) {
    return (double)(p.L - 2) / (p.L - 1);
}

double hop_weight(const PathParams &p) {
    return swap_weight(p.d) / (p.L - 1);
}

}  // namespace

Eigen::MatrixXd reduced_matrix(const PathParams &p) {
    validate(p);
    int L = p.L;
    double a = diag_weight(p);
    double b = hop_weight(p);
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(L + 1, L + 1);
    r(0, 0) = 1;
    r(L, L) = 1;
    for (int i = 1; i < L; i++) {
        r(i, i) = a;
        r(i - 1, i) = b;
        r(i + 1, i) = b;
    }
    return r;
}

double mode_gap(const PathParams &p, int h) {
    validate(p);
    if (h < 1 || h >= p.L) {
        throw std::invalid_argument("mode index h must be in 1..L-1");
    }
    return (1 - 2 * swap_weight(p.d) * std::cos(kPi * h / p.L)) / (p.L - 1);
}

SpectralData spectrum(const PathParams &p) {
    validate(p);
    SpectralData out;
    out.eigenvalues.assign(p.L + 1, 1.0);
    double a = diag_weight(p);
    double b = hop_weight(p);
    out.gap = 1;
    for (int h = 1; h < p.L; h++) {
        out.eigenvalues[h] = a + 2 * b * std::cos(kPi * h / p.L);
        out.gaps.push_back(mode_gap(p, h));
        out.gap = std::min(out.gap, out.gaps.back());
    }
    return out;
}

double spectral_gap_1d(const PathParams &p) {
    return mode_gap(p, 1);
}

double purity_infinity_1d(const PathParams &p) {
    validate(p);
    double d = p.d;
    return (std::pow(d, p.L - p.l) + std::pow(d, p.l)) / (std::pow(d, p.L) + 1);
}

double purity_exact(const PathParams &p, size_t k) {
    validate(p);
    if (p.l == 0 || p.l == p.L) {
        return 1.0;
    }
    double nd2 = 2 * swap_weight(p.d);
    double L = p.L;
    double sum = 0;
    for (int h = 1; h < p.L; h += 2) {
        double theta = kPi * h / L;
        double decay = std::pow(1 - mode_gap(p, h), (double)k);
        double weight = nd2 * std::sin(theta) / (nd2 * std::cos(theta) - 1) + 1 / std::tan(theta / 2);
        sum += decay * std::sin(theta * p.l) * weight;
    }
    return purity_infinity_1d(p) + 2 / L * sum;
}

double short_time_purity(const PathParams &p, size_t k) {
    validate(p);
    size_t window = (size_t)std::min(p.l, p.L - p.l);
    if (k > window) {
        throw std::invalid_argument(
            "short-time form only holds for k <= min(l, L-l) = " + std::to_string(window) + ", got k = " +
            std::to_string(k));
    }
    double ep = 1 - 2 * swap_weight(p.d);
    return std::pow(1 - ep / (p.L - 1), (double)k);
}

Eigen::VectorXd eigenvector(const PathParams &p, int h) {
    validate(p);
    int L = p.L;
    if (h < 0 || h > L) {
        throw std::invalid_argument("eigenvector index must be in 0..L");
    }
    Eigen::VectorXd psi = Eigen::VectorXd::Zero(L + 1);
    if (h == 0 || h == L) {
        psi[h] = 1;
        return psi;
    }
    double ratio = hop_weight(p) / mode_gap(p, h);
    auto c = [&](int j) { return std::sin(kPi * h * j / L); };
    double norm = 1 / std::sqrt(L / 2.0 + ratio * ratio * (c(1) * c(1) + c(L - 1) * c(L - 1)));
    for (int j = 1; j < L; j++) {
        psi[j] = norm * c(j);
    }
    psi[0] = -norm * ratio * c(1);
    psi[L] = -norm * ratio * c(L - 1);
    return psi;
}

ConvergenceSteps steps_to_converge(const PathParams &p, double epsilon, double constant_c) {
    validate(p);
    if (!(epsilon > 0)) {
        throw std::invalid_argument("epsilon must be positive");
    }
    if (p.l < 1 || p.l > p.L - 1) {
        throw std::invalid_argument("steps_to_converge needs 1 <= l <= L-1");
    }
    double p_inf = purity_infinity_1d(p);
    auto converged = [&](size_t k) { return std::abs(purity_exact(p, k) - p_inf) <= epsilon; };

    ConvergenceSteps out{0, 0};
    double ep = 1 - 2 * swap_weight(p.d);
    out.analytic = (p.L / ep) * (std::log(constant_c / epsilon) + std::log((double)p.l));
    if (converged(0)) {
        return out;
    }
    size_t lo = 0;
    size_t hi = 1;
    while (!converged(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > (size_t{1} << 40)) {
            throw std::runtime_error("purity did not converge within 2^40 steps");
        }
    }
    // Invariant: not converged at lo, converged at hi.
    while (hi - lo > 1) {
        size_t mid = lo + (hi - lo) / 2;
        if (converged(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    out.exact = hi;
    return out;
}

double empirical_convergence_constant(const PathParams &p, size_t k_max) {
    validate(p);
    if (p.l < 1 || p.l > p.L - 1) {
        throw std::invalid_argument("empirical constant needs 1 <= l <= L-1");
    }
    double gap = spectral_gap_1d(p);
    double p_inf = purity_infinity_1d(p);
    double worst = 0;
    for (size_t k = 0; k <= k_max; k++) {
        worst = std::max(worst, std::abs(purity_exact(p, k) - p_inf) * std::exp(gap * (double)k) / p.l);
    }
    return worst;
}

}  // namespace lrqc::path1d
