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

// Acceptance checks. Prints one PASS/FAIL line per criterion.
//
//   lrqc_acceptance            run every criterion
//   lrqc_acceptance --only 7   run criterion 7 alone

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lrqc/bounds.h"
#include "lrqc/cli/app.h"
#include "lrqc/ensemble.h"
#include "lrqc/fixed_space.h"
#include "lrqc/moments.h"
#include "lrqc/monte_carlo.h"
#include "lrqc/path1d.h"
#include "lrqc/random.h"
#include "lrqc/swap_dynamics.h"
#include "lrqc/swap_matrix.h"
#include "lrqc/swap_vector.h"
#include "oracles.h"

using namespace lrqc;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

uint64_t random_region_bits(RandomStream &rng, size_t n) {
    uint64_t mask = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    uint64_t b = 0;
    while (b == 0) {
        b = rng() & mask;
    }
    return b;
}

uint64_t random_small_region(RandomStream &rng, size_t n, size_t max_size) {
    size_t size = 1 + rng() % std::min(max_size, n);
    uint64_t b = 0;
    while ((size_t)std::popcount(b) < size) {
        b |= uint64_t{1} << (rng() % n);
    }
    return b;
}

// Union-find over sites; returns the components as bitmasks (sites no region
// touches are left out) and the residual mask.
std::pair<std::vector<uint64_t>, uint64_t> components_oracle(size_t n, const std::vector<uint64_t> &regions) {
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    uint64_t covered = 0;
    for (uint64_t r : regions) {
        covered |= r;
        size_t first = (size_t)std::countr_zero(r);
        for (size_t s = 0; s < n; s++) {
            if ((r >> s) & 1) {
                parent[find(s)] = find(first);
            }
        }
    }
    std::vector<uint64_t> comps;
    for (size_t root = 0; root < n; root++) {
        uint64_t c = 0;
        for (size_t s = 0; s < n; s++) {
            if (((covered >> s) & 1) && find(s) == root) {
                c |= uint64_t{1} << s;
            }
        }
        if (c) {
            comps.push_back(c);
        }
    }
    uint64_t full = (uint64_t{1} << n) - 1;
    return {comps, full & ~covered};
}

double p_infinity_oracle(size_t n, const std::vector<uint64_t> &regions, uint64_t initial, int d) {
    double p = 1;
    for (uint64_t c : components_oracle(n, regions).first) {
        int in = std::popcount(c & initial), size = std::popcount(c);
        p *= (oracle::ipow(d, size - in) + oracle::ipow(d, in)) / (oracle::ipow(d, size) + 1);
    }
    return p;
}

Eigen::MatrixXcd random_matrix(RandomStream &rng, Eigen::Index dim) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd x(dim, dim);
    for (Eigen::Index i = 0; i < dim * dim; i++) {
        x.data()[i] = {g(rng), g(rng)};
    }
    return x;
}

// d^{-|region|} 1_region ⊗ Tr_region(X), by digit loops.
Eigen::MatrixXcd partial_trace_map_oracle(const Eigen::MatrixXcd &x, size_t n, int d, uint64_t region) {
    Eigen::Index dim = x.rows();
    std::vector<Eigen::Index> place(n);
    for (size_t s = 0; s < n; s++) {
        place[s] = s == 0 ? 1 : place[s - 1] * d;
    }
    auto strip = [&](Eigen::Index i) {
        Eigen::Index out = 0;
        for (size_t s = 0; s < n; s++) {
            if (!((region >> s) & 1)) {
                out += (i / place[s] % d) * place[s];
            }
        }
        return out;
    };
    int k = std::popcount(region);
    Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        for (Eigen::Index j = 0; j < dim; j++) {
            if (i - strip(i) != j - strip(j)) {
                continue;
            }
            std::complex<double> acc = 0;
            for (Eigen::Index a = 0; a < dim; a++) {
                if (strip(a) == 0) {
                    acc += x(strip(i) + a, strip(j) + a);
                }
            }
            y(i, j) = acc / oracle::ipow(d, k);
        }
    }
    return y;
}

// ---------------------------------------------------------------------------

Outcome swap_vs_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    size_t points = 0, within = 0;
    std::string worst;
    double worst_z = 0;
    uint64_t cell = 0;
    for (size_t n = 3; n <= 5; n++) {
        for (const char *graph : {"path", "complete"}) {
            LocalStructure s = std::string(graph) == "path" ? LocalStructure::path_graph(n)
                                                             : LocalStructure::complete_graph(n);
            Markov chain = nearest_neighbor_markov(s, true);
            for (EnsembleSpec spec : {EnsembleSpec::uncorrelated(s, 2),
                                      EnsembleSpec::markov(s, chain.initial, chain.transition, 2),
                                      EnsembleSpec::sweep(s, identity_order(s.num_regions()), 2)}) {
                Region a = Region::interval(n, 0, n / 2);
                std::vector<double> exact = purity_trajectory(a, spec, 8);
                for (size_t k = 1; k <= 8; k++) {
                    MomentEstimate e = mc_average_purity(spec, a, k, {mix64(1000 + cell++), 10000, 0});
                    double diff = std::abs(e.mean - exact[k]);
                    double z = e.std_error > 0 ? diff / e.std_error : (diff < 1e-12 ? 0 : INFINITY);
                    points++;
                    within += z <= 3;
                    if (z > worst_z) {
                        worst_z = z;
                        worst = fmt("n=%zu %s %s k=%zu", n, graph, spec.policy_name().c_str(), k);
                    }
                }
            }
        }
    }
    double secs = seconds_since(t0);
    bool pass = within >= 0.99 * (double)points && secs <= 600;
    return {pass, fmt("%zu/%zu points within 3 stderr, worst z=%.2f (%s), %.1fs", within, points, worst_z,
                      worst.c_str(), secs)};
}

Outcome single_gate_constant() {
    bool pass = true;
    std::string detail;
    for (int d : {2, 3}) {
        EnsembleSpec spec = EnsembleSpec::uncorrelated(LocalStructure::from_site_lists(2, {{0, 1}}), d);
        MomentEstimate e = mc_average_purity(spec, Region::from_sites(2, {0}), 1, {mix64(2000 + d), 10000, 0});
        double expected = 2.0 * d / (d * d + 1.0);
        bool ok = std::abs(e.mean - expected) <= 3 * e.std_error;
        pass &= ok;
        detail += fmt("%sd=%d mc=%.5f±%.5f expected=%.5f", detail.empty() ? "" : "; ", d, e.mean, e.std_error,
                      expected);
    }
    return {pass, detail};
}

Outcome path_exact_formula() {
    double worst = 0;
    size_t cases = 0;
    for (int d : {2, 3}) {
        for (int L = 2; L <= 12; L++) {
            for (int l = 1; l < L; l++) {
                std::vector<double> ref = oracle::path_purity_by_power(L, d, l, 200);
                for (size_t k = 0; k <= 200; k++) {
                    worst = std::max(worst, std::abs(path1d::purity_exact({L, d, l}, k) - ref[k]));
                    cases++;
                }
            }
        }
    }
    return {worst <= 1e-10, fmt("max |exact - matrix power| = %.3g over %zu cases", worst, cases)};
}

Outcome path_short_time() {
    double worst = 0;
    size_t cases = 0;
    for (int L : {6, 8, 10}) {
        for (int d : {2, 3}) {
            double ep = (d - 1.0) * (d - 1.0) / (d * d + 1.0);
            for (int l = 1; l < L; l++) {
                for (int k = 0; k <= std::min(l, L - l); k++) {
                    double formula = std::pow(1 - ep / (L - 1), k);
                    worst = std::max(worst, std::abs(formula - path1d::purity_exact({L, d, l}, (size_t)k)));
                    worst = std::max(worst, std::abs(formula - path1d::short_time_purity({L, d, l}, (size_t)k)));
                    cases++;
                }
            }
        }
    }
    return {worst <= 1e-12, fmt("max deviation %.3g over %zu cases", worst, cases)};
}

Outcome path_spectrum() {
    double eig_err = 0, gap_err = 0, full_gap_err = 0, min_margin = INFINITY;
    for (int d = 2; d <= 5; d++) {
        double nd = d / (d * d + 1.0), ep = (d - 1.0) * (d - 1.0) / (d * d + 1.0);
        for (int L = 2; L <= 16; L++) {
            path1d::PathParams p{L, d, 1};
            double a = (L - 2.0) / (L - 1), b = nd / (L - 1);
            Eigen::MatrixXd r = Eigen::MatrixXd::Zero(L + 1, L + 1);
            r(0, 0) = r(L, L) = 1;
            for (int i = 1; i < L; i++) {
                r(i, i) = a;
                r(i - 1, i) = b;
                r(i + 1, i) = b;
            }
            Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(r).eigenvalues();
            std::vector<double> numeric;
            for (Eigen::Index i = 0; i < ev.size(); i++) {
                numeric.push_back(ev[i].real());
            }
            std::vector<double> closed = path1d::spectrum(p).eigenvalues;
            std::sort(numeric.begin(), numeric.end());
            std::sort(closed.begin(), closed.end());
            for (size_t i = 0; i < numeric.size(); i++) {
                eig_err = std::max(eig_err, std::abs(numeric[i] - closed[i]));
            }
            double formula = (1 - 2 * nd * std::cos(std::numbers::pi / L)) / (L - 1);
            double gap = path1d::spectral_gap_1d(p);
            gap_err = std::max(gap_err, std::abs(gap - formula));
            // Second largest eigenvalue of the numerical spectrum.
            gap_err = std::max(gap_err, std::abs((1 - numeric[numeric.size() - 3]) - formula));
            min_margin = std::min(min_margin, gap - ep / L);
            if (L <= 10 && d <= 3) {
                SwapMatrix m = build_swap_matrix(EnsembleSpec::uncorrelated(LocalStructure::path_graph(L), d));
                full_gap_err = std::max(full_gap_err, std::abs(spectral_gap_swap(m) - formula));
            }
        }
    }
    bool pass = eig_err <= 1e-10 && gap_err <= 1e-10 && full_gap_err <= 1e-10 && min_margin >= 0;
    return {pass, fmt("eigenvalue err %.3g, gap err %.3g, full-space gap err %.3g, min(gap - e_p/L) = %.4g",
                      eig_err, gap_err, full_gap_err, min_margin)};
}

Outcome fixed_point_purity() {
    struct Case {
        size_t n;
        std::vector<std::vector<size_t>> regions;
    };
    std::vector<Case> cases{
        {2, {{0, 1}}},
        {4, {{0, 1}, {1, 2}, {2, 3}}},
        {6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}},
        {8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}},
        {5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
        {6, {{0, 1, 2}, {2, 3, 4}, {4, 5}}},
        {5, {{0, 1}, {1, 2}, {3, 4}}},
        {7, {{0, 1}, {1, 2}, {4, 5}}},
        {8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}},
        {8, {{0, 1, 2}, {5, 6}}},
    };
    RandomStream rng(6);
    size_t runs = 0, permutations = 0;
    double worst = 0;
    std::string worst_case;
    for (const Case &c : cases) {
        LocalStructure s = LocalStructure::from_site_lists(c.n, c.regions);
        std::vector<uint64_t> bits = oracle::region_bits(s);
        std::vector<std::vector<size_t>> orders;
        std::vector<size_t> order = identity_order(s.num_regions());
        if (s.num_regions() <= 5) {
            do {
                orders.push_back(order);
            } while (std::next_permutation(order.begin(), order.end()));
        } else {
            orders.push_back(order);
            orders.push_back(expanding_order(s.num_regions()));
            for (int i = 0; i < 6; i++) {
                std::shuffle(order.begin(), order.end(), rng);
                orders.push_back(order);
            }
        }
        std::vector<Region> initials{Region::interval(c.n, 0, c.n / 2), Region::from_sites(c.n, {0})};
        if (c.n >= 4) {
            initials.push_back(Region::from_sites(c.n, {1, c.n - 1}));
        }
        for (const Region &a : initials) {
            double expected = p_infinity_oracle(c.n, bits, a.bits(), 2);
            auto check = [&](const EnsembleSpec &spec, size_t k_max, const char *label) {
                std::vector<double> p = purity_trajectory(a, spec, k_max);
                double dev = std::abs(p.back() - expected);
                dev = std::max(dev, std::abs(purity_infinity(a, s, 2) - expected));
                if (dev > worst) {
                    worst = dev;
                    worst_case = fmt("n=%zu %s A=%s", c.n, label, a.str().c_str());
                }
                runs++;
            };
            check(EnsembleSpec::uncorrelated(s, 2), 6000, "uncorrelated");
            for (const auto &o : orders) {
                check(EnsembleSpec::sweep(s, o, 2), 400, "sweep");
                permutations++;
            }
        }
    }
    return {worst <= 1e-8, fmt("%zu trajectories (%zu sweep orders), max |P_k - P_inf| = %.3g%s%s", runs,
                               permutations, worst, worst_case.empty() ? "" : " at ", worst_case.c_str())};
}

Outcome fixed_space_dimensions() {
    RandomStream rng(7);
    size_t checked = 0, wrong = 0;
    std::string first_wrong;
    auto compare = [&](size_t n, const std::vector<uint64_t> &regions, uint64_t predicted, const char *rule) {
        std::vector<Region> rs;
        for (uint64_t b : regions) {
            rs.emplace_back(n, b);
        }
        size_t measured = 0;
        try {
            measured = fixed_space_dimension(build_swap_matrix(EnsembleSpec::uncorrelated(LocalStructure(n, rs), 2)),
                                             1e-9);
        } catch (const std::exception &) {
            measured = SIZE_MAX;
        }
        checked++;
        if (measured != predicted) {
            wrong++;
            if (first_wrong.empty()) {
                first_wrong = fmt(" first mismatch: %s n=%zu predicted %llu", rule, n, (unsigned long long)predicted);
            }
        }
    };
    for (size_t n = 1; n <= 8; n++) {
        uint64_t all = (uint64_t{1} << n) - 1;
        for (uint64_t r = 1; r <= all; r++) {
            compare(n, {r}, uint64_t{1} << (n - std::popcount(r) + 1), "single");
        }
        auto pair = [&](uint64_t a, uint64_t b) {
            if (a & b) {
                compare(n, {a, b}, uint64_t{1} << (n - std::popcount(a | b) + 1), "pair-overlap");
            } else {
                compare(n, {a, b}, uint64_t{1} << (n - std::popcount(a) - std::popcount(b) + 2), "pair-disjoint");
            }
        };
        if (n <= 4) {
            for (uint64_t a = 1; a <= all; a++) {
                for (uint64_t b = a + 1; b <= all; b++) {
                    pair(a, b);
                }
            }
        } else {
            for (int i = 0; i < 150; i++) {
                uint64_t a = random_region_bits(rng, n), b = random_region_bits(rng, n);
                if (a != b) {
                    pair(a, b);
                }
            }
        }
        for (int i = 0; i < 60; i++) {
            std::vector<uint64_t> regions(1 + rng() % 4);
            for (uint64_t &r : regions) {
                r = random_small_region(rng, n, 3);
            }
            auto [comps, residual] = components_oracle(n, regions);
            compare(n, regions, uint64_t{1} << (comps.size() + std::popcount(residual)), "components");
        }
    }
    return {wrong == 0, fmt("%zu configurations, %zu mismatches%s", checked, wrong, first_wrong.c_str())};
}

Outcome first_moment_suite() {
    size_t n = 4;
    int d = 2;
    Eigen::Index dim = 16;
    RandomStream rng(8);
    double merge_err = 0, oracle_err = 0;
    size_t merges = 0;
    for (uint64_t a = 1; a < 16; a++) {
        for (uint64_t b = 1; b < 16; b++) {
            if (!(a & b)) {
                continue;
            }
            Eigen::MatrixXcd x = random_matrix(rng, dim);
            Region ra(n, a), rb(n, b);
            Eigen::MatrixXcd lhs = exact_first_moment_map(exact_first_moment_map(x, n, d, rb), n, d, ra);
            Eigen::MatrixXcd rhs = exact_first_moment_map(x, n, d, ra | rb);
            merge_err = std::max(merge_err, (lhs - rhs).cwiseAbs().maxCoeff());
            oracle_err = std::max(oracle_err, (rhs - partial_trace_map_oracle(x, n, d, a | b)).cwiseAbs().maxCoeff());
            merges++;
        }
    }

    std::vector<LocalStructure> coverings{
        LocalStructure::path_graph(n),
        LocalStructure::complete_graph(n),
        LocalStructure::from_site_lists(n, {{0, 1, 2}, {2, 3}}),
        LocalStructure::from_site_lists(n, {{0, 1}, {2, 3}, {1, 2}}, {0.6, 0.3, 0.1}),
    };
    double limit_err = 0;
    size_t bound_checks = 0, bound_violations = 0;
    double tightest = INFINITY;
    for (const LocalStructure &s : coverings) {
        Eigen::MatrixXcd x = random_matrix(rng, dim);
        Eigen::MatrixXcd limit = x.trace() / (double)dim * Eigen::MatrixXcd::Identity(dim, dim);
        Eigen::MatrixXcd y = x;
        for (int k = 0; k < 400; k++) {
            y = first_moment_mixture(y, s, d);
        }
        limit_err = std::max(limit_err, (y - limit).cwiseAbs().maxCoeff());

        // Random density matrix omega and Hermitian observable A.
        Eigen::MatrixXcd g = random_matrix(rng, dim);
        Eigen::MatrixXcd omega = g * g.adjoint();
        omega /= omega.trace().real();
        Eigen::MatrixXcd h = random_matrix(rng, dim);
        Eigen::MatrixXcd obs = (h + h.adjoint()) / 2.0;
        double q_min = *std::min_element(s.weights().begin(), s.weights().end());
        auto phi = [&](const Eigen::MatrixXcd &m) {
            return (omega * m).trace().real();
        };
        double phi_inf = phi(obs.trace() / (double)dim * Eigen::MatrixXcd::Identity(dim, dim));
        std::vector<double> dev;
        Eigen::MatrixXcd ak = obs;
        for (int k = 0; k < 800; k++) {
            dev.push_back(std::abs(phi(ak) - phi_inf));
            ak = first_moment_mixture(ak, s, d);
        }
        for (double eps : {1e-2, 1e-4, 1e-6, 1e-8, 1e-10}) {
            double bound = first_moment_convergence_bound(omega.norm(), obs.norm(), eps, q_min, s.num_regions()).value;
            size_t k = dev.size();
            while (k > 0 && dev[k - 1] <= eps) {
                k--;
            }
            bound_checks++;
            if ((double)k > bound) {
                bound_violations++;
            }
            tightest = std::min(tightest, bound - (double)k);
        }
    }
    bool pass = merge_err <= 1e-12 && oracle_err <= 1e-12 && limit_err <= 1e-12 && bound_violations == 0;
    return {pass, fmt("merge err %.3g over %zu pairs (oracle err %.3g), covering limit err %.3g, "
                      "step counts within bound %zu/%zu (min slack %.1f steps)",
                      merge_err, merges, oracle_err, limit_err, bound_checks - bound_violations, bound_checks,
                      tightest)};
}

Outcome correlated_gap_trend() {
    std::vector<double> gaps;
    std::string values;
    for (size_t L = 4; L <= 10; L++) {
        EnsembleSpec spec = EnsembleSpec::sweep(LocalStructure::path_graph(L), expanding_order(L - 1), 2);
        gaps.push_back(spectral_gap_swap(build_swap_matrix(spec)));
        values += fmt("%s%.4f", values.empty() ? "" : ",", gaps.back());
    }
    bool monotone = true;
    for (size_t i = 1; i < gaps.size(); i++) {
        monotone &= gaps[i] > gaps[i - 1];
    }
    bool near = std::abs(gaps.back() - 0.36) <= 0.08;
    return {monotone && near, fmt("gaps L=4..10: %s; monotone increasing: %s; |gap(10) - 0.36| = %.4f",
                                  values.c_str(), monotone ? "yes" : "no", std::abs(gaps.back() - 0.36))};
}

Outcome algebraic_properties() {
    size_t checks = 0, failures = 0;
    std::string first_failure;
    auto expect = [&](bool ok, const std::string &what) {
        checks++;
        if (!ok) {
            failures++;
            if (first_failure.empty()) {
                first_failure = "; first failure: " + what;
            }
        }
    };
    auto as_terms = [](const SwapVector &v) {
        oracle::Terms t;
        for (auto [b, c] : v.terms()) {
            t[b] = c;
        }
        return t;
    };
    auto terms_diff = [](const oracle::Terms &a, const oracle::Terms &b) {
        double m = 0;
        for (auto [k, v] : a) {
            auto it = b.find(k);
            m = std::max(m, std::abs(v - (it == b.end() ? 0 : it->second)));
        }
        for (auto [k, v] : b) {
            if (!a.contains(k)) {
                m = std::max(m, std::abs(v));
            }
        }
        return m;
    };
    // Normalized two-copy trace: Tr(T_A) / d^{2n} = d^{-|A|}.
    auto trace = [](const SwapVector &v, int d) {
        double t = 0;
        for (auto [b, c] : v.terms()) {
            t += c * std::pow(d, -std::popcount(b));
        }
        return t;
    };
    auto check_map = [&](const SwapVector &v, const Region &local, int d, const std::string &label) {
        SwapVector once = apply_local(v, local, d);
        expect(once.max_abs_diff(apply_local(once, local, d)) <= 1e-12, "idempotence " + label);
        expect(terms_diff(as_terms(once), oracle::local_map(as_terms(v), local.bits(), d)) <= 1e-12,
               "oracle " + label);
        expect(complement_involution(once).max_abs_diff(apply_local(complement_involution(v), local, d)) <= 1e-12,
               "complement " + label);
        expect(std::abs(trace(once, d) - trace(v, d)) <= 1e-12 * std::max(1.0, std::abs(trace(v, d))),
               "trace " + label);
    };
    auto check_alpha = [&](const Region &target, const Region &local, int d) {
        if (!in_boundary(local, target)) {
            return;
        }
        AlphaPair p = alpha_coefficients(target, local, d);
        expect(p.plus > 0 && p.minus > 0 && p.plus + p.minus < 1, "alpha " + target.str() + " " + local.str());
    };

    for (size_t n = 1; n <= 6; n++) {
        uint64_t all = (uint64_t{1} << n) - 1;
        for (uint64_t a = 0; a <= all; a++) {
            for (uint64_t b = 0; b <= all; b++) {
                expect(sym_diff(Region(n, a), Region(n, b)).bits() == (a ^ b), "group law");
            }
        }
        for (int d : {2, 3}) {
            for (uint64_t local = 1; local <= all; local++) {
                Region lr(n, local);
                expect(apply_local(SwapVector::single(Region::empty(n)), lr, d)
                               .max_abs_diff(SwapVector::single(Region::empty(n))) == 0,
                       "unital");
                for (uint64_t target = 0; target <= all; target++) {
                    Region tr(n, target);
                    check_map(SwapVector::single(tr), lr, d, "n=" + std::to_string(n) + " " + tr.str() + lr.str());
                    check_alpha(tr, lr, d);
                }
            }
        }
    }
    // Dense two-copy checks: swaps multiply as the group law says, and the
    // second-moment projections are unital and trace preserving.
    RandomStream rng(10);
    for (size_t n = 1; n <= 3; n++) {
        uint64_t all = (uint64_t{1} << n) - 1;
        for (uint64_t a = 0; a <= all; a++) {
            for (uint64_t b = 0; b <= all; b++) {
                Eigen::MatrixXd lhs = dense_swap_operator(n, 2, Region(n, a)) * dense_swap_operator(n, 2, Region(n, b));
                expect((lhs - dense_swap_operator(n, 2, Region(n, a ^ b))).cwiseAbs().maxCoeff() == 0,
                       "dense group law");
            }
        }
        Eigen::Index dim = (Eigen::Index)1 << (2 * n);
        for (uint64_t r = 1; r <= all; r++) {
            Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
            expect((exact_second_moment_projection(id, n, 2, Region(n, r)) - id).cwiseAbs().maxCoeff() <= 1e-12,
                   "dense unital");
            Eigen::MatrixXcd x = random_matrix(rng, dim);
            Eigen::MatrixXcd y = exact_second_moment_projection(x, n, 2, Region(n, r));
            expect(std::abs(y.trace() - x.trace()) <= 1e-10, "dense trace");
            expect((exact_second_moment_projection(y, n, 2, Region(n, r)) - y).cwiseAbs().maxCoeff() <= 1e-10,
                   "dense idempotence");
        }
    }

    size_t randomized = 0;
    for (; randomized < 1000; randomized++) {
        size_t n = 7 + rng() % 58;
        int d = 2 + (int)(rng() % 4);
        SwapVector v(n);
        size_t terms = 1 + rng() % 4;
        for (size_t i = 0; i < terms; i++) {
            v.add(rng() & (n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1),
                  std::uniform_real_distribution<double>(-1, 1)(rng));
        }
        Region local(n, random_small_region(rng, n, 4));
        check_map(v, local, d, "random n=" + std::to_string(n));
        for (auto [b, c] : v.terms()) {
            check_alpha(Region(n, b), local, d);
        }
        Region a(n, rng() & (n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1));
        Region b(n, rng() & (n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1));
        expect(sym_diff(sym_diff(a, b), b) == a, "random group law");
    }
    return {failures == 0, fmt("%zu checks (exhaustive n<=6, %zu randomized n in 7..64), %zu failures%s", checks,
                               randomized, failures, first_failure.c_str())};
}

Outcome t_design_sanity() {
    size_t n = 6, k = 120;
    int d = 2;
    Region omega = Region::from_sites(n, {0, 1});
    EnsembleSpec spec = EnsembleSpec::uncorrelated(LocalStructure::path_graph(n), d);
    std::vector<double> p = purity_trajectory(omega, spec, k);
    double eps = std::abs(p.back() - purity_infinity(omega, spec.structure(), d));
    double alpha = (double)(n - omega.size()) / (double)omega.size() - 1;
    double delta = t_design_delta(omega.size(), alpha, 1, d, eps).value;
    DesignDistance dist = mc_design_distance(spec, omega, k, 1, {mix64(11), 10000, 0});
    double err = dist.circuit_error + dist.haar_error;
    return {dist.distance + 3 * err <= delta,
            fmt("k=%zu D_1 = %.5f ± %.5f (circuit %.5f, Haar %.5f), measured eps = %.3g, delta = %.5f", k,
                dist.distance, err, dist.circuit_error, dist.haar_error, eps, delta)};
}

std::string slurp(const std::filesystem::path &path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Outcome cli_reproducibility() {
    namespace fs = std::filesystem;
    fs::path configs = fs::path(LRQC_SOURCE_DIR) / "configs";
    fs::path tmp = fs::temp_directory_path() / "lrqc_acceptance_repro";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    auto run = [](std::vector<std::string> args, std::string &out) {
        args.insert(args.begin(), "lrqc");
        std::vector<const char *> argv;
        for (const auto &a : args) {
            argv.push_back(a.c_str());
        }
        std::ostringstream o, e;
        int code = cli::run_cli((int)argv.size(), argv.data(), o, e);
        out = o.str();
        return code;
    };
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(configs)) {
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    size_t runs = 0, mismatches = 0;
    std::string first;
    for (const fs::path &cfg : files) {
        std::string stem = cfg.stem().string();
        std::string command = stem.substr(0, stem.find('_'));
        if (command == "markov" || command == "sweep") {
            command = "evolve";
        }
        std::vector<std::string> commands{command};
        if (cfg.stem() == "markov_complete5") {
            commands.push_back("oracle");
        }
        for (const std::string &cmd : commands) {
            for (const char *format : {"csv", "json"}) {
                for (const char *seed : {"3"}) {
                    fs::path out = tmp / (stem + "." + cmd + "." + format);
                    std::vector<std::string> args{cmd, "--config", cfg.string(), "--seed", seed,
                                                  "--out", out.string(), "--format", format};
                    std::string o1, o2;
                    int c1 = run(args, o1);
                    std::string f1 = slurp(out), m1 = slurp(out.string() + ".meta.json");
                    int c2 = run(args, o2);
                    std::string f2 = slurp(out), m2 = slurp(out.string() + ".meta.json");
                    std::string s1, s2;
                    std::vector<std::string> stdout_args{cmd, "--config", cfg.string(), "--seed", seed,
                                                         "--format", format};
                    int c3 = run(stdout_args, s1), c4 = run(stdout_args, s2);
                    runs += 2;
                    bool ok = c1 == 0 && c2 == 0 && c3 == 0 && c4 == 0 && !f1.empty() && f1 == f2 && m1 == m2 &&
                              !s1.empty() && s1 == s2;
                    if (!ok) {
                        mismatches++;
                        if (first.empty()) {
                            first = fmt("; first mismatch: %s %s --format %s", cmd.c_str(), stem.c_str(), format);
                        }
                    }
                }
            }
        }
    }
    fs::remove_all(tmp);
    return {mismatches == 0 && runs > 0,
            fmt("%zu repeated runs over %zu configs, %zu mismatches%s", runs, files.size(), mismatches, first.c_str())};
}

struct Criterion {
    int id;
    const char *name;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "swap dynamics vs Monte Carlo circuits", swap_vs_oracle},
    {2, "single-gate purity constant", single_gate_constant},
    {3, "1D exact purity vs matrix power", path_exact_formula},
    {4, "1D short-time purity", path_short_time},
    {5, "1D spectrum and gap", path_spectrum},
    {6, "fixed-point purity", fixed_point_purity},
    {7, "fixed-space dimensions", fixed_space_dimensions},
    {8, "first-moment maps", first_moment_suite},
    {9, "expanding-sweep gap trend", correlated_gap_trend},
    {10, "swap algebra properties", algebraic_properties},
    {11, "local t-design distance", t_design_sanity},
    {12, "CLI reproducibility", cli_reproducibility},
};

}  // namespace

int main(int argc, char **argv) {
    int only = 0;
    for (int i = 1; i < argc; i++) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
            return 2;
        }
    }
    bool all_pass = true;
    int ran = 0;
    for (const Criterion &c : kCriteria) {
        if (only && c.id != only) {
            continue;
        }
        ran++;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all_pass &= o.pass;
        std::printf("%s %2d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
    }
    if (ran == 0) {
        std::fprintf(stderr, "no criterion %d\n", only);
        return 2;
    }
    return all_pass ? 0 : 1;
}
