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

#include "lrqc/monte_carlo.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "lrqc/dense_state.h"
#include "lrqc/errors.h"
#include "lrqc/haar.h"

namespace lrqc {

namespace {

constexpr size_t kBlockSize = 64;

size_t thread_count(const OracleConfig &cfg, size_t blocks) {
    size_t t = cfg.threads;
    if (t == 0) {
        t = std::max<size_t>(1, std::thread::hardware_concurrency());
    }
    return std::max<size_t>(1, std::min(t, blocks));
}

void check_config(const OracleConfig &cfg) {
    if (cfg.samples < 2) {
        throw std::invalid_argument("Monte Carlo estimates need at least 2 samples");
    }
}

/// Runs body(block) for every block index, spread over threads.
void for_each_block(const OracleConfig &cfg, size_t blocks, const std::function<void(size_t)> &body) {
    size_t nt = thread_count(cfg, blocks);
    if (nt == 1) {
        for (size_t b = 0; b < blocks; b++) {
            body(b);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> workers;
    for (size_t w = 0; w < nt; w++) {
        workers.emplace_back([&]() {
            while (!failed.load()) {
                size_t b = next.fetch_add(1);
                if (b >= blocks) {
                    return;
                }
                try {
                    body(b);
                } catch (...) {
                    if (!failed.exchange(true)) {
                        failure = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    for (auto &w : workers) {
        w.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

template <typename T>
T pairwise_reduce(std::vector<T> &items, size_t lo, size_t hi) {
    if (hi - lo == 1) {
        return items[lo];
    }
    size_t mid = lo + (hi - lo) / 2;
    T a = pairwise_reduce(items, lo, mid);
    a += pairwise_reduce(items, mid, hi);
    return a;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::MatrixXcd tensor_power(const Eigen::MatrixXcd &m, size_t t) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (size_t i = 0; i < t; i++) {
        out = kron(out, m);
    }
    return out;
}

DenseState run_circuit(const EnsembleSpec &spec, size_t k, RandomStream &rng) {
    DenseState state(spec.structure().num_sites(), spec.d());
    for (const Region &r : sample_regions(spec, k, rng)) {
        uint64_t m = dense_dimension(r.size(), spec.d());
        state.apply_gate(r, haar_unitary(m, rng));
    }
    return state;
}

uint64_t design_dimension(size_t region_size, int d, size_t t) {
    if (t == 0) {
        throw std::invalid_argument("tensor power t must be >= 1");
    }
    return dense_dimension(region_size * t, d, kMaxDesignDim);
}

}  // namespace

double pairwise_sum(const double *values, size_t count) {
    if (count == 0) {
        return 0;
    }
    if (count <= 8) {
        double s = 0;
        for (size_t i = 0; i < count; i++) {
            s += values[i];
        }
        return s;
    }
    size_t half = count / 2;
    return pairwise_sum(values, half) + pairwise_sum(values + half, count - half);
}

MomentEstimate estimate_mean(const OracleConfig &cfg, const std::function<double(RandomStream &, size_t)> &f) {
    check_config(cfg);
    size_t n = cfg.samples;
    std::vector<double> values(n);
    size_t blocks = (n + kBlockSize - 1) / kBlockSize;
    for_each_block(cfg, blocks, [&](size_t b) {
        size_t end = std::min(n, (b + 1) * kBlockSize);
        for (size_t i = b * kBlockSize; i < end; i++) {
            RandomStream rng = sample_stream(cfg.seed, i);
            values[i] = f(rng, i);
        }
    });
    double mean = pairwise_sum(values.data(), n) / (double)n;
    std::vector<double> dev(n);
    for (size_t i = 0; i < n; i++) {
        dev[i] = (values[i] - mean) * (values[i] - mean);
    }
    double var = pairwise_sum(dev.data(), n) / (double)(n - 1);
    return {mean, std::sqrt(var / (double)n), n};
}

MatrixEstimate estimate_matrix_mean(
    const OracleConfig &cfg, Eigen::Index rows, Eigen::Index cols,
    const std::function<Eigen::MatrixXcd(RandomStream &, size_t)> &f) {
    check_config(cfg);
    size_t n = cfg.samples;
    size_t blocks = (n + kBlockSize - 1) / kBlockSize;
    std::vector<Eigen::MatrixXcd> sums(blocks);
    std::vector<Eigen::MatrixXd> squares(blocks);
    for_each_block(cfg, blocks, [&](size_t b) {
        Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(rows, cols);
        Eigen::MatrixXd sq = Eigen::MatrixXd::Zero(rows, cols);
        size_t end = std::min(n, (b + 1) * kBlockSize);
        for (size_t i = b * kBlockSize; i < end; i++) {
            RandomStream rng = sample_stream(cfg.seed, i);
            Eigen::MatrixXcd x = f(rng, i);
            if (x.rows() != rows || x.cols() != cols) {
                throw std::invalid_argument("sample matrix has the wrong shape");
            }
            s += x;
            sq += x.cwiseAbs2();
        }
        sums[b] = std::move(s);
        squares[b] = std::move(sq);
    });
    MatrixEstimate out;
    out.samples = n;
    out.mean = pairwise_reduce(sums, 0, blocks) / (double)n;
    Eigen::MatrixXd second = pairwise_reduce(squares, 0, blocks) / (double)n;
    Eigen::MatrixXd var = (second - out.mean.cwiseAbs2()).cwiseMax(0.0) * ((double)n / (double)(n - 1));
    out.std_error = (var / (double)n).cwiseSqrt();
    return out;
}

MomentEstimate mc_average_purity(const EnsembleSpec &spec, const Region &region, size_t k, const OracleConfig &cfg) {
    dense_dimension(spec.structure().num_sites(), spec.d());
    return estimate_mean(cfg, [&](RandomStream &rng, size_t) {
        return reduced_purity(run_circuit(spec, k, rng), region);
    });
}

MomentEstimate mc_trace_distance(const EnsembleSpec &spec, const Region &region, size_t k, const OracleConfig &cfg) {
    dense_dimension(spec.structure().num_sites(), spec.d());
    uint64_t dim = dense_dimension(region.size(), spec.d());
    Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Identity((Eigen::Index)dim, (Eigen::Index)dim) / (double)dim;
    return estimate_mean(cfg, [&](RandomStream &rng, size_t) {
        return trace_norm_distance(reduced_density_matrix(run_circuit(spec, k, rng), region), mixed);
    });
}

MatrixEstimate mean_tensor_power(
    const EnsembleSpec &spec, const Region &region, size_t k, size_t t, const OracleConfig &cfg) {
    dense_dimension(spec.structure().num_sites(), spec.d());
    auto dim = (Eigen::Index)design_dimension(region.size(), spec.d(), t);
    return estimate_matrix_mean(cfg, dim, dim, [&](RandomStream &rng, size_t) {
        return tensor_power(reduced_density_matrix(run_circuit(spec, k, rng), region), t);
    });
}

MatrixEstimate mean_tensor_power_haar(size_t num_sites, int d, const Region &region, size_t t, const OracleConfig &cfg) {
    dense_dimension(num_sites, d);
    auto dim = (Eigen::Index)design_dimension(region.size(), d, t);
    return estimate_matrix_mean(cfg, dim, dim, [&](RandomStream &rng, size_t) {
        return tensor_power(reduced_density_matrix(haar_state(num_sites, d, rng), region), t);
    });
}

DesignDistance design_distance_between(const MatrixEstimate &a, const MatrixEstimate &b) {
    DesignDistance out;
    out.distance = trace_norm_distance(a.mean, b.mean);
    double root_dim = std::sqrt((double)a.mean.rows());
    out.circuit_error = root_dim * a.std_error.norm();
    out.haar_error = root_dim * b.std_error.norm();
    return out;
}

DesignDistance mc_design_distance(
    const EnsembleSpec &spec, const Region &region, size_t k, size_t t, const OracleConfig &cfg) {
    MatrixEstimate circuit = mean_tensor_power(spec, region, k, t, cfg);
    OracleConfig haar_cfg = cfg;
    haar_cfg.seed = mix64(cfg.seed ^ 0x48414152u);
    MatrixEstimate haar = mean_tensor_power_haar(spec.structure().num_sites(), spec.d(), region, t, haar_cfg);
    return design_distance_between(circuit, haar);
}

}  // namespace lrqc
