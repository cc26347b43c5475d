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

#ifndef LRQC_MONTE_CARLO_H
#define LRQC_MONTE_CARLO_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "lrqc/ensemble.h"
#include "lrqc/random.h"

namespace lrqc {

struct MomentEstimate {
    double mean = 0;
    double std_error = 0;
    size_t samples = 0;
};

struct OracleConfig {
    uint64_t seed = 0;
    size_t samples = 10000;
    /// 0 means std::thread::hardware_concurrency(). Results do not depend on it.
    size_t threads = 0;
};

/// Sum of values by recursive halving.
double pairwise_sum(const double *values, size_t count);

/// Evaluates f(stream, index) for every sample index with the stream for
/// (seed, index), then reduces to mean and standard error.
MomentEstimate estimate_mean(const OracleConfig &cfg, const std::function<double(RandomStream &, size_t)> &f);

/// Mean of a matrix-valued sample. Samples are accumulated in fixed-size
/// blocks that are reduced pairwise, so the result is independent of threads.
struct MatrixEstimate {
    Eigen::MatrixXcd mean;
    /// Standard error of the mean, entrywise.
    Eigen::MatrixXd std_error;
    size_t samples = 0;
};

MatrixEstimate estimate_matrix_mean(
    const OracleConfig &cfg, Eigen::Index rows, Eigen::Index cols,
    const std::function<Eigen::MatrixXcd(RandomStream &, size_t)> &f);

/// Mean reduced purity of `region` after a k-gate circuit from |0...0>.
MomentEstimate mc_average_purity(const EnsembleSpec &spec, const Region &region, size_t k, const OracleConfig &cfg);

/// Mean of ||rho_region - 1/d^|region| ||_1 after a k-gate circuit from |0...0>.
MomentEstimate mc_trace_distance(const EnsembleSpec &spec, const Region &region, size_t k, const OracleConfig &cfg);

/// Cap on d^{t |region|} for design distances.
constexpr uint64_t kMaxDesignDim = uint64_t{1} << 10;

/// Circuit average of rho_region^{⊗t}.
MatrixEstimate mean_tensor_power(
    const EnsembleSpec &spec, const Region &region, size_t k, size_t t, const OracleConfig &cfg);

/// Average of rho_region^{⊗t} over global Haar states.
MatrixEstimate mean_tensor_power_haar(size_t num_sites, int d, const Region &region, size_t t, const OracleConfig &cfg);

struct DesignDistance {
    double distance = 0;
    /// Frobenius norm of the entrywise standard errors, times sqrt(dim), on each side.
    double circuit_error = 0;
    double haar_error = 0;
};

/// ||circuit average - Haar average||_1 of rho_region^{⊗t}. The Haar side uses
/// streams derived from a different seed than the circuit side.
DesignDistance mc_design_distance(
    const EnsembleSpec &spec, const Region &region, size_t k, size_t t, const OracleConfig &cfg);

/// Trace-norm distance between two estimated means, with error bars.
DesignDistance design_distance_between(const MatrixEstimate &a, const MatrixEstimate &b);

}  // namespace lrqc

#endif
