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

#ifndef LRQC_SWAP_VECTOR_H
#define LRQC_SWAP_VECTOR_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "lrqc/region.h"

namespace lrqc {

constexpr double kDefaultPruneTol = 1e-15;

/// A sparse real combination sum_A c_A T_A of swap operators.
///
/// Terms are keyed by region bitmask and iterated in increasing mask order,
/// so every reduction over a vector is deterministic. Coefficients with
/// |c| <= prune_tol are never stored.
class SwapVector {
   public:
    explicit SwapVector(size_t num_sites, double prune_tol = kDefaultPruneTol);

    /// The vector 1 * T_region.
    static SwapVector single(const Region &region, double prune_tol = kDefaultPruneTol);

    size_t num_sites() const {
        return num_sites_;
    }
    double prune_tol() const {
        return prune_tol_;
    }
    size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }
    const std::map<uint64_t, double> &terms() const {
        return terms_;
    }

    double coefficient(const Region &region) const;
    /// Accumulates coef onto T_region. Throws on non-finite coef or a region
    /// over another site count.
    void add(const Region &region, double coef);
    void add(uint64_t bits, double coef);

    SwapVector &operator+=(const SwapVector &other);
    SwapVector &operator*=(double factor);

    /// Max |coefficient difference| over the union of supports.
    double max_abs_diff(const SwapVector &other) const;

    std::string str() const;

   private:
    size_t num_sites_;
    double prune_tol_;
    std::map<uint64_t, double> terms_;
};

/// Branching weights of a boundary-crossing local map on a swap.
struct AlphaPair {
    double plus;   ///< weight of T_{target - local}
    double minus;  ///< weight of T_{target ∪ local}
};

/// Requires in_boundary(local, target) and d >= 2; throws std::invalid_argument otherwise.
AlphaPair alpha_coefficients(const Region &target, const Region &local, int d);

/// alpha_coefficients in terms of A = |local - target| and B = |target ∩ local|, both >= 1.
AlphaPair alpha_coefficients(size_t outside, size_t inside, int d);

/// The Haar twirl over `local`, restricted to the swap algebra.
SwapVector apply_local(const SwapVector &v, const Region &local, int d);

/// Contraction with omega⊗omega for a pure fully factorized omega: every
/// swap contracts to 1, so this is the coefficient sum.
double contract_factorized(const SwapVector &v);

/// T_A -> T_{A^c}, extended linearly.
SwapVector complement_involution(const SwapVector &v);

}  // namespace lrqc

#endif
