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

#ifndef LRQC_REGION_H
#define LRQC_REGION_H

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lrqc {

constexpr size_t kMaxSites = 64;

/// A subset of the site set {0, ..., n-1}, stored as a 64-bit mask.
///
/// A region doubles as the index of a swap operator T_region on the two-copy
/// space; the empty region is the identity swap. Set operations between
/// regions over different site counts throw std::invalid_argument.
class Region {
   public:
    Region() = default;
    /// Throws if n > 64 or a bit at index >= n is set.
    Region(size_t num_sites, uint64_t bits);

    static Region empty(size_t num_sites);
    static Region full(size_t num_sites);
    static Region from_sites(size_t num_sites, std::span<const size_t> sites);
    static Region from_sites(size_t num_sites, std::initializer_list<size_t> sites);
    /// Sites {first, ..., first + count - 1}.
    static Region interval(size_t num_sites, size_t first, size_t count);

    uint64_t bits() const {
        return bits_;
    }
    size_t num_sites() const {
        return num_sites_;
    }
    /// Number of sites in the region.
    size_t size() const {
        return (size_t)std::popcount(bits_);
    }
    bool is_empty() const {
        return bits_ == 0;
    }
    bool contains(size_t site) const {
        return site < num_sites_ && ((bits_ >> site) & 1);
    }
    std::vector<size_t> sites() const;

    Region complement() const;
    bool is_subset_of(const Region &other) const;
    bool intersects(const Region &other) const;

    Region operator|(const Region &other) const;
    Region operator&(const Region &other) const;
    /// Set difference.
    Region operator-(const Region &other) const;
    /// Symmetric difference.
    Region operator^(const Region &other) const;

    bool operator==(const Region &other) const = default;
    std::strong_ordering operator<=>(const Region &other) const = default;

    /// "{0,2,5}"
    std::string str() const;

   private:
    void require_same_universe(const Region &other) const;

    size_t num_sites_ = 0;
    uint64_t bits_ = 0;
};

/// Models the swap product T_a T_b = T_{a Δ b}.
Region sym_diff(const Region &a, const Region &b);

/// True iff candidate straddles target: it meets both target and its complement.
bool in_boundary(const Region &candidate, const Region &target);

}  // namespace lrqc

#endif
