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

#include "lrqc/region.h"

#include <stdexcept>

namespace lrqc {

namespace {

uint64_t universe_mask(size_t num_sites) {
    return num_sites == 64 ? ~uint64_t{0} : (uint64_t{1} << num_sites) - 1;
}

}  // namespace

Region::Region(size_t num_sites, uint64_t bits) : num_sites_(num_sites), bits_(bits) {
    if (num_sites > kMaxSites) {
        throw std::invalid_argument("Region supports at most 64 sites, got " + std::to_string(num_sites));
    }
    if (bits & ~universe_mask(num_sites)) {
        throw std::invalid_argument("Region has a site outside {0,...," + std::to_string(num_sites) + "-1}");
    }
}

Region Region::empty(size_t num_sites) {
    return Region(num_sites, 0);
}

Region Region::full(size_t num_sites) {
    if (num_sites > kMaxSites) {
        throw std::invalid_argument("Region supports at most 64 sites");
    }
    return Region(num_sites, universe_mask(num_sites));
}

Region Region::from_sites(size_t num_sites, std::span<const size_t> sites) {
    uint64_t bits = 0;
    for (size_t s : sites) {
        if (s >= num_sites || s >= kMaxSites) {
            throw std::invalid_argument(
                "site " + std::to_string(s) + " out of range for " + std::to_string(num_sites) + " sites");
        }
        bits |= uint64_t{1} << s;
    }
    return Region(num_sites, bits);
}

Region Region::from_sites(size_t num_sites, std::initializer_list<size_t> sites) {
    return from_sites(num_sites, std::span<const size_t>(sites.begin(), sites.size()));
}

Region Region::interval(size_t num_sites, size_t first, size_t count) {
    if (first + count > num_sites) {
        throw std::invalid_argument("interval exceeds the site range");
    }
    uint64_t bits = count == 64 ? ~uint64_t{0} : ((uint64_t{1} << count) - 1) << first;
    return Region(num_sites, bits);
}

std::vector<size_t> Region::sites() const {
    std::vector<size_t> out;
    out.reserve(size());
    for (uint64_t b = bits_; b; b &= b - 1) {
        out.push_back((size_t)std::countr_zero(b));
    }
    return out;
}

void Region::require_same_universe(const Region &other) const {
    if (num_sites_ != other.num_sites_) {
        throw std::invalid_argument(
            "regions over different site counts: " + std::to_string(num_sites_) + " vs " +
            std::to_string(other.num_sites_));
    }
}

Region Region::complement() const {
    Region r;
    r.num_sites_ = num_sites_;
    r.bits_ = ~bits_ & universe_mask(num_sites_);
    return r;
}

bool Region::is_subset_of(const Region &other) const {
    require_same_universe(other);
    return (bits_ & ~other.bits_) == 0;
}

bool Region::intersects(const Region &other) const {
    require_same_universe(other);
    return (bits_ & other.bits_) != 0;
}

Region Region::operator|(const Region &other) const {
    require_same_universe(other);
    Region r = *this;
    r.bits_ |= other.bits_;
    return r;
}

Region Region::operator&(const Region &other) const {
    require_same_universe(other);
    Region r = *this;
    r.bits_ &= other.bits_;
    return r;
}

Region Region::operator-(const Region &other) const {
    require_same_universe(other);
    Region r = *this;
    r.bits_ &= ~other.bits_;
    return r;
}

Region Region::operator^(const Region &other) const {
    require_same_universe(other);
    Region r = *this;
    r.bits_ ^= other.bits_;
    return r;
}

std::string Region::str() const {
    std::string out = "{";
    bool first = true;
    for (size_t s : sites()) {
        if (!first) {
            out += ",";
        }
        out += std::to_string(s);
        first = false;
    }
    out += "}";
    return out;
}

Region sym_diff(const Region &a, const Region &b) {
    return a ^ b;
}

bool in_boundary(const Region &candidate, const Region &target) {
    return candidate.intersects(target) && candidate.intersects(target.complement());
}

}  // namespace lrqc
