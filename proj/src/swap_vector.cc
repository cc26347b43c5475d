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

#include "lrqc/swap_vector.h"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lrqc {

SwapVector::SwapVector(size_t num_sites, double prune_tol) : num_sites_(num_sites), prune_tol_(prune_tol) {
    if (num_sites > kMaxSites) {
        throw std::invalid_argument("SwapVector supports at most 64 sites");
    }
    if (!(prune_tol >= 0) || !std::isfinite(prune_tol)) {
        throw std::invalid_argument("prune_tol must be finite and >= 0");
    }
}

SwapVector SwapVector::single(const Region &region, double prune_tol) {
    SwapVector v(region.num_sites(), prune_tol);
    v.add(region, 1.0);
    return v;
}

double SwapVector::coefficient(const Region &region) const {
    if (region.num_sites() != num_sites_) {
        throw std::invalid_argument("region over a different site count");
    }
    auto it = terms_.find(region.bits());
    return it == terms_.end() ? 0.0 : it->second;
}

void SwapVector::add(const Region &region, double coef) {
    if (region.num_sites() != num_sites_) {
        throw std::invalid_argument("region over a different site count");
    }
    add(region.bits(), coef);
}

void SwapVector::add(uint64_t bits, double coef) {
    if (!std::isfinite(coef)) {
        throw std::invalid_argument("non-finite swap coefficient");
    }
    auto [it, inserted] = terms_.try_emplace(bits, 0.0);
    it->second += coef;
    if (std::abs(it->second) <= prune_tol_) {
        terms_.erase(it);
    }
}

SwapVector &SwapVector::operator+=(const SwapVector &other) {
    if (other.num_sites_ != num_sites_) {
        throw std::invalid_argument("adding swap vectors over different site counts");
    }
    for (const auto &[bits, c] : other.terms_) {
        add(bits, c);
    }
    return *this;
}

SwapVector &SwapVector::operator*=(double factor) {
    if (!std::isfinite(factor)) {
        throw std::invalid_argument("non-finite scale factor");
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= factor;
        if (std::abs(it->second) <= prune_tol_) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
    return *this;
}

double SwapVector::max_abs_diff(const SwapVector &other) const {
    double worst = 0;
    for (const auto &[bits, c] : terms_) {
        auto it = other.terms_.find(bits);
        worst = std::max(worst, std::abs(c - (it == other.terms_.end() ? 0.0 : it->second)));
    }
    for (const auto &[bits, c] : other.terms_) {
        if (!terms_.contains(bits)) {
            worst = std::max(worst, std::abs(c));
        }
    }
    return worst;
}

std::string SwapVector::str() const {
    std::stringstream out;
    out.precision(17);
    bool first = true;
    for (const auto &[bits, c] : terms_) {
        if (!first) {
            out << " + ";
        }
        out << c << "*T" << Region(num_sites_, bits).str();
        first = false;
    }
    if (first) {
        out << "0";
    }
    return out.str();
}

AlphaPair alpha_coefficients(size_t outside, size_t inside, int d) {
    if (d < 2) {
        throw std::invalid_argument("local dimension d must be >= 2");
    }
    if (outside == 0 || inside == 0) {
        throw std::invalid_argument("local region is not in the boundary of the target");
    }
    double dA = std::pow((double)d, (double)outside);
    double dB = std::pow((double)d, (double)inside);
    double dAB = dA * dB;
    double c_plus = (dA + dB) / (dAB + 1);
    double c_minus = (dA - dB) / (dAB - 1);
    return {(c_plus + c_minus) / 2, (c_plus - c_minus) / 2};
}

AlphaPair alpha_coefficients(const Region &target, const Region &local, int d) {
    if (!in_boundary(local, target)) {
        throw std::invalid_argument("local region " + local.str() + " is not in the boundary of " + target.str());
    }
    return alpha_coefficients((local - target).size(), (target & local).size(), d);
}

SwapVector apply_local(const SwapVector &v, const Region &local, int d) {
    if (local.num_sites() != v.num_sites()) {
        throw std::invalid_argument("local region over a different site count");
    }
    if (local.is_empty()) {
        throw std::invalid_argument("local region must be nonempty");
    }
    uint64_t m = local.bits();
    size_t local_size = local.size();
    SwapVector out(v.num_sites(), v.prune_tol());
    for (const auto &[bits, c] : v.terms()) {
        uint64_t inside = bits & m;
        if (inside == 0 || inside == m) {
            out.add(bits, c);
            continue;
        }
        size_t b = (size_t)std::popcount(inside);
        AlphaPair alpha = alpha_coefficients(local_size - b, b, d);
        out.add(bits & ~m, alpha.plus * c);
        out.add(bits | m, alpha.minus * c);
    }
    return out;
}

double contract_factorized(const SwapVector &v) {
    double total = 0;
    for (const auto &[bits, c] : v.terms()) {
        total += c;
    }
    return total;
}

SwapVector complement_involution(const SwapVector &v) {
    SwapVector out(v.num_sites(), v.prune_tol());
    uint64_t universe = Region::full(v.num_sites()).bits();
    for (const auto &[bits, c] : v.terms()) {
        out.add(~bits & universe, c);
    }
    return out;
}

}  // namespace lrqc
