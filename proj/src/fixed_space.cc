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

#include "lrqc/fixed_space.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lrqc {

namespace {

struct DisjointSets {
    std::vector<size_t> parent;

    explicit DisjointSets(size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void merge(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
};

}  // namespace

ComponentDecomposition connected_components(const LocalStructure &structure) {
    size_t n = structure.num_sites();
    DisjointSets sets(n);
    for (const Region &r : structure.regions()) {
        auto sites = r.sites();
        for (size_t s : sites) {
            sets.merge(sites.front(), s);
        }
    }
    Region covered = structure.coverage();
    std::vector<uint64_t> masks(n, 0);
    for (size_t s = 0; s < n; s++) {
        if (covered.contains(s)) {
            masks[sets.find(s)] |= uint64_t{1} << s;
        }
    }
    ComponentDecomposition out;
    out.residual = covered.complement();
    for (size_t s = 0; s < n; s++) {
        if (masks[s] != 0) {
            out.components.emplace_back(n, masks[s]);
        }
    }
    return out;
}

double purity_infinity(const Region &initial, const LocalStructure &structure, int d) {
    if (initial.num_sites() != structure.num_sites()) {
        throw std::invalid_argument("initial region over a different site count than the structure");
    }
    if (d < 2) {
        throw std::invalid_argument("local dimension d must be >= 2");
    }
    double dd = d;
    double p = 1;
    for (const Region &c : connected_components(structure).components) {
        double size = (double)c.size();
        double inside = (double)(initial & c).size();
        p *= (std::pow(dd, size - inside) + std::pow(dd, inside)) / (std::pow(dd, size) + 1);
    }
    return p;
}

uint64_t predicted_fixed_dimension(const LocalStructure &structure) {
    auto decomposition = connected_components(structure);
    size_t exponent = decomposition.components.size() + decomposition.residual.size();
    if (exponent >= 64) {
        throw std::invalid_argument("fixed-space dimension overflows 64 bits");
    }
    return uint64_t{1} << exponent;
}

}  // namespace lrqc
