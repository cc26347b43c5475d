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

#ifndef LRQC_FIXED_SPACE_H
#define LRQC_FIXED_SPACE_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lrqc/ensemble.h"
#include "lrqc/region.h"

namespace lrqc {

/// Connected components of the region hypergraph (regions sharing a site are
/// adjacent) plus the sites no region touches.
struct ComponentDecomposition {
    std::vector<Region> components;  ///< ordered by lowest site
    Region residual;
};

ComponentDecomposition connected_components(const LocalStructure &structure);

/// Long-time average purity of `initial` from a pure fully factorized state:
/// product over components C of (d^{|C|-|A∩C|} + d^{|A∩C|}) / (d^{|C|} + 1).
double purity_infinity(const Region &initial, const LocalStructure &structure, int d);

/// Dimension of the joint fixed space of all the structure's local maps on
/// the swap algebra: 2^{K + |residual|} for K components.
uint64_t predicted_fixed_dimension(const LocalStructure &structure);

}  // namespace lrqc

#endif
