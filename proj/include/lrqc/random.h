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

#ifndef LRQC_RANDOM_H
#define LRQC_RANDOM_H

#include <cstdint>
#include <random>

namespace lrqc {

using RandomStream = std::mt19937_64;

/// SplitMix64 finalizer.
inline uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Independent stream for sample `index` of a run seeded with `seed`. The
/// stream depends only on (seed, index), never on scheduling.
inline RandomStream sample_stream(uint64_t seed, uint64_t index) {
    return RandomStream(mix64(mix64(seed) ^ mix64(index + 0x632BE59BD9B4E019ULL)));
}

}  // namespace lrqc

#endif
