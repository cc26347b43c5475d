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

#ifndef LRQC_ERRORS_H
#define LRQC_ERRORS_H

#include <stdexcept>
#include <string>

namespace lrqc {

/// Raised when a computation would exceed a hard resource cap (dense
/// dimension, site count). Invalid inputs use std::invalid_argument instead.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string &what) : std::runtime_error(what) {
    }
};

/// A rank or multiplicity decision fell inside the ambiguity band around the
/// configured tolerance.
struct AmbiguousRankError : std::runtime_error {
    explicit AmbiguousRankError(const std::string &what) : std::runtime_error(what) {
    }
};

}  // namespace lrqc

#endif
