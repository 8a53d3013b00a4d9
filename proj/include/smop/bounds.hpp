//  Copyright 2026 The smop Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <cstddef>

namespace smop {

/// Size bounds for the exhaustive oracles. None of them come from the theory;
/// they keep brute-force enumeration at desk scale. Each can be overridden by
/// an environment variable (see from_env).
struct Bounds {
    /// way_below enumerates directed subsets up to this lattice size
    /// (SMOP_WAY_BELOW_BOUND); beyond it the finite shortcut b <= a is used.
    std::size_t way_below_size = 12;
    /// Frame law and join-preservation checks enumerate all subsets up to this
    /// lattice size (SMOP_SUBSET_BOUND); beyond it a seeded sample is used.
    std::size_t subset_size = 16;
    /// Number of sampled subsets beyond subset_size.
    std::size_t subset_samples = 512;
    /// Compactness enumerates directed open covers while the topology has at
    /// most this many opens (SMOP_COVER_BOUND).
    std::size_t cover_opens = 16;
    /// Sobriety enumerates closed sets while there are at most this many
    /// (SMOP_CLOSED_BOUND).
    std::size_t closed_sets = 4096;

    static Bounds from_env();
};

/// Process-wide defaults, read once from the environment.
const Bounds& default_bounds();

}  // namespace smop
